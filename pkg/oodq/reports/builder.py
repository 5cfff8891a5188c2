"""
Сборка отчетов анализа и опроса

Отчет хранит SHA-256 каждого входного файла и идентификаторы профилей, так
что любое число в нем можно пересчитать по входным данным.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from oodq import __version__
from oodq.config import Config
from oodq.design.models import ClassModel
from oodq.distance.scales import DEFAULT_PROFILE, ThresholdProfile, load_threshold_profile, quantize_all
from oodq.ingest.merge import load_design
from oodq.metrics.calculator import MetricVector, compute_all
from oodq.metrics.definitions import METRIC_IDS, METRICS
from oodq.quality.model import DEFAULT_QUALITY_MODEL, QualityModel
from oodq.quality.scoring import FactorScore, all_factor_scores, overall_score
from oodq.quality.weights import WeightProfile, resolve_weights, weights_from_survey
from oodq.survey.responses import SurveyDataset, SurveySummary, load_responses
from oodq.survey.statistics import (
    AgreementStat, agreement_percentages, figure_tables, group_split, influence_ranking, metric_table,
)
from oodq.utils.helpers import content_hash

logger = logging.getLogger(__name__)

InputHash = Tuple[str, str]


def hash_inputs(files: Sequence[str]) -> Tuple[InputHash, ...]:
    return tuple((path, content_hash(Path(path).read_bytes())) for path in files)


def load_thresholds(path: str) -> ThresholdProfile:
    """Профиль порогов из файла или профиль по умолчанию при пустом пути"""
    if not path:
        return DEFAULT_PROFILE
    return load_threshold_profile(Path(path).read_text(encoding="utf-8"), path)


@dataclass(frozen=True)
class AnalysisReport:
    """Результат анализа дизайна"""
    model: ClassModel
    inputs: Tuple[InputHash, ...]
    metrics: MetricVector
    eqs: Dict[str, Fraction]
    scores: Tuple[FactorScore, ...]
    weights_profile: str
    thresholds_profile: str
    overall: Optional[Fraction] = None
    version: str = __version__

    @property
    def class_count(self) -> int:
        return len(self.model.classes)

    def metric_rows(self) -> List[Dict[str, object]]:
        return [
            {
                'metric': metric,
                'name': METRICS[metric].name,
                'definition': METRICS[metric].definition,
                'value': self.metrics[metric],
                'eq': self.eqs[metric],
            }
            for metric in METRIC_IDS
        ]

    def to_dict(self) -> Dict[str, object]:
        data = {
            'tool': 'oodq',
            'version': self.version,
            'inputs': [{'path': path, 'sha256': digest} for path, digest in self.inputs],
            'summary': {'classes': self.class_count, 'files': [path for path, _ in self.inputs]},
            'thresholds_profile': self.thresholds_profile,
            'weights_profile': self.weights_profile,
            'metrics': [
                {
                    'metric': row['metric'],
                    'value': float(row['value']),
                    'exact': str(row['value']),
                    'eq': float(row['eq']),
                }
                for row in self.metric_rows()
            ],
            'per_class': {
                name: {metric: float(value) for metric, value in self.metrics.class_values(name).items()}
                for name in sorted(self.model.names)
            },
            'scores': [score.to_dict() for score in self.scores],
        }
        if self.overall is not None:
            data['overall'] = float(self.overall)
        data['model'] = self.model.to_dict()
        return data


def analyze_design(
    paths: Sequence[str],
    weights: WeightProfile,
    thresholds: ThresholdProfile = DEFAULT_PROFILE,
    quality_model: QualityModel = DEFAULT_QUALITY_MODEL,
    max_workers: int = 4,
    with_overall: bool = False,
) -> AnalysisReport:
    """Загрузка дизайна, метрики, EQ-значения и оценки факторов"""
    model, files = load_design(paths, max_workers=max_workers)
    metrics = compute_all(model)
    scores = tuple(all_factor_scores(quality_model, weights, metrics.values, thresholds))
    report = AnalysisReport(
        model=model,
        inputs=hash_inputs(files),
        metrics=metrics,
        eqs=quantize_all(metrics.values, thresholds),
        scores=scores,
        weights_profile=weights.profile_id,
        thresholds_profile=thresholds.profile_id,
        overall=overall_score(scores) if with_overall else None,
    )
    logger.info(f"Анализ завершен: классов {report.class_count}, профиль весов {weights.profile_id}")
    return report


def analyze_from_config(paths: Sequence[str], config: Config, with_overall: bool = False) -> AnalysisReport:
    return analyze_design(
        paths,
        weights=resolve_weights(config.weights),
        thresholds=load_thresholds(config.thresholds_path),
        max_workers=config.max_workers,
        with_overall=with_overall,
    )


@dataclass(frozen=True)
class SurveyReport:
    """
    Результат обработки ответов анкеты

    splits: по каждому фактору строки (метрика, индустрия, академия); None на
    месте группы значит, что в ней нет ответов на эту пару.
    metric: метрика, если отчет построен по одной метрике (survey --metric).
    """
    source: InputHash
    summary: SurveySummary
    tables: Dict[str, List[AgreementStat]]
    ranking: Dict[str, List[str]]
    confidence: float
    partial_credit: bool
    splits: Dict[str, List[Tuple[str, Optional[AgreementStat], Optional[AgreementStat]]]] = field(default_factory=dict)
    metric: Optional[str] = None

    def to_dict(self, with_ci: bool = True) -> Dict[str, object]:
        data = {
            'source': {'path': self.source[0], 'sha256': self.source[1]},
            'summary': self.summary.to_dict(),
            'confidence': self.confidence,
            'partial_credit': self.partial_credit,
            'tables': {
                factor: [row.to_dict(with_ci) for row in rows]
                for factor, rows in self.tables.items()
            },
            'ranking': self.ranking,
        }
        if self.metric is not None:
            info = METRICS[self.metric]
            data['metric'] = {'id': info.id, 'name': info.name, 'definition': info.definition}
        if self.splits:
            data['groups'] = {
                factor: [
                    {
                        'metric': metric,
                        'industry': industry.to_dict(with_ci) if industry else None,
                        'academic': academic.to_dict(with_ci) if academic else None,
                    }
                    for metric, industry, academic in rows
                ]
                for factor, rows in self.splits.items()
            }
        return data


def read_survey(path: str) -> Tuple[SurveyDataset, InputHash]:
    data = Path(path).read_bytes()
    return load_responses(data.decode("utf-8")), (path, content_hash(data))


def survey_report(
    dataset: SurveyDataset,
    source: InputHash,
    confidence: float = 0.95,
    partial_credit: bool = False,
    factor: Optional[str] = None,
    split_groups: bool = False,
    metric: Optional[str] = None,
    quality_model: QualityModel = DEFAULT_QUALITY_MODEL,
) -> SurveyReport:
    """
    Таблицы согласия по факторам, ранжирование и (по запросу) разбивка по группам

    С metric каждая таблица сводится к строке этой метрики, а факторы, в
    которые она не входит, пропускаются.
    """
    if metric is not None:
        tables = {
            stat.factor: [stat]
            for stat in metric_table(dataset, metric, quality_model, confidence, partial_credit)
        }
    else:
        tables = figure_tables(dataset, quality_model, confidence, partial_credit)
    if factor is not None:
        tables = {factor_id: rows for factor_id, rows in tables.items() if factor_id == factor}

    splits = {}
    if split_groups:
        splits = {
            factor_id: [
                (row.metric, *group_split(dataset, row.metric, factor_id, confidence, partial_credit))
                for row in rows
            ]
            for factor_id, rows in tables.items()
        }

    return SurveyReport(
        source=source,
        summary=dataset.summary,
        tables=tables,
        ranking=influence_ranking(tables),
        confidence=confidence,
        partial_credit=partial_credit,
        splits=splits,
        metric=metric,
    )


def survey_derived_weights(
    dataset: SurveyDataset,
    source: InputHash,
    partial_credit: bool = False,
    quality_model: QualityModel = DEFAULT_QUALITY_MODEL,
) -> WeightProfile:
    """Профиль весов по процентам согласия из данного набора ответов"""
    percentages = agreement_percentages(dataset, quality_model, partial_credit)
    return weights_from_survey(percentages, quality_model, profile_id=f"survey:{source[1][:12]}")


@dataclass(frozen=True)
class CombinedReport:
    """Анализ дизайна с весами, полученными из ответов анкеты"""
    analysis: AnalysisReport
    survey: SurveyReport

    def to_dict(self) -> Dict[str, object]:
        return {'analysis': self.analysis.to_dict(), 'survey': self.survey.to_dict()}


def combined_report(paths: Sequence[str], responses_path: str, config: Config) -> CombinedReport:
    dataset, source = read_survey(responses_path)
    weights = survey_derived_weights(dataset, source, config.partial_credit)
    analysis = analyze_design(
        paths,
        weights=weights,
        thresholds=load_thresholds(config.thresholds_path),
        max_workers=config.max_workers,
    )
    survey = survey_report(dataset, source, config.confidence, config.partial_credit)
    return CombinedReport(analysis=analysis, survey=survey)
