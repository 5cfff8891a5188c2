"""
Статистика согласия респондентов

Согласием считается только ответ yes; при включенном partial_credit ответ
partial дает половину согласия. Доверительный интервал строится методом
Уилсона.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from scipy.stats import norm

from oodq.exceptions import NoDataError, OodqError
from oodq.quality.model import DEFAULT_QUALITY_MODEL, QualityModel
from oodq.survey.responses import Answer, Group, Pair, SurveyDataset

logger = logging.getLogger(__name__)

DEFAULT_CONFIDENCE = 0.95


def z_score(confidence: float = DEFAULT_CONFIDENCE) -> float:
    """Двусторонний квантиль нормального распределения"""
    if not 0 < confidence < 1:
        raise OodqError(f"Уровень доверия должен лежать в (0, 1), получено {confidence}")
    if confidence == 0.95:
        return 1.96
    return float(norm.ppf(1 - (1 - confidence) / 2))


def wilson_interval(successes: float, trials: int, confidence: float = DEFAULT_CONFIDENCE) -> Tuple[float, float]:
    """
    Интервал Уилсона для доли successes / trials

    Returns:
        Tuple[float, float]: границы в долях [0, 1]
    """
    if trials <= 0:
        return 0.0, 1.0

    z = z_score(confidence)
    p_hat = successes / trials
    denominator = 1 + z ** 2 / trials
    center = (p_hat + z ** 2 / (2 * trials)) / denominator
    margin = (z / denominator) * math.sqrt(p_hat * (1 - p_hat) / trials + z ** 2 / (4 * trials ** 2))

    lower = min(max(0.0, center - margin), p_hat)
    upper = max(min(1.0, center + margin), p_hat)
    return lower, upper


@dataclass(frozen=True)
class AgreementStat:
    """Согласие по паре (метрика, фактор); проценты в [0, 100]"""
    metric: str
    factor: str
    n: int
    yes_count: int
    partial_count: int = 0
    agreement_pct: Fraction = Fraction(0)
    ci_low: float = 0.0
    ci_high: float = 100.0

    @property
    def has_data(self) -> bool:
        return self.n > 0

    def to_dict(self, with_ci: bool = True) -> Dict[str, object]:
        data = {
            'metric': self.metric,
            'factor': self.factor,
            'n': self.n,
            'yes': self.yes_count,
            'partial': self.partial_count,
            'agreement_pct': round(float(self.agreement_pct), 2),
        }
        if with_ci:
            data['ci_low'] = round(self.ci_low, 2)
            data['ci_high'] = round(self.ci_high, 2)
        return data


def _stat(
    metric: str,
    factor: str,
    answers: Sequence[Answer],
    confidence: float,
    partial_credit: bool,
) -> AgreementStat:
    n = len(answers)
    yes = sum(1 for a in answers if a is Answer.YES)
    partial = sum(1 for a in answers if a is Answer.PARTIAL)
    if not n:
        return AgreementStat(metric, factor, 0, 0)

    credit = Fraction(yes) + (Fraction(partial, 2) if partial_credit else 0)
    pct = 100 * credit / n
    low, high = wilson_interval(float(credit), n, confidence)
    return AgreementStat(
        metric=metric,
        factor=factor,
        n=n,
        yes_count=yes,
        partial_count=partial,
        agreement_pct=pct,
        ci_low=min(100 * low, float(pct)),
        ci_high=max(100 * high, float(pct)),
    )


def agreement(
    dataset: SurveyDataset,
    metric: str,
    factor: str,
    confidence: float = DEFAULT_CONFIDENCE,
    partial_credit: bool = False,
    group: Optional[Group] = None,
) -> AgreementStat:
    """Процент согласия по паре с доверительным интервалом"""
    answers = dataset.answers_for(metric, factor, group)
    if not answers:
        raise NoDataError(metric, factor, group.value if group else None)
    return _stat(metric, factor, answers, confidence, partial_credit)


def group_split(
    dataset: SurveyDataset,
    metric: str,
    factor: str,
    confidence: float = DEFAULT_CONFIDENCE,
    partial_credit: bool = False,
) -> Tuple[Optional[AgreementStat], Optional[AgreementStat]]:
    """
    Согласие отдельно по индустрии и академии

    Группа без ответов дает None на своем месте; agreement с той же группой
    в этом случае поднимает NoDataError.
    """
    result = []
    for group in (Group.INDUSTRY, Group.ACADEMIC):
        try:
            result.append(agreement(dataset, metric, factor, confidence, partial_credit, group))
        except NoDataError:
            logger.debug(f"Нет ответов группы {group.value} для ({metric}, {factor})")
            result.append(None)
    return result[0], result[1]


def figure_tables(
    dataset: SurveyDataset,
    model: QualityModel = DEFAULT_QUALITY_MODEL,
    confidence: float = DEFAULT_CONFIDENCE,
    partial_credit: bool = False,
) -> Dict[str, List[AgreementStat]]:
    """
    Таблицы влияния метрик на каждый фактор

    Строки упорядочены по убыванию процента согласия; при равенстве сохраняется
    порядок критериев модели. Пары без ответов попадают в таблицу с n = 0.
    """
    tables = {}
    for factor in model.factors:
        rows = [
            _stat(metric, factor.id, dataset.answers_for(metric, factor.id), confidence, partial_credit)
            for metric in factor.metrics
        ]
        tables[factor.id] = sorted(rows, key=lambda s: s.agreement_pct, reverse=True)
    return tables


def metric_table(
    dataset: SurveyDataset,
    metric: str,
    model: QualityModel = DEFAULT_QUALITY_MODEL,
    confidence: float = DEFAULT_CONFIDENCE,
    partial_credit: bool = False,
) -> List[AgreementStat]:
    """Влияние одной метрики на факторы, в которые она входит (в порядке модели)"""
    return [
        _stat(metric, factor.id, dataset.answers_for(metric, factor.id), confidence, partial_credit)
        for factor in model.factors
        if metric in factor.metrics
    ]


def agreement_percentages(
    dataset: SurveyDataset,
    model: QualityModel = DEFAULT_QUALITY_MODEL,
    partial_credit: bool = False,
) -> Dict[Pair, Fraction]:
    """Проценты согласия по всем парам модели, на которые есть ответы"""
    percentages = {}
    for metric, factor in model.pairs():
        answers = dataset.answers_for(metric, factor)
        if answers:
            percentages[(metric, factor)] = _stat(
                metric, factor, answers, DEFAULT_CONFIDENCE, partial_credit
            ).agreement_pct
    return percentages


def influence_ranking(tables: Mapping[str, Sequence[AgreementStat]]) -> Dict[str, List[str]]:
    """Метрики каждого фактора от наиболее к наименее влияющей"""
    return {
        factor: [s.metric for s in sorted(rows, key=lambda s: s.agreement_pct, reverse=True) if s.has_data]
        for factor, rows in tables.items()
    }
