"""
Оценки факторов качества

Оценка фактора - взвешенное среднее EQ-значений его метрик. Веса фактора
в сумме дают 1, поэтому оценка всегда лежит в [0, 1].
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Sequence, Tuple

from oodq.distance.scales import DEFAULT_PROFILE, ThresholdProfile, quantize_all
from oodq.exceptions import MissingMetricError, OodqError
from oodq.quality.model import DEFAULT_QUALITY_MODEL, QualityModel
from oodq.quality.weights import WeightProfile

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Contribution:
    """Вклад одной метрики в оценку фактора"""
    metric: str
    criterion: str
    eq: Fraction
    weight: Fraction

    @property
    def term(self) -> Fraction:
        return self.weight * self.eq

    def to_dict(self) -> Dict[str, object]:
        return {
            'metric': self.metric,
            'criterion': self.criterion,
            'eq': float(self.eq),
            'weight': float(self.weight),
            'term': float(self.term),
        }


@dataclass(frozen=True)
class FactorScore:
    """Оценка фактора с разбивкой по метрикам"""
    factor: str
    contributions: Tuple[Contribution, ...]

    @property
    def score(self) -> Fraction:
        return sum((c.term for c in self.contributions), Fraction(0))

    def to_dict(self) -> Dict[str, object]:
        return {
            'factor': self.factor,
            'score': float(self.score),
            'contributions': [c.to_dict() for c in rank_contributions(self)],
        }


def factor_score(
    model: QualityModel,
    weights: WeightProfile,
    eqs: Mapping[str, Fraction],
    factor: str,
) -> FactorScore:
    """Оценка одного фактора по EQ-значениям его метрик"""
    if factor not in model.by_id:
        raise OodqError(f"Неизвестный фактор: {factor}")

    contributions = []
    for criterion in model.by_id[factor].criteria:
        if criterion.metric not in eqs:
            raise MissingMetricError(criterion.metric)
        contributions.append(Contribution(
            metric=criterion.metric,
            criterion=criterion.name,
            eq=Fraction(eqs[criterion.metric]),
            weight=weights.weight(factor, criterion.metric),
        ))
    return FactorScore(factor=factor, contributions=tuple(contributions))


def all_factor_scores(
    model: QualityModel,
    weights: WeightProfile,
    metric_vector: Mapping[str, Fraction],
    thresholds: ThresholdProfile = DEFAULT_PROFILE,
) -> List[FactorScore]:
    """Квантование метрик и оценки всех пяти факторов в порядке модели"""
    eqs = quantize_all(metric_vector, thresholds)
    scores = [factor_score(model, weights, eqs, factor.id) for factor in model.factors]
    logger.debug("Оценки факторов: " + ", ".join(f"{s.factor}={float(s.score):.3f}" for s in scores))
    return scores


def overall_score(scores: Sequence[FactorScore]) -> Fraction:
    """Невзвешенное среднее оценок факторов"""
    if not scores:
        return Fraction(0)
    return sum((s.score for s in scores), Fraction(0)) / len(scores)


def rank_contributions(score: FactorScore) -> List[Contribution]:
    """Вклады по убыванию взвешенного слагаемого; равные сохраняют порядок модели"""
    return sorted(score.contributions, key=lambda c: c.term, reverse=True)
