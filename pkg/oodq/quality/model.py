"""
Иерархическая модель качества: фактор -> критерий -> метрика
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Tuple

from oodq.exceptions import OodqError
from oodq.metrics.definitions import METRICS


@dataclass(frozen=True)
class Criterion:
    """Критерий, связывающий фактор с одной метрикой"""
    name: str
    metric: str


@dataclass(frozen=True)
class Factor:
    """Фактор качества и его критерии в порядке модели"""
    id: str
    criteria: Tuple[Criterion, ...]

    @property
    def metrics(self) -> Tuple[str, ...]:
        return tuple(criterion.metric for criterion in self.criteria)


@dataclass(frozen=True)
class QualityModel:
    """Пять факторов качества"""
    factors: Tuple[Factor, ...]

    def __post_init__(self):
        for factor in self.factors:
            unknown = [m for m in factor.metrics if m not in METRICS]
            if unknown:
                raise OodqError(f"Фактор {factor.id} ссылается на неизвестную метрику {unknown[0]}")
            if len(set(factor.metrics)) != len(factor.metrics):
                raise OodqError(f"Фактор {factor.id} содержит повторяющиеся метрики")

    @cached_property
    def by_id(self) -> Dict[str, Factor]:
        return {factor.id: factor for factor in self.factors}

    @property
    def factor_ids(self) -> Tuple[str, ...]:
        return tuple(factor.id for factor in self.factors)

    def pairs(self) -> Tuple[Tuple[str, str], ...]:
        """Все пары (метрика, фактор) модели"""
        return tuple((metric, factor.id) for factor in self.factors for metric in factor.metrics)


def _factor(factor_id: str, *criteria: Tuple[str, str]) -> Factor:
    return Factor(factor_id, tuple(Criterion(name, metric) for name, metric in criteria))


DEFAULT_QUALITY_MODEL = QualityModel(factors=(
    _factor(
        "functionality",
        ("Design Size", "NOC"), ("Hierarchies", "NOH"), ("Cohesion", "CAM"),
        ("Polymorphism", "NOP"), ("Messaging", "CIS"),
    ),
    _factor(
        "effectiveness",
        ("Abstraction", "NOA"), ("Abstraction", "NOH"), ("Abstraction", "MDIT"),
        ("Encapsulation", "DAR"), ("Composition", "NAR"), ("Composition", "NAH"),
        ("Inheritance", "FA"), ("Polymorphism", "NOP"),
    ),
    _factor(
        "understandability",
        ("Encapsulation", "DAR"), ("Cohesion", "CAM"), ("Inheritance", "FA"),
        ("Polymorphism", "NOP"),
    ),
    _factor(
        "reusability",
        ("Design Size", "NOC"), ("Coupling", "DCC"), ("Cohesion", "CAM"),
        ("Messaging", "CIS"),
    ),
    _factor(
        "maintainability",
        ("Design Size", "NOC"), ("Hierarchies", "NOH"), ("Abstraction", "NOA"),
        ("Encapsulation", "DAR"), ("Coupling", "DCC"), ("Coupling", "NOM"),
        ("Composition", "NAR"), ("Composition", "NAH"), ("Polymorphism", "NOP"),
        ("Documentation", "EOD"),
    ),
))

FACTOR_IDS: Tuple[str, ...] = DEFAULT_QUALITY_MODEL.factor_ids
