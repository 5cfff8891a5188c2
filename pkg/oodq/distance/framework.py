"""
Конструирование мер через расстояние между абстракциями

Мера свойства строится в пять шагов: абстракция объекта в виде конечного
множества, элементарные преобразования (добавить или удалить один элемент),
расстояние как длина кратчайшей последовательности преобразований,
эталонная абстракция с наименьшим количеством свойства и, наконец,
мера mu(p) = delta(abs(p), ref(p)).
"""
from dataclasses import dataclass
from typing import AbstractSet, Callable, Dict, FrozenSet, Generic, Hashable, Iterator, List, Tuple, TypeVar

from oodq.design.graph import aggregation_components, ancestors_of, inheritance_hierarchies
from oodq.design.models import ClassModel
from oodq.metrics.calculator import polymorphic_methods

T = TypeVar("T")
Abstraction = FrozenSet[Hashable]
Transformation = Tuple[str, Hashable]

ADD = "add"
REMOVE = "remove"


@dataclass(frozen=True)
class DistanceSpace:
    """Универсум элементов; абстракции - его конечные подмножества"""
    universe: FrozenSet[Hashable]

    def neighbours(self, abstraction: AbstractSet) -> Iterator[Abstraction]:
        """Абстракции, отстоящие ровно на одно элементарное преобразование"""
        current = frozenset(abstraction)
        for element in current:
            yield current - {element}
        for element in self.universe - current:
            yield current | {element}


def delta(a: AbstractSet, b: AbstractSet) -> int:
    """Длина кратчайшей последовательности добавлений/удалений: |a Δ b|"""
    return len(frozenset(a) ^ frozenset(b))


def transformation_sequence(a: AbstractSet, b: AbstractSet) -> List[Transformation]:
    """Одна из кратчайших последовательностей: сначала удаления, затем добавления"""
    source, target = frozenset(a), frozenset(b)
    removals = [(REMOVE, e) for e in sorted(source - target, key=repr)]
    additions = [(ADD, e) for e in sorted(target - source, key=repr)]
    return removals + additions


@dataclass(frozen=True)
class MeasureDefinition(Generic[T]):
    """Свойство pty, функция абстракции abs и эталонная абстракция ref"""
    pty: str
    abstraction: Callable[[T], AbstractSet]
    reference: Callable[[T], AbstractSet] = lambda _: frozenset()


def measure(definition: MeasureDefinition, p) -> int:
    """mu(p) = delta(abs(p), ref(p))"""
    return delta(definition.abstraction(p), definition.reference(p))


# === МЕРЫ ДЛЯ МЕТРИК-СЧЕТЧИКОВ ===

def _aggregation_attributes(model: ClassModel) -> FrozenSet[Tuple[str, str]]:
    return frozenset(
        (c.name, a.name)
        for c in model.classes
        for a in c.attributes
        if model.is_declared(a.type_name)
    )


COUNT_MEASURES: Dict[str, MeasureDefinition] = {
    "NOC": MeasureDefinition("design size", lambda m: frozenset(m.names)),
    "NOH": MeasureDefinition("hierarchies", inheritance_hierarchies),
    "NAR": MeasureDefinition("aggregation relationships", _aggregation_attributes),
    "NAH": MeasureDefinition("aggregation hierarchies", aggregation_components),
    "NOP": MeasureDefinition("polymorphism", polymorphic_methods),
}


def ancestry_measure(name: str) -> MeasureDefinition:
    """Мера NOA для одного класса: множество его предков против пустого"""
    return MeasureDefinition(f"ancestors of {name}", lambda m: ancestors_of(m, name))
