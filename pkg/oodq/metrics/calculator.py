"""
Вычисление 14 метрик дизайна

Все функции чистые и работают с корректной моделью. Метрики уровня класса
агрегируются средним арифметическим (CAM, DAR, FA, DCC, NOM, CIS) или
максимумом (NOA, MDIT); для пустой модели любая метрика равна 0.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, Iterable, Mapping, Set, Tuple

from oodq.design.graph import aggregation_components, ancestors_of, depth_levels, inheritance_hierarchies
from oodq.design.models import ClassDef, ClassModel, Signature, Visibility
from oodq.metrics.definitions import METRIC_IDS, METRICS

logger = logging.getLogger(__name__)

PolymorphicMethod = Tuple[str, Signature]


def _mean(values: Iterable) -> Fraction:
    values = [Fraction(v) for v in values]
    if not values:
        return Fraction(0)
    return sum(values, Fraction(0)) / len(values)


# === РАЗМЕР И НАСЛЕДОВАНИЕ ===

def noc(model: ClassModel) -> int:
    """Число классов и интерфейсов"""
    return len(model.classes)


def noh(model: ClassModel) -> int:
    """Число иерархий наследования"""
    return len(inheritance_hierarchies(model))


def noa_class(model: ClassModel, name: str) -> int:
    return len(ancestors_of(model, name))


def noa(model: ClassModel) -> int:
    """Максимальное по классам число предков"""
    return max((noa_class(model, c.name) for c in model.classes), default=0)


def mdit(model: ClassModel) -> int:
    """Максимальная глубина наследования в уровнях"""
    return max((depth_levels(model, c.name) for c in model.classes), default=0)


# === АГРЕГАЦИЯ ===

def nar(model: ClassModel) -> int:
    """Объявления атрибутов пользовательских типов (с кратностью)"""
    return sum(
        1
        for class_def in model.classes
        for attribute in class_def.attributes
        if model.is_declared(attribute.type_name)
    )


def nah(model: ClassModel) -> int:
    """Число иерархий агрегации"""
    return len(aggregation_components(model))


# === СВЯЗНОСТЬ, ПОЛИМОРФИЗМ, ИНКАПСУЛЯЦИЯ ===

def cam_class(class_def: ClassDef) -> Fraction:
    """
    Связность методов класса

    Сумма чисел различных типов параметров каждого метода, деленная на
    k * |T|, где T - объединение типов параметров всех k методов.
    """
    methods = class_def.methods
    parameter_sets = [frozenset(m.parameter_types) for m in methods]
    all_types = frozenset().union(*parameter_sets)
    if not methods or not all_types:
        return Fraction(0)
    return Fraction(sum(len(p) for p in parameter_sets), len(methods) * len(all_types))


def cam(model: ClassModel) -> Fraction:
    return _mean(cam_class(c) for c in model.classes)


def polymorphic_methods(model: ClassModel) -> FrozenSet[PolymorphicMethod]:
    """
    Методы, переопределенные хотя бы одним потомком

    Каждая сигнатура учитывается один раз у самого верхнего объявившего ее
    класса; реализация метода интерфейса ниже по иерархии тоже считается.
    """
    hierarchy = model.hierarchy
    overridden: Set[PolymorphicMethod] = set()
    for class_def in model.classes:
        local = class_def.signatures
        for ancestor in hierarchy.ancestors[class_def.name]:
            for signature in model.by_name[ancestor].signatures & local:
                overridden.add((ancestor, signature))

    return frozenset(
        (owner, signature)
        for owner, signature in overridden
        if not any(
            signature in model.by_name[a].signatures
            for a in hierarchy.ancestors[owner]
        )
    )


def nop(model: ClassModel) -> int:
    """Число полиморфных методов"""
    return len(polymorphic_methods(model))


def dar_class(class_def: ClassDef) -> Fraction:
    """Доля закрытых и защищенных атрибутов; класс без атрибутов дает 1"""
    if not class_def.attributes:
        return Fraction(1)
    hidden = sum(1 for a in class_def.attributes if a.visibility is not Visibility.PUBLIC)
    return Fraction(hidden, len(class_def.attributes))


def dar(model: ClassModel) -> Fraction:
    return _mean(dar_class(c) for c in model.classes)


def inherited_signatures(model: ClassModel, name: str) -> FrozenSet[Signature]:
    """Видимые (не private) методы предков, не переопределенные в классе"""
    local = model.by_name[name].signatures
    return frozenset(
        method.signature
        for ancestor in ancestors_of(model, name)
        for method in model.by_name[ancestor].methods
        if method.visibility is not Visibility.PRIVATE and method.signature not in local
    )


def fa_class(model: ClassModel, name: str) -> Fraction:
    """Функциональная абстракция: унаследованные / доступные методы"""
    inherited = len(inherited_signatures(model, name))
    accessible = inherited + len(model.by_name[name].methods)
    if accessible == 0:
        return Fraction(0)
    return Fraction(inherited, accessible)


def fa(model: ClassModel) -> Fraction:
    return _mean(fa_class(model, c.name) for c in model.classes)


def coupled_classes(model: ClassModel, class_def: ClassDef) -> FrozenSet[str]:
    """Другие объявленные классы среди типов атрибутов и параметров"""
    types = {a.type_name for a in class_def.attributes}
    types.update(t for m in class_def.methods for t in m.parameter_types)
    return frozenset(t for t in types if t != class_def.name and model.is_declared(t))


def dcc_class(model: ClassModel, class_def: ClassDef) -> int:
    return len(coupled_classes(model, class_def))


def dcc(model: ClassModel) -> Fraction:
    """Прямая связанность классов (среднее по классам)"""
    return _mean(dcc_class(model, c) for c in model.classes)


# === ИНТЕРФЕЙС И ДОКУМЕНТАЦИЯ ===

def nom_class(class_def: ClassDef) -> int:
    return len(class_def.methods)


def nom(model: ClassModel) -> Fraction:
    return _mean(nom_class(c) for c in model.classes)


def cis_class(class_def: ClassDef) -> int:
    return sum(1 for m in class_def.methods if m.visibility is Visibility.PUBLIC)


def cis(model: ClassModel) -> Fraction:
    return _mean(cis_class(c) for c in model.classes)


def eod(model: ClassModel) -> Fraction:
    """Доля документированных сущностей: классов, методов и атрибутов"""
    flags = []
    for class_def in model.classes:
        flags.append(class_def.documented)
        flags.extend(m.documented for m in class_def.methods)
        flags.extend(a.documented for a in class_def.attributes)
    if not flags:
        return Fraction(0)
    return Fraction(sum(flags), len(flags))


# === ВЕКТОР МЕТРИК ===

DESIGN_METRICS: Dict[str, Callable[[ClassModel], object]] = {
    "NOC": noc, "NOH": noh, "NOA": noa, "MDIT": mdit, "NAR": nar, "NAH": nah,
    "CAM": cam, "NOP": nop, "DAR": dar, "FA": fa, "DCC": dcc, "NOM": nom,
    "CIS": cis, "EOD": eod,
}

# ключи совпадают с метриками, у которых MetricInfo.per_class
CLASS_METRICS: Dict[str, Callable[[ClassModel, ClassDef], object]] = {
    "NOA": lambda model, c: noa_class(model, c.name),
    "MDIT": lambda model, c: depth_levels(model, c.name),
    "CAM": lambda model, c: cam_class(c),
    "DAR": lambda model, c: dar_class(c),
    "FA": lambda model, c: fa_class(model, c.name),
    "DCC": dcc_class,
    "NOM": lambda model, c: nom_class(c),
    "CIS": lambda model, c: cis_class(c),
}


@dataclass(frozen=True)
class MetricVector:
    """Значения 14 метрик уровня дизайна и разбивка по классам"""
    values: Mapping[str, Fraction]
    per_class: Mapping[str, Mapping[str, Fraction]] = field(default_factory=dict)

    def __getitem__(self, metric: str) -> Fraction:
        return self.values[metric]

    def __iter__(self):
        return iter(METRIC_IDS)

    def items(self):
        return ((metric, self.values[metric]) for metric in METRIC_IDS)

    def class_values(self, name: str) -> Dict[str, Fraction]:
        """Метрики уровня класса для одного класса"""
        return {metric: values[name] for metric, values in self.per_class.items()}


def compute_all(model: ClassModel) -> MetricVector:
    """Все метрики модели; совпадает с отдельными функциями поточечно"""
    values = {metric: Fraction(DESIGN_METRICS[metric](model)) for metric in METRIC_IDS}
    per_class = {
        metric: {c.name: Fraction(CLASS_METRICS[metric](model, c)) for c in model.classes}
        for metric in METRIC_IDS
        if METRICS[metric].per_class
    }
    logger.debug(f"Метрики вычислены для {len(model.classes)} классов")
    return MetricVector(values=values, per_class=per_class)
