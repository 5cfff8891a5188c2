"""
Проверка инвариантов модели дизайна
"""
from collections import Counter
from dataclasses import dataclass
from typing import List, Tuple

import networkx as nx

from oodq.design.models import ClassModel
from oodq.utils.validators import is_identifier

DUPLICATE_CLASS = "duplicate-class"
INVALID_IDENTIFIER = "invalid-identifier"
SELF_INHERITANCE = "self-inheritance"
DUPLICATE_PARENT = "duplicate-parent"
UNKNOWN_PARENT = "unknown-parent"
INHERITANCE_CYCLE = "inheritance-cycle"
DUPLICATE_ATTRIBUTE = "duplicate-attribute"
DUPLICATE_METHOD = "duplicate-method"


@dataclass(frozen=True)
class Violation:
    """Нарушение инварианта: класс, идентификатор правила, пояснение"""
    class_name: str
    rule: str
    message: str = ""

    def __str__(self) -> str:
        return f"{self.rule} в {self.class_name}" + (f" ({self.message})" if self.message else "")


def validate(model: ClassModel) -> List[Violation]:
    """Отчет о нарушениях: пустой тогда и только тогда, когда модель корректна"""
    violations: List[Violation] = []
    counts = Counter(model.names)
    reported = set()

    for class_def in model.classes:
        name = class_def.name
        if counts[name] > 1 and name not in reported:
            reported.add(name)
            violations.append(Violation(name, DUPLICATE_CLASS, f"объявлен {counts[name]} раз"))

        identifiers = [name, *class_def.parents]
        identifiers += [a.name for a in class_def.attributes] + [a.type_name for a in class_def.attributes]
        for method in class_def.methods:
            identifiers += [method.name, method.return_type, *method.parameter_types]
        for identifier in identifiers:
            if not is_identifier(identifier):
                violations.append(Violation(name, INVALID_IDENTIFIER, repr(identifier)))

        if name in class_def.parents:
            violations.append(Violation(name, SELF_INHERITANCE))

        for parent, times in Counter(class_def.parents).items():
            if times > 1:
                violations.append(Violation(name, DUPLICATE_PARENT, parent))
            if parent != name and not model.is_declared(parent):
                violations.append(Violation(name, UNKNOWN_PARENT, parent))

        for attribute, times in Counter(a.name for a in class_def.attributes).items():
            if times > 1:
                violations.append(Violation(name, DUPLICATE_ATTRIBUTE, attribute))

        for signature, times in Counter(m.signature for m in class_def.methods).items():
            if times > 1:
                method_name, params = signature
                violations.append(
                    Violation(name, DUPLICATE_METHOD, f"{method_name}({', '.join(params)})")
                )

    for cycle in inheritance_cycles(model):
        violations.append(Violation(min(cycle), INHERITANCE_CYCLE, " -> ".join(cycle)))

    return violations


def inheritance_cycles(model: ClassModel) -> List[Tuple[str, ...]]:
    """
    Циклы наследования длиной от двух классов

    Каждый цикл - сильно связная компонента графа "потомок -> родитель",
    члены отсортированы по имени.
    """
    return sorted(
        tuple(sorted(component))
        for component in nx.strongly_connected_components(model.inheritance_graph)
        if len(component) > 1
    )
