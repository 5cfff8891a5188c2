"""
Модели данных дизайна классов
"""
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, Optional, Tuple, Any, TYPE_CHECKING

import networkx as nx

if TYPE_CHECKING:
    from oodq.design.graph import Hierarchy

Signature = Tuple[str, Tuple[str, ...]]


class Visibility(str, Enum):
    """Уровень видимости члена класса"""
    PUBLIC = "public"
    PROTECTED = "protected"
    PRIVATE = "private"


class ClassKind(str, Enum):
    """Вид объявления"""
    CLASS = "class"
    INTERFACE = "interface"


@dataclass(frozen=True)
class AttributeDef:
    """Модель атрибута"""
    name: str
    type_name: str
    visibility: Visibility = Visibility.PRIVATE
    documented: bool = False

    def to_dict(self) -> Dict[str, Any]:
        """Преобразование в словарь формата обмена"""
        return {
            'name': self.name,
            'type': self.type_name,
            'visibility': self.visibility.value,
            'documented': self.documented
        }


@dataclass(frozen=True)
class MethodDef:
    """Модель метода (тело метода в модель не попадает)"""
    name: str
    parameter_types: Tuple[str, ...] = ()
    return_type: str = "void"
    visibility: Visibility = Visibility.PUBLIC
    documented: bool = False

    @property
    def signature(self) -> Signature:
        """Сигнатура: имя и список типов параметров"""
        return self.name, self.parameter_types

    def to_dict(self) -> Dict[str, Any]:
        """Преобразование в словарь формата обмена"""
        return {
            'name': self.name,
            'params': list(self.parameter_types),
            'returns': self.return_type,
            'visibility': self.visibility.value,
            'documented': self.documented
        }


@dataclass(frozen=True)
class ClassDef:
    """Модель класса или интерфейса"""
    name: str
    kind: ClassKind = ClassKind.CLASS
    parents: Tuple[str, ...] = ()
    attributes: Tuple[AttributeDef, ...] = ()
    methods: Tuple[MethodDef, ...] = ()
    documented: bool = False

    @cached_property
    def signatures(self) -> FrozenSet[Signature]:
        return frozenset(method.signature for method in self.methods)

    def to_dict(self) -> Dict[str, Any]:
        """Преобразование в словарь формата обмена"""
        return {
            'name': self.name,
            'kind': self.kind.value,
            'parents': list(self.parents),
            'documented': self.documented,
            'attributes': [attribute.to_dict() for attribute in self.attributes],
            'methods': [method.to_dict() for method in self.methods]
        }


@dataclass(frozen=True)
class ClassModel:
    """
    Неизменяемая модель дизайна

    Ребра наследования и агрегации не хранятся отдельно, а выводятся из
    объявлений, поэтому "свободных" ребер в модели быть не может.
    """
    classes: Tuple[ClassDef, ...] = ()
    files: Tuple[str, ...] = field(default=(), compare=False)

    @cached_property
    def by_name(self) -> Dict[str, ClassDef]:
        """Индекс классов по имени (при дубликатах побеждает первый)"""
        index: Dict[str, ClassDef] = {}
        for class_def in self.classes:
            index.setdefault(class_def.name, class_def)
        return index

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(class_def.name for class_def in self.classes)

    def get(self, name: str) -> Optional[ClassDef]:
        return self.by_name.get(name)

    def is_declared(self, type_name: str) -> bool:
        """Тип пользовательский, если класс с таким именем объявлен в модели"""
        return type_name in self.by_name

    @cached_property
    def inheritance_edges(self) -> FrozenSet[Tuple[str, str]]:
        """Множество пар (потомок, родитель)"""
        return frozenset(
            (class_def.name, parent)
            for class_def in self.classes
            for parent in class_def.parents
        )

    @cached_property
    def aggregation_edges(self) -> FrozenSet[Tuple[str, str]]:
        """Множество пар (владелец, часть) из атрибутов пользовательских типов"""
        return frozenset(
            (class_def.name, attribute.type_name)
            for class_def in self.classes
            for attribute in class_def.attributes
            if self.is_declared(attribute.type_name)
        )

    @cached_property
    def inheritance_graph(self) -> nx.DiGraph:
        """Граф наследования: ребро потомок -> родитель между объявленными классами"""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.by_name)
        graph.add_edges_from(
            (name, parent)
            for name, class_def in self.by_name.items()
            for parent in class_def.parents
            if parent in self.by_name
        )
        return graph

    @cached_property
    def hierarchy(self) -> "Hierarchy":
        """Предвычисленные запросы по иерархии наследования"""
        from oodq.design.graph import Hierarchy
        return Hierarchy.build(self)

    def canonical(self) -> "ClassModel":
        """Каноничный порядок: классы по имени, члены в порядке объявления"""
        return replace(self, classes=tuple(sorted(self.classes, key=lambda c: c.name)))

    def to_dict(self) -> Dict[str, Any]:
        """Преобразование в словарь формата обмена"""
        return {'classes': [class_def.to_dict() for class_def in self.canonical().classes]}
