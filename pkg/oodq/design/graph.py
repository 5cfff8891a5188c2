"""
Запросы к графу дизайна: предки, глубина, иерархии, компоненты агрегации

Граф наследования строится один раз на модель (networkx, ребро потомок ->
родитель) и хранится в ClassModel.inheritance_graph.
"""
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Set, Tuple

import networkx as nx

from oodq.design.models import ClassModel
from oodq.design.validation import validate
from oodq.exceptions import InvalidModelError, UnknownClassError

logger = logging.getLogger(__name__)


def cyclic_classes(graph: nx.DiGraph) -> FrozenSet[str]:
    """Классы на циклах наследования и все их потомки"""
    on_cycles: Set[str] = set(nx.nodes_with_selfloops(graph))
    for component in nx.strongly_connected_components(graph):
        if len(component) > 1:
            on_cycles |= component
    tainted = set(on_cycles)
    for name in on_cycles:
        tainted |= nx.ancestors(graph, name)
    return frozenset(tainted)


@dataclass(frozen=True)
class Hierarchy:
    """
    Предвычисленная иерархия наследования

    Предки и глубины считаются одним проходом в топологическом порядке,
    чтобы цепочки глубиной в тысячи классов не упирались в рекурсию.
    """
    order: Tuple[str, ...]
    ancestors: Dict[str, FrozenSet[str]]
    depths: Dict[str, int]
    cyclic: FrozenSet[str]

    @classmethod
    def build(cls, model: ClassModel) -> "Hierarchy":
        graph = model.inheritance_graph
        cyclic = cyclic_classes(graph)
        position = {name: index for index, name in enumerate(model.by_name)}

        # родитель всегда раньше потомков, при равенстве - порядок объявления
        acyclic = nx.reverse_view(graph.subgraph(n for n in graph if n not in cyclic))
        order = tuple(nx.lexicographical_topological_sort(acyclic, key=position.__getitem__))

        ancestors: Dict[str, FrozenSet[str]] = {}
        depths: Dict[str, int] = {}
        for name in order:
            collected: Set[str] = set()
            depth = 1
            for parent in graph.successors(name):
                collected.add(parent)
                collected |= ancestors[parent]
                depth = max(depth, depths[parent] + 1)
            ancestors[name] = frozenset(collected)
            depths[name] = depth

        if cyclic:
            logger.debug(f"Классы на циклах наследования или под ними: {sorted(cyclic)}")
            for name in cyclic:
                ancestors[name] = frozenset(nx.descendants(graph, name) - {name})

        return cls(order=order, ancestors=ancestors, depths=depths, cyclic=cyclic)


def _require(model: ClassModel, name: str) -> None:
    if not model.is_declared(name):
        raise UnknownClassError(name)


def ancestors_of(model: ClassModel, name: str) -> FrozenSet[str]:
    """Все различные классы, достижимые по ребрам к родителям"""
    _require(model, name)
    return model.hierarchy.ancestors[name]


def descendants_of(model: ClassModel, name: str) -> FrozenSet[str]:
    """Все классы, для которых name является предком"""
    _require(model, name)
    return frozenset(nx.ancestors(model.inheritance_graph, name) - {name})


def depth_levels(model: ClassModel, name: str) -> int:
    """Число уровней на самом длинном пути к корню, включая сам класс"""
    _require(model, name)
    hierarchy = model.hierarchy
    if name in hierarchy.cyclic:
        raise InvalidModelError(validate(model))
    return hierarchy.depths[name]


def roots(model: ClassModel) -> FrozenSet[str]:
    """Классы без объявленных родителей"""
    graph = model.inheritance_graph
    return frozenset(name for name in graph if graph.out_degree(name) == 0)


def inheritance_hierarchies(model: ClassModel) -> FrozenSet[str]:
    """Корни иерархий: классы без родителя, у которых есть хотя бы один потомок"""
    graph = model.inheritance_graph
    return frozenset(name for name in roots(model) if graph.in_degree(name) > 0)


def topological_order(model: ClassModel) -> Tuple[str, ...]:
    """Имена классов так, что каждый родитель идет раньше своих потомков"""
    hierarchy = model.hierarchy
    if hierarchy.cyclic:
        raise InvalidModelError(validate(model))
    return hierarchy.order


def aggregation_components(model: ClassModel) -> FrozenSet[FrozenSet[str]]:
    """Слабо связные компоненты графа агрегации, содержащие хотя бы одно ребро"""
    graph = nx.DiGraph()
    graph.add_edges_from(model.aggregation_edges)
    return frozenset(frozenset(members) for members in nx.weakly_connected_components(graph))
