"""
Модель дизайна классов и запросы к ней
"""

from .models import AttributeDef, ClassDef, ClassKind, ClassModel, MethodDef, Visibility
from .graph import (
    aggregation_components, ancestors_of, depth_levels, descendants_of,
    inheritance_hierarchies, roots, topological_order,
)
from .validation import Violation, validate

__all__ = [
    'AttributeDef', 'ClassDef', 'ClassKind', 'ClassModel', 'MethodDef', 'Visibility',
    'aggregation_components', 'ancestors_of', 'depth_levels', 'descendants_of',
    'inheritance_hierarchies', 'roots', 'topological_order', 'Violation', 'validate',
]
