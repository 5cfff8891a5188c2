"""
Меры через расстояние между абстракциями и шкалы EQ
"""

from .framework import (
    COUNT_MEASURES, DistanceSpace, MeasureDefinition,
    ancestry_measure, delta, measure, transformation_sequence,
)
from .scales import (
    DEFAULT_PROFILE, DEFAULT_SCALES, EqScale, ThresholdProfile,
    load_threshold_profile, quantize_all, quantize_eq,
)

__all__ = [
    'COUNT_MEASURES', 'DistanceSpace', 'MeasureDefinition',
    'ancestry_measure', 'delta', 'measure', 'transformation_sequence',
    'DEFAULT_PROFILE', 'DEFAULT_SCALES', 'EqScale', 'ThresholdProfile',
    'load_threshold_profile', 'quantize_all', 'quantize_eq',
]
