"""
Метрики дизайна
"""

from .definitions import METRIC_IDS, METRICS, MetricInfo
from .calculator import (
    MetricVector, compute_all, polymorphic_methods,
    noc, noh, noa, mdit, nar, nah, cam, nop, dar, fa, dcc, nom, cis, eod,
    cam_class, dar_class, fa_class, dcc_class, nom_class, cis_class, noa_class,
)

__all__ = [
    'METRIC_IDS', 'METRICS', 'MetricInfo', 'MetricVector', 'compute_all', 'polymorphic_methods',
    'noc', 'noh', 'noa', 'mdit', 'nar', 'nah', 'cam', 'nop', 'dar', 'fa', 'dcc', 'nom', 'cis', 'eod',
    'cam_class', 'dar_class', 'fa_class', 'dcc_class', 'nom_class', 'cis_class', 'noa_class',
]
