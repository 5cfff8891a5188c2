"""
Утилиты
"""

from .decorators import error_handler, log_command
from .helpers import content_hash, create_progress_bar, format_card, format_number, format_percent
from .validators import is_identifier, to_fraction, validate_anchors, validate_confidence, validate_weight

__all__ = [
    'error_handler', 'log_command',
    'content_hash', 'create_progress_bar', 'format_card', 'format_number', 'format_percent',
    'is_identifier', 'to_fraction', 'validate_anchors', 'validate_confidence', 'validate_weight',
]
