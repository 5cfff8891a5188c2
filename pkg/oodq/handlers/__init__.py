"""
Обработчики команд командной строки
"""

from .analyze import analyze
from .convert import convert
from .report import report
from .score import score
from .survey import survey

COMMANDS = (analyze, score, survey, report, convert)

__all__ = ['COMMANDS', 'analyze', 'convert', 'report', 'score', 'survey']
