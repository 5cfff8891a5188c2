"""
Анкета экспертов: ответы и статистика согласия
"""

from .responses import Answer, Group, SurveyDataset, SurveyResponse, SurveySummary, load_responses
from .statistics import (
    AgreementStat, agreement, agreement_percentages, figure_tables,
    group_split, influence_ranking, metric_table, wilson_interval, z_score,
)

__all__ = [
    'Answer', 'Group', 'SurveyDataset', 'SurveyResponse', 'SurveySummary', 'load_responses',
    'AgreementStat', 'agreement', 'agreement_percentages', 'figure_tables',
    'group_split', 'influence_ranking', 'metric_table', 'wilson_interval', 'z_score',
]
