"""
Отчеты анализа и опроса
"""

from .builder import (
    AnalysisReport, CombinedReport, SurveyReport, analyze_design, analyze_from_config,
    combined_report, load_thresholds, read_survey, survey_derived_weights, survey_report,
)

__all__ = [
    'AnalysisReport', 'CombinedReport', 'SurveyReport', 'analyze_design', 'analyze_from_config',
    'combined_report', 'load_thresholds', 'read_survey', 'survey_derived_weights', 'survey_report',
]
