"""
Модель качества и оценки факторов
"""

from .model import DEFAULT_QUALITY_MODEL, FACTOR_IDS, Criterion, Factor, QualityModel
from .weights import (
    WeightProfile, equal_weights, load_weight_profile, published_agreement,
    resolve_weights, survey_weights, weights_from_survey,
)
from .scoring import (
    Contribution, FactorScore, all_factor_scores, factor_score,
    overall_score, rank_contributions,
)

__all__ = [
    'DEFAULT_QUALITY_MODEL', 'FACTOR_IDS', 'Criterion', 'Factor', 'QualityModel',
    'WeightProfile', 'equal_weights', 'load_weight_profile', 'published_agreement',
    'resolve_weights', 'survey_weights', 'weights_from_survey',
    'Contribution', 'FactorScore', 'all_factor_scores', 'factor_score',
    'overall_score', 'rank_contributions',
]
