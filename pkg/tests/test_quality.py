"""
Тесты модели качества, профилей весов и оценок факторов
"""
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from oodq.exceptions import MissingMetricError, MissingPairError, WeightProfileError
from oodq.metrics import METRIC_IDS, compute_all
from oodq.quality import (
    DEFAULT_QUALITY_MODEL, FACTOR_IDS, WeightProfile, all_factor_scores, equal_weights,
    factor_score, load_weight_profile, overall_score, published_agreement, rank_contributions,
    survey_weights, weights_from_survey,
)

FIG2 = {
    "functionality": ("NOC", "NOH", "CAM", "NOP", "CIS"),
    "effectiveness": ("NOA", "NOH", "MDIT", "DAR", "NAR", "NAH", "FA", "NOP"),
    "understandability": ("DAR", "CAM", "FA", "NOP"),
    "reusability": ("NOC", "DCC", "CAM", "CIS"),
    "maintainability": ("NOC", "NOH", "NOA", "DAR", "DCC", "NOM", "NAR", "NAH", "NOP", "EOD"),
}

EQ_LEVELS = st.sampled_from([F(i, 5) for i in range(6)])
eq_profiles = st.fixed_dictionaries({metric: EQ_LEVELS for metric in METRIC_IDS})


def test_model_matches_hierarchy():
    assert FACTOR_IDS == tuple(FIG2)
    for factor in DEFAULT_QUALITY_MODEL.factors:
        assert factor.metrics == FIG2[factor.id]
    assert len(DEFAULT_QUALITY_MODEL.pairs()) == 31


class TestWeights:
    def test_equal_weights_are_exact(self):
        profile = equal_weights()
        for factor, metrics in FIG2.items():
            assert all(profile.weight(factor, m) == F(1, len(metrics)) for m in metrics)

    def test_symmetric_percentages(self):
        from oodq.quality.model import Factor, Criterion, QualityModel
        model = QualityModel((Factor("f", (Criterion("a", "NOC"), Criterion("b", "NOH"))),))
        profile = weights_from_survey({("NOC", "f"): 50, ("NOH", "f"): 50}, model)
        assert profile.weight("f", "NOC") == F(1, 2)

    def test_single_metric_factor(self):
        from oodq.quality.model import Factor, Criterion, QualityModel
        model = QualityModel((Factor("f", (Criterion("a", "EOD"),)),))
        assert weights_from_survey({("EOD", "f"): 12.5}, model).weight("f", "EOD") == 1

    def test_published_maintainability_weights(self):
        profile = survey_weights()
        assert float(profile.weight("maintainability", "NOC")) == pytest.approx(90.38 / 807.69, abs=1e-9)
        assert round(float(profile.weight("maintainability", "NOC")), 4) == 0.1119

    def test_published_profile_is_positive_and_normalised(self):
        profile = survey_weights()
        assert len(published_agreement()) == 31
        for factor, metrics in FIG2.items():
            weights = [profile.weight(factor, m) for m in metrics]
            assert all(w > 0 for w in weights)
            assert sum(weights) == 1

    def test_missing_pair(self):
        percentages = dict(published_agreement())
        del percentages[("EOD", "maintainability")]
        with pytest.raises(MissingPairError) as error:
            weights_from_survey(percentages)
        assert (error.value.metric, error.value.factor) == ("EOD", "maintainability")

    def test_sum_must_be_one(self):
        with pytest.raises(WeightProfileError):
            WeightProfile({"functionality": {"NOC": F(1, 2), "NOH": F(1, 3)}})

    def test_load_profile_file(self):
        text = (
            '{"functionality": {"NOC": 0.6, "NOH": 0.1, "CAM": 0.1, "NOP": 0.1, "CIS": 0.1},'
            ' "effectiveness": {"NOA": 0.125, "NOH": 0.125, "MDIT": 0.125, "DAR": 0.125,'
            ' "NAR": 0.125, "NAH": 0.125, "FA": 0.125, "NOP": 0.125},'
            ' "understandability": {"DAR": 0.25, "CAM": 0.25, "FA": 0.25, "NOP": 0.25},'
            ' "reusability": {"NOC": 0.25, "DCC": 0.25, "CAM": 0.25, "CIS": 0.25},'
            ' "maintainability": {"NOC": 0.1, "NOH": 0.1, "NOA": 0.1, "DAR": 0.1, "DCC": 0.1,'
            ' "NOM": 0.1, "NAR": 0.1, "NAH": 0.1, "NOP": 0.1, "EOD": 0.1}}'
        )
        profile = load_weight_profile(text, "w.json")
        assert profile.weight("functionality", "NOC") == F(3, 5)
        assert profile.profile_id.startswith("file:")

    def test_load_profile_rejects_unknown_metric(self):
        text = '{"functionality": {"LOC": 1}}'
        with pytest.raises(WeightProfileError):
            load_weight_profile(text)

    def test_load_profile_rejects_bad_sum(self):
        with pytest.raises(WeightProfileError):
            load_weight_profile('{"reusability": {"NOC": 0.5, "DCC": 0.5, "CAM": 0.5, "CIS": 0.5}}')


class TestScores:
    def test_all_ones_and_all_zeros(self):
        for eq in (F(1), F(0)):
            eqs = {metric: eq for metric in METRIC_IDS}
            for factor in FACTOR_IDS:
                assert factor_score(DEFAULT_QUALITY_MODEL, survey_weights(), eqs, factor).score == eq

    def test_f2_functionality(self, f2):
        scores = all_factor_scores(DEFAULT_QUALITY_MODEL, equal_weights(), compute_all(f2).values)
        functionality = scores[0]
        assert functionality.factor == "functionality"
        assert functionality.score == F(1, 5)
        assert [c.metric for c in rank_contributions(functionality)][:2] == ["NOC", "NOH"]

    def test_f0_scores_are_zero(self, f0):
        scores = all_factor_scores(DEFAULT_QUALITY_MODEL, equal_weights(), compute_all(f0).values)
        assert [s.score for s in scores] == [0] * 5

    def test_f1_scores_are_itemised(self, f1):
        scores = all_factor_scores(DEFAULT_QUALITY_MODEL, equal_weights(), compute_all(f1).values)
        for score in scores:
            assert score.score == sum(c.term for c in score.contributions)
            assert [c.metric for c in score.contributions] == list(FIG2[score.factor])

    def test_missing_metric(self):
        eqs = {metric: F(1) for metric in METRIC_IDS if metric != "CIS"}
        with pytest.raises(MissingMetricError) as error:
            factor_score(DEFAULT_QUALITY_MODEL, equal_weights(), eqs, "functionality")
        assert error.value.metric == "CIS"

    def test_overall_is_plain_mean(self, f2):
        scores = all_factor_scores(DEFAULT_QUALITY_MODEL, equal_weights(), compute_all(f2).values)
        assert overall_score(scores) == sum(s.score for s in scores) / 5
        assert overall_score([]) == 0

    @settings(max_examples=1000)
    @given(eq_profiles, st.sampled_from(METRIC_IDS), st.booleans())
    def test_monotone_and_bounded(self, eqs, metric, survey):
        weights = survey_weights() if survey else equal_weights()
        raised = dict(eqs)
        raised[metric] = min(F(1), eqs[metric] + F(1, 5))
        for factor in FACTOR_IDS:
            before = factor_score(DEFAULT_QUALITY_MODEL, weights, eqs, factor).score
            after = factor_score(DEFAULT_QUALITY_MODEL, weights, raised, factor).score
            assert 0 <= before <= after <= 1

    @settings(max_examples=200)
    @given(eq_profiles, st.randoms())
    def test_permutation_invariance(self, eqs, rnd):
        from oodq.quality.model import QualityModel, Factor
        weights = survey_weights()
        for factor in DEFAULT_QUALITY_MODEL.factors:
            criteria = list(factor.criteria)
            rnd.shuffle(criteria)
            shuffled = QualityModel((Factor(factor.id, tuple(criteria)),))
            assert (
                factor_score(shuffled, weights, eqs, factor.id).score
                == factor_score(DEFAULT_QUALITY_MODEL, weights, eqs, factor.id).score
            )
