"""
Тесты мер через расстояние и шкал EQ
"""
import itertools
from collections import deque
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from oodq.distance import (
    COUNT_MEASURES, DEFAULT_SCALES, DistanceSpace, EqScale, MeasureDefinition,
    ancestry_measure, delta, load_threshold_profile, measure, quantize_all, quantize_eq,
    transformation_sequence,
)
from oodq.distance.framework import ADD, REMOVE
from oodq.exceptions import FormatError, MissingMetricError, ThresholdProfileError
from oodq.metrics import METRIC_IDS, compute_all, noa_class

UNIVERSE = frozenset("abcdef")
SPACE = DistanceSpace(UNIVERSE)
SUBSETS = [
    frozenset(combo)
    for size in range(len(UNIVERSE) + 1)
    for combo in itertools.combinations(sorted(UNIVERSE), size)
]


def bfs_distances(start):
    distances = {start: 0}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for neighbour in SPACE.neighbours(current):
            if neighbour not in distances:
                distances[neighbour] = distances[current] + 1
                queue.append(neighbour)
    return distances


class TestDelta:
    def test_trivial(self):
        assert delta(set(), set()) == 0
        assert delta({"x"}, {"y"}) == 2

    def test_exhaustive_against_bfs(self):
        assert len(SUBSETS) == 64
        for a in SUBSETS:
            shortest = bfs_distances(a)
            assert len(shortest) == 64
            for b in SUBSETS:
                assert delta(a, b) == shortest[b]

    def test_metric_axioms(self):
        for a, b in itertools.product(SUBSETS, repeat=2):
            d = delta(a, b)
            assert d >= 0
            assert (d == 0) == (a == b)
            assert d == delta(b, a)
        # неравенство треугольника на всех тройках подмножеств четырехэлементного универсума
        small = [s for s in SUBSETS if s <= frozenset("abcd")]
        for a, b, c in itertools.product(small, repeat=3):
            assert delta(a, c) <= delta(a, b) + delta(b, c)

    @settings(max_examples=300)
    @given(st.frozensets(st.sampled_from(sorted(UNIVERSE))),
           st.frozensets(st.sampled_from(sorted(UNIVERSE))),
           st.frozensets(st.sampled_from(sorted(UNIVERSE))))
    def test_triangle_inequality(self, a, b, c):
        assert delta(a, c) <= delta(a, b) + delta(b, c)

    def test_neighbours_differ_by_one_element(self):
        for a in SUBSETS:
            neighbours = list(SPACE.neighbours(a))
            assert len(neighbours) == len(UNIVERSE)
            assert all(delta(a, n) == 1 and n <= SPACE.universe for n in neighbours)

    def test_transformation_sequence_is_shortest_and_reaches_target(self):
        for a, b in itertools.product(SUBSETS[::5], repeat=2):
            steps = transformation_sequence(a, b)
            assert len(steps) == delta(a, b)
            current = set(a)
            for action, element in steps:
                if action == REMOVE:
                    current.remove(element)
                else:
                    assert action == ADD
                    current.add(element)
            assert current == b


class TestMeasure:
    @pytest.mark.parametrize("fixture", ["f0", "f1", "f2"])
    def test_count_measures_recover_metrics(self, fixture, request):
        model = request.getfixturevalue(fixture)
        vector = compute_all(model)
        for metric, definition in COUNT_MEASURES.items():
            assert measure(definition, model) == vector[metric], metric

    def test_f1_values(self, f1):
        assert measure(COUNT_MEASURES["NOC"], f1) == 3
        assert measure(COUNT_MEASURES["NOP"], f1) == 1

    def test_lowest_amount_is_zero(self):
        same = MeasureDefinition("same", lambda p: {1, 2}, lambda p: {1, 2})
        assert measure(same, None) == 0

    def test_ancestry_measure(self, f2):
        for class_def in f2.classes:
            assert measure(ancestry_measure(class_def.name), f2) == noa_class(f2, class_def.name)


class TestQuantize:
    def test_noc_examples(self):
        scale = DEFAULT_SCALES["NOC"]
        assert quantize_eq(scale, 8) == 1
        assert quantize_eq(scale, 0) == 0
        assert quantize_eq(scale, 4) == F(3, 5)
        assert quantize_eq(scale, 7) == F(4, 5)

    def test_ratio_above_high_anchor(self):
        assert quantize_eq(DEFAULT_SCALES["DAR"], 0.85) == 1
        assert quantize_eq(DEFAULT_SCALES["DAR"], F(1, 100)) == 0

    @pytest.mark.parametrize("metric", METRIC_IDS)
    def test_anchors(self, metric):
        scale = DEFAULT_SCALES[metric]
        assert quantize_eq(scale, scale.low) == 0
        assert quantize_eq(scale, scale.high) == 1

    def test_three_level_scale(self):
        scale = DEFAULT_SCALES["DCC"]
        assert scale.levels == 3
        assert quantize_eq(scale, 3) == F(1, 2)
        assert quantize_eq(scale, F(2, 3)) == 0

    @settings(max_examples=300)
    @given(st.sampled_from(METRIC_IDS), st.fractions(-20, 20), st.fractions(-20, 20))
    def test_monotone_and_on_grid(self, metric, x, y):
        scale = DEFAULT_SCALES[metric]
        low, high = sorted((x, y))
        assert quantize_eq(scale, low) <= quantize_eq(scale, high)
        eq = quantize_eq(scale, x)
        assert 0 <= eq <= 1
        assert (eq / scale.step).denominator == 1

    def test_invalid_scales(self):
        with pytest.raises(ThresholdProfileError):
            EqScale("NOC", F(5), F(5), 6)
        with pytest.raises(ThresholdProfileError):
            EqScale("NOC", F(0), F(5), 4)


class TestThresholdProfile:
    def test_partial_override(self):
        profile = load_threshold_profile('{"NOC": {"low": 0, "high": 10}}', "t.json")
        assert profile["NOC"].high == 10
        assert profile["NOH"] == DEFAULT_SCALES["NOH"]
        assert profile.profile_id.startswith("file:")
        assert len(profile.profile_id) == len("file:") + 12

    def test_decimal_anchors_are_exact(self):
        profile = load_threshold_profile('{"DAR": {"low": 0.1, "high": 0.9, "levels": 3}}')
        assert profile["DAR"].low == F(1, 10)
        assert quantize_eq(profile["DAR"], 0.5) == F(1, 2)

    def test_unknown_metric(self):
        with pytest.raises(ThresholdProfileError):
            load_threshold_profile('{"LOC": {"low": 0, "high": 10}}')

    def test_bad_levels_has_pointer(self):
        with pytest.raises(FormatError) as error:
            load_threshold_profile('{"NOC": {"low": 0, "high": 10, "levels": 5}}')
        assert error.value.path == "/NOC/levels"

    def test_inverted_anchors(self):
        with pytest.raises(ThresholdProfileError):
            load_threshold_profile('{"NOC": {"low": 10, "high": 0}}')

    def test_quantize_all(self, f2):
        eqs = quantize_all(compute_all(f2).values)
        assert list(eqs) == list(METRIC_IDS)
        assert eqs["NOC"] == F(4, 5)
        assert eqs["NOH"] == F(1, 5)
        with pytest.raises(MissingMetricError):
            quantize_all({"NOC": 1})
