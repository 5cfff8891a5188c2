"""
Тесты чтения анкет и статистики согласия
"""
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from oodq.exceptions import FormatError, NoDataError, OodqError
from oodq.quality import published_agreement, weights_from_survey
from oodq.survey import (
    Answer, Group, SurveyDataset, SurveyResponse, agreement, agreement_percentages,
    figure_tables, group_split, influence_ranking, load_responses, metric_table, wilson_interval, z_score,
)

from tests.conftest import FIXTURES

HEADER = "respondent,group,metric,factor,answer\n"


@pytest.fixture(scope="module")
def paper52() -> SurveyDataset:
    return load_responses((FIXTURES / "paper52.csv").read_text(encoding="utf-8"))


def dataset_of(*rows: str) -> SurveyDataset:
    return load_responses(HEADER + "".join(row + "\n" for row in rows))


def wilson_by_bisection(successes: float, n: int, z: float = 1.96):
    """Границы интервала как корни (p_hat - p)^2 = z^2 p (1 - p) / n"""
    p_hat = successes / n

    def outside(p: float) -> bool:
        return (p_hat - p) ** 2 > z ** 2 * p * (1 - p) / n

    def root(inner: float, outer: float) -> float:
        for _ in range(200):
            middle = (inner + outer) / 2
            if outside(middle):
                outer = middle
            else:
                inner = middle
        return (inner + outer) / 2

    return root(p_hat, 0.0), root(p_hat, 1.0)


class TestLoading:
    def test_paper_dataset_summary(self, paper52):
        summary = paper52.summary
        assert (summary.respondents, summary.industry, summary.academic) == (52, 36, 16)
        assert round(float(summary.industry_share), 2) == 69.23

    def test_empty_dataset(self):
        tables = figure_tables(dataset_of())
        assert len(tables) == 5
        assert all(row.n == 0 and row.agreement_pct == 0 for rows in tables.values() for row in rows)
        assert influence_ranking(tables) == {factor: [] for factor in tables}

    def test_bom_and_blank_lines(self):
        dataset = load_responses("\ufeff" + HEADER + "r1,industry,NOC,functionality,yes\n\n")
        assert len(dataset.responses) == 1

    def test_unknown_answer_reports_row(self):
        with pytest.raises(FormatError) as error:
            dataset_of("r1,industry,NOC,functionality,yes", "r1,industry,NOH,functionality,maybe")
        assert error.value.row == 3

    @pytest.mark.parametrize("row", [
        "r1,industry,LOC,functionality,yes",
        "r1,industry,NOC,portability,yes",
        "r1,government,NOC,functionality,yes",
        "r1,industry,NOC,functionality",
    ])
    def test_invalid_rows(self, row):
        with pytest.raises(FormatError) as error:
            dataset_of(row)
        assert error.value.row == 2

    def test_duplicate_answer(self):
        with pytest.raises(FormatError):
            dataset_of("r1,industry,NOC,functionality,yes", "r1,industry,NOC,functionality,no")

    def test_conflicting_group(self):
        with pytest.raises(FormatError):
            dataset_of("r1,industry,NOC,functionality,yes", "r1,academic,NOH,functionality,no")

    def test_bad_header(self):
        with pytest.raises(FormatError) as error:
            load_responses("id,group,metric,factor,answer\n")
        assert error.value.row == 1


class TestAgreement:
    def test_paper_percentages(self, paper52):
        computed = agreement_percentages(paper52)
        published = published_agreement()
        assert set(computed) == set(published)
        for pair, pct in published.items():
            assert abs(float(computed[pair]) - float(pct)) <= 0.01, pair

    def test_paper_rankings(self, paper52):
        tables = figure_tables(paper52)
        assert [row.metric for row in tables["functionality"]] == ["NOC", "NOH", "CIS", "CAM", "NOP"]
        assert tables["understandability"][0].metric == "CAM"
        assert influence_ranking(tables)["reusability"][-1] == "NOC"

    def test_weights_from_collected_answers(self, paper52):
        profile = weights_from_survey(agreement_percentages(paper52))
        assert profile.weight("functionality", "NOC") == F(48, 48 + 47 + 43 + 42 + 47)

    def test_metric_table(self, paper52):
        rows = metric_table(paper52, "NOC")
        assert [row.factor for row in rows] == ["functionality", "reusability", "maintainability"]

    def test_every_stat_holds_its_interval(self, paper52):
        for rows in figure_tables(paper52).values():
            for row in rows:
                assert 0 <= row.ci_low <= float(row.agreement_pct) <= row.ci_high <= 100

    def test_no_data(self):
        with pytest.raises(NoDataError):
            agreement(dataset_of("r1,industry,NOC,functionality,yes"), "NOH", "functionality")

    def test_group_split(self):
        dataset = dataset_of("r1,industry,NOC,functionality,yes")
        industry, academic = group_split(dataset, "NOC", "functionality")
        assert industry.agreement_pct == 100
        assert academic is None
        with pytest.raises(NoDataError):
            agreement(dataset, "NOC", "functionality", group=Group.ACADEMIC)

    def test_only_partial_answers(self):
        dataset = dataset_of("r1,industry,NOC,functionality,partial", "r2,academic,NOC,functionality,partial")
        assert agreement(dataset, "NOC", "functionality").agreement_pct == 0
        assert agreement(dataset, "NOC", "functionality", partial_credit=True).agreement_pct == 50

    def test_removing_no_raises_agreement(self):
        rows = ["r1,industry,NOC,functionality,yes", "r2,industry,NOC,functionality,no",
                "r3,academic,NOC,functionality,partial"]
        before = agreement(dataset_of(*rows), "NOC", "functionality").agreement_pct
        after = agreement(dataset_of(rows[0], rows[2]), "NOC", "functionality").agreement_pct
        assert after > before

    @given(st.permutations(list(range(6))))
    def test_row_order_does_not_matter(self, order):
        rows = [f"r{i},industry,NOC,functionality,{'yes' if i % 2 else 'no'}" for i in range(6)]
        shuffled = dataset_of(*(rows[i] for i in order))
        assert shuffled == dataset_of(*rows)
        assert agreement(shuffled, "NOC", "functionality").agreement_pct == 50

    def test_group_restriction(self, paper52):
        assert paper52.summary.industry == 36
        stat = agreement(paper52, "NOC", "functionality", group=Group.INDUSTRY)
        assert stat.n == 36
        assert len(paper52.answers_for("NOC", "functionality", Group.ACADEMIC)) == 16

    def test_direct_construction(self):
        dataset = SurveyDataset((
            SurveyResponse("a", Group.ACADEMIC, {("EOD", "maintainability"): Answer.YES}),
        ))
        assert agreement(dataset, "EOD", "maintainability").agreement_pct == 100


class TestWilson:
    @pytest.mark.parametrize("successes,n", [(1, 52), (26, 52), (48, 52), (3, 7), (1, 2)])
    def test_matches_bisection(self, successes, n):
        low, high = wilson_interval(successes, n)
        expected_low, expected_high = wilson_by_bisection(successes, n)
        assert low == pytest.approx(expected_low, abs=1e-9)
        assert high == pytest.approx(expected_high, abs=1e-9)

    def test_zero_successes(self):
        low, high = wilson_interval(0, 52)
        assert low == 0
        assert 0 < high < 0.1

    def test_z_score(self):
        assert z_score() == 1.96
        assert z_score(0.99) == pytest.approx(2.5758, abs=1e-4)
        with pytest.raises(OodqError):
            z_score(1.0)

    def test_no_trials(self):
        assert wilson_interval(0, 0) == (0.0, 1.0)

    def test_wider_with_higher_confidence(self):
        narrow = wilson_interval(30, 52, 0.9)
        wide = wilson_interval(30, 52, 0.99)
        assert wide[0] < narrow[0] and narrow[1] < wide[1]

    @given(st.integers(min_value=1, max_value=200).flatmap(
        lambda n: st.tuples(st.integers(min_value=0, max_value=n), st.just(n))))
    def test_contains_observed_share(self, case):
        successes, n = case
        low, high = wilson_interval(successes, n)
        assert 0 <= low <= successes / n <= high <= 1
