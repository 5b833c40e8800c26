import math
from fractions import Fraction
from pathlib import Path

import pytest
import scipy.stats
from hypothesis import given
from hypothesis import strategies as st

from hpindex import (
    ComparisonError,
    ConfigurationError,
    PaperRecord,
    ResearcherRecord,
    build_cohort_table,
    excess_comparison,
    rank_by,
    rank_correlation,
    rank_shift,
)
from hpindex.cohort import citation_curves, fit_points, rank_values
from hpindex.dataio import parse_dataset
from oracles import brute_kendall_tau_b
from strategies import records

DATA = Path(__file__).parent / "data"


def rec(rid, *papers):
    return ResearcherRecord(rid, tuple(PaperRecord(f"p{i}", *p) for i, p in enumerate(papers)))


def inversion_pair():
    # A: h=5, h_PI=2 ; B: h=4, h_PI=4
    a = rec("A", (5, 2, 2), (5, 2, 2), (5, 3, 3), (5, 3, 3), (5, 3, 3))
    b = rec("B", *[(4, 1, 1)] * 4)
    return [a, b]


def test_two_researcher_table():
    table = build_cohort_table([rec("A", (25, 1, 1)), rec("B", (9, 3, 3), (9, 3, 3))], ["h", "c_max"])
    assert table.column("h") == {"A": 1, "B": 2}
    assert table.column("c_max") == {"A": 25, "B": 9}
    assert table.summary == {"h": (1, 2), "c_max": (9, 25)}


def test_empty_cohort():
    table = build_cohort_table([], ["h"])
    assert table.rows == () and table.summary == {}


def test_unknown_metric():
    with pytest.raises(ConfigurationError, match="bogus"):
        build_cohort_table([], ["h", "bogus"])
    with pytest.raises(ConfigurationError):
        rank_by(build_cohort_table([], ["h"]), "g")


def test_duplicate_researchers_rejected():
    with pytest.raises(ConfigurationError):
        build_cohort_table([rec("A", (1, 1, 1)), rec("A", (2, 1, 1))], ["h"])


def test_every_metric_computes(worked_record):
    from hpindex.cohort import METRICS

    table = build_cohort_table([worked_record], list(METRICS))
    row = dict(zip(table.metrics, table.rows[0].values))
    assert row["h"] == 4 and row["h_pi"] == 3 and row["h_a"] == 3 and row["g"] == 5
    assert row["c_tot"] == 36 and row["c_max"] == 12 and row["mean_n_pi"] == 2
    assert row["hirsch_a"] == pytest.approx(36 / 16)
    assert row["h_pi_over_h"] == Fraction(3, 4)
    assert row["sqrt_c_tot_over_n_pi"] == pytest.approx(math.sqrt(18))


def test_uncited_researcher_gets_missing_values():
    table = build_cohort_table([rec("Z", (0, 1, 1)), rec("A", (3, 1, 1))], ["h", "mean_n_pi"])
    assert table.column("mean_n_pi") == {"A": 1, "Z": None}
    assert table.summary["mean_n_pi"] == (1, 1)
    ranking = rank_by(table, "mean_n_pi")
    assert [(e.rank, e.researcher_id) for e in ranking.order] == [(1, "A"), (2, "Z")]


def test_competition_ranking():
    r = rank_values({"A": 5, "B": 3, "C": 3, "D": 1})
    assert [(e.rank, e.researcher_id) for e in r.order] == [(1, "A"), (2, "B"), (2, "C"), (4, "D")]
    assert rank_values({"X": 7}).ranks() == {"X": 1}
    assert set(rank_values({"A": 2, "B": 2, "C": 2}).ranks().values()) == {1}


def test_rank_inversion_fixture():
    table = build_cohort_table(inversion_pair(), ["h", "h_pi"])
    by_h, by_pi = rank_by(table, "h"), rank_by(table, "h_pi")
    assert by_h.ranks() == {"A": 1, "B": 2}
    assert by_pi.ranks() == {"B": 1, "A": 2}
    shifts = rank_shift(by_h, by_pi)
    assert [(s.researcher_id, s.shift) for s in shifts] == [("A", 1), ("B", -1)]
    assert rank_correlation(by_h, by_pi) == -1


def test_identical_rankings():
    r = rank_values({"A": 3, "B": 2, "C": 1})
    assert all(s.shift == 0 for s in rank_shift(r, r))
    assert rank_correlation(r, r) == 1


def test_kendall_examples():
    a = rank_values({"A": 3, "B": 2, "C": 1})
    b = rank_values({"A": 3, "B": 1, "C": 2})
    assert rank_correlation(a, b) == pytest.approx(1 / 3)
    rev = rank_values({"A": 1, "B": 2, "C": 3})
    assert rank_correlation(a, rev) == -1


def test_mismatched_sets():
    a = rank_values({"A": 1, "B": 2})
    b = rank_values({"A": 1, "C": 2})
    with pytest.raises(ComparisonError):
        rank_shift(a, b)
    with pytest.raises(ComparisonError):
        rank_correlation(a, b)


def test_fully_tied_ranking_gives_nan():
    a = rank_values({"A": 1, "B": 1})
    assert math.isnan(rank_correlation(a, a))


values = st.dictionaries(st.sampled_from("ABCDEFGHIJ"), st.integers(0, 6), min_size=2)


@given(values, values)
def test_kendall_matches_scipy_and_brute_force(va, vb):
    keys = sorted(set(va) & set(vb))
    if len(keys) < 2:
        return
    ra = rank_values({k: va[k] for k in keys})
    rb = rank_values({k: vb[k] for k in keys})
    xs = [ra.ranks()[k] for k in keys]
    ys = [rb.ranks()[k] for k in keys]
    tau = rank_correlation(ra, rb)
    if len(set(xs)) == 1 or len(set(ys)) == 1:
        assert math.isnan(tau)
        return
    assert tau == pytest.approx(brute_kendall_tau_b(xs, ys), abs=1e-12)
    assert tau == pytest.approx(scipy.stats.kendalltau(xs, ys).statistic, abs=1e-12)
    assert -1 - 1e-12 <= tau <= 1 + 1e-12


@given(st.dictionaries(st.text("abc", min_size=1, max_size=3), st.integers(-50, 50), min_size=1))
def test_rank_invariant_under_monotone_transform(vals):
    base = rank_values(vals).ranks()
    assert rank_values({k: 3 * v + 7 for k, v in vals.items()}).ranks() == base
    assert rank_values({k: math.exp(v / 10) for k, v in vals.items()}).ranks() == base


@given(st.dictionaries(st.text("abc", min_size=1, max_size=3), st.integers(), min_size=1))
def test_shifts_sum_to_zero_without_ties(vals):
    distinct = {k: i for i, k in enumerate(sorted(vals, key=lambda k: (vals[k], k)))}
    a = rank_values(distinct)
    b = rank_values({k: -v for k, v in distinct.items()})
    assert sum(s.shift for s in rank_shift(a, b)) == 0


@given(st.lists(records(max_papers=6), min_size=1, max_size=5, unique_by=lambda r: r.researcher_id))
def test_table_independent_of_record_order(recs):
    metrics = ["h", "h_pi", "g", "c_tot", "mean_n_pi"]
    assert build_cohort_table(recs, metrics) == build_cohort_table(list(reversed(recs)), metrics)


def test_excess_comparison_worked_values():
    [row] = excess_comparison([rec("w", *[(c, 1, 1) for c in [10, 8, 5, 4, 3]])], [1, 2, 4])
    assert row.h_q == {1: 4, 2: 2, 4: 2}
    assert row.e == pytest.approx(math.sqrt(11)) and row.h_x == Fraction(11, 4)


def test_excess_comparison_fig4_asset():
    with open(DATA / "fig4_curve.csv", newline="") as fh:
        records_ = parse_dataset(fh).to_records()
    [row] = excess_comparison(records_, [1, 2, 4])
    assert row.h_q == {1: 19, 2: 12, 4: 8}
    assert row.h_x == 26


def test_excess_comparison_empty_profile():
    [row] = excess_comparison([ResearcherRecord("nobody")], [1, 2])
    assert row.h_q == {1: 0, 2: 0} and row.e == 0 and row.h_x == 0
    with pytest.raises(ConfigurationError):
        excess_comparison([], [])


def test_curves_and_fit_points(worked_record):
    curves = citation_curves([worked_record])
    assert [e.value for e in curves[0].entries] == [12, 9, 8, 4, 3]
    table = build_cohort_table([worked_record], ["mean_n_pi", "h_pi_over_h"])
    assert fit_points(table, "mean_n_pi", "h_pi_over_h") == [("worked", 2.0, 0.75)]
