"""Cross-researcher tables, rankings and rank comparisons."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, NamedTuple, Sequence

from .credit import RenormalizedReport, renormalized_report
from .errors import ComparisonError, ConfigurationError
from .indices import IndexReport, h_q_index, index_report
from .model import CitationProfile, CreditScheme, ResearcherRecord, build_profile


class _Bundle(NamedTuple):
    raw: IndexReport
    renorm: RenormalizedReport


def _ratio(num, den):
    return Fraction(num, den) if den else None


def _sqrt_over(c_tot, n):
    return math.sqrt(c_tot / n) if n else None


# name -> extractor over the per-researcher bundle
METRICS: dict[str, Callable[[_Bundle], object]] = {
    "h": lambda b: b.raw.h,
    "h_pi": lambda b: b.renorm.h_pi,
    "h_a": lambda b: b.renorm.h_a,
    "g": lambda b: b.raw.g,
    "e": lambda b: b.raw.e,
    "h_x": lambda b: b.raw.h_x,
    "c_tot": lambda b: b.raw.c_tot,
    "c_max": lambda b: b.raw.c_max,
    "mean_n_pi": lambda b: b.renorm.mean_n_pi,
    "mean_n_a": lambda b: b.renorm.mean_n_a,
    "hirsch_a": lambda b: b.raw.hirsch_a,
    # derived columns for the scaling-law fits
    "h_pi_over_h": lambda b: _ratio(b.renorm.h_pi, b.raw.h),
    "h_a_over_h": lambda b: _ratio(b.renorm.h_a, b.raw.h),
    "sqrt_c_tot": lambda b: math.sqrt(b.raw.c_tot),
    "sqrt_c_tot_over_n_pi": lambda b: _sqrt_over(b.raw.c_tot, b.renorm.mean_n_pi),
}

DEFAULT_METRICS = ("c_max", "c_tot", "mean_n_a", "mean_n_pi", "h", "h_pi")


class CohortRow(NamedTuple):
    researcher_id: str
    values: tuple


@dataclass(frozen=True)
class CohortTable:
    metrics: tuple[str, ...]
    rows: tuple[CohortRow, ...]
    summary: dict  # metric -> (min, max); empty for an empty cohort
    estimated: tuple[str, ...] = ()  # researchers whose PI metrics are estimated

    def column(self, metric: str) -> dict:
        if metric not in self.metrics:
            raise ConfigurationError(f"metric {metric!r} not in table")
        i = self.metrics.index(metric)
        return {row.researcher_id: row.values[i] for row in self.rows}


def check_metrics(metrics: Iterable[str]) -> tuple[str, ...]:
    metrics = tuple(metrics)
    unknown = [m for m in metrics if m not in METRICS]
    if unknown:
        raise ConfigurationError(
            f"unknown metric(s) {', '.join(unknown)}; known: {', '.join(METRICS)}"
        )
    return metrics


def build_cohort_table(
    records: Iterable[ResearcherRecord], metrics: Sequence[str] = DEFAULT_METRICS
) -> CohortTable:
    metrics = check_metrics(metrics)
    records = sorted(records, key=lambda r: r.researcher_id)
    ids = [r.researcher_id for r in records]
    if len(set(ids)) != len(ids):
        raise ConfigurationError("researcher_id values must be unique within a cohort")

    rows, estimated = [], []
    for rec in records:
        bundle = _Bundle(index_report(build_profile(rec, CreditScheme.RAW)), renormalized_report(rec))
        rows.append(CohortRow(rec.researcher_id, tuple(METRICS[m](bundle) for m in metrics)))
        if bundle.renorm.n_pi_estimated:
            estimated.append(rec.researcher_id)

    summary = {}
    if rows:
        for i, m in enumerate(metrics):
            present = [row.values[i] for row in rows if row.values[i] is not None]
            if present:
                summary[m] = (min(present), max(present))
    return CohortTable(metrics, tuple(rows), summary, tuple(estimated))


class RankEntry(NamedTuple):
    rank: int
    researcher_id: str
    value: object


@dataclass(frozen=True)
class Ranking:
    """Competition ranking (1, 2, 2, 4), highest value first.

    Missing values (None) sort after every present value and share a rank.
    """

    metric: str
    order: tuple[RankEntry, ...]
    tie_policy: str = "competition"

    def ranks(self) -> dict[str, int]:
        return {e.researcher_id: e.rank for e in self.order}


def _sort_key(item):
    rid, v = item
    return (v is None, 0 if v is None else -v, rid)


def rank_values(values: dict, metric: str = "") -> Ranking:
    ordered = sorted(values.items(), key=_sort_key)
    out = []
    for pos, (rid, v) in enumerate(ordered, 1):
        if out and out[-1].value == v:
            rank = out[-1].rank
        else:
            rank = pos
        out.append(RankEntry(rank, rid, v))
    return Ranking(metric, tuple(out))


def rank_by(table: CohortTable, metric: str) -> Ranking:
    return rank_values(table.column(metric), metric)


class RankShift(NamedTuple):
    researcher_id: str
    rank_a: int
    rank_b: int
    shift: int


def _paired(a: Ranking, b: Ranking) -> tuple[dict, dict]:
    ra, rb = a.ranks(), b.ranks()
    if set(ra) != set(rb):
        missing = sorted(set(ra) ^ set(rb))
        raise ComparisonError(f"rankings cover different researchers: {', '.join(missing)}")
    return ra, rb


def rank_shift(by_a: Ranking, by_b: Ranking) -> list[RankShift]:
    """Per-researcher movement from ranking ``by_a`` to ``by_b``, ordered by ``by_a``."""
    ra, rb = _paired(by_a, by_b)
    rows = [RankShift(rid, ra[rid], rb[rid], rb[rid] - ra[rid]) for rid in ra]
    return sorted(rows, key=lambda r: (r.rank_a, r.researcher_id))


def rank_correlation(by_a: Ranking, by_b: Ranking) -> float:
    """Kendall tau-b between two rankings; NaN when either is fully tied."""
    ra, rb = _paired(by_a, by_b)
    ids = sorted(ra)
    concordant = discordant = ties_a = ties_b = 0
    for i, u in enumerate(ids):
        for v in ids[i + 1:]:
            da = ra[u] - ra[v]
            db = rb[u] - rb[v]
            if da == 0:
                ties_a += 1
            if db == 0:
                ties_b += 1
            if da and db:
                if (da > 0) == (db > 0):
                    concordant += 1
                else:
                    discordant += 1
    n0 = len(ids) * (len(ids) - 1) // 2
    denom = math.sqrt((n0 - ties_a) * (n0 - ties_b))
    if denom == 0:
        return math.nan
    return (concordant - discordant) / denom


class ExcessRow(NamedTuple):
    researcher_id: str
    h_q: dict  # Fraction q -> int
    e: float
    h_x: Fraction


def excess_comparison(records: Iterable[ResearcherRecord], q_values: Sequence) -> list[ExcessRow]:
    """h_q for each q, plus e and h_x, on each researcher's raw curve."""
    q_values = [Fraction(q) for q in q_values]
    if not q_values:
        raise ConfigurationError("q_values must not be empty")
    rows = []
    for rec in sorted(records, key=lambda r: r.researcher_id):
        profile = build_profile(rec, CreditScheme.RAW)
        rep = index_report(profile)
        rows.append(
            ExcessRow(rec.researcher_id, {q: h_q_index(profile, q) for q in q_values}, rep.e, rep.h_x)
        )
    return rows


def citation_curves(
    records: Iterable[ResearcherRecord], schemes: Sequence[CreditScheme] = (CreditScheme.RAW,)
) -> list[CitationProfile]:
    """Ranked curves for plotting, one per researcher and scheme."""
    out = []
    for rec in sorted(records, key=lambda r: r.researcher_id):
        for scheme in schemes:
            if scheme is CreditScheme.PER_PI and not rec.pi_counts_known:
                continue
            out.append(build_profile(rec, scheme))
    return out


def fit_points(table: CohortTable, x: str, y: str) -> list[tuple[str, float, float]]:
    """(researcher_id, x, y) for rows where both columns are present."""
    xs, ys = table.column(x), table.column(y)
    return [
        (rid, float(xs[rid]), float(ys[rid]))
        for rid in sorted(xs)
        if xs[rid] is not None and ys[rid] is not None
    ]

