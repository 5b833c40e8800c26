"""h-type indices computed from a ranked citation curve."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .errors import DomainError
from .model import CitationProfile, CreditScheme, total_citations


def h_index(profile: CitationProfile) -> int:
    """Largest k such that k papers have at least k citations each."""
    return h_q_index(profile, 1)


def h_q_index(profile: CitationProfile, q) -> int:
    """Largest k such that k papers have at least ``q * k`` citations each."""
    q = Fraction(q)
    if q <= 0:
        raise DomainError(f"q must be positive, got {q}")
    # values descend while q*k grows, so the first failure ends the scan
    k = 0
    for e in profile.entries:
        if e.value < q * e.rank:
            break
        k = e.rank
    return k


def g_index(profile: CitationProfile) -> int:
    """Largest g <= N_p whose top-g papers hold at least g**2 citations."""
    g = 0
    running = Fraction(0)
    for e in profile.entries:
        running += e.value
        if running >= e.rank * e.rank:
            g = e.rank
    return g


def core_sum(profile: CitationProfile) -> Fraction:
    h = h_index(profile)
    return sum((e.value for e in profile.entries[:h]), Fraction(0))


def excess_sum(profile: CitationProfile) -> Fraction:
    h = h_index(profile)
    return core_sum(profile) - h * h


def e_index(profile: CitationProfile) -> float:
    return _sqrt(excess_sum(profile))


def h_x_index(profile: CitationProfile) -> Fraction:
    """Mean excess citation count per h-core paper; 0 when h is 0."""
    h = h_index(profile)
    if h == 0:
        return Fraction(0)
    return excess_sum(profile) / h


def _sqrt(x: Fraction) -> float:
    return math.sqrt(x) if x else 0.0


@dataclass(frozen=True)
class CoreIndices:
    h: int
    c_h: Fraction
    c_hx: Fraction
    e: float
    h_x: Fraction
    g: int


def core_indices(profile: CitationProfile) -> CoreIndices:
    h = h_index(profile)
    c_h = sum((e.value for e in profile.entries[:h]), Fraction(0))
    c_hx = c_h - h * h
    return CoreIndices(
        h=h,
        c_h=c_h,
        c_hx=c_hx,
        e=_sqrt(c_hx),
        h_x=c_hx / h if h else Fraction(0),
        g=g_index(profile),
    )


@dataclass(frozen=True)
class IndexReport:
    """Every index for one researcher under one credit scheme."""

    researcher_id: str
    scheme: CreditScheme
    n_papers: int
    c_tot: Fraction
    c_max: Fraction
    h: int
    g: int
    c_h: Fraction
    c_hx: Fraction
    e: float
    h_x: Fraction
    h_q: dict = field(default_factory=dict)
    hirsch_a: Optional[float] = None


def index_report(profile: CitationProfile, q_values: Iterable = ()) -> IndexReport:
    core = core_indices(profile)
    c_tot = total_citations(profile)
    return IndexReport(
        researcher_id=profile.researcher_id,
        scheme=profile.scheme,
        n_papers=len(profile),
        c_tot=c_tot,
        c_max=profile.entries[0].value if profile.entries else Fraction(0),
        h=core.h,
        g=core.g,
        c_h=core.c_h,
        c_hx=core.c_hx,
        e=core.e,
        h_x=core.h_x,
        h_q={Fraction(q): h_q_index(profile, q) for q in q_values},
        hirsch_a=float(c_tot / core.h**2) if core.h else None,
    )

