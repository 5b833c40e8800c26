"""PI- and author-renormalized indices and the collaborator averages behind them."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional

from .errors import DomainError
from .indices import h_index
from .model import CitationProfile, CreditScheme, ResearcherRecord, build_profile, total_citations

Collaborator = Literal["pi", "author"]


def h_pi_index(record: ResearcherRecord) -> int:
    """h computed after dividing each paper's citations by its PI count."""
    return h_index(build_profile(record, CreditScheme.PER_PI))


def h_a_index(record: ResearcherRecord) -> int:
    """h computed after dividing each paper's citations by its author count."""
    return h_index(build_profile(record, CreditScheme.PER_AUTHOR))


def mean_core_collaborators(record: ResearcherRecord, which: Collaborator = "pi") -> Fraction:
    """Mean PI (or author) count over the papers of the raw h-core.

    The window is ranks 1..h of the *raw* citation curve, with ties ordered
    by paper_id as in :func:`build_profile`.
    """
    return _core_mean(record, build_profile(record, CreditScheme.RAW), which)


def _core_mean(record: ResearcherRecord, raw: CitationProfile, which: str) -> Fraction:
    if which not in ("pi", "author"):
        raise DomainError(f"which must be 'pi' or 'author', got {which!r}")
    h = h_index(raw)
    if h == 0:
        raise DomainError(f"researcher {record.researcher_id!r}: h = 0, core average undefined")
    by_id = {p.paper_id: p for p in record.papers}
    core = [by_id[e.paper_id] for e in raw.entries[:h]]
    if which == "pi":
        if any(p.n_pi is None for p in core):
            raise DomainError(f"researcher {record.researcher_id!r}: n_pi unknown in h-core")
        return Fraction(sum(p.n_pi for p in core), h)
    return Fraction(sum(p.n_authors for p in core), h)


def predict_h_pi(h, mean_n_pi) -> float:
    """Average-sense estimate h / sqrt(<N_PI>)."""
    if mean_n_pi < 1:
        raise DomainError(f"mean_n_pi must be >= 1, got {mean_n_pi}")
    if h < 0:
        raise DomainError(f"h must be >= 0, got {h}")
    if mean_n_pi == 1:
        return float(h)
    return h / math.sqrt(mean_n_pi)


def predict_h_pi_from_citations(c_tot, mean_n_pi) -> float:
    """Square-root law: one half of sqrt(C_tot / <N_PI>)."""
    if mean_n_pi < 1:
        raise DomainError(f"mean_n_pi must be >= 1, got {mean_n_pi}")
    if c_tot < 0:
        raise DomainError(f"c_tot must be >= 0, got {c_tot}")
    return 0.5 * math.sqrt(Fraction(c_tot) / Fraction(mean_n_pi))


def estimate_mean_n_pi(mean_n_a) -> Fraction:
    """Fallback <N_PI> = <N_A> / 2, never below one PI."""
    if mean_n_a < 1:
        raise DomainError(f"mean_n_a must be >= 1, got {mean_n_a}")
    return max(Fraction(1), Fraction(mean_n_a) / 2)


@dataclass(frozen=True)
class RenormalizedReport:
    researcher_id: str
    h: int
    h_pi: int
    h_a: int
    mean_n_pi: Optional[Fraction]
    mean_n_a: Optional[Fraction]
    c_tot: Fraction
    n_pi_estimated: bool = False


def renormalized_report(record: ResearcherRecord) -> RenormalizedReport:
    """Raw, per-PI and per-author h for one researcher.

    If any paper lacks a PI count, <N_PI> is estimated from <N_A> and h_PI
    comes from the square-root law, rounded and clamped into [h_A, h].
    Averages are None when h = 0.
    """
    raw = build_profile(record, CreditScheme.RAW)
    h = h_index(raw)
    h_a = h_a_index(record)
    c_tot = total_citations(raw)
    mean_n_a = _core_mean(record, raw, "author") if h else None

    if record.pi_counts_known:
        return RenormalizedReport(
            researcher_id=record.researcher_id,
            h=h,
            h_pi=h_pi_index(record),
            h_a=h_a,
            mean_n_pi=_core_mean(record, raw, "pi") if h else None,
            mean_n_a=mean_n_a,
            c_tot=c_tot,
        )

    if h == 0:
        mean_n_pi, h_pi = None, 0
    else:
        mean_n_pi = estimate_mean_n_pi(mean_n_a)
        guess = math.floor(predict_h_pi_from_citations(c_tot, mean_n_pi) + 0.5)
        h_pi = min(h, max(h_a, guess))
    return RenormalizedReport(
        researcher_id=record.researcher_id,
        h=h,
        h_pi=h_pi,
        h_a=h_a,
        mean_n_pi=mean_n_pi,
        mean_n_a=mean_n_a,
        c_tot=c_tot,
        n_pi_estimated=True,
    )
