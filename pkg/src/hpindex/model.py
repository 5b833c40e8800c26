"""Publication records and ranked citation curves.

Citation values are kept as :class:`fractions.Fraction` throughout so that
threshold tests such as ``C(k) >= q*k`` are exact even after the citations
of a paper have been split between several PIs or authors.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import ValidationError


class CreditScheme(enum.Enum):
    """How a paper's citations are credited to one of its authors."""

    RAW = "raw"
    PER_PI = "pi"
    PER_AUTHOR = "author"

    @classmethod
    def parse(cls, name: str) -> "CreditScheme":
        try:
            return cls(name.lower())
        except ValueError:
            choices = ", ".join(s.value for s in cls)
            raise ValueError(f"unknown credit scheme {name!r} (choose from {choices})") from None


@dataclass(frozen=True)
class PaperRecord:
    paper_id: str
    citations: int
    n_authors: int = 1
    # None means "PI count unknown"; PI metrics then fall back to an estimate.
    n_pi: Optional[int] = 1

    def __post_init__(self):
        pid = self.paper_id
        if not isinstance(self.citations, int) or self.citations < 0:
            raise ValidationError(f"paper {pid!r}: citations must be a non-negative integer")
        if not isinstance(self.n_authors, int) or self.n_authors < 1:
            raise ValidationError(f"paper {pid!r}: n_authors must be >= 1")
        if self.n_pi is not None:
            if not isinstance(self.n_pi, int) or self.n_pi < 1:
                raise ValidationError(f"paper {pid!r}: n_pi must be >= 1")
            if self.n_pi > self.n_authors:
                raise ValidationError(f"paper {pid!r}: n_pi exceeds n_authors")


@dataclass(frozen=True)
class ResearcherRecord:
    researcher_id: str
    papers: tuple[PaperRecord, ...] = ()

    def __post_init__(self):
        papers = tuple(self.papers)
        object.__setattr__(self, "papers", papers)
        seen = set()
        for p in papers:
            if p.paper_id in seen:
                raise ValidationError(
                    f"researcher {self.researcher_id!r}: duplicate paper_id {p.paper_id!r}"
                )
            seen.add(p.paper_id)

    @property
    def n_papers(self) -> int:
        return len(self.papers)

    @property
    def pi_counts_known(self) -> bool:
        return all(p.n_pi is not None for p in self.papers)


class ProfileEntry(NamedTuple):
    rank: int
    paper_id: str
    value: Fraction


@dataclass(frozen=True)
class CitationProfile:
    """A researcher's citation curve C(r), highest value first."""

    researcher_id: str
    scheme: CreditScheme
    entries: tuple[ProfileEntry, ...] = ()

    @property
    def values(self) -> list[Fraction]:
        return [e.value for e in self.entries]

    def __len__(self):
        return len(self.entries)

    @classmethod
    def from_values(
        cls,
        values: Iterable,
        researcher_id: str = "",
        scheme: CreditScheme = CreditScheme.RAW,
    ) -> "CitationProfile":
        """Build a profile straight from citation values (paper ids are generated)."""
        vals = [Fraction(v) for v in values]
        width = max(len(str(len(vals))), 1)
        items = [(f"p{i:0{width}d}", v) for i, v in enumerate(vals, 1)]
        return cls(researcher_id, scheme, _rank(items))


def _rank(items: Sequence[tuple[str, Fraction]]) -> tuple[ProfileEntry, ...]:
    # integer sort key: every value scaled by the common denominator (exact, and
    # much faster than comparing Fractions)
    scale = math.lcm(*(v.denominator for _, v in items)) if items else 1
    ordered = sorted(items, key=lambda it: (-it[1].numerator * (scale // it[1].denominator), it[0]))
    return tuple(ProfileEntry(r, pid, v) for r, (pid, v) in enumerate(ordered, 1))


def credited_value(paper: PaperRecord, scheme: CreditScheme) -> Fraction:
    if scheme is CreditScheme.RAW:
        return Fraction(paper.citations)
    if scheme is CreditScheme.PER_PI:
        if paper.n_pi is None:
            raise ValidationError(f"paper {paper.paper_id!r}: n_pi is unknown")
        return Fraction(paper.citations, paper.n_pi)
    return Fraction(paper.citations, paper.n_authors)


def build_profile(record: ResearcherRecord, scheme: CreditScheme) -> CitationProfile:
    """Rank a researcher's papers by credited citations.

    Ties are broken by ascending ``paper_id`` so the result does not depend
    on input order.
    """
    items = [(p.paper_id, credited_value(p, scheme)) for p in record.papers]
    return CitationProfile(record.researcher_id, scheme, _rank(items))


def total_citations(profile: CitationProfile) -> Fraction:
    return sum((e.value for e in profile.entries), Fraction(0))
