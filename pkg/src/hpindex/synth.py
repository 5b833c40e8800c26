"""Seeded synthetic cohorts for exercising the scaling-law fits.

Each researcher draws a paper count, then a personal collaboration ceiling
``m`` from the PI-count range; every paper then gets a PI count uniform on
``[lo, m]``. Spreading the ceiling across researchers is what gives the
cohort a usable range of <N_PI> for the power-law fit.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np

from .errors import ConfigurationError
from .model import PaperRecord, ResearcherRecord


@dataclass(frozen=True)
class SyntheticCohortSpec:
    n_researchers: int = 48
    papers_per_researcher: tuple[int, int] = (30, 120)
    citation_distribution: dict = field(default_factory=lambda: {"kind": "geometric", "mean": 20})
    n_pi_distribution: tuple[int, int] = (1, 5)
    extra_authors: tuple[int, int] = (0, 3)
    noise_sigma: float = 0.0
    seed: int = 0

    def __post_init__(self):
        for name in ("papers_per_researcher", "n_pi_distribution", "extra_authors"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        self.validate()

    def validate(self):
        if not isinstance(self.n_researchers, int) or self.n_researchers < 0:
            raise ConfigurationError("n_researchers must be a non-negative integer")
        _check_range("papers_per_researcher", self.papers_per_researcher, minimum=0)
        _check_range("n_pi_distribution", self.n_pi_distribution, minimum=1)
        _check_range("extra_authors", self.extra_authors, minimum=0)
        if not self.noise_sigma >= 0:
            raise ConfigurationError("noise_sigma must be >= 0")
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2**64:
            raise ConfigurationError("seed must be an integer in [0, 2**64)")
        dist = self.citation_distribution
        if not isinstance(dist, dict):
            raise ConfigurationError("citation_distribution must be an object with a 'kind'")
        kind = dist.get("kind")
        if kind == "geometric":
            if not dist.get("mean", -1) > 0:
                raise ConfigurationError("geometric citation mean must be > 0")
        elif kind == "power_law":
            if not dist.get("exponent", -1) > 0:
                raise ConfigurationError("power_law exponent must be > 0")
            if not dist.get("x_min", 1) > 0:
                raise ConfigurationError("power_law x_min must be > 0")
        else:
            raise ConfigurationError(f"unknown citation distribution {kind!r}")

    @classmethod
    def from_dict(cls, data: dict, seed: Optional[int] = None) -> "SyntheticCohortSpec":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise ConfigurationError(f"unknown spec field(s): {', '.join(sorted(unknown))}")
        data = dict(data)
        if seed is not None:
            data["seed"] = seed
        try:
            return cls(**data)
        except TypeError as exc:
            raise ConfigurationError(str(exc)) from None

    @classmethod
    def from_json(cls, text: str, seed: Optional[int] = None) -> "SyntheticCohortSpec":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigurationError(f"spec is not valid JSON: {exc.msg}") from None
        if not isinstance(data, dict):
            raise ConfigurationError("spec must be a JSON object")
        return cls.from_dict(data, seed)

    def to_dict(self) -> dict:
        return asdict(self)


def _check_range(name, rng, minimum):
    if len(rng) != 2 or not all(isinstance(v, int) for v in rng):
        raise ConfigurationError(f"{name} must be a pair of integers")
    lo, hi = rng
    if lo < minimum or lo > hi:
        raise ConfigurationError(f"{name} must satisfy {minimum} <= lo <= hi, got {list(rng)}")


def _citations(rng: np.random.Generator, dist: dict, n: int) -> np.ndarray:
    if dist["kind"] == "geometric":
        # support {0, 1, ...} with the requested mean
        return rng.geometric(1.0 / (dist["mean"] + 1.0), n) - 1
    x_min = dist.get("x_min", 1)
    return np.floor(x_min * (1.0 + rng.pareto(dist["exponent"], n)))


def generate_synthetic_cohort(spec: SyntheticCohortSpec) -> list[ResearcherRecord]:
    rng = np.random.default_rng(spec.seed)
    width = len(str(max(spec.n_researchers, 1)))
    pi_lo, pi_hi = spec.n_pi_distribution
    records = []
    for i in range(spec.n_researchers):
        n = int(rng.integers(spec.papers_per_researcher[0], spec.papers_per_researcher[1] + 1))
        ceiling = int(rng.integers(pi_lo, pi_hi + 1))
        n_pi = rng.integers(pi_lo, ceiling + 1, n)
        extra = rng.integers(spec.extra_authors[0], spec.extra_authors[1] + 1, n)
        cites = _citations(rng, spec.citation_distribution, n).astype(float)
        if spec.noise_sigma > 0:
            cites = np.rint(cites * np.exp(rng.normal(0.0, spec.noise_sigma, n)))
        pwidth = len(str(max(n, 1)))
        papers = tuple(
            PaperRecord(
                f"p{j + 1:0{pwidth}d}",
                int(cites[j]),
                int(n_pi[j] + extra[j]),
                int(n_pi[j]),
            )
            for j in range(n)
        )
        records.append(ResearcherRecord(f"r{i + 1:0{width}d}", papers))
    return records
