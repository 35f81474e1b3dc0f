"""Exact counting, seeded sampling, and deduplication of plat families.

Orbit counts under the four diagram rotations come from Burnside's lemma
with closed-form fixed-grid counts: a rotation fixes exactly the grids
that are constant on its index orbits, so each fixed count is the
coefficient-set size raised to the number of free entries.

Sampling uses the MT19937 bit stream behind random.Random together with
a rejection sampler, so a census reproduces bit for bit from its seed on
any platform.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .canonical import CanonicalForm, SymmetryElement, canonicalize
from .grid import Closure, PlatGrid, require_valid, row_width


@dataclass(frozen=True)
class CensusSpec:
    """Shape, coefficient alphabet, twist bound, and seed of a census."""

    width: int
    length: int
    coefficient_set: tuple[int, ...]
    c_min: int = 0
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coefficient_set", tuple(sorted(set(self.coefficient_set))))
        if not self.coefficient_set:
            raise ValueError("coefficient_set must be nonempty")
        if self.c_min > 0:
            offenders = [a for a in self.coefficient_set if abs(a) < self.c_min]
            if offenders:
                raise ValueError(f"coefficients {offenders} violate the twist bound {self.c_min}")
        if self.width < 2:
            raise ValueError(f"width must be at least 2, got {self.width}")
        if self.length < 2 or self.length % 2 != 0:
            raise ValueError(f"length must be even and at least 2, got {self.length}")

    def row_widths(self) -> list[int]:
        return [row_width(self.width, i) for i in range(1, self.length)]


@dataclass(frozen=True, eq=True)
class OrbitReport:
    total_grids: int
    orbit_count: int
    fixed_counts: Mapping[SymmetryElement, int]


def _free_entries(spec: CensusSpec, g: SymmetryElement) -> int:
    """Number of independent coefficients in a grid fixed by g."""
    widths = spec.row_widths()
    half = spec.length // 2
    if g is SymmetryElement.IDENTITY:
        return sum(widths)
    if g is SymmetryElement.VERTICAL_AXIS:
        return sum((w + 1) // 2 for w in widths)
    if g is SymmetryElement.HORIZONTAL_AXIS:
        # rows i and n-i are identified; row n/2 is its own mirror
        return sum(widths[i - 1] for i in range(1, half)) + widths[half - 1]
    return sum(widths[i - 1] for i in range(1, half)) + (widths[half - 1] + 1) // 2


def count_orbits(spec: CensusSpec) -> OrbitReport:
    """Exact Burnside count of rotation orbits; values are big integers."""
    size = len(spec.coefficient_set)
    fixed = {g: size ** _free_entries(spec, g) for g in SymmetryElement}
    total = sum(fixed.values())
    assert total % 4 == 0, "Burnside sum must be divisible by the group order"
    return OrbitReport(
        total_grids=fixed[SymmetryElement.IDENTITY],
        orbit_count=total // 4,
        fixed_counts=fixed,
    )


def _draw_index(rng: random.Random, size: int) -> int:
    if size == 1:
        return 0
    bits = (size - 1).bit_length()
    while True:
        value = rng.getrandbits(bits)
        if value < size:
            return value


def sample(spec: CensusSpec, k: int) -> list[PlatGrid]:
    """k grids with i.i.d. uniform entries, deterministic in the seed.

    Entries are drawn row-major, one grid after another, so prefixes of a
    longer sample reproduce a shorter one with the same seed.
    """
    if k < 0:
        raise ValueError("sample size must be nonnegative")
    rng = random.Random(spec.seed)
    alphabet = spec.coefficient_set
    widths = spec.row_widths()
    grids = []
    for _ in range(k):
        rows = tuple(
            tuple(alphabet[_draw_index(rng, len(alphabet))] for _ in range(w)) for w in widths
        )
        grids.append(
            PlatGrid(width=spec.width, length=spec.length, rows=rows, closure=Closure.STANDARD)
        )
    return grids


def genericity_ratio(interval_radius: int, region_count: int) -> Fraction:
    """Probability that region_count uniform draws from [-M, M] all have |a| >= 3.

    The interval holds 2M+1 integers of which max(0, 2M-4) avoid
    {-2,...,2}; the draws are independent, so the probability is the
    per-draw ratio raised to the number of twist regions.  It increases
    to 1 as M grows with the region count fixed.
    """
    if interval_radius < 1:
        raise ValueError("the interval radius M must be at least 1")
    if region_count < 1:
        raise ValueError("the region count must be at least 1")
    admissible = max(0, 2 * interval_radius - 4)
    return Fraction(admissible, 2 * interval_radius + 1) ** region_count


def dedupe(grids: Iterable[PlatGrid]) -> list[CanonicalForm]:
    """Distinct canonical forms in first-seen order.

    All grids must share one shape; each rotation orbit contributes
    exactly one entry no matter how many of its members appear.
    """
    seen: set[tuple[int, ...]] = set()
    out: list[CanonicalForm] = []
    shape: tuple[int, int] | None = None
    for grid in grids:
        require_valid(grid)
        if shape is None:
            shape = (grid.width, grid.length)
        elif shape != (grid.width, grid.length):
            raise ValueError(f"mixed shapes in dedupe: {shape} vs {(grid.width, grid.length)}")
        form = canonicalize(grid)
        key = form.grid.flatten()
        if key not in seen:
            seen.add(key)
            out.append(form)
    return out
