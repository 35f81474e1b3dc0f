"""Klein four-group of diagram rotations, canonical forms, and equivalence.

A pi-rotation of the projection plane about the vertical axis mirrors the
boxes within each row; about the horizontal axis it reverses the order of
the rows (the row shapes line up because the length is even).  Either
rotation also exchanges front and back of the plane, and the two sign
flips cancel, so coefficients move without changing sign.

Two qualifying grids (width at least 3, 3-highly twisted, length above
4m(m-2), standard closure) present the same knot or link exactly when
their canonical forms coincide, where the canonical form is the
lexicographically smallest of the four rotated grids.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import EvenPlatUnsupported
from .grid import Closure, HypothesisReport, PlatGrid, hypothesis_report, require_valid


class SymmetryElement(enum.Enum):
    IDENTITY = "identity"
    VERTICAL_AXIS = "vertical-axis"
    HORIZONTAL_AXIS = "horizontal-axis"
    BOTH = "both"


_ORDER = (
    SymmetryElement.IDENTITY,
    SymmetryElement.VERTICAL_AXIS,
    SymmetryElement.HORIZONTAL_AXIS,
    SymmetryElement.BOTH,
)

_COMPOSE = {
    (a, b): c
    for a, row in zip(
        _ORDER,
        [
            _ORDER,
            (_ORDER[1], _ORDER[0], _ORDER[3], _ORDER[2]),
            (_ORDER[2], _ORDER[3], _ORDER[0], _ORDER[1]),
            (_ORDER[3], _ORDER[2], _ORDER[1], _ORDER[0]),
        ],
    )
    for b, c in zip(_ORDER, row)
}


def compose(a: SymmetryElement, b: SymmetryElement) -> SymmetryElement:
    """Group law of the Klein four-group; every element is an involution."""
    return _COMPOSE[(a, b)]


def apply_symmetry(grid: PlatGrid, g: SymmetryElement) -> PlatGrid:
    """Rotate a standard plat grid by a symmetry element.

    VERTICAL_AXIS sends entry (i, j) to (i, w_i + 1 - j); HORIZONTAL_AXIS
    sends (i, j) to (n - i, j); BOTH composes the two.  Signs are
    preserved.
    """
    require_valid(grid)
    if grid.closure is not Closure.STANDARD:
        raise EvenPlatUnsupported("rotations are defined for standard closures only")
    rows = grid.rows
    if g in (SymmetryElement.HORIZONTAL_AXIS, SymmetryElement.BOTH):
        rows = rows[::-1]
    if g in (SymmetryElement.VERTICAL_AXIS, SymmetryElement.BOTH):
        rows = tuple(r[::-1] for r in rows)
    return PlatGrid(width=grid.width, length=grid.length, rows=rows, closure=grid.closure)


@dataclass(frozen=True)
class CanonicalForm:
    """The orbit minimum, which element realizes it, and the orbit size."""

    grid: PlatGrid
    realized_by: SymmetryElement
    orbit_size: int


def canonicalize(grid: PlatGrid) -> CanonicalForm:
    """Minimum of the four rotated grids under flattened integer order.

    Ties between equal images are broken by the element order IDENTITY <
    VERTICAL_AXIS < HORIZONTAL_AXIS < BOTH, so the realizing element is
    deterministic.
    """
    images = [(apply_symmetry(grid, g), g) for g in _ORDER]
    best_grid, best_g = min(images, key=lambda pair: pair[0].flatten())
    orbit_size = len({image.flatten() for image, _ in images})
    return CanonicalForm(grid=best_grid, realized_by=best_g, orbit_size=orbit_size)


class Verdict(enum.Enum):
    EQUAL = "EQUAL"
    DISTINCT = "DISTINCT"
    HYPOTHESES_NOT_MET = "HYPOTHESES_NOT_MET"


@dataclass(frozen=True)
class EquivalenceVerdict:
    kind: Verdict
    reports: tuple[HypothesisReport, HypothesisReport] | None = None

    @property
    def is_equal(self) -> bool:
        return self.kind is Verdict.EQUAL


def _qualifies(grid: PlatGrid, report: HypothesisReport) -> bool:
    return grid.closure is Closure.STANDARD and report.unique_bridge_sphere


def decide_equivalence(g1: PlatGrid, g2: PlatGrid) -> EquivalenceVerdict:
    """Decide whether two qualifying grids present the same knot or link.

    Both inputs must satisfy the uniqueness hypotheses at once, which
    keeps the verdict symmetric; otherwise HYPOTHESES_NOT_MET is returned
    with both reports (even closures never qualify).  Qualifying grids of
    different widths or lengths are DISTINCT diagrams; at equal shape the
    verdict is EQUAL exactly when the canonical forms coincide.
    """
    r1 = hypothesis_report(g1)
    r2 = hypothesis_report(g2)
    if not (_qualifies(g1, r1) and _qualifies(g2, r2)):
        return EquivalenceVerdict(Verdict.HYPOTHESES_NOT_MET, reports=(r1, r2))
    if g1.width != g2.width or g1.length != g2.length:
        return EquivalenceVerdict(Verdict.DISTINCT)
    if canonicalize(g1).grid == canonicalize(g2).grid:
        return EquivalenceVerdict(Verdict.EQUAL)
    return EquivalenceVerdict(Verdict.DISTINCT)
