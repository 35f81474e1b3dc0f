"""Vertical and almost vertical 2-spheres, isolating pairs, region classes.

A sphere candidate is a vector (c_1, ..., c_{n-1}) giving the number of
twist boxes left of a monotone arc at each row.  The arc sits on strand
gap p_i = 2*c_i + 1 at odd rows and p_i = 2*c_i at even rows (a gap
counts the strands to its left).  Crossing exactly one strand between
consecutive rows and one near each closure makes the sphere meet the
link in exactly n points, which is captured combinatorially by the
adjacency rule |p_i - p_{i+1}| = 1.

A vertical sphere keeps at least one box on each side at every row
(1 <= c_i <= w_i - 1).  An almost vertical sphere may touch a boundary,
but on each side only in one of three level patterns: a single odd row,
two odd rows i and i+2, or a triple i-1, i, i+1 centered at an even row.

Twist regions fall into three classes.  Interior regions are isolable by
a pair of vertical spheres differing in one entry (allowable); boundary
regions away from the four corners need almost vertical spheres on one
side (almost allowable); the eight corner regions, rows 1, 2, n-2, n-1
at the far left and right, admit no such pair and are handled by the
corner tangle fraction 1/(a + 1/b) instead.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import (
    DegenerateFraction,
    ExtremeRegion,
    IndexOutOfRange,
    NotAlmostVertical,
    NotASphere,
)
from .grid import PlatGrid, TwistRegionId, require_valid, row_width


class SphereKind(enum.Enum):
    VERTICAL = "vertical"
    ALMOST_VERTICAL = "almost-vertical"


def strand_gap(row: int, boxes_left: int) -> int:
    """Gap position of an arc with boxes_left twist boxes to its left."""
    return 2 * boxes_left + 1 if row % 2 == 1 else 2 * boxes_left


@dataclass(frozen=True)
class VerticalSphereSpec:
    positions: tuple[int, ...]
    kind: SphereKind

    def gaps(self) -> tuple[int, ...]:
        return tuple(strand_gap(i, c) for i, c in enumerate(self.positions, start=1))


def _pattern_ok(levels: Sequence[int]) -> bool:
    """One side's boundary-contact rows must form an allowed pattern."""
    if not levels:
        return True
    if len(levels) == 1:
        return levels[0] % 2 == 1
    if len(levels) == 2:
        i = levels[0]
        return i % 2 == 1 and levels[1] == i + 2
    if len(levels) == 3:
        i = levels[1]
        return i % 2 == 0 and levels[0] == i - 1 and levels[2] == i + 1
    return False


def check_sphere(grid: PlatGrid, positions: Sequence[int]) -> VerticalSphereSpec:
    """Classify a candidate vector as a vertical or almost vertical sphere.

    Raises NotASphere when an entry is out of range or the adjacency rule
    fails, and NotAlmostVertical when boundary contacts do not match any
    allowed level pattern.
    """
    require_valid(grid)
    positions = tuple(int(c) for c in positions)
    n = grid.length
    if len(positions) != n - 1:
        raise NotASphere(f"expected {n - 1} entries, got {len(positions)}")
    widths = [row_width(grid.width, i) for i in range(1, n)]
    for i, c in enumerate(positions, start=1):
        if not (0 <= c <= widths[i - 1]):
            raise NotASphere(f"row {i}: {c} twist boxes on the left is out of range")
    gaps = [strand_gap(i, c) for i, c in enumerate(positions, start=1)]
    for i in range(len(gaps) - 1):
        if abs(gaps[i] - gaps[i + 1]) != 1:
            raise NotASphere(
                f"arc jumps from gap {gaps[i]} to {gaps[i + 1]} between rows {i + 1} and {i + 2}"
            )
    left_contacts = [i for i, c in enumerate(positions, start=1) if c == 0]
    right_contacts = [
        i for i, c in enumerate(positions, start=1) if c == widths[i - 1]
    ]
    if not left_contacts and not right_contacts:
        return VerticalSphereSpec(positions, SphereKind.VERTICAL)
    if _pattern_ok(left_contacts) and _pattern_ok(right_contacts):
        return VerticalSphereSpec(positions, SphereKind.ALMOST_VERTICAL)
    raise NotAlmostVertical(
        f"boundary contacts left={left_contacts} right={right_contacts} match no allowed pattern"
    )


def enumerate_vertical_spheres(grid: PlatGrid) -> list[VerticalSphereSpec]:
    """All vertical sphere vectors, in lexicographic order of the vector."""
    require_valid(grid)
    n = grid.length
    widths = [row_width(grid.width, i) for i in range(1, n)]
    out: list[VerticalSphereSpec] = []

    def extend(prefix: list[int], prev_gap: int | None) -> Iterator[tuple[int, ...]]:
        row = len(prefix) + 1
        if row == n:
            yield tuple(prefix)
            return
        for c in range(1, widths[row - 1]):
            gap = strand_gap(row, c)
            if prev_gap is not None and abs(gap - prev_gap) != 1:
                continue
            prefix.append(c)
            yield from extend(prefix, gap)
            prefix.pop()

    for positions in extend([], None):
        out.append(VerticalSphereSpec(positions, SphereKind.VERTICAL))
    return out


class RegionClass(enum.Enum):
    ALLOWABLE = "allowable"
    ALMOST_ALLOWABLE = "almost-allowable"
    EXTREME = "extreme"


def classify_region(grid: PlatGrid, region: TwistRegionId) -> RegionClass:
    """Partition the twist regions into allowable / almost allowable / extreme.

    The eight extreme regions are the leftmost and rightmost boxes of the
    two top rows and the two bottom rows; these are the corner stacks
    measured by the corner fraction.
    """
    require_valid(grid)
    n = grid.length
    i, j = region.row, region.col
    if not (1 <= i <= n - 1):
        raise IndexOutOfRange(f"row {i} out of range")
    w = row_width(grid.width, i)
    if not (1 <= j <= w):
        raise IndexOutOfRange(f"column {j} out of range for row {i}")
    if j not in (1, w):
        return RegionClass.ALLOWABLE
    if i in (1, 2, n - 2, n - 1):
        return RegionClass.EXTREME
    return RegionClass.ALMOST_ALLOWABLE


@dataclass(frozen=True)
class IsolatingSphere:
    """Two sphere specs differing by one in entry i, trapping one region."""

    s1: VerticalSphereSpec
    s2: VerticalSphereSpec
    region: TwistRegionId


def _gap_to_boxes(row: int, gap: int, width: int) -> int | None:
    """Invert strand_gap; None when the gap has the wrong parity or range."""
    if row % 2 == 1:
        if gap % 2 == 0:
            return None
        c = (gap - 1) // 2
    else:
        if gap % 2 == 1:
            return None
        c = gap // 2
    return c if 0 <= c <= row_width(width, row) else None


def isolating_sphere_for(grid: PlatGrid, region: TwistRegionId) -> IsolatingSphere:
    """Build the isolating pair (s1, s2) around one twist region.

    At the region's row i the two arcs sit at c_i = j-1 and c_i = j; the
    rows directly above and below are forced onto the gap between the two
    arcs.  Away from the region the arc takes the leftmost interior
    position, so both spheres are vertical for allowable regions; almost
    allowable regions touch the boundary in exactly the allowed patterns.
    Extreme regions have no such pair and raise ExtremeRegion.
    """
    require_valid(grid)
    cls = classify_region(grid, region)
    if cls is RegionClass.EXTREME:
        raise ExtremeRegion(f"region ({region.row}, {region.col}) is a corner region")
    n, m = grid.length, grid.width
    i, j = region.row, region.col
    gaps: dict[int, int] = {i: strand_gap(i, j - 1)}
    for neighbor in (i - 1, i + 1):
        if 1 <= neighbor <= n - 1:
            gaps[neighbor] = gaps[i] + 1

    def fill(start: int, step: int) -> None:
        prev = gaps[start]
        row = start + step
        while 1 <= row <= n - 1:
            # prefer an interior gap, and the smaller one when both are interior
            best = None
            for gap in (prev - 1, prev + 1):
                c = _gap_to_boxes(row, gap, m)
                if c is None:
                    continue
                interior = 1 <= c <= row_width(m, row) - 1
                key = (not interior, c)
                if best is None or key < best[0]:
                    best = (key, gap)
            if best is None:
                raise NotAlmostVertical(
                    f"no admissible arc position at row {row} for region ({i}, {j})"
                )
            gaps[row] = best[1]
            prev = best[1]
            row += step

    fill(max(1, i - 1), -1)
    fill(min(n - 1, i + 1), +1)

    def positions_with(center: int) -> tuple[int, ...]:
        out = []
        for row in range(1, n):
            gap = strand_gap(i, center) if row == i else gaps[row]
            c = _gap_to_boxes(row, gap, m)
            if c is None:
                raise NotAlmostVertical(f"arc position at row {row} is inadmissible")
            out.append(c)
        return tuple(out)

    s1 = check_sphere(grid, positions_with(j - 1))
    s2 = check_sphere(grid, positions_with(j))
    return IsolatingSphere(s1=s1, s2=s2, region=TwistRegionId(i, j))


class Corner(enum.Enum):
    TL = "tl"
    TR = "tr"
    BL = "bl"
    BR = "br"


def corner_fraction(grid: PlatGrid, corner: Corner) -> Fraction:
    """Exact tangle fraction 1/(a + 1/b) of a corner stack of two boxes.

    (a, b) are the outermost coefficients of the corner's two rows: the
    top-left corner reads rows 1 and 2 at the far left, and the other
    corners are the images of that pair under the diagram rotations.
    """
    require_valid(grid)
    n = grid.length
    if corner is Corner.TL:
        a, b = grid.entry(1, 1), grid.entry(2, 1)
    elif corner is Corner.TR:
        a = grid.entry(1, row_width(grid.width, 1))
        b = grid.entry(2, row_width(grid.width, 2))
    elif corner is Corner.BL:
        a, b = grid.entry(n - 1, 1), grid.entry(n - 2, 1)
    else:
        a = grid.entry(n - 1, row_width(grid.width, n - 1))
        b = grid.entry(n - 2, row_width(grid.width, n - 2))
    if b == 0:
        raise DegenerateFraction("inner corner coefficient is zero")
    inner = Fraction(a) + Fraction(1, b)
    if inner == 0:
        raise DegenerateFraction("a + 1/b vanishes")
    return 1 / inner
