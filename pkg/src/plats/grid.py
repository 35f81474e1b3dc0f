"""Core representation of 2m-plat diagrams as staggered coefficient grids.

A plat of width m (2m braid strands) and even length n is stored as n-1
rows of signed twist coefficients.  Odd rows (1-indexed, top to bottom)
carry m-1 boxes sitting on the even-numbered strand gaps; even rows carry
m boxes on the odd gaps.  Entry (i, j) counts the signed crossings in the
twist box at row i, position j from the left.

The closure caps adjacent strand pairs (1,2), (3,4), ... with bridges at
the top.  A standard plat repeats the same pairing at the bottom; an even
plat shifts the bottom pairing by one strand and joins strand 2m back to
strand 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import HypothesesNotMet, IndexOutOfRange, InvalidGrid


class Closure(enum.Enum):
    STANDARD = "standard"
    EVEN = "even"


def row_width(width: int, row: int) -> int:
    """Number of twist boxes in the given 1-indexed row."""
    return width - 1 if row % 2 == 1 else width


@dataclass(frozen=True)
class PlatGrid:
    """A 2m-plat diagram given by its twist coefficients.

    width: half the strand count (m >= 2 for a meaningful plat)
    length: the even length n; the grid has n-1 rows
    rows: row i (1-indexed) holds width-1 entries if i is odd, width if even
    closure: bottom bridge pairing, standard or even

    Construction does not enforce the shape invariants; use validate() so
    that malformed candidates can be reported rather than rejected at the
    type level.
    """

    width: int
    length: int
    rows: tuple[tuple[int, ...], ...]
    closure: Closure = Closure.STANDARD

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))

    def entry(self, row: int, col: int) -> int:
        """Coefficient of box (row, col), both 1-indexed."""
        if not (1 <= row <= len(self.rows)) or not (1 <= col <= len(self.rows[row - 1])):
            raise IndexOutOfRange(f"no twist box at ({row}, {col})")
        return self.rows[row - 1][col - 1]

    def flatten(self) -> tuple[int, ...]:
        """All coefficients, rows top to bottom, each left to right."""
        return tuple(a for r in self.rows for a in r)

    def regions(self) -> Iterable["TwistRegionId"]:
        """All twist-region ids in row-major order."""
        for i, r in enumerate(self.rows, start=1):
            for j in range(1, len(r) + 1):
                yield TwistRegionId(i, j)


@dataclass(frozen=True)
class TwistRegionId:
    """Address of one twist box: row 1..n-1, column 1..w_i."""

    row: int
    col: int

    def check_in(self, grid: PlatGrid) -> None:
        grid.entry(self.row, self.col)


@dataclass(frozen=True)
class Violation:
    kind: str  # "ParityError" or "ShapeError"
    message: str


@dataclass(frozen=True)
class ValidationResult:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def validate(grid: PlatGrid) -> ValidationResult:
    """Check the shape invariants of a candidate grid.

    Accepts arbitrary structure and reports every violation found:
    ParityError when the length is odd (or below 2), ShapeError for a bad
    width, wrong row count, or a row of the wrong size.  Coefficients may
    be any integers including zero.
    """
    bad: list[Violation] = []
    if grid.width < 2:
        bad.append(Violation("ShapeError", f"width must be at least 2, got {grid.width}"))
    if grid.length < 2:
        bad.append(Violation("ParityError", f"length must be at least 2, got {grid.length}"))
    elif grid.length % 2 != 0:
        bad.append(Violation("ParityError", f"length must be even, got {grid.length}"))
    expected_rows = grid.length - 1
    if grid.length >= 2 and len(grid.rows) != expected_rows:
        bad.append(
            Violation(
                "ShapeError",
                f"expected {expected_rows} rows for length {grid.length}, got {len(grid.rows)}",
            )
        )
    else:
        for i, r in enumerate(grid.rows, start=1):
            w = row_width(grid.width, i)
            if len(r) != w:
                bad.append(
                    Violation("ShapeError", f"row {i} must have {w} entries, got {len(r)}")
                )
    return ValidationResult(tuple(bad))


def require_valid(grid: PlatGrid) -> None:
    """Raise InvalidGrid when validate() reports violations."""
    result = validate(grid)
    if not result.ok:
        raise InvalidGrid(result.violations)


def is_c_highly_twisted(grid: PlatGrid, c: int) -> bool:
    """True iff every coefficient satisfies |a| >= c."""
    require_valid(grid)
    if c < 1:
        raise ValueError("the twist bound c must be a positive integer")
    return all(abs(a) >= c for a in grid.flatten())


def bridge_distance(grid: PlatGrid) -> int:
    """Distance of the bridge sphere induced by the plat: ceil(n / (2(m-2))).

    The closed formula holds for 3-highly twisted plats of width at least
    3; outside those hypotheses it is not asserted and HypothesesNotMet is
    raised.
    """
    require_valid(grid)
    if grid.width < 3:
        raise HypothesesNotMet(f"width {grid.width} < 3")
    if not is_c_highly_twisted(grid, 3):
        raise HypothesesNotMet("grid is not 3-highly twisted")
    denom = 2 * (grid.width - 2)
    return -(-grid.length // denom)


@dataclass(frozen=True)
class HypothesisReport:
    """Diagram-uniqueness hypotheses for a grid, plus the bridge distance.

    unique_bridge_sphere is the conjunction of the three predicates; when
    it holds the distance exceeds 2m, which forces the induced bridge
    sphere to be the only one up to isotopy.
    """

    width_ok: bool  # m >= 3
    twist_ok: bool  # 3-highly twisted
    length_ok: bool  # n > 4m(m-2)
    distance: int | None  # defined when width_ok and twist_ok
    unique_bridge_sphere: bool


def hypothesis_report(grid: PlatGrid) -> HypothesisReport:
    require_valid(grid)
    width_ok = grid.width >= 3
    twist_ok = is_c_highly_twisted(grid, 3)
    length_ok = grid.length > 4 * grid.width * (grid.width - 2)
    distance = bridge_distance(grid) if (width_ok and twist_ok) else None
    return HypothesisReport(
        width_ok=width_ok,
        twist_ok=twist_ok,
        length_ok=length_ok,
        distance=distance,
        unique_bridge_sphere=width_ok and twist_ok and length_ok,
    )


def twist_region_count(grid: PlatGrid) -> int:
    """Total number of twist boxes: n*m - n/2 - m."""
    require_valid(grid)
    return grid.length * grid.width - grid.length // 2 - grid.width


def _strand_permutation(grid: PlatGrid) -> list[int]:
    """Permutation taking a top strand position to its bottom position.

    Only the parity of each coefficient matters: a box with an odd number
    of crossings swaps its two strands, an even one restores them.
    """
    m = grid.width
    positions = list(range(2 * m))  # positions[p] = strand currently at gap p
    for i, r in enumerate(grid.rows, start=1):
        # box j of an odd row spans columns (2j, 2j+1); of an even row, (2j-1, 2j)
        first = 1 if i % 2 == 1 else 0
        for j, a in enumerate(r):
            left = first + 2 * j
            if a % 2 != 0:
                positions[left], positions[left + 1] = positions[left + 1], positions[left]
    perm = [0] * 2 * m
    for pos, strand in enumerate(positions):
        perm[strand] = pos
    return perm


def _bottom_pairing(grid: PlatGrid) -> list[tuple[int, int]]:
    m = grid.width
    if grid.closure is Closure.STANDARD:
        return [(2 * b, 2 * b + 1) for b in range(m)]
    pairs = [(2 * b + 1, 2 * b + 2) for b in range(m - 1)]
    pairs.append((2 * m - 1, 0))
    return pairs


def component_count(grid: PlatGrid) -> int:
    """Number of link components of the plat closure.

    Traces the 2m strands through the braid permutation and alternates
    between top and bottom bridge pairings; each cycle of the resulting
    matching is one component.
    """
    require_valid(grid)
    m = grid.width
    perm = _strand_permutation(grid)
    top_partner = {}
    for b in range(m):
        top_partner[2 * b] = 2 * b + 1
        top_partner[2 * b + 1] = 2 * b
    bottom_partner = {}
    for x, y in _bottom_pairing(grid):
        bottom_partner[x] = y
        bottom_partner[y] = x
    inv = [0] * 2 * m
    for s, p in enumerate(perm):
        inv[p] = s

    seen_tops: set[int] = set()
    components = 0
    for start in range(2 * m):
        if start in seen_tops:
            continue
        components += 1
        t = start
        while t not in seen_tops:
            seen_tops.add(t)
            partner = top_partner[t]
            seen_tops.add(partner)
            # descend from the partner, run the bottom bridge, climb back up
            t = inv[bottom_partner[perm[partner]]]
    return components


# ---------------------------------------------------------------------------
# Plat text format: the lingua franca of the CLI.
#
#   plat m=<int> n=<int> closure=<standard|even>
#   <row 1 coefficients, space separated>
#   ...
#
# '#' starts a comment anywhere on a line; blank lines are ignored.
# ---------------------------------------------------------------------------


def format_plat(grid: PlatGrid) -> str:
    """Canonical text form: header, then one line per row, trailing newline."""
    lines = [f"plat m={grid.width} n={grid.length} closure={grid.closure.value}"]
    lines.extend(" ".join(str(a) for a in r) for r in grid.rows)
    return "\n".join(lines) + "\n"


def parse_plat(text: str) -> PlatGrid:
    """Parse the plat text format.  Raises ValueError on malformed input.

    The returned grid is not shape-validated; run validate() to report
    violations (the CLI does this so that bad files produce structured
    errors rather than parse failures).
    """
    lines = []
    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append(stripped)
    if not lines:
        raise ValueError("empty plat file")
    header = lines[0].split()
    if not header or header[0] != "plat":
        raise ValueError("plat file must start with a 'plat' header line")
    fields = {}
    for token in header[1:]:
        if "=" not in token:
            raise ValueError(f"malformed header token {token!r}")
        key, value = token.split("=", 1)
        fields[key] = value
    try:
        width = int(fields["m"])
        length = int(fields["n"])
    except KeyError as missing:
        raise ValueError(f"header is missing {missing}") from None
    except ValueError:
        raise ValueError("m and n must be integers") from None
    closure_token = fields.get("closure", "standard")
    try:
        closure = Closure(closure_token)
    except ValueError:
        raise ValueError(f"unknown closure {closure_token!r}") from None
    rows: list[tuple[int, ...]] = []
    for line in lines[1:]:
        try:
            rows.append(tuple(int(tok) for tok in line.split()))
        except ValueError:
            raise ValueError(f"non-integer coefficient in row {len(rows) + 1}") from None
    return PlatGrid(width=width, length=length, rows=tuple(rows), closure=closure)


def grid_from_rows(rows: Sequence[Sequence[int]], closure: Closure = Closure.STANDARD) -> PlatGrid:
    """Build a grid from rows alone, inferring width and length.

    The first row must be an odd row (width m-1); shape errors surface via
    validate() on the result.
    """
    rows = tuple(tuple(r) for r in rows)
    if not rows:
        raise ValueError("at least one row is required")
    width = len(rows[0]) + 1
    return PlatGrid(width=width, length=len(rows) + 1, rows=rows, closure=closure)
