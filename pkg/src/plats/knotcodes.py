"""Diagram codes and the knot-invariant fingerprint.

The fingerprint bundles three independent quantities: the component
count from strand tracing, the determinant as |det| of a Goeritz matrix
of the checkerboard coloring, and, for knots, evaluations of the
Alexander polynomial obtained by Fox calculus on the Wirtinger
presentation.  The Wirtinger minor determinant at an integer t equals
the Alexander value only up to a sign and a power of t, so each
evaluation is normalized to the nonnegative t-free part, which is a
genuine invariant; at t = -1 its absolute value is the determinant
again, giving the two routes a mutual consistency check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from . import intdet
from .diagram import _OPPOSITE, Diagram, build_diagram, goeritz_matrix, pd_tuples
from .errors import EmptyDiagram, NotAKnot
from .grid import PlatGrid, require_valid

ALEXANDER_POINTS = (-1, 2, 3)


@dataclass(frozen=True)
class PDCode:
    """Planar diagram code: per crossing the four incident edge labels,
    counterclockwise from the incoming under-edge."""

    crossings: tuple[tuple[int, int, int, int], ...]

    def format(self) -> str:
        return ", ".join(f"X({a},{b},{c},{d})" for a, b, c, d in self.crossings)


def to_pd_code(grid: PlatGrid) -> PDCode:
    """Export the diagram code; crossings appear row-major, within a box
    bottom crossing first.

    Split circles that meet no crossing leave no trace in the code; the
    component count keeps track of them.  A grid with no crossings at all
    raises EmptyDiagram.
    """
    require_valid(grid)
    diagram = build_diagram(grid)
    return PDCode(tuple(pd_tuples(diagram)))


def gauss_code(grid: PlatGrid) -> tuple[str, ...]:
    """Signed Gauss code of a knot diagram, e.g. ('O1+', 'U2-', ...).

    Tokens follow the single component from the leftmost top bridge; the
    sign is the orientation sign of the crossing and appears on both of
    its tokens.
    """
    require_valid(grid)
    diagram = build_diagram(grid)
    if diagram.component_count() != 1:
        raise NotAKnot(f"closure has {diagram.component_count()} components")
    if diagram.crossing_count == 0:
        return ()
    tokens = []
    for passage in diagram.components[0]:
        mark = "O" if passage.over else "U"
        sign = "+" if diagram.crossing_sign(passage.crossing) > 0 else "-"
        tokens.append(f"{mark}{passage.crossing + 1}{sign}")
    return tuple(tokens)


def gauss_code_checks(tokens: tuple[str, ...]) -> bool:
    """Necessary realizability conditions for a signed Gauss code.

    Each crossing must occur exactly once over and once under with one
    sign, and the two occurrences must be evenly interlaced (an odd
    number of symbols strictly between them is impossible in a planar
    diagram).
    """
    seen: dict[int, list[tuple[int, str, str]]] = {}
    for idx, token in enumerate(tokens):
        mark, sign = token[0], token[-1]
        number = int(token[1:-1])
        seen.setdefault(number, []).append((idx, mark, sign))
    for occurrences in seen.values():
        if len(occurrences) != 2:
            return False
        (i, mark1, sign1), (j, mark2, sign2) = occurrences
        if {mark1, mark2} != {"O", "U"} or sign1 != sign2:
            return False
        if (j - i) % 2 == 0:
            return False
    return True


@dataclass(frozen=True)
class InvariantFingerprint:
    """Component count, determinant, and normalized Alexander evaluations.

    alexander_evals is None for links; for knots it maps each sample
    point to the nonnegative t-free part of the Wirtinger minor value,
    and its entry at -1 equals the determinant.
    """

    components: int
    determinant: int
    alexander_evals: Mapping[int, int] | None


def _wirtinger_rows(diagram: Diagram) -> tuple[list[dict[int, tuple[int, int]]], int]:
    """Fox-calculus rows over Z[t], entries stored as (constant, t) pairs.

    Arcs are the edge classes merged across over-passages.  A positive
    crossing with over-arc o, under-in u, under-out w contributes
    o: 1-t, u: t, w: -1; a negative one contributes the t-scaled row
    o: t-1, u: 1, w: -t.
    """
    parent = list(range(2 * diagram.crossing_count + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for passages in diagram.components:
        for p in passages:
            if p.over:
                incoming = diagram.labels[(p.crossing, p.port_in)]
                outgoing = diagram.labels[(p.crossing, _OPPOSITE[p.port_in])]
                root_a, root_b = find(incoming), find(outgoing)
                if root_a != root_b:
                    parent[root_a] = root_b

    arc_index: dict[int, int] = {}

    def arc_of(label: int) -> int:
        root = find(label)
        if root not in arc_index:
            arc_index[root] = len(arc_index)
        return arc_index[root]

    rows = []
    for crossing in diagram.crossings:
        under_in = under_out = over_label = None
        for p in diagram.passages_at[crossing.index]:
            if p.over:
                over_label = diagram.labels[(p.crossing, p.port_in)]
            else:
                under_in = diagram.labels[(p.crossing, p.port_in)]
                under_out = diagram.labels[(p.crossing, _OPPOSITE[p.port_in])]
        o, u, w = arc_of(over_label), arc_of(under_in), arc_of(under_out)
        row: dict[int, tuple[int, int]] = {}

        def add(arc: int, const: int, lin: int) -> None:
            c0, c1 = row.get(arc, (0, 0))
            row[arc] = (c0 + const, c1 + lin)

        if diagram.crossing_sign(crossing.index) > 0:
            add(o, 1, -1)
            add(u, 0, 1)
            add(w, -1, 0)
        else:
            add(o, -1, 1)
            add(u, 1, 0)
            add(w, 0, -1)
        rows.append(row)
    return rows, len(arc_index)


def _alexander_evaluations(diagram: Diagram) -> dict[int, int]:
    rows, arcs = _wirtinger_rows(diagram)
    assert arcs == diagram.crossing_count, "a knot diagram has one arc per crossing"
    evals = {}
    for t in ALEXANDER_POINTS:
        size = len(rows) - 1
        matrix = [
            [0] * size
            for _ in range(size)
        ]
        for r, row in enumerate(rows[:-1]):
            for arc, (c0, c1) in row.items():
                if arc < size:
                    matrix[r][arc] = c0 + c1 * t
        value = abs(intdet.determinant(matrix))
        if t not in (1, -1):
            while value and value % t == 0:
                value //= t
        evals[t] = value
    return evals


def fingerprint(grid: PlatGrid) -> InvariantFingerprint:
    """Compute the invariant triple of the plat closure.

    A crossing-free closure is an unlink: determinant 1 for the unknot,
    0 otherwise.  A closure with a split crossing-free circle next to
    actual crossings is a split link, determinant 0.  Alexander values
    are only defined for knots.
    """
    require_valid(grid)
    diagram = build_diagram(grid)
    components = diagram.component_count()
    if diagram.crossing_count == 0:
        if components == 1:
            return InvariantFingerprint(1, 1, {t: 1 for t in ALEXANDER_POINTS})
        return InvariantFingerprint(components, 0, None)
    if any(len(passages) == 0 for passages in diagram.components):
        return InvariantFingerprint(components, 0, None)
    determinant = abs(intdet.determinant(goeritz_matrix(diagram)))
    evals = _alexander_evaluations(diagram) if components == 1 else None
    return InvariantFingerprint(components, determinant, evals)
