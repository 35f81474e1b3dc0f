"""Planar diagram machinery behind the code exporters and invariants.

A grid expands into a wiring of crossings and bridge arcs.  Crossings
have four stubs (NW, NE, SW, SE); bridges have two.  An edge of the
wiring joins two stubs, and a strand passes a crossing diagonally, NW to
SE or NE to SW.  Everything downstream, the link traversal, the edge
labels of the planar diagram code, the faces, and the checkerboard
coloring, is computed from this wiring.

Coordinates are mathematical (x right, y up) with row 1 at the top, so
the counterclockwise stub order at a crossing is NE, NW, SW, SE.  Faces
are the orbits of the map h -> ccw-next(mate(h)); the quadrant opening
counterclockwise after stub q belongs to the face of the next stub, so
the north face is the face of NW, west of SW, south of SE, east of NE.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import EmptyDiagram
from .grid import Closure, PlatGrid, require_valid

NW, NE, SW, SE = 0, 1, 2, 3
_OPPOSITE = (SE, SW, NE, NW)  # indexed by port
_NEXT_CCW = {NE: NW, NW: SW, SW: SE, SE: NE}
_POSITION = {NW: (-1, 1), NE: (1, 1), SW: (-1, -1), SE: (1, -1)}

Stub = tuple[object, int]  # (crossing index or bridge tag, port)


@dataclass(frozen=True)
class Crossing:
    index: int  # emission order: row-major, box by box, bottom crossing first
    row: int
    col: int
    pair: int  # left strand column, 0-indexed; crosses columns pair, pair+1
    over_swne: bool  # positive coefficient: the SW-NE strand crosses over


@dataclass(frozen=True)
class Passage:
    crossing: int
    port_in: int
    over: bool


@dataclass
class Diagram:
    grid: PlatGrid
    crossings: list[Crossing]
    mate: dict[Stub, Stub]
    components: list[list[Passage]] = field(default_factory=list)
    labels: dict[Stub, int] = field(default_factory=dict)
    passages_at: dict[int, list[Passage]] = field(default_factory=dict)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def component_count(self) -> int:
        return len(self.components)

    def under_port(self, cid: int) -> int:
        for p in self.passages_at[cid]:
            if not p.over:
                return p.port_in
        raise KeyError(cid)

    def crossing_sign(self, cid: int) -> int:
        """Orientation sign: +1 when over and under directions form a
        counterclockwise frame."""
        over_dir = under_dir = None
        for p in self.passages_at[cid]:
            direction = _POSITION[_OPPOSITE[p.port_in]]
            if p.over:
                over_dir = direction
            else:
                under_dir = direction
        assert over_dir is not None and under_dir is not None
        cross = over_dir[0] * under_dir[1] - over_dir[1] * under_dir[0]
        return 1 if cross > 0 else -1


def build_diagram(grid: PlatGrid) -> Diagram:
    """Expand a grid into its wiring and traverse every component.

    Components are discovered through the top bridges from left to right;
    each is a cyclic list of crossing passages, empty for a split circle
    that meets no crossing.  Edge labels for the planar diagram code are
    assigned along the same traversal.
    """
    require_valid(grid)
    m = grid.width
    crossings: list[Crossing | None] = [None] * sum(abs(a) for a in grid.flatten())
    mate: dict[Stub, Stub] = {}

    def connect(a: Stub, b: Stub) -> None:
        mate[a] = b
        mate[b] = a

    dangle: dict[int, Stub] = {}
    for b in range(m):
        dangle[2 * b] = (("T", b), 0)
        dangle[2 * b + 1] = (("T", b), 1)

    base = 0
    for i, row in enumerate(grid.rows, start=1):
        first = 1 if i % 2 == 1 else 0
        for j, a in enumerate(row, start=1):
            q = abs(a)
            pair = first + 2 * (j - 1)
            for stack in range(q):  # geometric order, top crossing first
                cid = base + (q - 1 - stack)
                crossings[cid] = Crossing(cid, i, j, pair, over_swne=a > 0)
                connect(dangle[pair], (cid, NW))
                connect(dangle[pair + 1], (cid, NE))
                dangle[pair] = (cid, SW)
                dangle[pair + 1] = (cid, SE)
            base += q

    if grid.closure is Closure.STANDARD:
        bottom = [(2 * b, 2 * b + 1) for b in range(m)]
    else:
        bottom = [(2 * b + 1, 2 * b + 2) for b in range(m - 1)] + [(2 * m - 1, 0)]
    for b, (left, right) in enumerate(bottom):
        connect(dangle[left], (("B", b), 0))
        connect(dangle[right], (("B", b), 1))

    diagram = Diagram(grid=grid, crossings=[c for c in crossings if c is not None], mate=mate)

    visited: set[Stub] = set()
    for b in range(m):
        start: Stub = (("T", b), 0)
        if start in visited:
            continue
        passages: list[Passage] = []
        current = start
        while True:
            visited.add(current)
            node, port = mate[current]
            visited.add((node, port))
            if isinstance(node, int):
                crossing = diagram.crossings[node]
                on_swne = port in (NE, SW)
                passages.append(Passage(node, port, over=on_swne == crossing.over_swne))
                current = (node, _OPPOSITE[port])
            else:
                current = (node, 1 - port)
            if current == start:
                break
        diagram.components.append(passages)

    next_label = 1
    for passages in diagram.components:
        count = len(passages)
        for t, p in enumerate(passages):
            diagram.labels[(p.crossing, p.port_in)] = next_label + t
            diagram.labels[(p.crossing, _OPPOSITE[p.port_in])] = next_label + (t + 1) % count
            diagram.passages_at.setdefault(p.crossing, []).append(p)
        next_label += count
    return diagram


def pd_tuples(diagram: Diagram) -> list[tuple[int, int, int, int]]:
    """One 4-tuple per crossing: edge labels counterclockwise from the
    incoming under-edge."""
    if diagram.crossing_count == 0:
        raise EmptyDiagram("the grid has no crossings")
    out = []
    for crossing in diagram.crossings:
        port = diagram.under_port(crossing.index)
        labels = []
        for _ in range(4):
            labels.append(diagram.labels[(crossing.index, port)])
            port = _NEXT_CCW[port]
        out.append(tuple(labels))
    return out


def faces(diagram: Diagram) -> tuple[list[frozenset[Stub]], dict[Stub, int]]:
    """Face orbits of the wiring and the face index of every stub."""

    def next_ccw(stub: Stub) -> Stub:
        node, port = stub
        if isinstance(node, int):
            return (node, _NEXT_CCW[port])
        return (node, 1 - port)

    face_of: dict[Stub, int] = {}
    orbits: list[frozenset[Stub]] = []
    for stub in sorted(diagram.mate, key=_stub_key):
        if stub in face_of:
            continue
        orbit = []
        h = stub
        while h not in face_of:
            face_of[h] = len(orbits)
            orbit.append(h)
            h = next_ccw(diagram.mate[h])
        orbits.append(frozenset(orbit))
    return orbits, face_of


def _stub_key(stub: Stub):
    node, port = stub
    if isinstance(node, int):
        return (0, node, "", port)
    return (1, node[1], node[0], port)


def checkerboard(diagram: Diagram) -> tuple[list[int], dict[Stub, int]]:
    """Proper 2-coloring of the faces; the first face gets color 0."""
    orbits, face_of = faces(diagram)
    colors = [-1] * len(orbits)
    for start in range(len(orbits)):
        if colors[start] != -1:
            continue
        colors[start] = 0
        queue = [start]
        while queue:
            f = queue.pop()
            for stub in orbits[f]:
                g = face_of[diagram.mate[stub]]
                if colors[g] == -1:
                    colors[g] = 1 - colors[f]
                    queue.append(g)
                else:
                    assert colors[g] != colors[f], "checkerboard coloring failed"
    return colors, face_of


def quadrant_faces(diagram: Diagram, face_of: dict[Stub, int], cid: int) -> dict[str, int]:
    """Face indices of the four quadrants around a crossing."""
    return {
        "N": face_of[(cid, NW)],
        "W": face_of[(cid, SW)],
        "S": face_of[(cid, SE)],
        "E": face_of[(cid, NE)],
    }


def goeritz_matrix(diagram: Diagram) -> list[list[int]]:
    """Goeritz form on the color-0 regions, one region row/column deleted.

    At each crossing the white regions occupy an opposite quadrant pair;
    the crossing type compares the over-strand diagonal with that axis.
    Crossings whose two white quadrants coincide drop out.  Either color
    class presents the first homology of the double branched cover, so
    the deterministic class choice does not affect the determinant.
    """
    colors, face_of = checkerboard(diagram)
    whites = sorted(f for f, color in enumerate(colors) if color == 0)
    index = {f: k for k, f in enumerate(whites)}
    size = len(whites)
    pre = [[0] * size for _ in range(size)]
    for crossing in diagram.crossings:
        quadrants = quadrant_faces(diagram, face_of, crossing.index)
        # opposite quadrants share a color and adjacent ones differ
        assert colors[quadrants["N"]] == colors[quadrants["S"]]
        assert colors[quadrants["W"]] == colors[quadrants["E"]]
        assert colors[quadrants["N"]] != colors[quadrants["W"]]
        if colors[quadrants["N"]] == 0:
            axis_ns = True
            u, v = quadrants["N"], quadrants["S"]
        else:
            axis_ns = False
            u, v = quadrants["W"], quadrants["E"]
        if u == v:
            continue
        eta = 1 if crossing.over_swne == axis_ns else -1
        pre[index[u]][index[v]] -= eta
        pre[index[v]][index[u]] -= eta
    for k in range(size):
        pre[k][k] = -sum(pre[k][j] for j in range(size) if j != k)
    return [row[1:] for row in pre[1:]]
