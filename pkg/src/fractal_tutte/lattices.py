"""Construction of three self-similar lattice families as labeled multigraphs.

Each family grows by the same scheme: generation n+1 glues four disjoint
copies of generation n into a ring through four shared hub vertices, then
marks two hubs as the special vertex pair carried by the recursion.

  * fractal: special hubs sit on opposite sides of the ring and one extra
    edge joins the remaining two hubs.
  * flower22: the ring alone, special hubs on opposite sides (two parallel
    2-copy paths between them).
  * flower13: the ring alone, special hubs adjacent (a 1-copy path and a
    3-copy path between them).

Generation 0 is a single edge whose endpoints are the special pair.  Vertex
labels are deterministic: copies are laid out in order, and merged classes
are renumbered by first appearance, so repeated builds are identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from .errors import CapExceeded

GENERATION_CAP = 12


class LatticeFamily(Enum):
    FRACTAL = "fractal"
    FLOWER22 = "flower22"
    FLOWER13 = "flower13"


@dataclass(frozen=True)
class Multigraph:
    """A loop-and-parallel-friendly graph with an ordered special vertex pair."""

    vertex_count: int
    edges: Tuple[Tuple[int, int], ...]
    special_x: int
    special_y: int

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("vertex_count must be positive")
        for u, v in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range")
        for s in (self.special_x, self.special_y):
            if not 0 <= s < self.vertex_count:
                raise ValueError(f"special vertex {s} out of range")
        if self.vertex_count >= 2 and self.special_x == self.special_y:
            raise ValueError("special vertices must be distinct")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree_sequence(self) -> List[int]:
        """Vertex degrees sorted ascending; a loop adds 2 to its vertex."""
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return sorted(deg)

    def is_connected(self) -> bool:
        if self.vertex_count == 1:
            return True
        parent = list(range(self.vertex_count))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        components = self.vertex_count
        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                components -= 1
        return components == 1


def _normalize(u: int, v: int) -> Tuple[int, int]:
    return (u, v) if u <= v else (v, u)


def _next_generation(g: Multigraph, family: LatticeFamily) -> Multigraph:
    """Glue four copies of g into the ring for the requested family."""
    n_old = g.vertex_count
    total = 4 * n_old
    parent = list(range(total))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    def vert(copy: int, v: int) -> int:
        return copy * n_old + v

    # Ring layout: copies 0 and 1 leave the left hub, copies 2 and 3 enter
    # the right hub, and the two middle hubs chain copy 0 to 2 and 1 to 3.
    union(vert(0, g.special_x), vert(1, g.special_x))
    union(vert(0, g.special_y), vert(2, g.special_x))
    union(vert(1, g.special_y), vert(3, g.special_x))
    union(vert(2, g.special_y), vert(3, g.special_y))

    label = {}
    for v in range(total):
        root = find(v)
        if root not in label:
            label[root] = len(label)

    def relabel(copy: int, v: int) -> int:
        return label[find(vert(copy, v))]

    edges: List[Tuple[int, int]] = []
    for copy in range(4):
        for u, v in g.edges:
            edges.append(_normalize(relabel(copy, u), relabel(copy, v)))
    if family is LatticeFamily.FRACTAL:
        edges.append(_normalize(relabel(0, g.special_y), relabel(1, g.special_y)))

    special_x = relabel(0, g.special_x)
    if family is LatticeFamily.FLOWER13:
        special_y = relabel(0, g.special_y)
    else:
        special_y = relabel(2, g.special_y)
    return Multigraph(len(label), tuple(edges), special_x, special_y)


def build_lattice(family: LatticeFamily, n: int) -> Multigraph:
    """Generation n of the requested family, with deterministic labels."""
    if n < 0:
        raise ValueError("generation must be nonnegative")
    if n > GENERATION_CAP:
        raise CapExceeded(f"generation {n} exceeds cap {GENERATION_CAP}")
    g = Multigraph(2, ((0, 1),), 0, 1)
    for _ in range(n):
        g = _next_generation(g, family)
    return g


def lattice_counts(family: LatticeFamily, n: int) -> Tuple[int, int]:
    """Closed-form (vertex, edge) counts for generation n."""
    if n < 0:
        raise ValueError("generation must be nonnegative")
    vertices = (2 * 4 ** n + 4) // 3
    if family is LatticeFamily.FRACTAL:
        edges = (4 ** (n + 1) - 1) // 3
    else:
        edges = 4 ** n
    return vertices, edges


# -- edge-list text format -------------------------------------------------
#
#   p <vertices> <edges> <special_x> <special_y>
#   e <endpoint> <endpoint>      (one line per edge, 0-based)


def to_edge_list(g: Multigraph) -> str:
    lines = [f"p {g.vertex_count} {g.edge_count} {g.special_x} {g.special_y}"]
    for u, v in g.edges:
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Multigraph:
    header = None
    edges: List[Tuple[int, int]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "p":
            if header is not None:
                raise ValueError("duplicate header line")
            if len(fields) != 5:
                raise ValueError(f"malformed header: {line!r}")
            header = tuple(int(f) for f in fields[1:])
        elif fields[0] == "e":
            if len(fields) != 3:
                raise ValueError(f"malformed edge line: {line!r}")
            edges.append((int(fields[1]), int(fields[2])))
        else:
            raise ValueError(f"unrecognized line: {line!r}")
    if header is None:
        raise ValueError("missing header line")
    vertex_count, edge_count, special_x, special_y = header
    if edge_count != len(edges):
        raise ValueError(f"header announces {edge_count} edges, found {len(edges)}")
    return Multigraph(vertex_count, tuple(edges), special_x, special_y)
