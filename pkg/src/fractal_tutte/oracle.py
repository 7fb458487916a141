"""Brute-force Tutte polynomial oracles used to gate the fast recursions.

Two independent routes are implemented:

  * spanning-subgraph expansion: a census of all edge subsets classified by
    rank deficit and nullity, folded into (x-1)^a (y-1)^b binomials;
  * memoized deletion-contraction with whole-parallel-class steps.

The expansion also classifies every subset by whether it joins the special
vertex pair, which yields the two-part split of the polynomial for free.
"""

from __future__ import annotations

import os
from itertools import combinations
from math import comb
from typing import Dict, List, Tuple

from .bipoly import BiPoly
from .errors import CapExceeded
from .lattices import Multigraph

EXPANSION_EDGE_CAP = 24
DC_EDGE_CAP = 64

Census = Dict[Tuple[int, int], int]


def _graph_rank(g: Multigraph) -> int:
    """Rank |V| - (number of components)."""
    parent = list(range(g.vertex_count))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    rank = 0
    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            rank += 1
    return rank


def _census_worker(g: Multigraph, rank_full: int, prefix_mask: int,
                   prefix_len: int) -> Tuple[Census, Census]:
    """Census of all subsets whose first prefix_len edges match prefix_mask."""
    edges = g.edges
    edge_total = len(edges)
    vertex_total = g.vertex_count
    sx, sy = g.special_x, g.special_y
    parent = list(range(vertex_total))
    size = [1] * vertex_total
    binom = [[comb(m, j) for j in range(m + 1)] for m in range(edge_total + 1)]
    joined: Census = {}
    severed: Census = {}

    merges = 0
    included = 0
    for idx in range(prefix_len):
        if not (prefix_mask >> idx) & 1:
            continue
        included += 1
        a, b = edges[idx]
        while parent[a] != a:
            a = parent[a]
        while parent[b] != b:
            b = parent[b]
        if a != b:
            if size[a] < size[b]:
                a, b = b, a
            parent[b] = a
            size[a] += size[b]
            merges += 1

    def run(idx: int, merges: int, included: int) -> None:
        # No path compression anywhere: undo must be a plain pointer reset.
        if merges == rank_full:
            # The partition already matches the full graph, so every
            # remaining edge is internal and only nullity can grow.
            a = sx
            while parent[a] != a:
                a = parent[a]
            b = sy
            while parent[b] != b:
                b = parent[b]
            bucket = joined if a == b else severed
            row = binom[edge_total - idx]
            base = included - merges
            for j, ways in enumerate(row):
                key = (0, base + j)
                bucket[key] = bucket.get(key, 0) + ways
            return
        if idx == edge_total:
            a = sx
            while parent[a] != a:
                a = parent[a]
            b = sy
            while parent[b] != b:
                b = parent[b]
            bucket = joined if a == b else severed
            key = (rank_full - merges, included - merges)
            bucket[key] = bucket.get(key, 0) + 1
            return
        u, v = edges[idx]
        a = u
        while parent[a] != a:
            a = parent[a]
        b = v
        while parent[b] != b:
            b = parent[b]
        if a == b:
            run(idx + 1, merges, included + 1)
            run(idx + 1, merges, included)
        else:
            if size[a] < size[b]:
                a, b = b, a
            parent[b] = a
            size[a] += size[b]
            run(idx + 1, merges + 1, included + 1)
            size[a] -= size[b]
            parent[b] = b
            run(idx + 1, merges, included)

    run(prefix_len, merges, included)
    return joined, severed


def _merge_census(target: Census, part: Census) -> None:
    for key, count in part.items():
        target[key] = target.get(key, 0) + count


def rank_nullity_census(g: Multigraph, edge_cap: int = EXPANSION_EDGE_CAP,
                        workers: int | None = None) -> Tuple[Census, Census]:
    """Count edge subsets by (rank deficit, nullity), split by whether the
    subset joins the special pair.  Exact integers throughout."""
    if len(g.edges) > edge_cap:
        raise CapExceeded(f"{len(g.edges)} edges exceeds expansion cap {edge_cap}")
    if workers is None:
        workers = int(os.environ.get("FRACTAL_TUTTE_THREADS", "1") or "1")
    workers = max(1, workers)
    rank_full = _graph_rank(g)

    if workers == 1 or not g.edges:
        return _census_worker(g, rank_full, 0, 0)

    prefix_len = min(len(g.edges), max(1, (workers - 1).bit_length()))
    tasks = [(mask, prefix_len) for mask in range(1 << prefix_len)]
    joined: Census = {}
    severed: Census = {}
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = pool.map(lambda t: _census_worker(g, rank_full, t[0], t[1]), tasks)
        for part_joined, part_severed in results:
            _merge_census(joined, part_joined)
            _merge_census(severed, part_severed)
    return joined, severed


def _x_minus_1_power(a: int) -> BiPoly:
    return BiPoly({(i, 0): comb(a, i) * (-1) ** (a - i) for i in range(a + 1)})


def _y_minus_1_power(b: int) -> BiPoly:
    return BiPoly({(0, j): comb(b, j) * (-1) ** (b - j) for j in range(b + 1)})


def _census_to_poly(counts: Census) -> BiPoly:
    total = BiPoly.zero()
    for (a, b) in sorted(counts):
        total = total + counts[(a, b)] * _x_minus_1_power(a) * _y_minus_1_power(b)
    return total


def tutte_subgraph_expansion(g: Multigraph, edge_cap: int = EXPANSION_EDGE_CAP,
                             workers: int | None = None) -> BiPoly:
    """Tutte polynomial straight from the subset definition."""
    joined, severed = rank_nullity_census(g, edge_cap, workers)
    combined: Census = {}
    _merge_census(combined, joined)
    _merge_census(combined, severed)
    return _census_to_poly(combined)


def split_tutte(g: Multigraph, edge_cap: int = EXPANSION_EDGE_CAP,
                workers: int | None = None) -> Tuple[BiPoly, BiPoly]:
    """Two-part split of the Tutte polynomial by special-pair connectivity.

    Returns (joined part, severed part); the two sum to the full polynomial.
    """
    joined, severed = rank_nullity_census(g, edge_cap, workers)
    return _census_to_poly(joined), _census_to_poly(severed)


# -- deletion-contraction ---------------------------------------------------


def _skeleton_bridges(vertex_count: int, neighbors: List[Dict[int, int]]) -> set:
    """Bridges of the simple skeleton, as normalized vertex pairs.

    A parallel class is a bridge-class exactly when its pair is a bridge of
    the skeleton, so multiplicities play no role here.
    """
    visited = [False] * vertex_count
    disc = [0] * vertex_count
    low = [0] * vertex_count
    bridges = set()
    timer = 1
    for root in range(vertex_count):
        if visited[root]:
            continue
        visited[root] = True
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(neighbors[root]))]
        while stack:
            v, parent_v, neighbor_iter = stack[-1]
            pushed = False
            for w in neighbor_iter:
                if not visited[w]:
                    visited[w] = True
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(neighbors[w])))
                    pushed = True
                    break
                if w != parent_v and disc[w] < low[v]:
                    low[v] = disc[w]
            if not pushed:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] > disc[p]:
                        bridges.add((p, v) if p <= v else (v, p))
    return bridges


def _canonical_key(vertex_count: int, edges: Tuple[Tuple[int, int], ...]) -> Tuple:
    """Degree-refined relabeling of a loop-free multigraph.

    Iterative color refinement followed by a deterministic relabeling.  Equal
    keys imply equal graphs after relabeling, so reuse is always sound; some
    isomorphic states may still hash apart, which only costs recomputation.
    """
    adjacency: List[Dict[int, int]] = [dict() for _ in range(vertex_count)]
    for u, v in edges:
        adjacency[u][v] = adjacency[u].get(v, 0) + 1
        adjacency[v][u] = adjacency[v].get(u, 0) + 1
    colors = [sum(nbrs.values()) for nbrs in adjacency]
    distinct = len(set(colors))
    for _ in range(vertex_count):
        signatures = [
            (colors[v], tuple(sorted((mult, colors[w]) for w, mult in adjacency[v].items())))
            for v in range(vertex_count)
        ]
        palette = {sig: rank for rank, sig in enumerate(sorted(set(signatures)))}
        colors = [palette[sig] for sig in signatures]
        if len(palette) == distinct:
            break
        distinct = len(palette)
    order = sorted(range(vertex_count), key=lambda v: (colors[v], v))
    rank = [0] * vertex_count
    for position, v in enumerate(order):
        rank[v] = position
    relabeled = sorted(
        (rank[u], rank[v]) if rank[u] <= rank[v] else (rank[v], rank[u])
        for u, v in edges
    )
    return (vertex_count, tuple(relabeled))


def _compact(vertex_count: int, edges: List[Tuple[int, int]]) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
    """Drop isolated vertices and renumber; they never affect the polynomial."""
    label: Dict[int, int] = {}
    out = []
    for u, v in sorted(edges):
        lu = label.setdefault(u, len(label))
        lv = label.setdefault(v, len(label))
        out.append((lu, lv) if lu <= lv else (lv, lu))
    return len(label), tuple(sorted(out))


def _parallel_class_factor(multiplicity: int) -> BiPoly:
    # A whole parallel class acting as a bridge: x + y + ... + y^(k-1).
    terms = {(1, 0): 1}
    for j in range(1, multiplicity):
        terms[(0, j)] = 1
    return BiPoly(terms)


def _series_sigma(multiplicity: int) -> BiPoly:
    # 1 + y + ... + y^(k-1), the loop tally from contracting a class.
    return BiPoly({(0, j): 1 for j in range(multiplicity)})


def tutte_deletion_contraction(g: Multigraph, edge_cap: int = DC_EDGE_CAP) -> BiPoly:
    """Tutte polynomial by deletion-contraction with memoized states.

    Loops are stripped into a y-power up front; parallel edges between one
    vertex pair are always eliminated together, which keeps the recursion
    shallow on graphs with heavy edge multiplicity.
    """
    if len(g.edges) > edge_cap:
        raise CapExceeded(f"{len(g.edges)} edges exceeds deletion-contraction cap {edge_cap}")
    memo: Dict[Tuple, BiPoly] = {}

    def solve(vertex_count: int, edges: Tuple[Tuple[int, int], ...]) -> BiPoly:
        loop_count = sum(1 for u, v in edges if u == v)
        plain = [e for e in edges if e[0] != e[1]]
        vertex_count, plain = _compact(vertex_count, plain)
        result = solve_loopfree(vertex_count, plain)
        if loop_count:
            result = result * BiPoly.y() ** loop_count
        return result

    def solve_loopfree(vertex_count: int, edges: Tuple[Tuple[int, int], ...]) -> BiPoly:
        if not edges:
            return BiPoly.one()
        key = _canonical_key(vertex_count, edges)
        cached = memo.get(key)
        if cached is not None:
            return cached

        multiplicity: Dict[Tuple[int, int], int] = {}
        for e in edges:
            multiplicity[e] = multiplicity.get(e, 0) + 1
        neighbors: List[Dict[int, int]] = [dict() for _ in range(vertex_count)]
        for (u, v), k in multiplicity.items():
            neighbors[u][v] = k
            neighbors[v][u] = k
        bridges = _skeleton_bridges(vertex_count, neighbors)

        cycle_classes = [e for e in multiplicity if e not in bridges]
        if not cycle_classes:
            # Forest skeleton: every class contracts independently.
            result = BiPoly.one()
            for e in sorted(multiplicity):
                result = result * _parallel_class_factor(multiplicity[e])
        else:
            degree = [sum(nbrs.values()) for nbrs in neighbors]
            u, v = max(
                cycle_classes,
                key=lambda e: (max(degree[e[0]], degree[e[1]]),
                               degree[e[0]] + degree[e[1]],
                               (-e[0], -e[1])),
            )
            k = multiplicity[(u, v)]

            deleted = [e for e in edges if e != (u, v)]
            del_v, del_e = _compact(vertex_count, deleted)
            part_deleted = solve_loopfree(del_v, del_e)

            contracted = []
            for a, b in deleted:
                a2 = u if a == v else a
                b2 = u if b == v else b
                contracted.append((a2, b2) if a2 <= b2 else (b2, a2))
            con_v, con_e = _compact(vertex_count, contracted)
            part_contracted = solve_loopfree(con_v, con_e)

            result = part_deleted + _series_sigma(k) * part_contracted

        memo[key] = result
        return result

    return solve(g.vertex_count, g.edges)


# -- spanning trees ---------------------------------------------------------


def count_spanning_trees_bruteforce(g: Multigraph, edge_cap: int = EXPANSION_EDGE_CAP) -> int:
    """Count spanning trees by testing every (|V|-1)-subset of edges."""
    if len(g.edges) > edge_cap:
        raise CapExceeded(f"{len(g.edges)} edges exceeds enumeration cap {edge_cap}")
    need = g.vertex_count - 1
    if need < 0:
        return 0
    if need == 0:
        return 1
    count = 0
    for combo in combinations(g.edges, need):
        parent = list(range(g.vertex_count))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        merges = 0
        for u, v in combo:
            ru, rv = find(u), find(v)
            if ru == rv:
                break
            parent[ru] = rv
            merges += 1
        if merges == need:
            count += 1
    return count
