"""Named graph families, the three-part regular sharpness construction, and seeded random graphs.

Random generators use :class:`random.Random` (Mersenne Twister), whose output
for a given integer seed is fixed across platforms and Python versions.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from math import gcd
from typing import Optional

from .graph import Graph, GraphError, structural_summary
from .packing import is_k_limited_packing, lemma21_maximality

__all__ = [
    "GkrBlueprint",
    "InfeasibleConstruction",
    "gen_gkr",
    "gkr_blueprint",
    "gen_star",
    "gen_complete",
    "gen_cycle",
    "gen_path",
    "gen_petersen",
    "gen_corona_tree",
    "gen_disjoint_copies",
    "random_graph",
    "random_tree",
]


class InfeasibleConstruction(ValueError):
    """The requested (k, r, t) cannot be realised by the deterministic wiring."""


@dataclass(frozen=True)
class GkrBlueprint:
    k: int
    r: int
    t: int
    g: int
    size_v1: int
    size_v2: int
    size_v3: int
    n: int
    v1: tuple[int, ...]
    v2: tuple[int, ...]
    v3: tuple[int, ...]


def gkr_blueprint(k: int, r: int, t: int) -> GkrBlueprint:
    if k < 1:
        raise InfeasibleConstruction(f"k = {k}: need k >= 1")
    if k > r:
        raise InfeasibleConstruction(f"k = {k} > r = {r}: need k <= r")
    if t < 1:
        raise InfeasibleConstruction(f"t = {t}: need t >= 1")
    g = gcd(k, r)
    s2, s3 = t * r // g, t * k // g
    s1 = (r - k) * s2
    n = (r * r - k * r + r + k) * t // g
    assert s1 + s2 + s3 == n
    v1 = tuple(range(s1))
    v2 = tuple(range(s1, s1 + s2))
    v3 = tuple(range(s1 + s2, n))
    return GkrBlueprint(k, r, t, g, s1, s2, s3, n, v1, v2, v3)


def _feasibility_problem(bp: GkrBlueprint) -> Optional[str]:
    if bp.k > bp.size_v3:
        return f"round-robin needs k <= |V3| (k = {bp.k}, |V3| = {bp.size_v3}); requires t >= gcd(k, r) = {bp.g}"
    if bp.size_v1:
        d = bp.r - 1
        if bp.size_v1 < bp.r:
            return f"|V1| = {bp.size_v1} < r = {bp.r}: no simple (r-1)-regular graph on V1"
        if d % 2 and bp.size_v1 % 2:
            return f"(r-1) = {d} is odd but |V1| = {bp.size_v1} is odd: parity violation"
    return None


def _default_t(k: int, r: int) -> int:
    for t in range(1, 4 * r * r + 8):
        if _feasibility_problem(gkr_blueprint(k, r, t)) is None:
            return t
    raise InfeasibleConstruction(f"no feasible t found for k = {k}, r = {r}")


def gen_gkr(k: int, r: int, t: Optional[int] = None) -> tuple[Graph, GkrBlueprint]:
    """Build the r-regular graph on V1 | V2 | V3 whose part V3 is a maximal k-limited packing.

    Wiring: V1 carries the circulant with offsets +-1..+-floor((r-1)/2) (plus
    the antipodal chord when r-1 is odd); the i-th V2 vertex takes the i-th
    block of r-k consecutive V1 vertices; V2 vertex i meets V3 vertices
    (i*k + j) mod |V3| for j < k.
    """
    if k < 1 or k > r:
        gkr_blueprint(k, r, 1)  # raises with the violated condition
    if t is None:
        t = _default_t(k, r)
    bp = gkr_blueprint(k, r, t)
    problem = _feasibility_problem(bp)
    if problem:
        raise InfeasibleConstruction(problem)

    edges: set[tuple[int, int]] = set()

    def add(u: int, v: int) -> None:
        e = (u, v) if u < v else (v, u)
        if u == v or e in edges:
            raise InfeasibleConstruction(f"wiring collision on edge {e}")
        edges.add(e)

    m1 = bp.size_v1
    if m1:
        d = bp.r - 1
        for i in range(m1):
            for off in range(1, d // 2 + 1):
                j = (i + off) % m1
                add(i, j)
            if d % 2 and i < m1 // 2:
                add(i, i + m1 // 2)
    block = bp.r - bp.k
    for i, w in enumerate(bp.v2):
        for j in range(block):
            add(bp.v1[i * block + j], w)
        for j in range(bp.k):
            add(w, bp.v3[(i * bp.k + j) % bp.size_v3])

    graph = Graph.from_edges(bp.n, edges)
    _check_gkr(graph, bp)
    return graph, bp


def _check_gkr(graph: Graph, bp: GkrBlueprint) -> None:
    v1, v2, v3 = (frozenset(p) for p in (bp.v1, bp.v2, bp.v3))
    for v in range(graph.n):
        if graph.degree(v) != bp.r:
            raise InfeasibleConstruction(f"vertex {v} has degree {graph.degree(v)} != r")
        nb = graph.neighbors(v)
        in1 = sum(u in v1 for u in nb)
        in2 = sum(u in v2 for u in nb)
        in3 = sum(u in v3 for u in nb)
        if v in v1:
            expect = (bp.r - 1, 1, 0)
        elif v in v2:
            expect = (bp.r - bp.k, 0, bp.k)
        else:
            expect = (0, bp.r, 0)
        if (in1, in2, in3) != expect:
            raise InfeasibleConstruction(f"vertex {v} meets parts {(in1, in2, in3)}, expected {expect}")
    if not is_k_limited_packing(graph, bp.v3, bp.k) or not lemma21_maximality(graph, bp.v3, bp.k):
        raise InfeasibleConstruction("V3 is not a maximal k-limited packing")
    if bp.size_v3 * (bp.r * (bp.r - bp.k + 1) + bp.k) != bp.k * bp.n:
        raise InfeasibleConstruction("|V3| does not match kn/(r(r-k+1)+k)")


# named families -------------------------------------------------------------


def gen_star(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    if n < 2:
        raise GraphError("star needs n >= 2")
    return Graph.from_edges(n, ((0, v) for v in range(1, n)))


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, ((v, (v + 1) % n) for v in range(n)))


def gen_path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, ((v, v + 1) for v in range(n - 1)))


def gen_petersen() -> Graph:
    """Outer cycle 0-4, spokes i -- i+5, inner pentagram 5 + (i, i+2 mod 5)."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Graph.from_edges(10, edges)


def gen_corona_tree(base: Graph, leaves_per_vertex: int) -> Graph:
    """Attach ``leaves_per_vertex`` new pendants to every vertex of the tree ``base``."""
    if leaves_per_vertex < 1:
        raise GraphError("leaves_per_vertex must be >= 1")
    if not structural_summary(base).is_tree:
        raise GraphError("corona base must be a tree")
    edges = list(base.edges())
    nxt = base.n
    for v in range(base.n):
        for _ in range(leaves_per_vertex):
            edges.append((v, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


def gen_disjoint_copies(g: Graph, copies: int) -> Graph:
    if copies < 1:
        raise GraphError("copies must be >= 1")
    edges = [(u + c * g.n, v + c * g.n) for c in range(copies) for u, v in g.edges()]
    return Graph.from_edges(g.n * copies, edges)


# random -------------------------------------------------------------------


def random_graph(n: int, edge_probability: float, seed: int) -> Graph:
    """G(n, p): pairs (u, v), u < v, are visited in lexicographic order, one draw each."""
    if n < 1:
        raise GraphError("n must be >= 1")
    if not 0.0 <= edge_probability <= 1.0:
        raise GraphError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < edge_probability]
    return Graph.from_edges(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree: decode a uniformly random Pruefer sequence."""
    if n < 1:
        raise GraphError("n must be >= 1")
    if n <= 2:
        return gen_path(n)
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return Graph.from_edges(n, edges)
