"""Simple undirected graphs on vertices ``0..n-1`` plus graph6 / edge-list I/O.

Graphs are immutable. Neighbourhoods are sorted tuples (for deterministic
iteration); integer bitmasks for the solvers are built lazily, so very large
sparse graphs (long paths, big trees) stay linear in memory.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Optional

__all__ = [
    "Graph",
    "GraphError",
    "Graph6Error",
    "StructuralSummary",
    "parse_graph6",
    "emit_graph6",
    "parse_edge_list",
    "complement",
    "delete_vertex",
    "structural_summary",
    "components",
    "mask_of",
    "members",
]


class GraphError(ValueError):
    """Invalid graph construction or malformed edge-list input."""


class Graph6Error(GraphError):
    """Malformed graph6 text; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> tuple[int, ...]:
    """Vertex ids present in ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


class Graph:
    __slots__ = ("n", "adj", "_open", "_closed", "_hash")

    def __init__(self, n: int, adj: Iterable[Iterable[int]]):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        rows = tuple(tuple(sorted(set(r))) for r in adj)
        if len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        forward, backward = [], []
        for v, row in enumerate(rows):
            for u in row:
                if not 0 <= u < n:
                    raise GraphError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise GraphError(f"self-loop at {v}")
                (forward if v < u else backward).append((v, u) if v < u else (u, v))
        if forward != sorted(backward):
            raise GraphError("adjacency is not symmetric")
        self.n = n
        self.adj = rows
        self._open = None
        self._closed = None
        self._hash = None

    @property
    def open_masks(self) -> tuple[int, ...]:
        """Open neighbourhoods as bitmasks (built on first use)."""
        if self._open is None:
            self._open = tuple(mask_of(r) for r in self.adj)
        return self._open

    @property
    def closed_masks(self) -> tuple[int, ...]:
        if self._closed is None:
            self._closed = tuple(m | (1 << v) for v, m in enumerate(self.open_masks))
        return self._closed

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an id >= n = {n}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, rows)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [()] * n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(r) for r in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adj[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(r) for r in self.adj) // 2

    @property
    def max_degree(self) -> int:
        return max((len(r) for r in self.adj), default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# graph6 -------------------------------------------------------------------

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def emit_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no header, no newline)."""
    bits = []
    for j in range(1, g.n):
        col = [0] * j
        for i in g.adj[j]:
            if i < j:
                col[i] = 1
        bits.extend(col)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for p in range(0, len(bits), 6):
        chunk = bits[p : p + 6]
        val = 0
        for b in chunk:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return _encode_n(g.n) + "".join(body)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (short or long form; optional ``>>graph6<<`` header)."""
    s = line.strip()
    base = 0
    if s.startswith(_HEADER):
        s = s[len(_HEADER) :]
        base = len(_HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range 63..126", base + i)

    def six(pos: int, count: int) -> int:
        if len(s) < pos + count:
            raise Graph6Error("truncated size header", base + len(s))
        val = 0
        for ch in s[pos : pos + count]:
            val = (val << 6) | (ord(ch) - 63)
        return val

    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    elif len(s) > 1 and s[1] == "~":
        n, pos = six(2, 6), 8
    else:
        n, pos = six(1, 3), 4
        if n < 63:
            raise Graph6Error("long-form header used for n < 63", base)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(s) - pos
    if have < need:
        raise Graph6Error(f"truncated bit stream: need {need} bytes, got {have}", base + len(s))
    if have > need:
        raise Graph6Error(f"{have - need} trailing bytes after bit stream", base + pos + need)

    rows: list[list[int]] = [[] for _ in range(n)]
    k = 0
    data = s[pos:]
    for j in range(1, n):
        for i in range(j):
            byte = ord(data[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i].append(j)
                rows[j].append(i)
            k += 1
    return Graph(n, rows)


# edge list ----------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` followed by ``u v`` lines; duplicate edges collapse, loops are rejected."""
    tokens = text.split()
    if not tokens:
        raise GraphError("edge list is empty; expected vertex count first")
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise GraphError(f"non-integer token in edge list: {exc}") from None
    n, rest = nums[0], nums[1:]
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    if len(rest) % 2:
        raise GraphError("edge list has an unpaired endpoint")
    edges = list(zip(rest[0::2], rest[1::2]))
    return Graph.from_edges(n, edges)


# derived graphs -----------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, (members(full & ~g.closed_masks[v]) for v in range(g.n)))


def delete_vertex(g: Graph, v: int, *, return_map: bool = False):
    """Remove ``v``; surviving ids are compacted in order.

    With ``return_map=True`` also returns ``old_ids`` where ``old_ids[new] == old``.
    """
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n = {g.n}")
    old_ids = tuple(u for u in range(g.n) if u != v)
    new_id = {u: i for i, u in enumerate(old_ids)}
    h = Graph(g.n - 1, ([new_id[w] for w in g.adj[u] if w != v] for u in old_ids))
    return (h, old_ids) if return_map else h


def components(g: Graph) -> list[tuple[int, ...]]:
    """Connected components as ascending vertex tuples, ordered by smallest id."""
    label = [-1] * g.n
    out = []
    for s in range(g.n):
        if label[s] >= 0:
            continue
        label[s] = len(out)
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if label[u] < 0:
                    label[u] = label[s]
                    comp.append(u)
                    stack.append(u)
        out.append(tuple(sorted(comp)))
    return out


# structural summary -------------------------------------------------------


@dataclass(frozen=True)
class StructuralSummary:
    n: int
    m: int
    max_degree: int
    min_degree: int
    delta_prime: Optional[int]
    leaves: tuple[int, ...]
    supports: tuple[int, ...]
    is_tree: bool
    is_connected: bool
    regular_degree: Optional[int]
    component_sizes: tuple[int, ...]

    @property
    def leaf_count(self) -> int:
        return len(self.leaves)

    @property
    def support_count(self) -> int:
        return len(self.supports)

    @property
    def min_component_size(self) -> int:
        return min(self.component_sizes, default=0)


def structural_summary(g: Graph) -> StructuralSummary:
    deg = g.degrees()
    leaves = tuple(v for v in range(g.n) if deg[v] == 1)
    supports = tuple(v for v in range(g.n) if any(deg[u] == 1 for u in g.adj[v]))
    non_pendant = [d for d in deg if d != 1]
    # absent iff every vertex has degree <= 1
    delta_prime = min(non_pendant) if any(d > 1 for d in deg) else None
    comps = components(g)
    connected = len(comps) <= 1
    m = g.m
    regular = deg[0] if deg and all(d == deg[0] for d in deg) else None
    return StructuralSummary(
        n=g.n,
        m=m,
        max_degree=max(deg, default=0),
        min_degree=min(deg, default=0),
        delta_prime=delta_prime,
        leaves=leaves,
        supports=supports,
        is_tree=connected and g.n >= 1 and m == g.n - 1,
        is_connected=connected,
        regular_degree=regular,
        component_sizes=tuple(len(c) for c in comps),
    )
