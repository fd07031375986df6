"""Linear-time domination and total domination for trees.

Both routines root the tree at vertex 0, order vertices breadth-first with
neighbours in ascending id, and sweep that order backwards so every vertex
is handled after all of its children. Output sets are deterministic.
"""

from __future__ import annotations

from .graph import Graph
from .packing import Optimality, PackingCertificate, PackingKind, SolverError

__all__ = ["NotATreeError", "rooted_order", "tree_domination", "tree_total_domination"]


class NotATreeError(ValueError):
    pass


def rooted_order(t: Graph, root: int = 0) -> tuple[list[int], list[int]]:
    """``(parent, order)``: BFS order from ``root``; ``parent[root] == -1``. Raises unless ``t`` is a tree."""
    n = t.n
    if n == 0:
        raise NotATreeError("empty graph is not a tree")
    adj = t.adj
    if sum(map(len, adj)) != 2 * (n - 1):
        raise NotATreeError(f"not a tree: m = {t.m}, n = {n}")
    parent = [-1] * n
    parent[root] = root
    order = [root]
    append = order.append
    for v in order:
        for u in adj[v]:
            if parent[u] < 0:
                parent[u] = v
                append(u)
    if len(order) != n:
        raise NotATreeError("not a tree: graph is disconnected")
    parent[root] = -1
    return parent, order


def _certificate(t: Graph, kind: PackingKind, chosen: list[int]) -> PackingCertificate:
    # linear re-check; the bitmask predicates would be quadratic on huge trees
    adj = t.adj
    hit = bytearray(t.n)
    for v in chosen:
        if kind.name == PackingKind.DOMINATING:
            hit[v] = 1
        for u in adj[v]:
            hit[u] = 1
    if hit.count(0):
        raise SolverError(f"tree solver produced an invalid {kind.name} set")
    return PackingCertificate(kind, tuple(chosen), Optimality.MINIMUM, verified=True, method="tree")


def tree_domination(t: Graph) -> PackingCertificate:
    """Minimum dominating set of a tree by the leaf-up greedy rule.

    A vertex still undominated when its turn comes pulls its parent into the
    set; an undominated root joins the set itself.
    """
    parent, order = rooted_order(t)
    adj = t.adj
    dominated = bytearray(t.n)
    chosen = []
    for v in reversed(order):
        if dominated[v]:
            continue
        p = parent[v]
        if p < 0:
            p = v
        chosen.append(p)
        dominated[p] = 1
        for w in adj[p]:
            dominated[w] = 1
    chosen.sort()
    return _certificate(t, PackingKind.dominating(), chosen)


def tree_total_domination(t: Graph) -> PackingCertificate:
    """Minimum total dominating set of a tree of order >= 2.

    Same sweep as :func:`tree_domination`, with open neighbourhoods: a vertex
    with no neighbour in the set when its turn comes pulls its parent in
    (the root, having no parent, pulls in its lowest-id child). The parent
    covers every vertex a child could, plus the parent's own neighbours.
    """
    if t.n < 2:
        raise NotATreeError("total domination needs a tree of order at least 2")
    parent, order = rooted_order(t)
    adj = t.adj
    covered = bytearray(t.n)
    picked = bytearray(t.n)
    for v in reversed(order):
        if covered[v]:
            continue
        p = parent[v]
        if p < 0:
            p = adj[v][0]
        picked[p] = 1
        for w in adj[p]:
            covered[w] = 1
    chosen = [v for v in range(t.n) if picked[v]]
    return _certificate(t, PackingKind.total_dominating(), chosen)
