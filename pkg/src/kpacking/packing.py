"""Packing and domination predicates, certificates, and exact solvers.

Two solver tiers share one surface: ``method="bnb"`` (bitset branch and
bound, the default) and ``method="exhaustive"`` (vectorised enumeration of
all subsets, see :mod:`kpacking.exhaustive`), which acts as the oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Iterable

from .graph import Graph, mask_of, members

__all__ = [
    "PackingKind",
    "Optimality",
    "PackingCertificate",
    "SolverError",
    "AnchoringError",
    "is_k_limited_packing",
    "is_maximal_k_limited_packing",
    "lemma21_maximality",
    "is_open_packing",
    "is_dominating_set",
    "is_total_dominating_set",
    "verify_certificate",
    "max_k_limited_packing",
    "min_maximal_k_limited_packing",
    "packing_number",
    "lower_packing_number",
    "max_open_packing",
    "domination_number",
    "total_domination_number",
    "designated_pendants",
    "pendant_anchored_max_packing",
    "pendant_anchored_max_open_packing",
]


class SolverError(RuntimeError):
    pass


class AnchoringError(SolverError):
    """No maximum (open) packing contains every designated pendant."""


@dataclass(frozen=True)
class PackingKind:
    name: str
    k: int | None = None

    K_LIMITED = "k_limited"
    OPEN = "open_packing"
    DOMINATING = "dominating"
    TOTAL = "total_dominating"

    def __post_init__(self):
        if self.name == self.K_LIMITED and (self.k is None or self.k < 1):
            raise ValueError("k-limited packing needs k >= 1")

    @classmethod
    def k_limited(cls, k: int) -> "PackingKind":
        return cls(cls.K_LIMITED, k)

    @classmethod
    def packing(cls) -> "PackingKind":
        return cls(cls.K_LIMITED, 1)

    @classmethod
    def open_packing(cls) -> "PackingKind":
        return cls(cls.OPEN)

    @classmethod
    def dominating(cls) -> "PackingKind":
        return cls(cls.DOMINATING)

    @classmethod
    def total_dominating(cls) -> "PackingKind":
        return cls(cls.TOTAL)


class Optimality(str, enum.Enum):
    MAXIMUM = "maximum"
    MINIMUM_MAXIMAL = "minimum_maximal"
    MINIMUM = "minimum"
    WITNESS = "witness"


@dataclass(frozen=True)
class PackingCertificate:
    kind: PackingKind
    vertices: tuple[int, ...]
    optimality: Optimality
    verified: bool = False
    method: str = "bnb"
    fallback: bool = False

    @property
    def value(self) -> int:
        return len(self.vertices)


# predicates ----------------------------------------------------------------


def _as_mask(b) -> int:
    return b if isinstance(b, int) else mask_of(b)


def is_k_limited_packing(g: Graph, b: Iterable[int] | int, k: int) -> bool:
    bm = _as_mask(b)
    return all((cm & bm).bit_count() <= k for cm in g.closed_masks)


def is_maximal_k_limited_packing(g: Graph, b: Iterable[int] | int, k: int) -> bool:
    """Add-test: every vertex outside ``b`` would break the k-limit if added."""
    bm = _as_mask(b)
    if not is_k_limited_packing(g, bm, k):
        raise ValueError("not a k-limited packing")
    for v in range(g.n):
        if not bm >> v & 1 and is_k_limited_packing(g, bm | (1 << v), k):
            return False
    return True


def lemma21_maximality(g: Graph, b: Iterable[int] | int, k: int) -> bool:
    """Saturation test: each vertex outside ``b`` sees a saturated closed neighbourhood."""
    bm = _as_mask(b)
    if not is_k_limited_packing(g, bm, k):
        raise ValueError("not a k-limited packing")
    saturated = 0
    for u, cm in enumerate(g.closed_masks):
        if (cm & bm).bit_count() == k:
            saturated |= cm
    full = (1 << g.n) - 1
    return (full & ~bm & ~saturated) == 0


def is_open_packing(g: Graph, b: Iterable[int] | int) -> bool:
    bm = _as_mask(b)
    return all((om & bm).bit_count() <= 1 for om in g.open_masks)


def is_dominating_set(g: Graph, s: Iterable[int] | int) -> bool:
    sm = _as_mask(s)
    return all(cm & sm for cm in g.closed_masks)


def is_total_dominating_set(g: Graph, s: Iterable[int] | int) -> bool:
    sm = _as_mask(s)
    return all(om & sm for om in g.open_masks)


def verify_certificate(g: Graph, cert: PackingCertificate) -> bool:
    """Check the defining predicate (and maximality for minimum-maximal certificates)."""
    bm = mask_of(cert.vertices)
    if bm >> g.n:
        return False
    kind = cert.kind
    if kind.name == PackingKind.K_LIMITED:
        ok = is_k_limited_packing(g, bm, kind.k)
        if ok and cert.optimality is Optimality.MINIMUM_MAXIMAL:
            ok = is_maximal_k_limited_packing(g, bm, kind.k)
        return ok
    if kind.name == PackingKind.OPEN:
        return is_open_packing(g, bm)
    if kind.name == PackingKind.DOMINATING:
        return is_dominating_set(g, bm)
    if kind.name == PackingKind.TOTAL:
        return is_total_dominating_set(g, bm)
    raise ValueError(f"unknown kind {kind.name!r}")


def _certify(g: Graph, kind: PackingKind, mask: int, optimality: Optimality, method: str, **extra) -> PackingCertificate:
    cert = PackingCertificate(kind, members(mask), optimality, method=method, **extra)
    if not verify_certificate(g, cert):
        raise SolverError(f"solver produced an invalid {kind.name} set {cert.vertices}")
    return replace(cert, verified=True)


def _check_method(method: str) -> None:
    if method not in ("bnb", "exhaustive"):
        raise ValueError(f"unknown solver method {method!r}")


# branch and bound: maximisation ---------------------------------------------


def _bnb_max_limited(nbhd: tuple[int, ...], n: int, k: int) -> int:
    """Largest B with |nbhd[u] & B| <= k for all u, as a bitmask.

    Vertices are decided in ascending id, include-branch first. The bound is
    the current size plus the number of undecided vertices that can still be
    added without exceeding any budget.
    """
    # nbhd is symmetric, so the budgets touched by v are exactly nbhd[v]
    touches = [members(nbhd[v]) for v in range(n)]
    counts = [0] * n

    def addable(v: int) -> bool:
        for u in touches[v]:
            if counts[u] >= k:
                return False
        return True

    # greedy incumbent
    best_mask = 0
    for v in range(n):
        if addable(v):
            best_mask |= 1 << v
            for u in touches[v]:
                counts[u] += 1
    counts = [0] * n
    best = [best_mask.bit_count(), best_mask]

    def rec(i: int, size: int, mask: int) -> None:
        if i == n:
            if size > best[0]:
                best[0], best[1] = size, mask
            return
        free = 0
        for v in range(i, n):
            if addable(v):
                free += 1
        if size + free <= best[0]:
            return
        if addable(i):
            for u in touches[i]:
                counts[u] += 1
            rec(i + 1, size + 1, mask | (1 << i))
            for u in touches[i]:
                counts[u] -= 1
        rec(i + 1, size, mask)

    rec(0, 0, 0)
    return best[1]


def _bnb_min_maximal_limited(g: Graph, k: int) -> int:
    """Smallest maximal k-limited packing, as a bitmask.

    Ascending-id branching, exclude-branch first. A branch dies when an
    excluded vertex can no longer end up inside a saturated closed
    neighbourhood (it would then be addable, so the set could not be
    maximal). Leaves are confirmed with the direct add-test.
    """
    n = g.n
    closed = g.closed_masks
    nb = [members(c) for c in closed]
    counts = [0] * n
    state = [0] * n  # 0 undecided, 1 in, -1 out

    def addable(v: int) -> bool:
        for u in nb[v]:
            if counts[u] >= k:
                return False
        return True

    incumbent = 0
    for v in range(n):
        if addable(v):
            incumbent |= 1 << v
            for u in nb[v]:
                counts[u] += 1
    counts = [0] * n
    best = [incumbent.bit_count(), incumbent]

    def coverable(v: int, room: int, i: int) -> bool:
        for u in nb[v]:
            c = counts[u]
            if c == k:
                return True
            need = k - c
            if need > room:
                continue
            # undecided members of N[u] are exactly those with id >= i
            undecided = (closed[u] >> i).bit_count()
            if undecided >= need:
                return True
        return False

    def rec(i: int, size: int, mask: int) -> None:
        if size >= best[0]:
            return
        room = best[0] - 1 - size
        for v in range(i):
            if state[v] == -1 and not coverable(v, room, i):
                return
        if i == n:
            if is_maximal_k_limited_packing(g, mask, k):
                best[0], best[1] = size, mask
            return
        state[i] = -1
        rec(i + 1, size, mask)
        if size + 1 < best[0] and addable(i):
            state[i] = 1
            for u in nb[i]:
                counts[u] += 1
            rec(i + 1, size + 1, mask | (1 << i))
            for u in nb[i]:
                counts[u] -= 1
        state[i] = 0

    rec(0, 0, 0)
    return best[1]


# branch and bound: domination ---------------------------------------------


def _bnb_min_cover(cover: tuple[int, ...], n: int) -> int | None:
    """Smallest S whose cover[] masks union to all of V; branch on the lowest uncovered vertex."""
    full = (1 << n) - 1
    # candidates that cover v
    by_target = [tuple(u for u in range(n) if cover[u] >> v & 1) for v in range(n)]
    if any(not c for c in by_target):
        return None
    reach = max((c.bit_count() for c in cover), default=1)

    # greedy incumbent
    covered, chosen = 0, 0
    while covered != full:
        low = (full & ~covered) & -(full & ~covered)
        v = low.bit_length() - 1
        u = max(by_target[v], key=lambda w: ((cover[w] & ~covered).bit_count(), -w))
        chosen |= 1 << u
        covered |= cover[u]
    best = [chosen.bit_count(), chosen]

    def rec(covered: int, size: int, chosen: int) -> None:
        left = full & ~covered
        if not left:
            if size < best[0]:
                best[0], best[1] = size, chosen
            return
        if size + -(-left.bit_count() // reach) >= best[0]:
            return
        v = (left & -left).bit_length() - 1
        for u in by_target[v]:
            rec(covered | cover[u], size + 1, chosen | (1 << u))

    rec(0, 0, 0)
    return best[1]


# public solvers -------------------------------------------------------------


def max_k_limited_packing(g: Graph, k: int, method: str = "bnb") -> PackingCertificate:
    """Maximum k-limited packing; ``value`` is L_k(g)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_method(method)
    kind = PackingKind.k_limited(k)
    if method == "exhaustive":
        from .exhaustive import exhaustive_max_limited

        mask = exhaustive_max_limited(g, k)
    elif k >= g.max_degree + 1:
        mask = (1 << g.n) - 1
    else:
        mask = _bnb_max_limited(g.closed_masks, g.n, k)
    return _certify(g, kind, mask, Optimality.MAXIMUM, method)


def min_maximal_k_limited_packing(g: Graph, k: int, method: str = "bnb") -> PackingCertificate:
    """Minimum maximal k-limited packing; ``value`` is the lower k-limited packing number."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_method(method)
    kind = PackingKind.k_limited(k)
    if method == "exhaustive":
        from .exhaustive import exhaustive_min_maximal_limited

        mask = exhaustive_min_maximal_limited(g, k)
    elif k >= g.max_degree + 1:
        mask = (1 << g.n) - 1
    else:
        mask = _bnb_min_maximal_limited(g, k)
    cert = _certify(g, kind, mask, Optimality.MINIMUM_MAXIMAL, method)
    upper = max_k_limited_packing(g, k, method)
    if cert.value > upper.value:
        raise SolverError(f"lower k-limited packing {cert.value} exceeds L_k = {upper.value}")
    return cert


def packing_number(g: Graph, method: str = "bnb") -> PackingCertificate:
    return max_k_limited_packing(g, 1, method)


def lower_packing_number(g: Graph, method: str = "bnb") -> PackingCertificate:
    return min_maximal_k_limited_packing(g, 1, method)


def max_open_packing(g: Graph, method: str = "bnb") -> PackingCertificate:
    """Maximum open packing; ``value`` is the open packing number."""
    _check_method(method)
    if method == "exhaustive":
        from .exhaustive import exhaustive_max_open

        mask = exhaustive_max_open(g)
    else:
        mask = _bnb_max_limited(g.open_masks, g.n, 1)
    return _certify(g, PackingKind.open_packing(), mask, Optimality.MAXIMUM, method)


def domination_number(g: Graph, method: str = "bnb") -> PackingCertificate:
    _check_method(method)
    if method == "exhaustive":
        from .exhaustive import exhaustive_min_cover

        mask = exhaustive_min_cover(g.closed_masks, g.n)
    else:
        mask = _bnb_min_cover(g.closed_masks, g.n)
    return _certify(g, PackingKind.dominating(), mask, Optimality.MINIMUM, method)


def total_domination_number(g: Graph, method: str = "bnb") -> PackingCertificate:
    _check_method(method)
    if g.n < 2 or any(not om for om in g.open_masks):
        raise ValueError("graph has an isolated vertex; no total dominating set exists")
    if method == "exhaustive":
        from .exhaustive import exhaustive_min_cover

        mask = exhaustive_min_cover(g.open_masks, g.n)
    else:
        mask = _bnb_min_cover(g.open_masks, g.n)
    return _certify(g, PackingKind.total_dominating(), mask, Optimality.MINIMUM, method)


# pendant-anchored maximum packings -------------------------------------------


def designated_pendants(g: Graph) -> list[tuple[int, int]]:
    """``(support, pendant)`` pairs, one per support in ascending order; pendant = lowest-id leaf neighbour."""
    deg = g.degrees()
    pairs = []
    for v in range(g.n):
        leaves = [u for u in g.adj[v] if deg[u] == 1]
        if leaves:
            pairs.append((v, leaves[0]))
    return pairs


def _anchor_fallback(g: Graph, pairs, valid, target: int, kind: PackingKind, method: str) -> PackingCertificate:
    from .exhaustive import exhaustive_anchored

    need = mask_of(p for _, p in pairs)
    mask = exhaustive_anchored(g, need, target, valid)
    if mask is None:
        raise AnchoringError(
            f"no maximum {kind.name} of size {target} contains the designated pendants "
            f"{sorted(p for _, p in pairs)}"
        )
    return _certify(g, kind, mask, Optimality.MAXIMUM, method, fallback=True)


def pendant_anchored_max_packing(g: Graph, method: str = "bnb") -> PackingCertificate:
    """Maximum packing containing the designated pendant of every support vertex.

    Starts from a maximum packing and repairs each support in ascending order:
    if the support itself is in the set it is swapped for its pendant,
    otherwise the set member adjacent to the support is swapped for the
    pendant. Every swap is re-verified. If the repair does not settle, an
    exhaustive anchored search is run and the certificate is marked
    ``fallback=True``.
    """
    base = packing_number(g, method)
    pairs = designated_pendants(g)
    target = base.value
    valid = lambda m: is_k_limited_packing(g, m, 1)  # noqa: E731
    b = mask_of(base.vertices)
    need = mask_of(p for _, p in pairs)
    ok = True
    for _ in range(max(g.n, 1)):
        if b & need == need:
            break
        for v, leaf in pairs:
            if b >> leaf & 1:
                continue
            if b >> v & 1:
                b = (b & ~(1 << v)) | (1 << leaf)
            else:
                blockers = g.open_masks[v] & b
                if blockers:
                    u = (blockers & -blockers).bit_length() - 1
                    b = (b & ~(1 << u)) | (1 << leaf)
                else:
                    b |= 1 << leaf
            if not valid(b) or b.bit_count() != target:
                ok = False
                break
        if not ok:
            break
    if not ok or b & need != need:
        return _anchor_fallback(g, pairs, valid, target, PackingKind.packing(), method)
    return _certify(g, PackingKind.packing(), b, Optimality.MAXIMUM, method)


def pendant_anchored_max_open_packing(g: Graph, method: str = "bnb") -> PackingCertificate:
    """Maximum open packing containing the designated pendant of every support vertex.

    For each support whose pendant is missing, the unique set member in the
    support's open neighbourhood is swapped for the pendant.
    """
    base = max_open_packing(g, method)
    pairs = designated_pendants(g)
    target = base.value
    valid = lambda m: is_open_packing(g, m)  # noqa: E731
    b = mask_of(base.vertices)
    need = mask_of(p for _, p in pairs)
    ok = True
    for _ in range(max(g.n, 1)):
        if b & need == need:
            break
        for v, leaf in pairs:
            if b >> leaf & 1:
                continue
            blockers = g.open_masks[v] & b
            if blockers:
                u = (blockers & -blockers).bit_length() - 1
                b = (b & ~(1 << u)) | (1 << leaf)
            else:
                b |= 1 << leaf
            if not valid(b) or b.bit_count() != target:
                ok = False
                break
        if not ok:
            break
    if not ok or b & need != need:
        return _anchor_fallback(g, pairs, valid, target, PackingKind.open_packing(), method)
    return _certify(g, PackingKind.open_packing(), b, Optimality.MAXIMUM, method)
