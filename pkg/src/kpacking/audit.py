"""Evaluate the packing / domination inequalities on graphs with exact rationals.

Each theorem is a registry entry with a relation, an applicability rule and
an evaluator. :func:`audit_all` runs every entry on one graph, computing
each invariant at most once; :func:`stream_audit` does the same over a
corpus of graph6 lines, optionally in worker processes, and aggregates the
results in input order.
"""

from __future__ import annotations

import enum
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .graph import Graph, GraphError, StructuralSummary, complement, emit_graph6, parse_graph6, structural_summary
from .packing import (
    PackingCertificate,
    domination_number,
    max_k_limited_packing,
    max_open_packing,
    min_maximal_k_limited_packing,
    total_domination_number,
)
from .trees import tree_domination, tree_total_domination

__all__ = [
    "TheoremId",
    "BoundCheck",
    "AuditConfig",
    "AuditReport",
    "TheoremStats",
    "evaluate_bound",
    "audit_all",
    "stream_audit",
    "format_check",
    "check_record",
]


class TheoremId(str, enum.Enum):
    LLP_LOWER = "LLP_LOWER"
    NG_L2 = "NG_L2"
    RHO_SUPPORT_LOWER = "RHO_SUPPORT_LOWER"
    RHO_GZ_LOWER = "RHO_GZ_LOWER"
    RHOL_HENNING = "RHOL_HENNING"
    RHO_UPPER = "RHO_UPPER"
    TREE_GAMMA_UPPER = "TREE_GAMMA_UPPER"
    RHOO_UPPER = "RHOO_UPPER"
    TREE_GAMMAT_UPPER = "TREE_GAMMAT_UPPER"
    MEIR_MOON_EQ = "MEIR_MOON_EQ"
    RALL_EQ = "RALL_EQ"
    CUBIC_L2_BALISTER = "CUBIC_L2_BALISTER"


GE, LE, EQ = ">=", "<=", "="

CHECKED, INAPPLICABLE, SKIPPED = "checked", "inapplicable", "skipped"


@dataclass(frozen=True)
class AuditConfig:
    lower_cap: int = 16  # vertex cap for minimum-maximal searches
    cap: int = 20  # vertex cap for every other exponential search
    method: str = "bnb"
    theorems: tuple[TheoremId, ...] = tuple(TheoremId)
    k: Optional[int] = None  # restrict LLP_LOWER to one k
    workers: int = 1


@dataclass(frozen=True)
class BoundCheck:
    graph6: str
    theorem: TheoremId
    k: Optional[int]
    relation: str
    status: str
    reason: str = ""
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None
    witnesses: tuple[PackingCertificate, ...] = ()

    @property
    def applicable(self) -> bool:
        return self.status != INAPPLICABLE

    @property
    def holds(self) -> Optional[bool]:
        if self.status != CHECKED:
            return None
        if self.relation == GE:
            return self.lhs >= self.rhs
        if self.relation == LE:
            return self.lhs <= self.rhs
        return self.lhs == self.rhs

    @property
    def sharp(self) -> Optional[bool]:
        if self.status != CHECKED:
            return None
        return self.lhs == self.rhs

    @property
    def violation(self) -> bool:
        return self.holds is False

    @property
    def slack(self) -> Optional[Fraction]:
        """Distance from the bound; negative for a violation."""
        if self.status != CHECKED:
            return None
        if self.relation == GE:
            return self.lhs - self.rhs
        if self.relation == LE:
            return self.rhs - self.lhs
        return -abs(self.lhs - self.rhs)


class _SizeCap(Exception):
    pass


class _Invariants:
    """Lazily computed invariants of one graph, each computed at most once."""

    def __init__(self, g: Graph, summary: StructuralSummary, config: AuditConfig):
        self.g = g
        self.s = summary
        self.config = config
        self._memo: dict = {}

    def _get(self, key, fn: Callable[[], PackingCertificate], cap: Optional[int]) -> PackingCertificate:
        if key not in self._memo:
            if cap is not None and self.g.n > cap:
                self._memo[key] = _SizeCap(f"skipped: size cap (n = {self.g.n} > {cap})")
            else:
                self._memo[key] = fn()
        val = self._memo[key]
        if isinstance(val, _SizeCap):
            raise val
        return val

    def L(self, k: int) -> PackingCertificate:
        return self._get(("L", k), lambda: max_k_limited_packing(self.g, k, self.config.method), self.config.cap)

    def LL(self, k: int) -> PackingCertificate:
        return self._get(
            ("LL", k), lambda: min_maximal_k_limited_packing(self.g, k, self.config.method), self.config.lower_cap
        )

    def L2_complement(self) -> PackingCertificate:
        return self._get(
            "L2c", lambda: max_k_limited_packing(complement(self.g), 2, self.config.method), self.config.cap
        )

    def rho(self) -> PackingCertificate:
        return self.L(1)

    def rho_lower(self) -> PackingCertificate:
        return self.LL(1)

    def rho_open(self) -> PackingCertificate:
        return self._get("rhoO", lambda: max_open_packing(self.g, self.config.method), self.config.cap)

    def gamma(self) -> PackingCertificate:
        if self.s.is_tree:
            return self._get("gamma", lambda: tree_domination(self.g), None)
        return self._get("gamma", lambda: domination_number(self.g, self.config.method), self.config.cap)

    def gamma_t(self) -> PackingCertificate:
        if self.s.is_tree:
            return self._get("gammaT", lambda: tree_total_domination(self.g), None)
        return self._get("gammaT", lambda: total_domination_number(self.g, self.config.method), self.config.cap)


# applicability ----------------------------------------------------------------


def _has_k2_component(s: StructuralSummary) -> bool:
    return 2 in s.component_sizes


def _applicability(tid: TheoremId, s: StructuralSummary, k: Optional[int]) -> Optional[str]:
    """Reason the theorem does not apply, or None when it does."""
    if s.n == 0:
        return "inapplicable: empty graph"
    if tid is TheoremId.LLP_LOWER:
        if k is None or k < 1:
            return "inapplicable: k >= 1 required"
        if s.max_degree * (s.max_degree - k + 1) + k <= 0:
            return "inapplicable: denominator Delta(Delta-k+1)+k <= 0"
        return None
    if tid is TheoremId.RHO_SUPPORT_LOWER:
        if not s.is_connected and _has_k2_component(s):
            return "inapplicable: disconnected with a K2 component"
        return None
    if tid in (TheoremId.RHO_UPPER, TheoremId.RHOO_UPPER):
        if s.n < 3:
            return "inapplicable: n < 3"
        if s.delta_prime is None:
            return "inapplicable: delta' undefined"
        if s.min_component_size < 3:
            return "inapplicable: component of order < 3"
        return None
    if tid in (TheoremId.TREE_GAMMA_UPPER, TheoremId.MEIR_MOON_EQ):
        return None if s.is_tree else "inapplicable: not a tree"
    if tid is TheoremId.RALL_EQ:
        if not s.is_tree:
            return "inapplicable: not a tree"
        return None if s.n >= 2 else "inapplicable: n < 2"
    if tid is TheoremId.TREE_GAMMAT_UPPER:
        if not s.is_tree:
            return "inapplicable: not a tree"
        return None if s.n >= 3 else "inapplicable: n < 3"
    if tid is TheoremId.CUBIC_L2_BALISTER:
        return None if s.regular_degree == 3 else "inapplicable: not cubic"
    return None


# evaluators: return (lhs, rhs, witnesses) ------------------------------------------


def _llp_lower(inv: _Invariants, k: int):
    s = inv.s
    d = s.max_degree
    cert = inv.LL(k)
    return Fraction(cert.value), Fraction(k * s.n, d * (d - k + 1) + k), (cert,)


def _ng_l2(inv: _Invariants, k):
    a, b = inv.L(2), inv.L2_complement()
    return Fraction(a.value + b.value), Fraction(inv.s.n + 2), (a, b)


def _rho_support_lower(inv: _Invariants, k):
    s = inv.s
    d = s.max_degree
    cert = inv.rho()
    return Fraction(cert.value), Fraction(s.n + s.support_count * (d * d - d), 1 + d * d), (cert,)


def _rho_gz_lower(inv: _Invariants, k):
    s = inv.s
    d = s.max_degree
    cert = inv.rho()
    return Fraction(cert.value), Fraction(s.n + d * (d - s.min_degree), d * d + 1), (cert,)


def _rhol_henning(inv: _Invariants, k):
    s = inv.s
    cert = inv.rho_lower()
    return Fraction(cert.value), Fraction(s.n, s.max_degree**2 + 1), (cert,)


def _rho_upper(inv: _Invariants, k):
    s = inv.s
    dp = s.delta_prime
    cert = inv.rho()
    return Fraction(cert.value), Fraction(s.n - s.leaf_count + dp * s.support_count, 1 + dp), (cert,)


def _tree_gamma_upper(inv: _Invariants, k):
    s = inv.s
    cert = inv.gamma()
    return Fraction(cert.value), Fraction(s.n - s.leaf_count + 2 * s.support_count, 3), (cert,)


def _rhoo_upper(inv: _Invariants, k):
    s = inv.s
    dp = s.delta_prime
    cert = inv.rho_open()
    return Fraction(cert.value), Fraction(s.n + (dp - 1) * s.support_count, dp), (cert,)


def _tree_gammat_upper(inv: _Invariants, k):
    s = inv.s
    cert = inv.gamma_t()
    return Fraction(cert.value), Fraction(s.n + s.support_count, 2), (cert,)


def _meir_moon(inv: _Invariants, k):
    a, b = inv.gamma(), inv.rho()
    return Fraction(a.value), Fraction(b.value), (a, b)


def _rall(inv: _Invariants, k):
    a, b = inv.gamma_t(), inv.rho_open()
    return Fraction(a.value), Fraction(b.value), (a, b)


def _cubic_l2(inv: _Invariants, k):
    cert = inv.L(2)
    return Fraction(cert.value), Fraction(inv.s.n, 3), (cert,)


_REGISTRY: dict[TheoremId, tuple[str, Callable]] = {
    TheoremId.LLP_LOWER: (GE, _llp_lower),
    TheoremId.NG_L2: (LE, _ng_l2),
    TheoremId.RHO_SUPPORT_LOWER: (GE, _rho_support_lower),
    TheoremId.RHO_GZ_LOWER: (GE, _rho_gz_lower),
    TheoremId.RHOL_HENNING: (GE, _rhol_henning),
    TheoremId.RHO_UPPER: (LE, _rho_upper),
    TheoremId.TREE_GAMMA_UPPER: (LE, _tree_gamma_upper),
    TheoremId.RHOO_UPPER: (LE, _rhoo_upper),
    TheoremId.TREE_GAMMAT_UPPER: (LE, _tree_gammat_upper),
    TheoremId.MEIR_MOON_EQ: (EQ, _meir_moon),
    TheoremId.RALL_EQ: (EQ, _rall),
    TheoremId.CUBIC_L2_BALISTER: (GE, _cubic_l2),
}


def relation_of(tid: TheoremId) -> str:
    return _REGISTRY[TheoremId(tid)][0]


def _evaluate(inv: _Invariants, g6: str, tid: TheoremId, k: Optional[int]) -> BoundCheck:
    relation, fn = _REGISTRY[tid]
    reason = _applicability(tid, inv.s, k)
    if reason is not None:
        return BoundCheck(g6, tid, k, relation, INAPPLICABLE, reason)
    try:
        lhs, rhs, witnesses = fn(inv, k)
    except _SizeCap as exc:
        return BoundCheck(g6, tid, k, relation, SKIPPED, str(exc))
    return BoundCheck(g6, tid, k, relation, CHECKED, "", lhs, rhs, witnesses)


def evaluate_bound(
    g: Graph, tid: TheoremId | str, k: Optional[int] = None, config: AuditConfig = AuditConfig()
) -> BoundCheck:
    """Evaluate one theorem on ``g``; ``k`` is required for LLP_LOWER and ignored otherwise."""
    tid = TheoremId(tid)
    if tid is TheoremId.LLP_LOWER and k is None:
        raise ValueError("LLP_LOWER needs k")
    if tid is not TheoremId.LLP_LOWER:
        k = None
    inv = _Invariants(g, structural_summary(g), config)
    return _evaluate(inv, emit_graph6(g), tid, k)


def audit_all(g: Graph, config: AuditConfig = AuditConfig()) -> "AuditReport":
    """Every configured theorem on ``g``; LLP_LOWER runs over k = 1..Delta+1."""
    report = AuditReport()
    report.add_graph(_audit_graph(g, emit_graph6(g), config))
    return report


def _audit_graph(g: Graph, g6: str, config: AuditConfig) -> list[BoundCheck]:
    summary = structural_summary(g)
    inv = _Invariants(g, summary, config)
    out = []
    for tid in TheoremId:
        if tid not in config.theorems:
            continue
        if tid is TheoremId.LLP_LOWER:
            ks = [config.k] if config.k is not None else range(1, summary.max_degree + 2)
            out.extend(_evaluate(inv, g6, tid, k) for k in ks)
        else:
            out.append(_evaluate(inv, g6, tid, None))
    return out


# reports ------------------------------------------------------------------


@dataclass
class TheoremStats:
    checked: int = 0
    holds: int = 0
    sharp: int = 0
    violations: int = 0
    inapplicable: int = 0
    skipped: int = 0
    witness: Optional[str] = None  # graph6 of the minimum-slack graph
    witness_slack: Optional[Fraction] = None

    @property
    def applicable(self) -> int:
        return self.checked + self.skipped


@dataclass
class AuditReport:
    checks: list[BoundCheck] = field(default_factory=list)
    parse_errors: list[tuple[int, str, str]] = field(default_factory=list)
    graphs: int = 0
    stats: dict[TheoremId, TheoremStats] = field(default_factory=dict)

    def add_graph(self, checks: list[BoundCheck]) -> None:
        self.graphs += 1
        for c in checks:
            self.checks.append(c)
            st = self.stats.setdefault(c.theorem, TheoremStats())
            if c.status == INAPPLICABLE:
                st.inapplicable += 1
            elif c.status == SKIPPED:
                st.skipped += 1
            else:
                st.checked += 1
                st.holds += bool(c.holds)
                st.sharp += bool(c.sharp)
                st.violations += c.violation
                if st.witness_slack is None or c.slack < st.witness_slack:
                    st.witness, st.witness_slack = c.graph6, c.slack

    @property
    def violations(self) -> list[BoundCheck]:
        return [c for c in self.checks if c.violation]

    @property
    def total_violations(self) -> int:
        return sum(st.violations for st in self.stats.values())

    def summary_lines(self) -> list[str]:
        lines = [f"# graphs={self.graphs} parse_errors={len(self.parse_errors)} violations={self.total_violations}"]
        for tid in TheoremId:
            st = self.stats.get(tid)
            if st is None:
                continue
            w = f" extremal={st.witness} slack={st.witness_slack}" if st.witness is not None else ""
            lines.append(
                f"# {tid.value}: checked={st.checked} holds={st.holds} sharp={st.sharp} "
                f"violations={st.violations} inapplicable={st.inapplicable} skipped={st.skipped}{w}"
            )
        for lineno, text, msg in self.parse_errors:
            lines.append(f"# parse error line {lineno}: {text!r}: {msg}")
        return lines

    def summary_record(self) -> dict:
        out = {}
        for tid in TheoremId:
            st = self.stats.get(tid)
            if st is None:
                continue
            out[tid.value] = {
                "checked": st.checked,
                "holds": st.holds,
                "sharp": st.sharp,
                "violations": st.violations,
                "inapplicable": st.inapplicable,
                "skipped": st.skipped,
                "extremal": st.witness,
                "extremal_slack": _frac(st.witness_slack),
            }
        return {
            "summary": out,
            "graphs": self.graphs,
            "violations": self.total_violations,
            "parse_errors": [{"line": n, "text": t, "error": m} for n, t, m in self.parse_errors],
        }


# streaming ------------------------------------------------------------------


def _audit_line(args: tuple[str, AuditConfig]):
    line, config = args
    try:
        g = parse_graph6(line)
    except GraphError as exc:
        return exc.__class__.__name__ + ": " + str(exc)
    return _audit_graph(g, line.strip(), config)


def stream_audit(source: Iterable[str], config: AuditConfig = AuditConfig()) -> AuditReport:
    """Audit every non-blank graph6 line of ``source``; results merge in input order."""
    numbered = [(i, ln) for i, ln in enumerate(source, 1) if ln.strip()]
    jobs = [(ln, config) for _, ln in numbered]
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(_audit_line, jobs, chunksize=max(1, len(jobs) // (4 * config.workers))))
    else:
        results = [_audit_line(j) for j in jobs]
    report = AuditReport()
    for (lineno, line), res in zip(numbered, results):
        if isinstance(res, str):
            report.parse_errors.append((lineno, line.strip(), res))
        else:
            report.add_graph(res)
    return report


# serialisation ----------------------------------------------------------------

CSV_FIELDS = (
    "graph6",
    "theorem",
    "k",
    "applicable",
    "lhs_num",
    "lhs_den",
    "rhs_num",
    "rhs_den",
    "relation",
    "holds",
    "sharp",
    "status",
    "reason",
)


def _frac(x: Optional[Fraction]) -> Optional[dict]:
    return None if x is None else {"num": x.numerator, "den": x.denominator}


def check_record(c: BoundCheck) -> dict:
    """Machine-readable record with a fixed key order; rationals as integer pairs."""
    return {
        "graph6": c.graph6,
        "theorem": c.theorem.value,
        "k": c.k,
        "applicable": c.applicable,
        "lhs": _frac(c.lhs),
        "rhs": _frac(c.rhs),
        "relation": c.relation,
        "holds": c.holds,
        "sharp": c.sharp,
        "status": c.status,
        "reason": c.reason,
    }


def csv_row(c: BoundCheck) -> list:
    def part(x, attr):
        return "" if x is None else getattr(x, attr)

    def flag(x):
        return "" if x is None else str(x).lower()

    return [
        c.graph6,
        c.theorem.value,
        "" if c.k is None else c.k,
        flag(c.applicable),
        part(c.lhs, "numerator"),
        part(c.lhs, "denominator"),
        part(c.rhs, "numerator"),
        part(c.rhs, "denominator"),
        c.relation,
        flag(c.holds),
        flag(c.sharp),
        c.status,
        c.reason,
    ]


def format_check(c: BoundCheck) -> str:
    """One human-readable line."""
    name = c.theorem.value + (f"[k={c.k}]" if c.k is not None else "")
    if c.status != CHECKED:
        return f"{c.graph6}\t{name}\t{c.reason}"
    verdict = "VIOLATION" if c.violation else ("sharp" if c.sharp else "holds")
    return f"{c.graph6}\t{name}\t{c.lhs} {c.relation} {c.rhs}\t{verdict}"


def json_line(obj: dict) -> str:
    return json.dumps(obj, separators=(",", ":"))
