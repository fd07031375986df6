"""Command-line front end: ``compute``, ``audit`` and ``gen``.

Exit codes:
  0  success
  1  audit found a violation
  2  input error (unparsable graph6, bad arguments for the invariant)
  3  compute skipped a graph above the size cap
  4  infeasible construction parameters for ``gen gkr``
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, TextIO

from . import audit as audit_mod
from .audit import AuditConfig, TheoremId, stream_audit
from .generators import (
    InfeasibleConstruction,
    gen_complete,
    gen_corona_tree,
    gen_cycle,
    gen_disjoint_copies,
    gen_gkr,
    gen_path,
    gen_petersen,
    gen_star,
    random_graph,
    random_tree,
)
from .graph import GraphError, emit_graph6, parse_graph6, structural_summary
from .packing import (
    domination_number,
    max_k_limited_packing,
    max_open_packing,
    min_maximal_k_limited_packing,
    total_domination_number,
)
from .trees import tree_domination, tree_total_domination

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_CAP, EXIT_INFEASIBLE = 0, 1, 2, 3, 4

INVARIANTS = ("Lk", "LLk", "rho", "rhoL", "rhoO", "gamma", "gammaT")
FORMATS = ("text", "jsonl", "csv")


@dataclass(frozen=True)
class CliConfig:
    subcommand: str
    input: str = "-"
    format: str = "text"
    cap: int = 20
    lower_cap: int = 16
    method: str = "bnb"
    workers: int = 1
    seed: Optional[int] = None

    def __post_init__(self):
        if self.cap < 1 or self.lower_cap < 1:
            raise ValueError("size caps must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


def _open_input(path: str) -> TextIO:
    return sys.stdin if path == "-" else open(path, encoding="ascii")


# compute ------------------------------------------------------------------


def _compute_one(args: tuple[str, str, Optional[int], CliConfig]) -> dict:
    line, invariant, k, cfg = args
    g6 = line.strip()
    rec = {"graph6": g6, "invariant": invariant, "k": k, "value": None, "certificate": None, "status": "ok"}
    try:
        g = parse_graph6(g6)
    except GraphError as exc:
        rec.update(status="error", error=str(exc), exit=EXIT_INPUT)
        return rec
    is_tree = invariant in ("gamma", "gammaT") and structural_summary(g).is_tree
    cap = cfg.lower_cap if invariant in ("LLk", "rhoL") else cfg.cap
    if g.n > cap and not is_tree:
        rec.update(status=f"skipped: size cap (n = {g.n} > {cap})", exit=EXIT_CAP)
        return rec
    m = cfg.method
    try:
        if invariant == "Lk":
            cert = max_k_limited_packing(g, k, m)
        elif invariant == "LLk":
            cert = min_maximal_k_limited_packing(g, k, m)
        elif invariant == "rho":
            cert = max_k_limited_packing(g, 1, m)
        elif invariant == "rhoL":
            cert = min_maximal_k_limited_packing(g, 1, m)
        elif invariant == "rhoO":
            cert = max_open_packing(g, m)
        elif invariant == "gamma":
            cert = tree_domination(g) if is_tree else domination_number(g, m)
        else:
            if is_tree and g.n >= 2:
                cert = tree_total_domination(g)
            else:
                cert = total_domination_number(g, m)
    except ValueError as exc:
        rec.update(status="error", error=str(exc), exit=EXIT_INPUT)
        return rec
    rec.update(value=cert.value, certificate=list(cert.vertices))
    return rec


def _map(fn, jobs, workers: int):
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    return [fn(j) for j in jobs]


def cmd_compute(cfg: CliConfig, invariant: str, k: Optional[int], out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    if invariant in ("Lk", "LLk") and (k is None or k < 1):
        print(f"error: --invariant {invariant} needs --k K with K >= 1", file=sys.stderr)
        return EXIT_INPUT
    if invariant not in ("Lk", "LLk"):
        k = None
    with _open_input(cfg.input) as fh:
        lines = [ln for ln in fh if ln.strip()]
    records = _map(_compute_one, [(ln, invariant, k, cfg) for ln in lines], cfg.workers)
    writer = csv.writer(out, lineterminator="\n") if cfg.format == "csv" else None
    if writer:
        writer.writerow(["graph6", "invariant", "k", "value", "certificate", "status"])
    code = EXIT_OK
    for rec in records:
        code = max(code, rec.pop("exit", EXIT_OK), key=lambda c: {0: 0, 3: 1, 2: 2}[c])
        if cfg.format == "jsonl":
            out.write(audit_mod.json_line(rec) + "\n")
        elif writer:
            cert = "" if rec["certificate"] is None else " ".join(map(str, rec["certificate"]))
            writer.writerow([rec["graph6"], invariant, "" if k is None else k, "" if rec["value"] is None else rec["value"], cert, rec["status"]])
        else:
            kk = f" k={k}" if k is not None else ""
            if rec["value"] is None:
                out.write(f"{rec['graph6']}\t{invariant}{kk}\t{rec.get('error', rec['status'])}\n")
            else:
                out.write(f"{rec['graph6']}\t{invariant}{kk}\t{rec['value']}\t{rec['certificate']}\n")
    return code


# audit ----------------------------------------------------------------------


def cmd_audit(cfg: CliConfig, theorem: str, k: Optional[int], out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    theorems = tuple(TheoremId) if theorem == "all" else (TheoremId(theorem),)
    config = AuditConfig(
        lower_cap=cfg.lower_cap, cap=cfg.cap, method=cfg.method, theorems=theorems, k=k, workers=cfg.workers
    )
    with _open_input(cfg.input) as fh:
        report = stream_audit(list(fh), config)
    if cfg.format == "jsonl":
        for c in report.checks:
            out.write(audit_mod.json_line(audit_mod.check_record(c)) + "\n")
        out.write(audit_mod.json_line(report.summary_record()) + "\n")
    elif cfg.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(audit_mod.CSV_FIELDS)
        for c in report.checks:
            writer.writerow(audit_mod.csv_row(c))
        for line in report.summary_lines():
            print(line, file=sys.stderr)
    else:
        for c in report.checks:
            out.write(audit_mod.format_check(c) + "\n")
        for line in report.summary_lines():
            out.write(line + "\n")
    if report.total_violations:
        return EXIT_VIOLATION
    if report.parse_errors:
        return EXIT_INPUT
    return EXIT_OK


# gen ----------------------------------------------------------------------


def cmd_gen(cfg: CliConfig, args: argparse.Namespace, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    fam = args.family
    try:
        if fam == "gkr":
            g, bp = gen_gkr(args.k, args.r, args.t)
            blueprint = {
                "k": bp.k, "r": bp.r, "t": bp.t, "g": bp.g, "n": bp.n,
                "V1": bp.size_v1, "V2": bp.size_v2, "V3": bp.size_v3,
                "V3_vertices": list(bp.v3),
            }
            print(json.dumps(blueprint), file=sys.stderr)
        elif fam == "star":
            g = gen_star(args.n)
        elif fam == "corona":
            g = gen_corona_tree(parse_graph6(args.base), args.p)
        elif fam == "copies":
            g = gen_disjoint_copies(parse_graph6(args.base), args.copies)
        elif fam == "petersen":
            g = gen_petersen()
        elif fam == "complete":
            g = gen_complete(args.n)
        elif fam == "cycle":
            g = gen_cycle(args.n)
        elif fam == "path":
            g = gen_path(args.n)
        elif fam == "random":
            g = random_graph(args.n, args.p, cfg.seed)
        else:
            g = random_tree(args.n, cfg.seed)
    except InfeasibleConstruction as exc:
        print(f"error: infeasible G_(k,r) parameters: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out.write(emit_graph6(g) + "\n")
    return EXIT_OK


# parser -------------------------------------------------------------------


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", "-i", default="-", help="graph6 file, one graph per line ('-' = stdin)")
    p.add_argument("--format", "-f", choices=FORMATS, default="text")
    p.add_argument("--cap", type=int, default=20, help="vertex cap for exact searches")
    p.add_argument("--lower-cap", type=int, default=16, help="vertex cap for minimum-maximal searches")
    p.add_argument("--method", choices=("bnb", "exhaustive"), default="bnb")
    p.add_argument("--workers", "-w", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kpacking", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    pc = sub.add_parser("compute", help="compute one invariant per input graph")
    pc.add_argument("--invariant", required=True, choices=INVARIANTS)
    pc.add_argument("--k", type=int)
    _common(pc)

    pa = sub.add_parser("audit", help="check the bounds on every input graph")
    pa.add_argument("--theorem", default="all", choices=["all"] + [t.value for t in TheoremId])
    pa.add_argument("--k", type=int, help="restrict LLP_LOWER to this k")
    _common(pa)

    pg = sub.add_parser("gen", help="emit a generated graph as graph6")
    fams = pg.add_subparsers(dest="family", required=True)
    f = fams.add_parser("gkr")
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--r", type=int, required=True)
    f.add_argument("--t", type=int)
    for name in ("star", "complete", "cycle", "path"):
        fams.add_parser(name).add_argument("--n", type=int, required=True)
    f = fams.add_parser("corona")
    f.add_argument("--base", required=True, help="graph6 of the base tree")
    f.add_argument("--p", type=int, default=1, help="pendants per base vertex")
    f = fams.add_parser("copies")
    f.add_argument("--base", required=True)
    f.add_argument("--copies", type=int, required=True)
    fams.add_parser("petersen")
    f = fams.add_parser("random")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--p", type=float, required=True)
    f.add_argument("--seed", type=int, default=0)
    f = fams.add_parser("tree")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.subcommand == "gen":
            cfg = CliConfig(subcommand="gen", seed=getattr(args, "seed", None))
            return cmd_gen(cfg, args)
        cfg = CliConfig(
            subcommand=args.subcommand,
            input=args.input,
            format=args.format,
            cap=args.cap,
            lower_cap=args.lower_cap,
            method=args.method,
            workers=args.workers,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        if args.subcommand == "compute":
            return cmd_compute(cfg, args.invariant, args.k)
        return cmd_audit(cfg, args.theorem, args.k)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
