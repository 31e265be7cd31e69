"""Command-line front end: reduce, sweep, verify, chi, solve-lemma,
generic-hom, scan-splittings.

Exit codes: 0 success and (where applicable) valid certificate, 1 domain
error or invalid certificate, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .diophantine import solve_lemma
from .errors import BaseCaseReached, BunredError
from .euler import euler_form
from .generic_hom import generic_hom, generic_morphism_kind, no_bad_splitting_scan
from .reduction import (
    BaseStep,
    ReductionTrace,
    StepNode,
    VerificationReport,
    node_depth,
    reduce,
    verify_trace,
)
from .serialize import dumps, load, trace_to_dict
from .types import GenusContext, SheafType


@dataclass(frozen=True)
class SweepSpec:
    """Grid of (genus, rank, degree) inputs for a batch certificate run."""

    genus_range: range
    rank_range: range
    degree_range: range
    verify: bool = True
    emit_traces: bool = False

    def __post_init__(self):
        # empty ranges are allowed and sweep vacuously (exit 0, empty table)
        if any(g < 2 for g in self.genus_range):
            raise BunredError("sweep genus values must be >= 2")


def _parse_type(text: str) -> SheafType:
    try:
        rank_s, degree_s = text.split(",")
        return SheafType(int(rank_s), int(degree_s))
    except ValueError as exc:
        raise BunredError(f"expected a type as 'rank,degree', got {text!r}") from exc


def _parse_range(text: str) -> range:
    """'a..b' inclusive, or a single value 'a'."""
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
    else:
        lo = hi = int(text)
    return range(lo, hi + 1)


def format_trace_text(trace: ReductionTrace, report: VerificationReport | None) -> str:
    lines = [
        f"reduction: Bun{trace.input} -> Bun({trace.h},0)   genus {trace.genus}"
    ]

    def walk(node: StepNode, depth: int) -> None:
        pad = "  " * (depth + 1)
        if isinstance(node, BaseStep):
            lines.append(
                f"{pad}Bun{node.t} --twist {node.twist_degree}--> "
                f"Bun({node.t.rank},0) ; +affine 0"
            )
            return
        s = node.sol
        lines.append(
            f"{pad}Bun{node.t} --[{s.rF},{s.dF}]--> Gr_{s.h} over Bun({s.r1},{s.d1}) "
            f"; +affine {node.rho_affine + node.hecke_affine}"
        )
        walk(node.mu1, depth + 1)
        walk(node.mu2, depth + 1)

    walk(trace.root, 0)
    m = trace.composite_det
    lines.append(
        f"  det ledger: {m.describe()} ; {trace.input.degree} -> {m.apply(trace.input.degree)}"
    )
    lines.append(f"  total affine dimension: {trace.total_affine_dim}")
    if report is not None:
        if report.ok:
            lines.append(f"certificate VALID ({len(report.checks)} checks)")
        else:
            lines.append(f"certificate INVALID ({len(report.failures())} failed checks)")
            for c in report.failures():
                lines.append(f"  FAIL {c.path}: {c.name} {c.detail}")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _cmd_reduce(args: argparse.Namespace) -> int:
    ctx = GenusContext(args.genus)
    trace = reduce(ctx, SheafType(args.rank, args.degree))
    report = verify_trace(trace, strict=False)
    if args.format == "json":
        doc = trace_to_dict(trace)
        doc["valid"] = report.ok
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    else:
        _emit(format_trace_text(trace, report), args.out)
    return 0 if report.ok else 1


def _cmd_sweep(args: argparse.Namespace) -> int:
    spec = SweepSpec(
        genus_range=_parse_range(args.genus),
        rank_range=range(1, args.max_rank + 1),
        degree_range=_parse_range(args.degree_range),
        verify=not args.no_verify,
        emit_traces=args.traces_dir is not None,
    )
    rows = []
    all_valid = True
    for g in spec.genus_range:
        ctx = GenusContext(g)
        for r in spec.rank_range:
            for d in spec.degree_range:
                trace = reduce(ctx, SheafType(r, d))
                valid = True
                if spec.verify:
                    valid = verify_trace(trace, strict=False).ok
                all_valid &= valid
                rows.append(
                    {
                        "genus": g,
                        "rank": r,
                        "degree": d,
                        "h": trace.h,
                        "n": trace.total_affine_dim,
                        "depth": node_depth(trace.root),
                        "valid": valid,
                    }
                )
                if spec.emit_traces:
                    os.makedirs(args.traces_dir, exist_ok=True)
                    name = f"trace_g{g}_r{r}_d{d}.json"
                    with open(os.path.join(args.traces_dir, name), "w", encoding="utf-8") as f:
                        f.write(dumps(trace))
    if args.format == "json":
        out = json.dumps({"rows": rows, "cases": len(rows), "all_valid": all_valid}, indent=2)
        _emit(out + "\n", args.out)
    else:
        lines = [f"{'g':>3} {'r':>4} {'d':>5} {'h':>4} {'n':>6} {'depth':>6} valid"]
        for row in rows:
            lines.append(
                f"{row['genus']:>3} {row['rank']:>4} {row['degree']:>5} {row['h']:>4} "
                f"{row['n']:>6} {row['depth']:>6} {'yes' if row['valid'] else 'NO'}"
            )
        lines.append(f"{len(rows)} cases, {sum(1 for r_ in rows if r_['valid'])} valid")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if all_valid else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    trace = load(args.file)
    report = verify_trace(trace, strict=False)
    if args.format == "json":
        doc = {
            "valid": report.ok,
            "checks": [
                {"path": c.path, "name": c.name, "passed": c.passed, "detail": c.detail}
                for c in report.checks
            ],
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        lines = []
        for c in report.checks:
            lines.append(f"{'PASS' if c.passed else 'FAIL'} {c.path}: {c.name}"
                         + (f" ({c.detail})" if c.detail and not c.passed else ""))
        lines.append(
            f"certificate {'VALID' if report.ok else 'INVALID'} ({len(report.checks)} checks)"
        )
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if report.ok else 1


def _cmd_chi(args: argparse.Namespace) -> int:
    ctx = GenusContext(args.genus)
    t1, t2 = _parse_type(args.t1), _parse_type(args.t2)
    value = euler_form(ctx, t1, t2)
    if args.format == "json":
        _emit(json.dumps({"genus": args.genus, "t1": str(t1), "t2": str(t2), "chi": value}) + "\n",
              args.out)
    else:
        _emit(f"chi({t1}, {t2}; g={args.genus}) = {value}\n", args.out)
    return 0


def _cmd_solve_lemma(args: argparse.Namespace) -> int:
    ctx = GenusContext(args.genus)
    t = SheafType(args.rank, args.degree)
    try:
        sol = solve_lemma(ctx, t)
    except BaseCaseReached:
        _emit(f"Bun{t}: base case (rank = hcf); reduction is a twist\n", args.out)
        return 0
    if args.format == "json":
        doc = {"rF": sol.rF, "dF": sol.dF, "r1": sol.r1, "d1": sol.d1, "h": sol.h, "h1": sol.h1}
        _emit(json.dumps(doc) + "\n", args.out)
    else:
        _emit(
            f"Bun{t}: rF={sol.rF} dF={sol.dF} r1={sol.r1} d1={sol.d1} h={sol.h} h1={sol.h1}\n",
            args.out,
        )
    return 0


def _cmd_generic_hom(args: argparse.Namespace) -> int:
    ctx = GenusContext(args.genus)
    t1, t2 = _parse_type(args.t1), _parse_type(args.t2)
    rep = generic_hom(ctx, t1, t2)
    if not rep.covered:
        _emit(f"hom({t1}, {t2}; g={args.genus}): not covered (chi < 0)\n", args.out)
        return 0
    kind = ""
    if rep.hom_dim >= 1:
        kind = f" ; generic morphism: {generic_morphism_kind(ctx, t1, t2).value}"
    _emit(
        f"hom({t1}, {t2}; g={args.genus}) = {rep.hom_dim}, ext = {rep.ext_dim}{kind}\n",
        args.out,
    )
    return 0


def _cmd_scan_splittings(args: argparse.Namespace) -> int:
    ctx = GenusContext(args.genus)
    t1, t2 = _parse_type(args.t1), _parse_type(args.t2)
    rep = no_bad_splitting_scan(ctx, t1, t2, args.bound)
    _emit(
        f"scan({t1}, {t2}; g={args.genus}, bound={args.bound}): "
        f"{rep.examined} splittings examined, {rep.violations} violations\n",
        args.out,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bunred",
        description="Exact-arithmetic reduction certificates for moduli stacks "
        "of vector bundles on curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_type=False, with_rd=False):
        p.add_argument("--genus", "-g", type=int, required=True)
        if with_rd:
            p.add_argument("--rank", "-r", type=int, required=True)
            p.add_argument("--degree", "-d", type=int, required=True)
        if with_type:
            p.add_argument("--t1", required=True, metavar="r,d")
            p.add_argument("--t2", required=True, metavar="r,d")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", metavar="FILE")

    p = sub.add_parser("reduce", help="build and verify one reduction certificate")
    add_common(p, with_rd=True)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("sweep", help="run a grid of reductions and tabulate")
    p.add_argument("--genus", "-g", required=True, metavar="a|a..b")
    p.add_argument("--max-rank", type=int, required=True)
    p.add_argument("--degree-range", required=True, metavar="a..b")
    p.add_argument("--no-verify", action="store_true")
    p.add_argument("--traces-dir", metavar="DIR")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("verify", help="verify a serialized trace document")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("chi", help="evaluate the Euler form chi(t1, t2)")
    add_common(p, with_type=True)
    p.set_defaults(func=_cmd_chi)

    p = sub.add_parser("solve-lemma", help="solve the window equation for one type")
    add_common(p, with_rd=True)
    p.set_defaults(func=_cmd_solve_lemma)

    p = sub.add_parser("generic-hom", help="generic Hom/Ext dimensions for a pair of types")
    add_common(p, with_type=True)
    p.set_defaults(func=_cmd_generic_hom)

    p = sub.add_parser("scan-splittings", help="exhaustive bad-splitting scan for a pair")
    add_common(p, with_type=True)
    p.add_argument("--bound", type=int, default=20)
    p.set_defaults(func=_cmd_scan_splittings)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BunredError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
