"""Recursive birational-reduction certificates and their independent verifier.

reduce() builds the full reduction tree taking the moduli stack of rank-r,
degree-d bundles to the stack of rank-h, degree-0 bundles, h = hcf(r, d).
Each non-base step records the window solution (rF, dF), the rank of the
Hom bundle the step is a Grassmannian bundle of, the affine dimensions
contributed by the graph map and by the Hecke side, two child subtrees (the
reduction of the kernel type (r1, d1) and of the Hecke target (h1, -h)), and
the per-segment determinant-degree maps:

    [ kernel step: deg -> h*dF - deg,
      child 1's composite,
      Hecke shift: deg -> deg - h,
      child 2's composite ]

A base step (rank == h) is a twist by the unique line-bundle degree landing
at degree 0.

verify_trace() re-derives every number in the certificate from first
principles and reports each named check as pass/fail; nothing is trusted
from the construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .affine import DegreeAffineMap, compose_det
from .diophantine import LemmaSolution, solve_lemma
from .errors import CertificateInvalid, InvalidType
from .euler import euler_form
from .grassmann import check_gr_rational, check_map_precondition, hecke_det_shift
from .types import GenusContext, SheafType, hcf_of_type, require_genus_ge_2
from .weights import fixed_bundle, universal_fiber, weight_of_dual, weight_of_hom


@dataclass(frozen=True)
class BaseStep:
    """Terminal step: rank equals hcf, twist by a degree-`twist_degree` line bundle."""

    t: SheafType
    twist_degree: int


@dataclass(frozen=True)
class CompositeStep:
    """One window-solution step plus the two recursive child reductions."""

    t: SheafType
    sol: LemmaSolution
    rkV: int
    rho_affine: int
    hecke_affine: int
    mu1: StepNode
    mu2: StepNode
    det_maps: tuple[DegreeAffineMap, ...]


StepNode = Union[BaseStep, CompositeStep]


@dataclass(frozen=True)
class ReductionTrace:
    genus: int
    input: SheafType
    h: int
    root: StepNode
    total_affine_dim: int
    composite_det: DegreeAffineMap


def node_composite_det(node: StepNode) -> DegreeAffineMap:
    """Determinant-degree map of the whole subtree, first segment acting first."""
    if isinstance(node, BaseStep):
        return DegreeAffineMap(1, node.t.rank * node.twist_degree)
    return compose_det(node.det_maps)


def node_affine_total(node: StepNode) -> int:
    """Sum of the affine dimensions contributed by the subtree."""
    if isinstance(node, BaseStep):
        return 0
    return (
        node.rho_affine
        + node.hecke_affine
        + node_affine_total(node.mu1)
        + node_affine_total(node.mu2)
    )


def node_depth(node: StepNode) -> int:
    if isinstance(node, BaseStep):
        return 1
    return 1 + max(node_depth(node.mu1), node_depth(node.mu2))


def reduce(ctx: GenusContext, t: SheafType) -> ReductionTrace:
    """Build the complete reduction certificate for the type t.

    Recursion on r/h: a base step twists degree to 0; otherwise one window
    solution produces the kernel type (r1, d1) and the Hecke target (h1, -h),
    both strictly smaller in the r/h measure.
    """
    require_genus_ge_2(ctx)
    if t.rank < 1:
        raise InvalidType(f"reduction needs rank >= 1, got {t}")
    root = _reduce_node(ctx, t)
    return ReductionTrace(
        genus=ctx.genus,
        input=t,
        h=hcf_of_type(t),
        root=root,
        total_affine_dim=node_affine_total(root),
        composite_det=node_composite_det(root),
    )


def _reduce_node(ctx: GenusContext, t: SheafType) -> StepNode:
    h = hcf_of_type(t)
    if t.rank == h:
        return BaseStep(t=t, twist_degree=-(t.degree // t.rank))
    sol = solve_lemma(ctx, t)
    t1 = SheafType(sol.r1, sol.d1)
    t_f = SheafType(sol.rF, sol.dF)
    rk_v = euler_form(ctx, t1, t_f)
    mu1 = _reduce_node(ctx, t1)
    mu2 = _reduce_node(ctx, SheafType(sol.h1, -h))
    det_maps = (
        DegreeAffineMap(-1, h * sol.dF),
        node_composite_det(mu1),
        hecke_det_shift(h),
        node_composite_det(mu2),
    )
    return CompositeStep(
        t=t,
        sol=sol,
        rkV=rk_v,
        rho_affine=h * (rk_v - sol.h1),
        hecke_affine=h * (sol.h1 - h),
        mu1=mu1,
        mu2=mu2,
        det_maps=det_maps,
    )


# --------------------------------------------------------------------------
# Verification


@dataclass(frozen=True)
class CheckResult:
    path: str
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def failed_names(self) -> set[str]:
        return {c.name for c in self.checks if not c.passed}


class _Checker:
    def __init__(self):
        self.results: list[CheckResult] = []

    def run(self, path: str, name: str, fn, detail: str = "") -> bool:
        # A check that cannot even be evaluated (garbage values in a tampered
        # trace) counts as failed, never as an exception escaping the verifier.
        try:
            passed = bool(fn())
            note = "" if passed else detail
        except Exception as exc:  # noqa: BLE001 - any blowup means "failed"
            passed = False
            note = f"not evaluable: {exc}"
        self.results.append(CheckResult(path=path, name=name, passed=passed, detail=note))
        return passed


def verify_trace(trace: ReductionTrace, *, strict: bool = True) -> VerificationReport:
    """Re-check every invariant of a reduction certificate from scratch.

    Returns a report listing each named check with pass/fail.  With
    strict=True (the default) a CertificateInvalid carrying the first failing
    check's node path and name is raised instead of returning a failing
    report.
    """
    ck = _Checker()
    g = trace.genus

    domain_ok = ck.run("trace", "genus_domain", lambda: g >= 2, f"genus {g} < 2")
    domain_ok &= ck.run(
        "trace", "input_domain", lambda: trace.input.rank >= 1, f"input {trace.input} has rank 0"
    )
    if domain_ok:
        ck.run(
            "trace",
            "input_hcf",
            lambda: trace.h == hcf_of_type(trace.input),
            f"stored h={trace.h}, recomputed {math.gcd(trace.input.rank, trace.input.degree)}",
        )
        ck.run(
            "trace",
            "root_type",
            lambda: trace.root.t == trace.input,
            f"root type {trace.root.t} != input {trace.input}",
        )
        _verify_node(ck, g, trace.root, "root")

        expected_total = (g - 1) * (trace.input.rank**2 - trace.h**2)
        ck.run(
            "trace",
            "total_affine_dim",
            lambda: trace.total_affine_dim == node_affine_total(trace.root) == expected_total,
            f"stored {trace.total_affine_dim}, node sum {node_affine_total(trace.root)}, "
            f"(g-1)(r^2-h^2) = {expected_total}",
        )
        recomputed = node_composite_det(trace.root)
        ck.run(
            "trace",
            "composite_det",
            lambda: trace.composite_det == recomputed,
            f"stored {trace.composite_det}, recomputed {recomputed}",
        )
        ck.run(
            "trace",
            "det_sends_to_zero",
            lambda: recomputed.apply(trace.input.degree) == 0,
            f"composite sends {trace.input.degree} to {recomputed.apply(trace.input.degree)}",
        )

    report = VerificationReport(checks=tuple(ck.results))
    if strict and not report.ok:
        first = report.failures()[0]
        raise CertificateInvalid(first.path, first.name, first.detail, report=report)
    return report


def _verify_node(ck: _Checker, g: int, node: StepNode, path: str) -> None:
    t = node.t
    if not ck.run(path, "node_type_domain", lambda: t.rank >= 1, f"type {t} has rank 0"):
        return
    r, d = t.rank, t.degree
    h = math.gcd(r, d)

    if isinstance(node, BaseStep):
        ck.run(path, "base_rank", lambda: r == h, f"rank {r} != hcf {h}")
        ck.run(
            path,
            "base_twist",
            lambda: d % r == 0 and node.twist_degree == -(d // r),
            f"twist {node.twist_degree} does not send degree {d} to 0",
        )
        return

    sol = node.sol
    ck.run(
        path,
        "euler_equation",
        lambda: (1 - g) * sol.rF * r + sol.rF * d - r * sol.dF == h,
        f"(1-g)*{sol.rF}*{r} + {sol.rF}*{d} - {r}*{sol.dF} != {h}",
    )
    ck.run(
        path,
        "rank_window",
        lambda: r < h * sol.rF < 2 * r,
        f"h*rF = {h * sol.rF} outside ({r}, {2 * r})",
    )
    ck.run(
        path,
        "reduced_type",
        lambda: sol.r1 == h * sol.rF - r and sol.d1 == h * sol.dF - d,
        f"stored (r1,d1)=({sol.r1},{sol.d1}), expected ({h * sol.rF - r},{h * sol.dF - d})",
    )
    ck.run(
        path,
        "solution_hcf",
        lambda: sol.h == h and sol.h1 == math.gcd(sol.r1, sol.d1) and sol.h1 % h == 0,
        f"stored h={sol.h}, h1={sol.h1}; recomputed h={h}, h1={math.gcd(sol.r1, sol.d1)}",
    )
    ck.run(
        path,
        "measure_decrease",
        lambda: sol.r1 * h < r * sol.h1,
        f"r1/h1 = {sol.r1}/{sol.h1} not < r/h = {r}/{h}",
    )
    ck.run(
        path,
        "hom_bundle_rank",
        lambda: node.rkV
        == euler_form(GenusContext(g), SheafType(sol.r1, sol.d1), SheafType(sol.rF, sol.dF)),
        f"stored rkV={node.rkV} is not chi((r1,d1),(rF,dF))",
    )

    def _map_precondition() -> bool:
        t1 = SheafType(sol.r1, sol.d1)
        hom_v = weight_of_hom(universal_fiber(t1), fixed_bundle("F", t1, sol.rF))
        dual_w = weight_of_dual(universal_fiber(SheafType(sol.h1, 0)))
        return check_map_precondition(h, sol.h1, node.rkV, hom_v.weight, dual_w.weight)

    ck.run(
        path,
        "graph_map_precondition",
        _map_precondition,
        f"j={h}, rkW={sol.h1}, rkV={node.rkV} with weights -1/-1 fails j <= rkW <= rkV",
    )
    ck.run(
        path,
        "hecke_divisibility",
        lambda: check_gr_rational(h, SheafType(sol.h1, -h)),
        f"hcf({sol.h1},{h}) does not divide {h}",
    )
    ck.run(
        path,
        "dimension_identity",
        lambda: (g - 1) * r**2 == (g - 1) * sol.r1**2 + h * (node.rkV - h),
        f"(g-1)r^2 = {(g - 1) * r**2} != (g-1)r1^2 + h(rkV-h)",
    )
    ck.run(
        path,
        "rho_affine",
        lambda: node.rho_affine == h * (node.rkV - sol.h1),
        f"stored {node.rho_affine}, expected {h}*({node.rkV}-{sol.h1})",
    )
    ck.run(
        path,
        "hecke_affine",
        lambda: node.hecke_affine == h * (sol.h1 - h),
        f"stored {node.hecke_affine}, expected {h}*({sol.h1}-{h})",
    )
    ck.run(
        path,
        "child_types",
        lambda: node.mu1.t == SheafType(sol.r1, sol.d1)
        and node.mu2.t == SheafType(sol.h1, -h),
        f"children are {node.mu1.t}, {node.mu2.t}; expected ({sol.r1},{sol.d1}), ({sol.h1},{-h})",
    )

    def _det_segments() -> bool:
        expected = (
            DegreeAffineMap(-1, h * sol.dF),
            node_composite_det(node.mu1),
            hecke_det_shift(h),
            node_composite_det(node.mu2),
        )
        return node.det_maps == expected

    ck.run(
        path,
        "det_segments",
        _det_segments,
        "stored determinant segments differ from the re-derived ones",
    )

    _verify_node(ck, g, node.mu1, f"{path}.mu1")
    _verify_node(ck, g, node.mu2, f"{path}.mu2")
