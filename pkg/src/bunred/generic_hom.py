"""Generic Hom/Ext dimension prediction and its brute-force contradiction scan.

For a general pair of bundles of types t1, t2 on a curve of genus >= 2 with
chi(t1, t2) >= 0, the Hom dimension equals chi(t1, t2) and Ext^1 vanishes;
with chi >= 1 the generic morphism is surjective, injective, or injective
with torsionfree cokernel according to the rank comparison.  Only the
chi >= 0 case is predicted; nothing is invented for chi < 0.

The scan exhausts the arithmetic that makes the prediction work: any
kernel/cokernel splitting t1 = tK + t, t2 = t + tQ compatible with stability
(the strict slope chain) forces chi(tK, tQ) > 0, contradicting the excess
identity m - chi(t1, t2) = -chi(tK, tQ) for minimal m.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import (
    HypothesisNotMet,
    InvalidArgument,
    InvalidSplitting,
    InvalidType,
    NotCovered,
    TheoremContradicted,
)
from .euler import euler_form
from .types import GenusContext, SheafType, require_genus_ge_2


class MorphismKind(enum.Enum):
    SURJECTIVE = "surjective"
    INJECTIVE = "injective"
    INJECTIVE_TORSIONFREE_COKERNEL = "injective with torsionfree cokernel"


@dataclass(frozen=True)
class GenericHomReport:
    hom_dim: int
    ext_dim: int
    covered: bool


@dataclass(frozen=True)
class SplittingScanReport:
    examined: int
    violations: int


def generic_hom(ctx: GenusContext, t1: SheafType, t2: SheafType) -> GenericHomReport:
    """Predict (dim Hom, dim Ext^1) for a general pair of bundles of the given types.

    covered=False when chi(t1, t2) < 0: no prediction is made there.
    """
    require_genus_ge_2(ctx)
    if t1.rank < 1 or t2.rank < 1:
        raise NotCovered(f"no prediction for rank-zero types: {t1}, {t2}")
    chi = euler_form(ctx, t1, t2)
    if chi < 0:
        return GenericHomReport(hom_dim=0, ext_dim=0, covered=False)
    return GenericHomReport(hom_dim=chi, ext_dim=0, covered=True)


def generic_morphism_kind(ctx: GenusContext, t1: SheafType, t2: SheafType) -> MorphismKind:
    """Kind of a general morphism between general bundles, by rank comparison.

    Requires chi(t1, t2) >= 1 so that a nonzero morphism exists generically.
    """
    require_genus_ge_2(ctx)
    if t1.rank < 1 or t2.rank < 1:
        raise InvalidType(f"morphism kind needs positive ranks, got {t1}, {t2}")
    chi = euler_form(ctx, t1, t2)
    if chi < 1:
        raise HypothesisNotMet(f"chi({t1},{t2}) = {chi} < 1")
    if t1.rank > t2.rank:
        return MorphismKind.SURJECTIVE
    if t1.rank == t2.rank:
        return MorphismKind.INJECTIVE
    return MorphismKind.INJECTIVE_TORSIONFREE_COKERNEL


def excess_identity(
    ctx: GenusContext,
    t1: SheafType,
    t2: SheafType,
    t_k: SheafType,
    t_q: SheafType,
    m: int,
) -> bool:
    """True iff m - chi(t1, t2) = -chi(tK, tQ) for the splitting
    t1 = tK + t, t2 = t + tQ (the common middle type t is checked)."""
    if (t1.rank - t_k.rank, t1.degree - t_k.degree) != (
        t2.rank - t_q.rank,
        t2.degree - t_q.degree,
    ):
        raise InvalidSplitting(
            f"{t1} - {t_k} and {t2} - {t_q} differ; no common middle type"
        )
    return m - euler_form(ctx, t1, t2) == -euler_form(ctx, t_k, t_q)


def no_bad_splitting_scan(
    ctx: GenusContext, t1: SheafType, t2: SheafType, degree_bound: int
) -> SplittingScanReport:
    """Enumerate all stability-compatible kernel/cokernel splittings and assert
    chi(tK, tQ) > 0 for every one.

    Splittings are t1 = tK + t, t2 = t + tQ with t.rank >= 1, tK and tQ
    nonzero, rK >= 1, every degree bounded by degree_bound in absolute value,
    and the strict slope chain dK/rK < d1/r1 < d/r < d2/r2 (< dQ/rQ when
    rQ >= 1; rank-zero tQ needs positive degree instead).  Each splitting is
    also checked against the cross-multiplied chain consequence
    chi(tK,tQ)*r1*r2 > chi(t1,t2)*rK*rQ.

    A violation raises TheoremContradicted: the enumerated inequality is a
    theorem, so a hit means the scan itself is buggy.
    """
    require_genus_ge_2(ctx)
    if t1.rank < 1 or t2.rank < 1:
        raise InvalidType(f"scan needs positive ranks, got {t1}, {t2}")
    if degree_bound < 0:
        raise InvalidArgument(f"degree bound must be >= 0, got {degree_bound}")
    chi_12 = euler_form(ctx, t1, t2)
    if chi_12 < 0:
        raise HypothesisNotMet(f"chi({t1},{t2}) = {chi_12} < 0")

    r1, d1 = t1.rank, t1.degree
    r2, d2 = t2.rank, t2.degree
    examined = 0
    for r in range(1, min(r1, r2) + 1):
        for d in range(-degree_bound, degree_bound + 1):
            rk, dk = r1 - r, d1 - d
            rq, dq = r2 - r, d2 - d
            if (rk, dk) == (0, 0) or (rq, dq) == (0, 0):
                continue
            if rk < 1:
                continue  # rank-zero subsheaves of a bundle are zero
            if rq == 0 and dq < 1:
                continue  # not a torsion sheaf type
            if abs(dk) > degree_bound or abs(dq) > degree_bound:
                continue
            # strict slope chain, cross-multiplied
            if not dk * r1 < d1 * rk:
                continue
            if not d1 * r < d * r1:
                continue
            if not d * r2 < d2 * r:
                continue
            if rq >= 1 and not d2 * rq < dq * r2:
                continue
            examined += 1
            chi_kq = euler_form(ctx, SheafType(rk, dk), SheafType(rq, dq))
            if chi_kq <= 0:
                raise TheoremContradicted(
                    f"chi(({rk},{dk}),({rq},{dq})) = {chi_kq} <= 0 for a "
                    f"slope-compatible splitting of {t1}, {t2}"
                )
            if not chi_kq * r1 * r2 > chi_12 * rk * rq:
                raise TheoremContradicted(
                    f"chain inequality failed for splitting ({rk},{dk}), ({rq},{dq})"
                )
    return SplittingScanReport(examined=examined, violations=0)
