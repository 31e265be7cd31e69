"""Exact integer domain types: sheaf types, genus context, basic arithmetic.

All arithmetic in this package is on Python integers (arbitrary precision),
so no overflow bounds are enforced anywhere.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError, InvalidArgument, InvalidType


@dataclass(frozen=True)
class SheafType:
    """Numerical type (rank, degree) of a coherent sheaf on the curve."""

    rank: int
    degree: int

    def __post_init__(self):
        if self.rank < 0:
            raise InvalidType(f"rank must be >= 0, got {self.rank}")
        if self.rank == 0 and self.degree < 0:
            raise InvalidType(
                f"rank-zero types are torsion and need degree >= 0, got degree {self.degree}"
            )

    def __add__(self, other: SheafType) -> SheafType:
        return add_types(self, other)

    def __str__(self) -> str:
        return f"({self.rank},{self.degree})"


ZERO_TYPE = SheafType(0, 0)


@dataclass(frozen=True)
class GenusContext:
    """Genus of the fixed smooth projective curve.

    Euler-form arithmetic is defined for any genus >= 0; the reduction and
    generic-Hom operations additionally require genus >= 2 and check it via
    require_genus_ge_2.
    """

    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise InvalidArgument(f"genus must be >= 0, got {self.genus}")


def require_genus_ge_2(ctx: GenusContext) -> None:
    if ctx.genus < 2:
        raise DomainError(f"genus must be >= 2, got {ctx.genus}")


class SlopeOrder(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def add_types(a: SheafType, b: SheafType) -> SheafType:
    """Componentwise sum of two sheaf types."""
    return SheafType(a.rank + b.rank, a.degree + b.degree)


def scale_type(n: int, t: SheafType) -> SheafType:
    """n-fold direct sum (n >= 0) of a sheaf type."""
    if n < 0:
        raise InvalidArgument(f"scale factor must be >= 0, got {n}")
    return SheafType(n * t.rank, n * t.degree)


def hcf_of_type(t: SheafType) -> int:
    """Positive highest common factor of rank and degree.

    Convention: hcf(r, d) = hcf(r, -d) > 0, and hcf(r, 0) = r. Requires
    rank >= 1.
    """
    if t.rank < 1:
        raise InvalidType(f"hcf needs rank >= 1, got {t}")
    return math.gcd(t.rank, t.degree)


def slope_cmp(a: SheafType, b: SheafType) -> SlopeOrder:
    """Exact comparison of the slopes d_a/r_a and d_b/r_b.

    Uses cross-multiplication (ranks are positive), never floating point.
    """
    if a.rank < 1 or b.rank < 1:
        raise InvalidType(f"slope comparison needs positive ranks, got {a} and {b}")
    lhs = a.degree * b.rank
    rhs = b.degree * a.rank
    if lhs < rhs:
        return SlopeOrder.LESS
    if lhs > rhs:
        return SlopeOrder.GREATER
    return SlopeOrder.EQUAL
