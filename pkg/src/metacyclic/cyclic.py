"""Cyclic data sets: integer tuples encoding conjugacy classes of Z_n surface
actions.

A cyclic data set of degree n is D = (n, g0, d; (c_1,n_1), ..., (c_l,n_l)).
When the cone list is empty the action is free and d records the rotation
class; otherwise d = 0.  The genus of the underlying surface is recovered
from the Riemann-Hurwitz equation (2-2g)/n = 2-2g0 + sum(1/n_j - 1), always
evaluated in exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm


class MalformedDataSetError(ValueError):
    """Structural defect: a cone order not dividing n, or c not a unit."""


@dataclass(frozen=True)
class CyclicValidation:
    valid: bool
    failed_condition: str | None
    genus: Fraction

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class CyclicDataSet:
    """(n, g0, d; cones) with cones an ordered tuple of (c_i, n_i) pairs."""

    n: int
    g0: int
    d: int = 0
    cones: tuple[tuple[int, int], ...] = ()
    annotations: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.n < 2:
            raise MalformedDataSetError(f"degree must be >= 2, got n={self.n}")
        if self.g0 < 0:
            raise MalformedDataSetError(f"orbit genus must be >= 0, got {self.g0}")
        if not (0 <= self.d < self.n):
            raise MalformedDataSetError(f"d={self.d} out of range [0,{self.n})")
        for c, ni in self.cones:
            if ni < 2 or self.n % ni != 0:
                raise MalformedDataSetError(
                    f"cone order {ni} does not divide degree {self.n}"
                )
            if not (0 < c < ni) or gcd(c, ni) != 1:
                raise MalformedDataSetError(
                    f"cone class {c} is not a unit mod {ni}"
                )

    @property
    def ell(self) -> int:
        return len(self.cones)

    @property
    def is_free(self) -> bool:
        return not self.cones

    def genus(self) -> Fraction:
        """Exact solution g of (2-2g)/n = 2-2g0 + sum(1/n_j - 1)."""
        rhs = Fraction(2 - 2 * self.g0)
        for _, ni in self.cones:
            rhs += Fraction(1, ni) - 1
        return 1 - Fraction(self.n) * rhs / 2

    def canonical(self) -> "CyclicDataSet":
        """Cones sorted by descending order then ascending class."""
        cones = tuple(sorted(self.cones, key=lambda p: (-p[1], p[0])))
        return CyclicDataSet(self.n, self.g0, self.d, cones, self.annotations)

    def grouped(self) -> tuple[tuple[tuple[int, int], int], ...]:
        """Canonical cones grouped as ((c, n_i), multiplicity) pairs."""
        out: list[tuple[tuple[int, int], int]] = []
        for pair in self.canonical().cones:
            if out and out[-1][0] == pair:
                out[-1] = (pair, out[-1][1] + 1)
            else:
                out.append((pair, 1))
        return tuple(out)

    def __str__(self) -> str:
        from .notation import format_cyclic

        return format_cyclic(self)


def validate_cyclic(ds: CyclicDataSet, min_genus: int = 1) -> CyclicValidation:
    """Check the defining conditions and that the genus is an integer >= min_genus.

    Conditions are checked in order (i), (iii), (iv); structural defects in the
    cone list ((ii)) raise MalformedDataSetError at construction time.
    """
    g = ds.genus()

    if ds.is_free != (ds.d > 0):
        return CyclicValidation(False, "i", g)
    if ds.d > 0 and gcd(ds.d, ds.n) != 1:
        return CyclicValidation(False, "i", g)

    # (iii): all leave-one-out lcms of the cone orders agree, and equal n when
    # g0 = 0.  Vacuous for fewer than two cones (a single cone is always
    # rejected by (iv) below).
    if ds.ell >= 2:
        orders = [ni for _, ni in ds.cones]
        loo = {lcm(*(orders[:i] + orders[i + 1:])) for i in range(len(orders))}
        if len(loo) != 1:
            return CyclicValidation(False, "iii", g)
        if ds.g0 == 0 and loo.pop() != ds.n:
            return CyclicValidation(False, "iii", g)

    total = sum((ds.n // ni) * c for c, ni in ds.cones)
    if total % ds.n != 0:
        return CyclicValidation(False, "iv", g)

    if g.denominator != 1:
        return CyclicValidation(False, "genus-nonintegral", g)
    if g == 0:
        if min_genus > 0:
            return CyclicValidation(False, "genus-zero", g)
    elif g < min_genus:
        return CyclicValidation(False, "genus-below-min", g)
    return CyclicValidation(True, None, g)


def free_data_set(n: int, g0: int, d: int = 1, annotations=()) -> CyclicDataSet:
    return CyclicDataSet(n, g0, d, (), tuple(annotations))
