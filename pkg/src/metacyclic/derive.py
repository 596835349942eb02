"""Derive the cyclic-factor data sets D_F, D_G and the quotient data set
D_Gbar from a valid metacyclic data set, by exact fixed-point counting.

For an order-t power e of the relevant generator and a rotation class v, the
total fixed-point count is
    |F|(v,t) = |C_H(e)| * sum(1/n_i : t | n_i, e ~ x_i^(n_i*v/t)),
where the x_i are the cone images.  Proper counts (points whose stabilizer is
exactly <e>) follow by inclusion-exclusion downward over the divisor lattice,
and each proper count of t*|f|(v,t)/deg orbits contributes a cone pair
(v^-1 mod t, t).  All arithmetic is exact; any non-integer intermediate is a
defect in the input and raises DerivationError.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cyclic import CyclicDataSet, free_data_set
from .meta import MetacyclicDataSet, project


class DerivationError(ValueError):
    """A fixed-point count or genus came out non-integral."""


def _divisors(x: int) -> list[int]:
    return [d for d in range(1, x + 1) if x % d == 0]


def fixed_point_count(ds: MetacyclicDataSet, element, v: int) -> int:
    """Total fixed points of `element` (order t >= 2) with rotation class v."""
    H = ds.group()
    t = H.element_order(element)
    if t < 2 or gcd(v, t) != 1:
        raise ValueError("element must have order >= 2 and v must be a unit")
    cls = H.conjugacy_class(element)
    cent = H.order // len(cls)
    total = Fraction(0)
    for x, (_, _, order) in zip(ds.images(), ds.triples):
        if order % t == 0 and H.power(x, order * v // t) in cls:
            total += Fraction(1, order)
    result = cent * total
    if result.denominator != 1:
        raise DerivationError(
            f"non-integer fixed point count {result} for v={v}, t={t}"
        )
    return int(result)


def _derive_factor(ds: MetacyclicDataSet, base, degree: int) -> CyclicDataSet:
    """Shared engine for D_F (base F, degree n) and D_G (base G, degree m)."""
    H = ds.group()
    genus = ds.genus()
    divisors = [t for t in _divisors(degree) if t >= 2]

    totals: dict[tuple[int, int], int] = {}
    for t in divisors:
        e = _base_power(H, base, degree, t, ds)
        cls = H.conjugacy_class(e)
        cent = H.order // len(cls)
        powers = {}
        for x, (_, _, order) in zip(ds.images(), ds.triples):
            if order % t != 0:
                continue
            key = (x, order)
            if key not in powers:
                powers[key] = {vv: H.power(x, order * vv // t)
                               for vv in range(1, t) if gcd(vv, t) == 1}
        for v in range(1, t) if t > 1 else []:
            if gcd(v, t) != 1:
                continue
            total = Fraction(0)
            for x, (_, _, order) in zip(ds.images(), ds.triples):
                if order % t == 0 and powers[(x, order)][v] in cls:
                    total += Fraction(1, order)
            count = cent * total
            if count.denominator != 1:
                raise DerivationError(
                    f"non-integer total count {count} at (v={v}, t={t})"
                )
            totals[(v, t)] = int(count)

    proper: dict[tuple[int, int], int] = {}
    for t in sorted(divisors, reverse=True):
        for v in range(1, t):
            if gcd(v, t) != 1:
                continue
            val = totals[(v, t)]
            for tp in divisors:
                if tp != t and tp % t == 0:
                    for vp in range(1, tp):
                        if gcd(vp, tp) == 1 and vp % t == v % t:
                            val -= proper[(vp, tp)]
            proper[(v, t)] = val

    cones: list[tuple[int, int]] = []
    for t in sorted(divisors, reverse=True):
        for v in range(1, t):
            if gcd(v, t) != 1:
                continue
            f = proper[(v, t)]
            if f < 0 or (t * f) % degree != 0:
                raise DerivationError(
                    f"improper orbit count t*f={t * f} at (v={v}, t={t})"
                )
            mult = t * f // degree
            if mult:
                cones.extend([(pow(v, -1, t), t)] * mult)

    rhs = Fraction(2 - 2 * genus, degree) - 2
    for _, ni in cones:
        rhs += 1 - Fraction(1, ni)
    orbit_genus = -rhs / 2
    if orbit_genus.denominator != 1 or orbit_genus < 0:
        raise DerivationError(f"non-integral orbit genus {orbit_genus}")

    if not cones:
        return free_data_set(degree, int(orbit_genus), 1,
                             annotations=("d-undetermined",))
    return CyclicDataSet(degree, int(orbit_genus), 0, tuple(cones)).canonical()


def _base_power(H, base: str, degree: int, t: int, ds: MetacyclicDataSet):
    exp = degree // t
    if base == "F":
        return H.power(H.F, exp)
    return project(exp % ds.m, 0, ds.u, ds.n, ds.r)


def derive_DF(ds: MetacyclicDataSet) -> CyclicDataSet:
    return _derive_factor(ds, "F", ds.n)


def derive_DG(ds: MetacyclicDataSet) -> CyclicDataSet:
    return _derive_factor(ds, "G", ds.m)


def derive_DGbar(ds: MetacyclicDataSet) -> CyclicDataSet:
    """Quotient data set of degree u: cone classes are the gamma_i mod u,
    with trivial (order-1) entries dropped."""
    u = ds.u
    cones: list[tuple[int, int]] = []
    for i in range(ds.ell):
        gam = ds.gamma(i) % u
        if gam == 0:
            continue
        g = gcd(gam, u)
        n_prime = u // g
        cones.append((gam // g, n_prime))
    cones.sort(key=lambda p: (-p[1], p[0]))
    if not cones:
        return free_data_set(u, ds.g0, 1, annotations=("d-undetermined",))
    return CyclicDataSet(u, ds.g0, 0, tuple(cones))


@dataclass(frozen=True)
class DerivedFactors:
    DF: CyclicDataSet
    DG: CyclicDataSet
    DGbar: CyclicDataSet


def derive_factors(ds: MetacyclicDataSet) -> DerivedFactors:
    return DerivedFactors(derive_DF(ds), derive_DG(ds), derive_DGbar(ds))
