"""Exact normal-form arithmetic in the finite metacyclic groups M(u, n, r, k).

M(u, n, r, k) is presented by  < F, G | F^n = 1, G^u = F^r, G^-1 F G = F^k >
with r | n, gcd(k, n) = 1, k^u = 1 (mod n) and r*(k-1) = 0 (mod n).  Every
element has a unique normal form G^b F^a with 0 <= b < u and 0 <= a < n, so
elements are plain tuples (b, a) and the group has order exactly u*n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd


Element = tuple[int, int]


class GroupParameterError(ValueError):
    """Raised when (u, n, r, k) violate one of the defining congruences."""


@dataclass(frozen=True)
class GroupParams:
    u: int
    n: int
    r: int
    k: int

    def __post_init__(self) -> None:
        if self.u < 2:
            raise GroupParameterError(f"u must be >= 2, got u={self.u}")
        if self.n < 2:
            raise GroupParameterError(f"n must be >= 2, got n={self.n}")
        if self.r < 1 or self.n % self.r != 0:
            raise GroupParameterError(f"r must divide n: r={self.r}, n={self.n}")
        object.__setattr__(self, "k", self.k % self.n)
        if gcd(self.k, self.n) != 1:
            raise GroupParameterError(
                f"k must be a unit mod n: gcd({self.k},{self.n}) != 1"
            )
        if pow(self.k, self.u, self.n) != 1:
            raise GroupParameterError(
                f"k^u must be 1 mod n: k={self.k}, u={self.u}, n={self.n}"
            )
        if (self.r * (self.k - 1)) % self.n != 0:
            raise GroupParameterError(
                f"r*(k-1) must be 0 mod n: r={self.r}, k={self.k}, n={self.n}"
            )

    @property
    def m(self) -> int:
        """Order of the generator G, m = u*n/r."""
        return self.u * self.n // self.r

    @property
    def order(self) -> int:
        return self.u * self.n

    def label(self) -> str:
        k = -1 if self.k == self.n - 1 else self.k
        return f"M({self.u},{self.n},{self.r},{k})"


class MetacyclicGroup:
    """The group M(u, n, r, k) with elements (b, a) standing for G^b F^a."""

    def __init__(self, params: GroupParams):
        self.params = params
        self.u = params.u
        self.n = params.n
        self.r = params.r
        self.k = params.k
        self.m = params.m
        self.order = params.order
        # k^b mod n for 0 <= b < u; k^u = 1 mod n so this covers all powers.
        self.kpow = [pow(self.k, b, self.n) for b in range(self.u)]
        self.identity: Element = (0, 0)
        self.F: Element = (0, 1)
        self.G: Element = (1, 0)
        self._class_cache: dict[Element, frozenset[Element]] = {}
        self._elements = [(b, a) for b in range(self.u) for a in range(self.n)]
        self._order_cache: dict[Element, int] = {}
        self._is_split: bool | None = None
        self._commutator_set: frozenset[Element] | None = None

    # -- basic arithmetic ---------------------------------------------------

    def mul(self, x: Element, y: Element) -> Element:
        b1, a1 = x
        b2, a2 = y
        q, b = divmod(b1 + b2, self.u)
        return (b, (self.r * q + a1 * self.kpow[b2] + a2) % self.n)

    def inv(self, x: Element) -> Element:
        b, a = x
        bi = (self.u - b) % self.u
        q = 1 if b else 0
        return (bi, -(self.r * q + a * self.kpow[bi]) % self.n)

    def power(self, x: Element, e: int) -> Element:
        if e < 0:
            return self.power(self.inv(x), -e)
        result = self.identity
        base = x
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def conjugate(self, x: Element, g: Element) -> Element:
        """g^-1 x g."""
        return self.mul(self.mul(self.inv(g), x), g)

    def commutator(self, x: Element, y: Element) -> Element:
        """x^-1 y^-1 x y."""
        return self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))

    def elements(self) -> list[Element]:
        return self._elements

    # -- orders, classes, subgroups ----------------------------------------

    def element_order(self, x: Element) -> int:
        cached = self._order_cache.get(x)
        if cached is not None:
            return cached
        d = self.order
        p = 2
        remaining = d
        while p * p <= remaining:
            while remaining % p == 0:
                remaining //= p
                if self.power(x, d // p) == self.identity:
                    d //= p
            p += 1
        if remaining > 1 and self.power(x, d // remaining) == self.identity:
            d //= remaining
        self._order_cache[x] = d
        return d

    def conjugacy_class(self, x: Element) -> frozenset[Element]:
        cached = self._class_cache.get(x)
        if cached is not None:
            return cached
        cls = frozenset(self.conjugate(x, g) for g in self._elements)
        for y in cls:
            self._class_cache[y] = cls
        return cls

    def conjugacy_data(self, x: Element) -> tuple[frozenset[Element], int]:
        cls = self.conjugacy_class(x)
        return cls, self.order // len(cls)

    def centralizer_size(self, x: Element) -> int:
        return self.order // len(self.conjugacy_class(x))

    def generated_subgroup(self, gens) -> frozenset[Element]:
        gens = [g for g in gens]
        if not gens:
            return frozenset([self.identity])
        seen = {self.identity}
        stack = [self.identity]
        while stack:
            x = stack.pop()
            for g in gens:
                y = self.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return frozenset(seen)

    def generates(self, gens) -> bool:
        return len(self.generated_subgroup(gens)) == self.order

    def cyclic_subgroup(self, x: Element) -> frozenset[Element]:
        out = [self.identity]
        y = x
        while y != self.identity:
            out.append(y)
            y = self.mul(y, x)
        return frozenset(out)

    def commutator_set(self) -> frozenset[Element]:
        """All single commutators [y, z]; for metacyclic groups this is [H, H]."""
        if self._commutator_set is None:
            # [G^b F^a, G^c F^e] lies in <F^(k-1)>; sweeping y over a transversal
            # against all z already hits every value, but sweep fully for safety.
            vals = set()
            for y in self._elements:
                for z in self._elements:
                    vals.add(self.commutator(y, z))
            self._commutator_set = frozenset(vals)
        return self._commutator_set

    # -- structural predicates ---------------------------------------------

    @property
    def is_split(self) -> bool:
        """True iff H is Z_n' x| Z_m' for some cyclic complement pair."""
        if self._is_split is None:
            self._is_split = self._compute_is_split()
        return self._is_split

    def _compute_is_split(self) -> bool:
        if self.r == self.n:
            return True
        # Distinct cyclic subgroups, keyed by their element sets.
        cyclics: dict[frozenset[Element], Element] = {}
        for x in self._elements:
            sub = self.cyclic_subgroup(x)
            cyclics.setdefault(sub, x)
        by_order: dict[int, list[Element]] = {}
        for x in self._elements:
            by_order.setdefault(self.element_order(x), []).append(x)
        for sub, x in cyclics.items():
            # Normality: closed under conjugation by both generators.
            if any(self.conjugate(s, self.G) not in sub for s in sub):
                continue
            if any(self.conjugate(s, self.F) not in sub for s in sub):
                continue
            comp_order = self.order // len(sub)
            for y in by_order.get(comp_order, []):
                if len(self.cyclic_subgroup(y) & sub) != 1:
                    continue
                if len(self.generated_subgroup([x, y])) == self.order:
                    return True
        return False

    @property
    def is_generalized_quaternion(self) -> bool:
        """2-group with a unique involution and not cyclic (Q8, Q16, ...)."""
        o = self.order
        if o & (o - 1) or o < 8:
            return False
        involutions = sum(
            1 for x in self._elements if self.element_order(x) == 2
        )
        if involutions != 1:
            return False
        return all(self.element_order(x) < o for x in self._elements)

    def element_orders(self) -> frozenset[int]:
        return frozenset(self.element_order(x) for x in self._elements)

    def __repr__(self) -> str:
        return f"MetacyclicGroup({self.params.label()})"


@lru_cache(maxsize=4096)
def make_group(params: GroupParams) -> MetacyclicGroup:
    """Construct (and cache) the group; raises GroupParameterError on bad data."""
    return MetacyclicGroup(params)


def group_of(u: int, n: int, r: int, k: int) -> MetacyclicGroup:
    return make_group(GroupParams(u, n, r, k))
