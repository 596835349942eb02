"""Metacyclic data sets and their two independent validators.

A metacyclic data set
    D = ((u·n, r, k), g0; [(c_11,n_11),(c_12,n_12),n_1], ...)
encodes the weak conjugacy class of an M(u,n,r,k) action on a surface.  The
i-th triple assigns the i-th cone generator the group element
G^gamma_i F^delta_i with gamma_i = c_i1*m/n_i1 (mod m) and
delta_i = c_i2*n/n_i2 (mod n), where m = u*n/r is the order of G.

Two validators are provided:

* ``validate_meta_literal`` transcribes the defining number-theoretic
  conditions (genus integrality, stored cone orders, the long-relation
  congruences, and the surjectivity word conditions), optionally producing an
  explicit witness bundle whose congruences can be re-verified independently.
* ``validate_meta_oracle`` checks the property those conditions encode: the
  existence of an order-preserving surjection from the orbifold group onto
  M(u,n,r,k) killing the long relation, by direct search in the group.

Both computations use the order-mn "cover" group Z_n x|_k Z_m, in which a
cone assignment is the pair (gamma, delta) and the projection onto H sends
(P, E) to G^(P mod u) F^(r*(P div u) + E).  Its kernel is the central
subgroup {(w*u mod m, -w*r mod n)}, so the long-relation congruences say
exactly that the cover-product of the cone images lies in the right coset.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .groups import Element, GroupParams, MetacyclicGroup, make_group

Triple = tuple[tuple[int, int], tuple[int, int], int]


def residue_to_pair(residue: int, modulus: int) -> tuple[int, int]:
    """Write residue = c * (modulus/n1) with c a unit mod n1 (c=0 for n1=1)."""
    residue %= modulus
    if residue == 0:
        return (0, 1)
    g = gcd(residue, modulus)
    return (residue // g, modulus // g)


def pair_to_residue(c: int, n1: int, modulus: int) -> int:
    return (c * (modulus // n1)) % modulus


@lru_cache(maxsize=None)
def multiplicative_order(k: int, n: int) -> int:
    o, v = 1, k % n
    while v != 1:
        v = (v * k) % n
        o += 1
    return o


@dataclass(frozen=True)
class WitnessBundle:
    w: int
    theta: int | None
    cone_orders: tuple[tuple[int, int], ...]  # (s_i, t_i) per cone
    v: int = 0
    p_vector: tuple[int, ...] = ()
    q_vector: tuple[int, ...] = ()
    a: int | None = None
    b: int | None = None
    m_prime: int | None = None
    n_prime: int | None = None
    alpha: int | None = None
    beta: int | None = None
    # orbit genus 1 only: handle images G^p F^q, G^s F^t when they cannot be
    # taken as pure powers of the generators
    handle_images: tuple[tuple[int, int], tuple[int, int]] | None = None


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    method: str
    failed_condition: str | None = None
    genus: Fraction | None = None
    witness: WitnessBundle | None = None

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class MetacyclicDataSet:
    u: int
    n: int
    r: int
    k: int
    g0: int
    triples: tuple[Triple, ...]

    def __post_init__(self) -> None:
        params = GroupParams(self.u, self.n, self.r, self.k)  # may raise
        object.__setattr__(self, "k", params.k)
        if self.g0 < 0:
            raise ValueError(f"orbit genus must be >= 0, got {self.g0}")
        m = params.m
        for (c1, n11), (c2, n12), order in self.triples:
            if n11 < 1 or m % n11 != 0:
                raise ValueError(f"n_i1={n11} does not divide m={m}")
            if n12 < 1 or self.n % n12 != 0:
                raise ValueError(f"n_i2={n12} does not divide n={self.n}")
            for c, nij in ((c1, n11), (c2, n12)):
                if (c == 0) != (nij == 1):
                    raise ValueError(
                        f"c={c} must be zero exactly when its modulus is 1"
                    )
                if c != 0 and not (0 < c < nij and gcd(c, nij) == 1):
                    raise ValueError(f"c={c} is not a unit mod {nij}")
            if order < 1:
                raise ValueError(f"stored cone order {order} must be positive")

    @property
    def params(self) -> GroupParams:
        return GroupParams(self.u, self.n, self.r, self.k)

    @property
    def m(self) -> int:
        return self.u * self.n // self.r

    @property
    def ell(self) -> int:
        return len(self.triples)

    def group(self) -> MetacyclicGroup:
        try:
            return object.__getattribute__(self, "_group_memo")
        except AttributeError:
            pass
        H = make_group(self.params)
        object.__setattr__(self, "_group_memo", H)
        return H

    def gamma(self, i: int) -> int:
        return self.cone_pairs()[i][0]

    def delta(self, i: int) -> int:
        return self.cone_pairs()[i][1]

    def cone_pairs(self) -> list[tuple[int, int]]:
        """The (gamma_i, delta_i) cover pairs, in triple order."""
        try:
            return object.__getattribute__(self, "_pairs_memo")
        except AttributeError:
            pass
        m, n = self.m, self.n
        pairs = [(pair_to_residue(c1, n11, m), pair_to_residue(c2, n12, n))
                 for (c1, n11), (c2, n12), _ in self.triples]
        object.__setattr__(self, "_pairs_memo", pairs)
        return pairs

    def images(self) -> list[Element]:
        """The cone images G^gamma_i F^delta_i as group elements."""
        try:
            return object.__getattribute__(self, "_images_memo")
        except AttributeError:
            pass
        imgs = [project(g, d, self.u, self.n, self.r) for g, d in
                self.cone_pairs()]
        object.__setattr__(self, "_images_memo", imgs)
        return imgs

    def genus(self) -> Fraction:
        try:
            return object.__getattribute__(self, "_genus_memo")
        except AttributeError:
            pass
        # 2g - 2 = |H| (2 g0 - 2) + sum (|H| - |H|/order); all terms integers
        # because each stored order divides |H| = u*n.
        un = self.u * self.n
        if any(un % order for _, _, order in self.triples):
            rhs = sum((Fraction(un) - Fraction(un, order)
                       for _, _, order in self.triples),
                      Fraction(un * (2 * self.g0 - 2)))
            g = 1 + rhs / 2
        else:
            twice = un * (2 * self.g0 - 2)
            for _, _, order in self.triples:
                twice += un - un // order
            g = Fraction(2 + twice, 2)
        object.__setattr__(self, "_genus_memo", g)
        return g

    def sorted_triples(self) -> "MetacyclicDataSet":
        key = lambda t: (-t[2], t[0], t[1])
        return MetacyclicDataSet(self.u, self.n, self.r, self.k, self.g0,
                                 tuple(sorted(self.triples, key=key)))

    def __str__(self) -> str:
        from .notation import format_meta

        return format_meta(self)


def project(P: int, E: int, u: int, n: int, r: int) -> Element:
    """Cover element (P, E) of Z_n x|_k Z_m as a normal form (b, a) in H."""
    return (P % u, (r * (P // u) + E) % n)


class CoverGroup:
    """Z_n x|_k Z_m with elements (P, E): (P1,E1)(P2,E2) = (P1+P2, E1 k^P2 + E2)."""

    def __init__(self, ds: MetacyclicDataSet):
        self.m, self.n, self.u, self.r, self.k = ds.m, ds.n, ds.u, ds.r, ds.k
        self.kpow = [pow(self.k, b, self.n) for b in range(self.u)]

    def mul(self, x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
        P1, E1 = x
        P2, E2 = y
        return ((P1 + P2) % self.m, (E1 * self.kpow[P2 % self.u] + E2) % self.n)

    def project(self, x: tuple[int, int]) -> Element:
        return project(x[0], x[1], self.u, self.n, self.r)


_CONE_ORDER_CACHE: dict = {}


def _cone_order_search(m: int, n: int, u: int, r: int, k: int,
                       gam: int, dlt: int) -> tuple[int, int]:
    kg = pow(k, gam, n)
    P = 0  # gamma * s mod m
    S = 0  # 1 + k^gamma + ... + k^(gamma*(s-1)) mod n
    kp = 1  # k^(gamma*(s-1)) for the next step
    for s in range(1, u * n + 1):
        P = (P + gam) % m
        S = (S + kp) % n
        kp = (kp * kg) % n
        if P % u == 0:
            t = P // u
            if (dlt * S + t * r) % n == 0:
                return s, t
    raise AssertionError("cone order search failed to terminate")


def cone_order_literal(ds: MetacyclicDataSet, i: int) -> tuple[int, int]:
    """Least s >= 1 admitting t with gamma*s = t*u (mod m) and
    delta*(k^(gamma*(s-1)) + ... + k^gamma + 1) = -t*r (mod n); returns (s, t)."""
    u, n, r, k = ds.u, ds.n, ds.r, ds.k
    gam, dlt = ds.cone_pairs()[i]
    key = (u, n, r, k, gam, dlt)
    cached = _CONE_ORDER_CACHE.get(key)
    if cached is None:
        cached = _cone_order_search(ds.m, n, u, r, k, gam, dlt)
        if len(_CONE_ORDER_CACHE) > 1_000_000:
            _CONE_ORDER_CACHE.clear()
        _CONE_ORDER_CACHE[key] = cached
    return cached


_SUBGROUP_CACHE: dict = {}
_TORUS_CACHE: dict = {}
_MISSING = object()


def _closure_cached(H, gens: frozenset) -> frozenset:
    key = (H.u, H.n, H.r, H.k, gens)
    sub = _SUBGROUP_CACHE.get(key)
    if sub is None:
        sub = H.generated_subgroup(gens)
        if len(_SUBGROUP_CACHE) > 500_000:
            _SUBGROUP_CACHE.clear()
        _SUBGROUP_CACHE[key] = sub
    return sub


def _subgroup_generated(ds: MetacyclicDataSet, extra: list[Element] = []):
    H = ds.group()
    return _closure_cached(H, frozenset(ds.images()) | frozenset(extra))


def _solve_linear(a: int, b: int, n: int):
    """All x mod n with a*x = b (mod n), as (x0, step, count) or None."""
    a %= n
    b %= n
    g = gcd(a, n)
    if b % g:
        return None
    n_g = n // g
    x0 = ((b // g) * pow(a // g, -1, n_g)) % n_g
    return (x0, n_g, g)


def validate_meta_literal(ds: MetacyclicDataSet,
                          want_witness: bool = False) -> ValidationReport:
    """Transcription of the defining conditions of a metacyclic data set."""
    m, n, u, r, k = ds.m, ds.n, ds.u, ds.r, ds.k
    g = ds.genus()
    if g.denominator != 1 or g < 2:
        return ValidationReport(False, "literal", "i", g)

    pairs = ds.cone_pairs()
    cone_orders = []
    cache = _CONE_ORDER_CACHE
    for (gam, dlt), (_, _, stored) in zip(pairs, ds.triples):
        key = (u, n, r, k, gam, dlt)
        st = cache.get(key)
        if st is None:
            st = _cone_order_search(m, n, u, r, k, gam, dlt)
            if len(cache) > 1_000_000:
                cache.clear()
            cache[key] = st
        if st[0] != stored:
            return ValidationReport(False, "literal", "ii-b", g)
        cone_orders.append(st)

    gammas = [p[0] for p in pairs]
    deltas = [p[1] for p in pairs]

    sum_gamma = sum(gammas) % m
    if sum_gamma % u != 0:
        return ValidationReport(False, "literal", "iii", g)
    w = sum_gamma // u

    A = 0
    for gam, dlt in pairs:
        A = (A * pow(k, gam, n) + dlt) % n
    d = gcd(n, k - 1)
    theta = None
    if ds.g0 == 0:
        if (A + w * r) % n != 0:
            return ValidationReport(False, "literal", "iv", g)
    else:
        rem = (A + w * r) % n
        if rem % d != 0:
            return ValidationReport(False, "literal", "iv", g)
        theta = rem // d

    if ds.g0 == 0:
        found = _surjectivity_words(ds, want_witness)
        if found is None:
            return ValidationReport(False, "literal", "v", g)
        witness = None
        if want_witness:
            v, p_vec, a, q_vec, b = found
            witness = WitnessBundle(w=w, theta=theta,
                                    cone_orders=tuple(cone_orders), v=v,
                                    p_vector=p_vec, q_vector=q_vec, a=a, b=b)
        return ValidationReport(True, "literal", None, g, witness)

    if ds.g0 == 1:
        found = _torus_quotient_witness(ds, (A + w * r) % n, want_witness)
        if found is None:
            return ValidationReport(False, "literal", "vi", g)
        witness = None
        if want_witness:
            m_p, n_p, alpha, beta, words, handles = found
            v, p_vec, a, q_vec, b = words
            witness = WitnessBundle(w=w, theta=theta,
                                    cone_orders=tuple(cone_orders), v=v,
                                    p_vector=p_vec, q_vector=q_vec, a=a, b=b,
                                    m_prime=m_p, n_prime=n_p,
                                    alpha=alpha, beta=beta,
                                    handle_images=handles)
        return ValidationReport(True, "literal", None, g, witness)

    # g0 >= 2: conditions (i)-(iv) suffice; the handles carry the generators.
    witness = None
    if want_witness:
        witness = WitnessBundle(w=w, theta=theta,
                                cone_orders=tuple(cone_orders))
    return ValidationReport(True, "literal", None, g, witness)


def _cover_closure_words(ds: MetacyclicDataSet):
    """BFS closure of the cone pairs in the cover, with generator-index words."""
    cover = CoverGroup(ds)
    gens = ds.cone_pairs()
    ident = (0, 0)
    words: dict[tuple[int, int], tuple[int, ...]] = {ident: ()}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for gi, gen in enumerate(gens):
                y = cover.mul(x, gen)
                if y not in words:
                    words[y] = words[x] + (gi,)
                    nxt.append(y)
        frontier = nxt
    return cover, words


def _word_to_slot_vector(word: tuple[int, ...], ell: int):
    """Rewrite a generator word as a slot-ordered exponent vector.

    Each letter becomes its own round of the slot cycle, so the vector has
    length ell*v with v = len(word) (v = 1 with an all-zero round for the
    empty word)."""
    v = max(1, len(word))
    vec = [0] * (ell * v)
    for round_idx, gi in enumerate(word):
        vec[round_idx * ell + gi] = 1
    return v, tuple(vec)


def _surjectivity_words(ds: MetacyclicDataSet, want_witness: bool):
    """Condition for g0 = 0: slot-ordered words reaching the preimages of G
    and F in the cover.  Returns (v, p_vector, a, q_vector, b) or None."""
    if not want_witness:
        # Equivalent subgroup formulation: the cone images generate H.
        H = ds.group()
        if len(_subgroup_generated(ds)) != H.order:
            return None
        return (1, (0,) * max(1, ds.ell), 0, (0,) * max(1, ds.ell), 0)
    cover, words = _cover_closure_words(ds)
    u, r, m, n = ds.u, ds.r, ds.m, ds.n
    targetG = targetF = None
    for x, word in words.items():
        if cover.project(x) == (1 % u, 0):
            targetG = (x, word)
        if cover.project(x) == (0, 1 % n):
            targetF = (x, word)
    if targetG is None or targetF is None:
        return None
    (Pg, _), wg = targetG
    (Pf, _), wf = targetF
    a = ((Pg - 1) % m) // u
    b = (Pf % m) // u
    vp, p_vec = _word_to_slot_vector(wg, max(1, ds.ell))
    vq, q_vec = _word_to_slot_vector(wf, max(1, ds.ell))
    v = max(vp, vq)
    p_vec = p_vec + (0,) * (max(1, ds.ell) * (v - vp))
    q_vec = q_vec + (0,) * (max(1, ds.ell) * (v - vq))
    return (v, p_vec, a, q_vec, b)


def _torus_quotient_witness(ds: MetacyclicDataSet, R: int, want_witness: bool):
    """Condition for g0 = 1: handle images y, z with commutator F^R whose
    addition to the cone images generates the whole group.

    The search runs in two stages.  First it looks for pure-power images
    y = G^alpha, z = F^beta: divisors m', n' with beta*(1 - k^alpha) = R
    (mod n), gcd(m',alpha) = gcd(n',beta) = 1, and G^m', F^n' reachable from
    the cone images (m' = n' = 0 stand for 'generator supplied directly',
    forcing alpha resp. beta to 1).  That shape is not always attainable:
    when the cone images reach the G-direction only through mixed elements
    (e.g. two order-2 cones with image G*F^c in a dihedral group), the
    handles must carry a mixed element as well.  The second stage therefore
    searches general images y = G^p F^q, z = G^s F^t, whose commutator
    reduces to the exponent congruence q*(k^s - 1) - t*(k^p - 1) = R (mod n),
    and checks generation by subgroup closure."""
    m, n, u, r, k = ds.m, ds.n, ds.u, ds.r, ds.k
    H = ds.group()
    sub = _subgroup_generated(ds)
    cache_key = None
    if not want_witness:
        cache_key = (u, n, r, k, sub, R)
        cached = _TORUS_CACHE.get(cache_key, _MISSING)
        if cached is not _MISSING:
            return cached
    p_ord = multiplicative_order(k, n)

    m_candidates = [mp for mp in sorted(_divisors(m))
                    if H.power(H.G, mp) in sub] + [0]
    n_candidates = [np_ for np_ in sorted(_divisors(n))
                    if H.power(H.F, np_) in sub] + [0]

    def beta_ok(alpha: int, n_prime: int):
        coeff = (1 - pow(k, alpha, n)) % n
        if n_prime == 0:
            return 1 if (coeff * 1 - R) % n == 0 else None
        sol = _solve_linear(coeff, R, n)
        if sol is None:
            return None
        beta0, step, count = sol
        for j in range(count):
            beta = beta0 + j * step
            if gcd(beta, n_prime) == 1:
                return beta
        return None

    trivial_words = (1, (0,) * max(1, ds.ell), 0, (0,) * max(1, ds.ell), 0)
    for m_prime in m_candidates:
        if m_prime == 0:
            alphas = [1]
        else:
            span = lcm(p_ord, m_prime if m_prime else 1)
            alphas = [a for a in range(span) if gcd(a, m_prime) == 1]
        for n_prime in n_candidates:
            for alpha in alphas:
                beta = beta_ok(alpha, n_prime)
                if beta is None:
                    continue
                if not want_witness:
                    result = (m_prime, n_prime, alpha, beta,
                              trivial_words, None)
                    _TORUS_CACHE[cache_key] = result
                    return result
                words = _reach_words_for(ds, m_prime, n_prime)
                if words is None:
                    continue
                return (m_prime, n_prime, alpha, beta, words, None)

    kp = [pow(k, e, n) for e in range(u)]
    for p in range(u):
        coeff_p = (kp[p] - 1) % n
        for s in range(u):
            coeff_s = (kp[s] - 1) % n
            for q in range(n):
                sol = _solve_linear(coeff_p, (q * coeff_s - R) % n, n)
                if sol is None:
                    continue
                t0, step, count = sol
                for j in range(count):
                    y, z = (p, q), (s, t0 + j * step)
                    if len(_closure_cached(H, sub | {y, z})) != H.order:
                        continue
                    result = (None, None, None, None, trivial_words, (y, z))
                    if cache_key is not None:
                        _TORUS_CACHE[cache_key] = result
                    return result

    if cache_key is not None:
        _TORUS_CACHE[cache_key] = None
    return None


def _reach_words_for(ds: MetacyclicDataSet, m_prime: int, n_prime: int):
    """Slot-ordered words reaching the cover preimages of G^m' and F^n'."""
    cover, words = _cover_closure_words(ds)
    u, m = ds.u, ds.m
    tG = cover.project((m_prime % m, 0))
    tF = cover.project((0, n_prime % ds.n))
    foundG = foundF = None
    for x, word in words.items():
        if cover.project(x) == tG:
            foundG = (x, word)
        if cover.project(x) == tF:
            foundF = (x, word)
    if foundG is None or foundF is None:
        return None
    (Pg, _), wg = foundG
    (Pf, _), wf = foundF
    a = ((Pg - m_prime) % m) // u
    b = (Pf % m) // u
    vp, p_vec = _word_to_slot_vector(wg, max(1, ds.ell))
    vq, q_vec = _word_to_slot_vector(wf, max(1, ds.ell))
    v = max(vp, vq)
    p_vec = p_vec + (0,) * (max(1, ds.ell) * (v - vp))
    q_vec = q_vec + (0,) * (max(1, ds.ell) * (v - vq))
    return (v, p_vec, a, q_vec, b)


def _divisors(x: int) -> list[int]:
    out = [d for d in range(1, x + 1) if x % d == 0]
    return out


# -- oracle validator ------------------------------------------------------


_PRODUCT_CACHE: dict = {}
_PAIR_CACHE: dict = {}


def _commutator_products(H: MetacyclicGroup, count: int) -> frozenset[Element]:
    """Set of products of exactly `count` commutators (identity allowed)."""
    key = (H.params, count)
    cached = _PRODUCT_CACHE.get(key)
    if cached is not None:
        return cached
    c1 = H.commutator_set()
    acc = c1
    for _ in range(count - 1):
        nxt = frozenset(H.mul(x, y) for x in acc for y in c1)
        if nxt == acc:
            break
        acc = nxt
    _PRODUCT_CACHE[key] = acc
    return acc


def _commutator_pairs(H: MetacyclicGroup) -> dict[Element, list]:
    cached = _PAIR_CACHE.get(H.params)
    if cached is not None:
        return cached
    table: dict[Element, list] = {}
    for y in H.elements():
        for z in H.elements():
            table.setdefault(H.commutator(y, z), []).append((y, z))
    _PAIR_CACHE[H.params] = table
    return table


def validate_meta_oracle(ds: MetacyclicDataSet) -> ValidationReport:
    """Order-preserving-surjection search in the group itself."""
    H = ds.group()
    g = ds.genus()
    if g.denominator != 1 or g < 2:
        return ValidationReport(False, "oracle", "genus", g)

    xs = ds.images()
    for x, (_, _, stored) in zip(xs, ds.triples):
        if H.element_order(x) != stored:
            return ValidationReport(False, "oracle", "orders", g)

    T = H.identity
    for x in xs:
        T = H.mul(T, x)

    if ds.g0 == 0:
        if T != H.identity:
            return ValidationReport(False, "oracle", "long-relation", g)
        if len(_closure_cached(H, frozenset(xs))) != H.order:
            return ValidationReport(False, "oracle", "surjectivity", g)
        return ValidationReport(True, "oracle", None, g)

    if ds.g0 == 1:
        target = H.inv(T)
        pairs = _commutator_pairs(H).get(target, [])
        if not pairs:
            return ValidationReport(False, "oracle", "epimorphism", g)
        base = _closure_cached(H, frozenset(xs))
        if len(base) == H.order:
            return ValidationReport(True, "oracle", None, g)
        for y, z in pairs:
            if len(_closure_cached(H, base | {y, z})) == H.order:
                return ValidationReport(True, "oracle", None, g)
        return ValidationReport(False, "oracle", "epimorphism", g)

    # g0 >= 2: one handle can carry (G, F) making surjectivity automatic, so
    # validity reduces to the long relation being absorbable: the inverse
    # product of cone images must be a product of g0 commutators.
    if H.inv(T) not in _commutator_products(H, ds.g0):
        return ValidationReport(False, "oracle", "long-relation", g)
    return ValidationReport(True, "oracle", None, g)


# -- witness re-verification ----------------------------------------------


def verify_witness_bundle(ds: MetacyclicDataSet, wb: WitnessBundle) -> bool:
    """Re-check every congruence of a witness bundle from the raw formulas."""
    m, n, u, r, k = ds.m, ds.n, ds.u, ds.r, ds.k
    gammas = [ds.gamma(i) for i in range(ds.ell)]
    deltas = [ds.delta(i) for i in range(ds.ell)]

    for (s_i, t_i), gam, dlt, (_, _, stored) in zip(
            wb.cone_orders, gammas, deltas, ds.triples):
        if s_i != stored:
            return False
        if (gam * s_i - t_i * u) % m != 0:
            return False
        geom = sum(pow(k, gam * e, n) for e in range(s_i)) % n
        if (dlt * geom + t_i * r) % n != 0:
            return False

    if (sum(gammas) - wb.w * u) % m != 0:
        return False

    A = 0
    for i in range(ds.ell):
        term = deltas[i]
        for s in range(i + 1, ds.ell):
            term = term * pow(k, gammas[s], n)
        A = (A + term) % n
    if ds.g0 == 0:
        if (A + wb.w * r) % n != 0:
            return False
    else:
        if wb.theta is None:
            return False
        d = gcd(n, k - 1)
        if (A - d * wb.theta + wb.w * r) % n != 0:
            return False

    def word_sums(vec: tuple[int, ...]):
        """The two word congruence sums for a slot-ordered exponent vector."""
        ell = max(1, ds.ell)
        first = 0
        terms = []
        for idx, p in enumerate(vec):
            i = idx % ell
            if ds.ell == 0:
                continue
            gam, dlt = gammas[i], deltas[i]
            first += p * gam
            inner = sum(pow(k, gam * (p - s), n) for s in range(1, p + 1))
            terms.append((dlt * inner) % n)
        second = 0
        for idx, p in enumerate(vec):
            if ds.ell == 0:
                continue
            tail = 1
            for jdx in range(idx + 1, len(vec)):
                tail = (tail * pow(k, vec[jdx] * gammas[jdx % ds.ell], n)) % n
            second = (second + terms[idx] * tail) % n
        return first, second

    if ds.g0 == 0 and wb.v:
        f1, s1 = word_sums(wb.p_vector)
        if (f1 - 1 - wb.a * u) % m != 0 or (s1 + wb.a * r) % n != 0:
            return False
        f2, s2 = word_sums(wb.q_vector)
        if (f2 - wb.b * u) % m != 0 or (s2 - 1 + wb.b * r) % n != 0:
            return False

    if ds.g0 == 1 and wb.handle_images is not None:
        (p_, q_), (s_, t_) = wb.handle_images
        lhs = (q_ * (pow(k, s_, n) - 1) - t_ * (pow(k, p_, n) - 1)) % n
        if (lhs - A - wb.w * r) % n != 0:
            return False
        H = ds.group()
        gens = frozenset(ds.images()) | {(p_ % ds.u, q_ % n),
                                         (s_ % ds.u, t_ % n)}
        return len(_closure_cached(H, gens)) == H.order

    if ds.g0 == 1:
        if wb.m_prime is None or wb.n_prime is None:
            return False
        if wb.v:
            f1, s1 = word_sums(wb.p_vector)
            if (f1 - wb.m_prime - wb.a * u) % m != 0 or (s1 + wb.a * r) % n != 0:
                return False
            f2, s2 = word_sums(wb.q_vector)
            if (f2 - wb.b * u) % m != 0 or \
                    (s2 - wb.n_prime + wb.b * r) % n != 0:
                return False
        if (A + wb.beta * pow(k, wb.alpha, n) - wb.beta + wb.w * r) % n != 0:
            return False
        if wb.m_prime == 0:
            if wb.alpha != 1:
                return False
        elif lcm(m // wb.m_prime, m // gcd(m, wb.alpha)) != m:
            return False
        if wb.n_prime == 0:
            if wb.beta != 1:
                return False
        elif lcm(n // wb.n_prime, n // gcd(n, wb.beta)) != n:
            return False
    return True
