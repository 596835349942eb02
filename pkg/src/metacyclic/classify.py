"""Equivalence of metacyclic data sets, exhaustive per-genus enumeration of
weak conjugacy classes, and the cyclic-factor pair query.

Enumeration strategy: for each admissible parameter tuple (u,n,r,k) and
orbit genus g0, cone-order signatures come from the Riemann-Hurwitz equation;
each cone slot ranges over the "cover pairs" (gamma, delta) in
Z_m x Z_n whose projected group element has the required order.  Cone
sequences are generated with non-increasing orders; this loses no classes,
because transposing adjacent cones (conjugating one into the other) stays
within a weak conjugacy class and within the data-set equivalence used for
deduplication.  Candidates are validated group-theoretically and
deduplicated with the equivalence search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .cyclic import CyclicDataSet
from .groups import GroupParams, GroupParameterError, make_group
from .meta import (MetacyclicDataSet, multiplicative_order, project,
                   residue_to_pair, validate_meta_oracle)


# -- equivalence -----------------------------------------------------------


@dataclass(frozen=True)
class EquivalenceWitness:
    bijection: tuple[int, ...]  # triple i of D2 matches triple bijection[i] of D1
    a: int
    pair_a: tuple[int, ...]
    pair_b: tuple[int, ...]


# Default reading of the shift integer "a" in the data-set equivalence: the
# source quantifies it without a subscript, but only the per-pair reading
# reproduces the published class counts, so that is the default; "global-a"
# is kept as the stricter alternative.
DEFAULT_EQUIVALENCE_MODE = "per-pair-a"


def equivalent(ds1: MetacyclicDataSet, ds2: MetacyclicDataSet,
               mode: str = DEFAULT_EQUIVALENCE_MODE,
               want_witness: bool = False):
    """Decide data-set equivalence; returns bool, or (bool, witness|None).

    Matches each triple of ds2 to a distinct triple of ds1 under
        gamma2_i = gamma1_j + a*u          (mod m)
        delta2_i = delta1_j*k^a_i + b_i*(k^gamma1_j - 1) - a*r   (mod n)
    with a shared across pairs ("global-a", default) or free per pair
    ("per-pair-a").
    """
    if (ds1.u, ds1.n, ds1.r, ds1.k, ds1.g0, ds1.ell) != \
            (ds2.u, ds2.n, ds2.r, ds2.k, ds2.g0, ds2.ell):
        return (False, None) if want_witness else False
    m, n, u, r, k = ds1.m, ds1.n, ds1.u, ds1.r, ds1.k
    ell = ds1.ell
    if ell == 0:
        witness = EquivalenceWitness((), 0, (), ())
        return (True, witness) if want_witness else True

    p = multiplicative_order(k, n)
    g1 = [ds1.gamma(i) for i in range(ell)]
    d1 = [ds1.delta(i) for i in range(ell)]
    o1 = [t[2] for t in ds1.triples]
    g2 = [ds2.gamma(i) for i in range(ell)]
    d2 = [ds2.delta(i) for i in range(ell)]
    o2 = [t[2] for t in ds2.triples]
    kg1 = [pow(k, g, n) for g in g1]
    mod1 = [gcd(kg - 1, n) for kg in kg1]
    kpows = [pow(k, j, n) for j in range(p)]

    def delta_match(i: int, j: int, ar: int):
        """a_i, b_i solving the delta congruence for pair (i -> j), or None."""
        target = (d2[i] + ar) % n
        for ai, kp in enumerate(kpows):
            diff = (target - d1[j] * kp) % n
            if diff % mod1[j] == 0:
                coeff = (kg1[j] - 1) % n
                if coeff == 0:
                    bi = 0 if diff % n == 0 else None
                else:
                    g = gcd(coeff, n)
                    bi = ((diff // g) * pow(coeff // g, -1, n // g)) % (n // g)
                if bi is not None:
                    return ai, bi
        return None

    def try_matching(compat):
        match_of = [-1] * ell  # ds1 triple -> ds2 triple

        def augment(i, seen):
            for j in compat[i]:
                if j in seen:
                    continue
                seen.add(j)
                if match_of[j] == -1 or augment(match_of[j], seen):
                    match_of[j] = i
                    return True
            return False

        for i in range(ell):
            if not augment(i, set()):
                return None
        return match_of

    a_values = range(m) if mode == "global-a" else [None]
    for a in a_values:
        compat = []
        cells = {}
        for i in range(ell):
            row = []
            for j in range(ell):
                if o2[i] != o1[j]:
                    continue
                if a is None:
                    if (g2[i] - g1[j]) % u != 0:
                        continue
                    aa = ((g2[i] - g1[j]) % m) // u
                else:
                    if (g2[i] - g1[j] - a * u) % m != 0:
                        continue
                    aa = a
                hit = delta_match(i, j, (aa * r) % n)
                if hit is None:
                    continue
                row.append(j)
                cells[(i, j)] = (aa, hit)
            compat.append(row)
        if any(not row for row in compat):
            continue
        match_of = try_matching(compat)
        if match_of is None:
            continue
        if not want_witness:
            return True
        bijection = [0] * ell
        pair_a = [0] * ell
        pair_b = [0] * ell
        for j, i in enumerate(match_of):
            bijection[i] = j
            aa, (ai, bi) = cells[(i, j)]
            pair_a[i], pair_b[i] = ai, bi
        a_used = a if a is not None else cells[(0, bijection[0])][0]
        return True, EquivalenceWitness(tuple(bijection), a_used,
                                        tuple(pair_a), tuple(pair_b))
    return (False, None) if want_witness else False


# -- signatures and slots --------------------------------------------------


def signatures(order: int, genus: int, usable_orders: list[int]):
    """All (g0, non-increasing cone-order tuple) satisfying Riemann-Hurwitz."""
    out = []
    g0 = 0
    while True:
        S = Fraction(2 * genus - 2, order) + 2 - 2 * g0
        if S < 0:
            break
        if S == 0:
            out.append((g0, ()))
        else:
            opts = sorted((o for o in usable_orders if o >= 2), reverse=True)

            def rec(idx, remaining, acc):
                if remaining == 0:
                    out.append((g0, tuple(acc)))
                    return
                for pos in range(idx, len(opts)):
                    o = opts[pos]
                    term = 1 - Fraction(1, o)
                    if term > remaining:
                        continue
                    acc.append(o)
                    rec(pos, remaining - term, acc)
                    acc.pop()

            rec(0, S, [])
        g0 += 1
    return out


@dataclass
class _GroupContext:
    params: GroupParams
    group: object
    slots_by_order: dict[int, list[tuple[int, int]]]
    preimages: dict[tuple[int, int], list[tuple[int, int]]]


def _group_context(params: GroupParams,
                   single_lift: bool = False) -> _GroupContext:
    H = make_group(params)
    m, n, u, r = params.m, params.n, H.u, H.r
    slots: dict[int, list[tuple[int, int]]] = {}
    pre: dict[tuple[int, int], list[tuple[int, int]]] = {}
    lifts_per = 1 if single_lift else n // r
    for x in H.elements():
        b, aa = x
        lifts = []
        for j in range(lifts_per):
            P = (b + j * u) % m
            E = (aa - r * j) % n
            lifts.append((P, E))
        pre[x] = lifts
        slots.setdefault(H.element_order(x), []).extend(lifts)
    for lst in slots.values():
        lst.sort()
    return _GroupContext(params, H, slots, pre)


def _make_dataset(params: GroupParams, g0: int,
                  cones: list[tuple[int, int, int]]) -> MetacyclicDataSet:
    """Build a data set from (gamma, delta, order) cones without re-validation."""
    m, n = params.m, params.n
    triples = tuple(
        (residue_to_pair(gam, m), residue_to_pair(dlt, n), order)
        for gam, dlt, order in cones
    )
    ds = object.__new__(MetacyclicDataSet)
    object.__setattr__(ds, "u", params.u)
    object.__setattr__(ds, "n", params.n)
    object.__setattr__(ds, "r", params.r)
    object.__setattr__(ds, "k", params.k)
    object.__setattr__(ds, "g0", g0)
    object.__setattr__(ds, "triples", triples)
    return ds


# -- enumeration -----------------------------------------------------------


@dataclass
class ClassRow:
    params: GroupParams
    representative: MetacyclicDataSet
    DF: CyclicDataSet | None = None
    DG: CyclicDataSet | None = None

    def sort_key(self):
        return (self.params.order, self.params.n, self.params.r,
                self.params.k % self.params.n, self.representative.g0,
                self.representative.triples)


@dataclass
class ClassificationTable:
    genus: int
    nonsplit: bool
    exclude_quaternions: bool
    rows: list[ClassRow] = field(default_factory=list)


def is_canonical_presentation(params: GroupParams) -> bool:
    """Whether (u,n,r,k) is the preferred presentation of its group.

    The same group admits several metacyclic parameter tuples: any pair
    (x, y) where <x> is a normal cyclic subgroup, the image of y generates
    the (cyclic) quotient, and r' = dlog_x(y^u') divides ord(x) yields the
    presentation (u', ord(x), r', k') with k' = dlog_x(y^-1 x y).  The
    canonical presentation of a group is the one maximizing (n, r, k), so a
    tuple is kept only when no generating pair realizes a larger key.
    """
    u, n, r, k = params.u, params.n, params.r, params.k
    H = make_group(params)
    els = H.elements()
    full = frozenset(els)
    key = (n, r, k)
    one = (0, 0)

    for x in els:
        o = H.element_order(x)
        if (o, n, n - 1) < key:
            continue
        C = H.cyclic_subgroup(x)
        if any(H.conjugate(x, g) not in C for g in (H.F, H.G)):
            continue
        powers = {}
        p = one
        for e in range(o):
            powers[p] = e
            p = H.mul(p, x)
        uq = H.order // o
        for y in els:
            if y in C:
                continue
            kp = powers.get(H.conjugate(x, y))
            if kp is None:
                continue
            rp = powers.get(H.power(y, uq))
            if rp is None:
                continue
            rp = rp or o
            if o % rp:
                continue
            if (o, rp, kp) <= key:
                continue
            if H.generated_subgroup([x, y]) == full:
                return False
    return True


def candidate_groups(genus: int, nonsplit: bool,
                     exclude_quaternions: bool = False,
                     max_order: int | None = None,
                     canonical: bool = True) -> list[GroupParams]:
    cap = max_order if max_order is not None else (
        4 * genus if nonsplit else 84 * (genus - 1))
    out = []
    for u in range(2, cap // 2 + 1):
        for n in range(2, cap // u + 1):
            for r in range(1, n + 1):
                if n % r:
                    continue
                for k in range(1, n):
                    if gcd(k, n) != 1 or pow(k, u, n) != 1:
                        continue
                    if (r * (k - 1)) % n != 0:
                        continue
                    if nonsplit and (k == 1 or r == n):
                        continue
                    params = GroupParams(u, n, r, k)
                    H = make_group(params)
                    if nonsplit and H.is_split:
                        continue
                    if exclude_quaternions and H.is_generalized_quaternion:
                        continue
                    if canonical and not is_canonical_presentation(params):
                        continue
                    out.append(params)
    out.sort(key=lambda p: (p.order, p.n, p.r, p.k))
    return out


def _valid_candidates(params: GroupParams, genus: int,
                      existence_only: bool = False,
                      single_lift: bool = False,
                      class_reps_first_slot: bool = False):
    """Collect oracle-valid data sets for one group at one genus.

    With existence_only, stops after the first valid candidate.  With
    single_lift, only one cover lift per group element is used (sound for
    existence questions, since validity depends only on the images).  With
    class_reps_first_slot, the first cone ranges over conjugacy class
    representatives only (sound for existence, by conjugating the tuple).
    """
    ctx = _group_context(params, single_lift)
    H = ctx.group
    u, n, r = params.u, params.n, params.r
    orders = sorted(ctx.slots_by_order)
    found = []

    for g0, sig in signatures(params.order, genus, orders):
        ell = len(sig)
        if ell == 0:
            ds = _make_dataset(params, g0, [])
            if validate_meta_oracle(ds):
                found.append(ds)
                if existence_only:
                    return found
            continue

        slots = [ctx.slots_by_order[o] for o in sig]
        if class_reps_first_slot and ell > 1:
            reps = []
            seen_classes = set()
            for P, E in slots[0]:
                x = project(P, E, u, n, r)
                if x in seen_classes:
                    continue
                seen_classes.update(H.conjugacy_class(x))
                reps.append((P, E))
            slots = [reps] + slots[1:]

        def leaf(cones):
            if g0 == 0 and gcd(u, *(P % u for P, _, _ in cones)) != 1:
                return False  # images cannot surject onto the top quotient
            ds = _make_dataset(params, g0, cones)
            if validate_meta_oracle(ds):
                found.append(ds)
                return True
            return False

        if g0 == 0:
            # The last cone image is forced by the long relation.
            def rec(idx, prod, acc):
                if existence_only and found:
                    return
                if idx == ell - 1:
                    x = H.inv(prod)
                    if H.element_order(x) != sig[-1]:
                        return
                    for P, E in ctx.preimages[x]:
                        leaf(acc + [(P, E, sig[-1])])
                        if existence_only and found:
                            return
                    return
                for P, E in slots[idx]:
                    x = project(P, E, u, n, r)
                    rec(idx + 1, H.mul(prod, x), acc + [(P, E, sig[idx])])

            rec(0, H.identity, [])
        else:
            def rec(idx, acc):
                if existence_only and found:
                    return
                if idx == ell:
                    leaf(list(acc))
                    return
                for P, E in slots[idx]:
                    rec(idx + 1, acc + [(P, E, sig[idx])])

            rec(0, [])
        if existence_only and found:
            return found
    return found


def _dataset_key(ds: MetacyclicDataSet):
    s = ds.sorted_triples()
    return (s.g0, s.triples)


def _min_valid_ordering(ds: MetacyclicDataSet) -> MetacyclicDataSet:
    """Smallest reordering of the triples that is itself a valid data set.

    Validity can depend on the triple order through the long relation, so the
    plain sorted form of a valid candidate is not always valid.  Orderings are
    scanned lexicographically from the sorted form; the input (known valid in
    some ordering of its class) is returned unchanged if the scan would be too
    large.
    """
    from itertools import permutations

    base = ds.sorted_triples()
    if validate_meta_oracle(base):
        return base
    if ds.ell > 8:
        return ds
    seen = set()
    for perm in permutations(base.triples):
        if perm in seen:
            continue
        seen.add(perm)
        cand = MetacyclicDataSet(ds.u, ds.n, ds.r, ds.k, ds.g0, perm)
        if validate_meta_oracle(cand):
            return cand
    return ds


def classes_for_group(params: GroupParams, genus: int) -> list[MetacyclicDataSet]:
    """Deduplicated class representatives for one group at one genus."""
    seen_exact = set()
    buckets: dict[tuple, list[MetacyclicDataSet]] = {}
    for ds in _valid_candidates(params, genus):
        key = _dataset_key(ds)
        if key in seen_exact:
            continue
        seen_exact.add(key)
        canon = ds.sorted_triples()
        bucket_key = (canon.g0, tuple(sorted(t[2] for t in canon.triples)))
        bucket = buckets.setdefault(bucket_key, [])
        for idx, rep in enumerate(bucket):
            if equivalent(rep, canon):
                if _dataset_key(canon) < _dataset_key(rep):
                    bucket[idx] = canon
                break
        else:
            bucket.append(canon)
    reps = [_min_valid_ordering(rep)
            for bucket in buckets.values() for rep in bucket]
    reps.sort(key=_dataset_key)
    return reps


def enumerate_meta(genus: int, nonsplit: bool = False,
                   exclude_quaternions: bool = False,
                   max_order: int | None = None,
                   workers: int = 1,
                   derive: bool = True,
                   progress=None) -> ClassificationTable:
    from .derive import derive_DF, derive_DG

    table = ClassificationTable(genus, nonsplit, exclude_quaternions)
    groups = candidate_groups(genus, nonsplit, exclude_quaternions, max_order)
    if workers > 1:
        import concurrent.futures

        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_classes_task, [(p, genus) for p in groups]))
        pairs = zip(groups, results)
    else:
        pairs = ((p, classes_for_group(p, genus)) for p in groups)
    for params, reps in pairs:
        if progress:
            progress(f"group {params.label()}: {len(reps)} classes")
        for rep in reps:
            row = ClassRow(params, rep)
            if derive:
                row.DF = derive_DF(rep)
                row.DG = derive_DG(rep)
            table.rows.append(row)
    table.rows.sort(key=ClassRow.sort_key)
    return table


def _classes_task(args):
    params, genus = args
    return classes_for_group(params, genus)


def exists_valid_nonsplit(params: GroupParams, genus: int) -> bool:
    """Whether any valid data set exists for this group at this genus."""
    return bool(_valid_candidates(params, genus, existence_only=True))


# -- pair query ------------------------------------------------------------


def query_pair(DF: CyclicDataSet, DG: CyclicDataSet, u: int, r: int,
               k: int) -> MetacyclicDataSet | None:
    """Find a metacyclic data set whose derived factors are (DF, DG)."""
    from .derive import derive_DF, derive_DG

    n = DF.n
    genus_f = DF.genus()
    if genus_f.denominator != 1:
        return None
    genus = int(genus_f)
    try:
        params = GroupParams(u, n, r, k)
    except GroupParameterError:
        return None
    if DG.n != params.m or DG.genus() != genus_f:
        return None
    target_f = DF.canonical()
    target_g = DG.canonical()
    for ds in _valid_candidates(params, genus):
        if derive_DF(ds).canonical() == target_f and \
                derive_DG(ds).canonical() == target_g:
            return ds.sorted_triples()
    return None
