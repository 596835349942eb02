"""Cross-validation sweep: run the condition-by-condition (literal) validator
and the epimorphism-search (oracle) validator on the same candidates and
demand identical verdicts.

Candidate space: for every admissible parameter tuple with u*n below the
order cap, every orbit genus up to the cap, and every Riemann-Hurwitz
signature whose genus lands in range, all cone sequences with non-increasing
orders over the cover pairs of the required element order.  These candidates
all have correct stored orders by construction, so a deterministic sample of
them is additionally mutated (stored order or class entries perturbed) to
exercise rejection paths on malformed-but-well-typed inputs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd

from .classify import _group_context, _make_dataset, signatures
from .groups import GroupParams
from .meta import (MetacyclicDataSet, residue_to_pair, validate_meta_literal,
                   validate_meta_oracle)


@dataclass
class SweepReport:
    max_order: int
    max_genus: int
    max_g0: int
    candidates: int = 0
    valid: int = 0
    mutated: int = 0
    disagreements: list[str] = field(default_factory=list)

    @property
    def agreed(self) -> bool:
        return not self.disagreements

    def to_json(self) -> dict:
        return {
            "schema": "mcg/1",
            "type": "sweep-report",
            "max_order": self.max_order,
            "max_genus": self.max_genus,
            "max_g0": self.max_g0,
            "candidates": self.candidates,
            "valid": self.valid,
            "mutated": self.mutated,
            "disagreements": self.disagreements,
        }

    def to_text(self) -> str:
        head = (f"sweep over u*n <= {self.max_order}, genus <= "
                f"{self.max_genus}, g0 <= {self.max_g0}: "
                f"{self.candidates} candidates ({self.valid} valid, "
                f"{self.mutated} mutated)")
        if self.agreed:
            return head + "\n  validators agreed on all candidates"
        return head + "\n  DISAGREEMENTS:\n  " + "\n  ".join(
            self.disagreements)


def _sweep_params(max_order: int) -> list[GroupParams]:
    out = []
    for u in range(2, max_order // 2 + 1):
        for n in range(2, max_order // u + 1):
            for r in range(1, n + 1):
                if n % r:
                    continue
                for k in range(1, n):
                    if gcd(k, n) != 1 or pow(k, u, n) != 1:
                        continue
                    if (r * (k - 1)) % n != 0:
                        continue
                    out.append(GroupParams(u, n, r, k))
    out.sort(key=lambda p: (p.order, p.n, p.r, p.k))
    return out


def _mutations(ds: MetacyclicDataSet, rng: random.Random):
    """Well-typed corruptions of a candidate: wrong stored order, or a
    perturbed class entry.  Only structurally constructible ones are kept."""
    out = []
    if ds.ell == 0:
        return out
    i = rng.randrange(ds.ell)
    (p1, p2, order) = ds.triples[i]
    m, n = ds.m, ds.n

    wrong = [d for d in range(2, ds.u * ds.n + 1)
             if (ds.u * ds.n) % d == 0 and d != order]
    if wrong:
        bad = list(ds.triples)
        bad[i] = (p1, p2, rng.choice(wrong))
        out.append(bad)

    gam = ds.gamma(i)
    bad_gam = (gam + rng.randrange(1, m)) % m
    bad = list(ds.triples)
    bad[i] = (residue_to_pair(bad_gam, m), p2, order)
    out.append(bad)

    dlt = ds.delta(i)
    bad_dlt = (dlt + rng.randrange(1, n)) % n
    bad = list(ds.triples)
    bad[i] = (p1, residue_to_pair(bad_dlt, n), order)
    out.append(bad)

    results = []
    for triples in out:
        try:
            results.append(MetacyclicDataSet(ds.u, ds.n, ds.r, ds.k, ds.g0,
                                             tuple(triples)))
        except ValueError:
            continue
    return results


def _check(ds: MetacyclicDataSet, report: SweepReport) -> None:
    lit = validate_meta_literal(ds)
    orc = validate_meta_oracle(ds)
    report.candidates += 1
    if lit.valid != orc.valid:
        report.disagreements.append(
            f"{ds}: literal={lit.valid} ({lit.failed_condition}) "
            f"oracle={orc.valid} ({orc.failed_condition})"
        )
    elif lit.valid:
        report.valid += 1


def _sweep_one(params: GroupParams, min_genus: int, max_genus: int,
               max_g0: int, mutation_rate: int, seed: int) -> SweepReport:
    """Sweep a single group; deterministic regardless of scheduling because
    the mutation RNG is seeded per group."""
    report = SweepReport(0, max_genus, max_g0)
    rng = random.Random((seed, params.u, params.n, params.r, params.k).__repr__())
    counter = 0
    ctx = _group_context(params)
    orders = sorted(ctx.slots_by_order)
    sigs = []
    for genus in range(min_genus, max_genus + 1):
        for g0, sig in signatures(params.order, genus, orders):
            if g0 <= max_g0:
                sigs.append((g0, sig))
    for g0, sig in sigs:
        ell = len(sig)
        slots = [ctx.slots_by_order[o] for o in sig]

        def visit(cones):
            nonlocal counter
            ds = _make_dataset(params, g0, cones)
            _check(ds, report)
            counter += 1
            if counter % mutation_rate == 0:
                for bad in _mutations(ds, rng):
                    _check(bad, report)
                    report.mutated += 1

        def rec(idx, acc):
            if idx == ell:
                visit(acc)
                return
            nxt = idx + 1
            o = sig[idx]
            for P, E in slots[idx]:
                rec(nxt, acc + [(P, E, o)])

        rec(0, [])
    return report


def _sweep_task(args):
    return _sweep_one(*args)


def dual_validator_sweep(max_order: int = 48, max_genus: int = 6,
                         max_g0: int = 2, min_genus: int = 2,
                         mutation_rate: int = 50,
                         seed: int = 20260824,
                         workers: int = 1,
                         progress=None) -> SweepReport:
    """Compare both validators on every enumerated candidate; returns the
    tally and any disagreements.  Every mutation_rate-th base candidate also
    spawns corrupted variants (deterministic under the fixed seed)."""
    report = SweepReport(max_order, max_genus, max_g0)
    plist = _sweep_params(max_order)
    args = [(p, min_genus, max_genus, max_g0, mutation_rate, seed)
            for p in plist]

    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(_sweep_task, args, chunksize=1))
    else:
        partials = []
        for a in args:
            if progress:
                progress(f"sweeping {a[0].label()}")
            partials.append(_sweep_one(*a))

    for part in partials:
        report.candidates += part.candidates
        report.valid += part.valid
        report.mutated += part.mutated
        report.disagreements.extend(part.disagreements)
    return report
