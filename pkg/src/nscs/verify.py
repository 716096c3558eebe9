"""Closed forms versus brute force on random compound sequences.

Each ``check_*`` function takes one compound sequence and returns a list of
human-readable failures (empty means the property held). :func:`run_suite`
drives them over seeded random instances.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from nscs import factorization as fz
from nscs import invariants as inv
from nscs import kernels
from nscs import oracle
from nscs.compound import CompoundSequence
from nscs.sampling import random_compounds

#: Fibers are pulled in windows of this many consecutive elements.
WINDOW = 20_000


def max_betti(S: CompoundSequence) -> int:
    """Largest Betti element; every Betti-based scan must reach at least this far."""
    return max(inv.betti_elements(S))


def check_apery(S, rng=None):
    out = []
    G = oracle.GenericSemigroup(S.n)
    g = inv.frobenius(S)
    for i, ni in enumerate(S.n):
        box = inv.apery(S, i)
        if box != oracle.apery_oracle(G, ni):
            out.append(f"Ap(S, n_{i}) differs from the least-per-residue oracle")
        if len(box) != ni or len({v % ni for v in box}) != ni:
            out.append(f"|Ap(S, n_{i})| = {len(box)} or residues collide (n_{i} = {ni})")
        if max(box) - ni != g:
            out.append(f"max Ap(S, n_{i}) - n_{i} = {max(box) - ni} != g(S) = {g}")
    return out


def check_frobenius(S, rng=None):
    out = []
    G = oracle.GenericSemigroup(S.n)
    if inv.frobenius(S) != oracle.frobenius_oracle(G):
        out.append(f"frobenius {inv.frobenius(S)} != oracle {oracle.frobenius_oracle(G)}")
    if (1 + inv.frobenius(S)) % 2:
        out.append("1 - n_0 + sum n_j (a_j - 1) is odd")
    elif inv.genus(S) != oracle.genus_oracle(G):
        out.append(f"genus {inv.genus(S)} != oracle {oracle.genus_oracle(G)}")
    return out


def check_betti(S, rng=None):
    out = []
    res = oracle.betti_oracle(S, max_betti(S))
    if res.betti != inv.betti_elements(S):
        out.append(f"Betti elements {sorted(res.betti)} != {sorted(inv.betti_elements(S))}")
    if res.presentation_size != S.p:
        out.append(f"presentation size {res.presentation_size} != p = {S.p}")
    omega = {fz.delta(S, i).unordered() for i in range(1, S.p + 1)}
    found = {t.unordered() for t in res.relations}
    if found != omega:
        out.append(f"relations {sorted(map(sorted, found))} do not match the basic swaps")
    return out


def check_catenary(S, rng=None):
    out = []
    scan = oracle.catenary_scan(S, max_betti(S))
    c = inv.catenary_degree(S)
    if scan.aggregate != c:
        out.append(f"oracle catenary {scan.aggregate} != max b_i = {c}")
    if not set(scan.argmax) & inv.betti_elements(S):
        out.append(f"catenary maximum not attained at a Betti element (argmax {scan.argmax[:5]})")
    return out


def delta_bound(S) -> int:
    return max(4 * inv.frobenius(S), max_betti(S))


def check_delta(S, rng=None, bound=None):
    out = []
    dd = inv.delta_data(S)
    agg = oracle.delta_scan(S, bound if bound is not None else delta_bound(S)).aggregate
    if not dd.N <= agg:
        out.append(f"N = {sorted(dd.N)} not inside scanned delta set {sorted(agg)}")
    if not agg or min(agg) != dd.min_delta or max(agg) != dd.max_delta:
        out.append(f"scanned delta set {sorted(agg)} has wrong extremes (expected {dd.min_delta}, {dd.max_delta})")
    if dd.determined and agg != dd.exact:
        out.append(f"scanned delta set {sorted(agg)} != determined {sorted(dd.exact)}")
    return out


def check_tame(S, rng=None):
    out = []
    tb = inv.tame_lower_bound(S)
    for n, want in ((tb.witness_r, tb.bound_r), (tb.witness_s, tb.bound_s)):
        got = oracle.tame_oracle(S, n)
        if got < want:
            out.append(f"t({n}) = {got} below the lower bound {want}")
    return out


def _windows(S, bound, budget=oracle.DEFAULT_BUDGET):
    gens = np.array(S.n, dtype=np.int64)
    for lo in range(0, bound + 1, WINDOW):
        hi = min(lo + WINDOW, bound + 1)
        ns, offsets, rows, failed = kernels.fibers_csr(gens, lo, hi, budget)
        if failed >= 0:
            raise oracle.WorkBudgetExceeded(failed, budget)
        yield ns, offsets, rows


def normal_bound(S) -> int:
    return max(2 * inv.frobenius(S), 0)


def check_normalform(S, rng=None, bound=None, samples=20):
    """Uniqueness, coordinate maximality and extremal lengths of i-normal forms."""
    rng = rng or random.Random(0)
    bound = normal_bound(S) if bound is None else bound
    out = []
    p = S.p
    a = np.array(S.a, dtype=np.int64)
    b = np.array(S.b, dtype=np.int64)
    members = []
    for ns, offsets, rows in _windows(S, bound):
        starts = offsets[:-1]
        lengths = rows.sum(axis=1)
        owner = np.repeat(np.arange(ns.shape[0]), np.diff(offsets))
        normal_len = {}
        for i in range(p + 1):
            mask = np.ones(rows.shape[0], dtype=bool)
            if i:
                mask &= (rows[:, :i] < b[:i]).all(axis=1)
            if i < p:
                mask &= (rows[:, i + 1:] < a[i:]).all(axis=1)
            per = np.add.reduceat(mask.astype(np.int64), starts)
            if (per != 1).any():
                n = int(ns[np.flatnonzero(per != 1)[0]])
                out.append(f"n = {n} has {int(per[per != 1][0])} {i}-normal factorizations")
                return out
            idx = np.flatnonzero(mask)  # exactly one per fiber, in fiber order
            top = np.maximum.reduceat(rows[:, i], starts)
            if (rows[idx, i] != top).any():
                n = int(ns[np.flatnonzero(rows[idx, i] != top)[0]])
                out.append(f"{i}-normal form of {n} does not maximise coordinate {i}")
            normal_len[i] = lengths[idx]
        if (normal_len[p] != np.minimum.reduceat(lengths, starts)).any():
            out.append("p-normal length is not the minimum length")
        if (normal_len[0] != np.maximum.reduceat(lengths, starts)).any():
            out.append("0-normal length is not the maximum length")
        del owner
        members.append(ns)
    members = np.concatenate(members) if members else np.zeros(0, dtype=np.int64)
    for n in rng.sample(members.tolist(), min(samples, members.shape[0])):
        fiber = set(fz.enumerate_factorizations(S, n))
        for i in range(p + 1):
            x = fz.i_normal(S, n, i)
            if x != fz.i_normal_direct(S, n, i) or x not in fiber or not fz.is_i_normal(S, x, i):
                out.append(f"i_normal({n}, {i}) = {x} disagrees with the residue construction")
    return out


def check_modulus(S, rng=None, bound=None):
    bound = normal_bound(S) if bound is None else bound
    out = []
    for ns, offsets, rows in _windows(S, bound):
        bad, i, j = kernels.modulus_violations(rows, offsets, np.array(S.a, np.int64), np.array(S.b, np.int64))
        if bad:
            out.append(f"{bad} pairs break the extremal congruences, e.g. {tuple(rows[i])} vs {tuple(rows[j])}")
    return out


def check_chains(S, rng=None, pairs=100, bound=None):
    rng = rng or random.Random(0)
    bound = normal_bound(S) if bound is None else bound
    out = []
    G = oracle.GenericSemigroup(S.n)
    candidates = np.flatnonzero(G.table(max(bound, 1)))
    tries = 0
    done = 0
    while done < pairs and tries < 50 * pairs:
        tries += 1
        n = int(rng.choice(candidates.tolist()))
        X = fz.enumerate_factorizations(S, n)
        if len(X) < 2:
            continue
        x, y = rng.sample(X, 2)
        for mode in ("left", "right"):
            chain = fz.basic_chain(S, x, y, mode)
            for problem in fz.check_chain(S, chain, x, y, mode):
                out.append(f"{mode}-first chain {x} -> {y}: {problem}")
        done += 1
    return out


def check_dichotomy(S, rng=None):
    out = []
    for i in range(1, S.p + 1):
        n = S.a[i - 1] * S.n[i]
        lower, upper = fz.dichotomy_check(S, i)
        fiber = fz.enumerate_factorizations(S, n)
        if len(lower) + len(upper) != len(fiber):
            out.append(f"some factorization of {n} fits neither side")
        k = S.p + 1
        if fz.unit(k, i, S.a[i - 1]) not in lower or fz.unit(k, i - 1, S.b[i - 1]) not in upper:
            out.append(f"canonical witnesses of {n} missing")
    return out


SUITES = {
    "apery": check_apery,
    "frobenius": check_frobenius,
    "betti": check_betti,
    "catenary": check_catenary,
    "delta": check_delta,
    "tame": check_tame,
    "normalform": check_normalform,
    "chains": check_chains,
    "dichotomy": check_dichotomy,
    "modulus": check_modulus,
}


@dataclass
class SuiteReport:
    suite: str
    seed: int
    count: int
    passed: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def run_suite(suite: str, seed: int = 0, count: int = 25) -> list[SuiteReport]:
    """Run one suite (or ``"all"``) over ``count`` seeded random instances."""
    names = list(SUITES) if suite == "all" else [suite]
    if any(nm not in SUITES for nm in names):
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)} or 'all'")
    instances = random_compounds(seed, count)
    reports = []
    for nm in names:
        rep = SuiteReport(nm, seed, count)
        rng = random.Random(seed)
        for S in instances:
            problems = SUITES[nm](S, rng)
            if problems:
                rep.failures.append({"pairs": [list(pr) for pr in S.pairs], "gens": list(S.n),
                                     "problems": problems})
            else:
                rep.passed += 1
        reports.append(rep)
    return reports


# --- per-field comparison for a single sequence --------------------------------

AGREE = "AGREE"
CONSISTENT = "CONSISTENT"
MISMATCH = "MISMATCH"
INCONCLUSIVE = "INCONCLUSIVE"


def cross_check(S: CompoundSequence, bound: int | None = None, budget: int = oracle.DEFAULT_BUDGET) -> dict:
    """Compare every closed form of ``S`` with the oracle.

    ``bound`` overrides all scan bounds; without it Betti and catenary scan to
    the largest Betti element, delta to ``max(4 g, max Betti)`` and the tame
    degree is skipped (returned as None). MISMATCH means the scanned data
    contradicts the closed form; a shortfall that a larger bound might cure is
    INCONCLUSIVE.
    """
    G = oracle.GenericSemigroup(S.n)
    out: dict = {}

    def entry(status, closed, found, scan_bound=None):
        e = {"status": status, "closed_form": closed, "oracle": found}
        if scan_bound is not None:
            e["bound"] = scan_bound
        return e

    g = inv.frobenius(S)
    found = oracle.frobenius_oracle(G)
    out["frobenius"] = entry(AGREE if found == g else MISMATCH, g, found)
    gen = inv.genus(S)
    found = oracle.genus_oracle(G)
    out["genus"] = entry(AGREE if found == gen else MISMATCH, gen, found)
    ok = all(inv.apery(S, i) == oracle.apery_oracle(G, ni) for i, ni in enumerate(S.n))
    sizes = [len(oracle.apery_oracle(G, ni)) for ni in S.n]
    out["apery_sizes"] = entry(AGREE if ok else MISMATCH, list(S.n), sizes)
    if S.p == 0:
        return out

    top = max_betti(S)
    full = bound is None or bound >= top
    sb = top if bound is None else bound
    betti = inv.betti_elements(S)
    res = oracle.betti_oracle(G, sb, budget)
    expect = frozenset(v for v in betti if v <= sb)
    if res.betti != expect:
        status = MISMATCH
    else:
        status = AGREE if full else INCONCLUSIVE
    out["betti"] = entry(status, betti, res.betti, sb)

    c = inv.catenary_degree(S)
    scan = oracle.catenary_scan(G, sb, budget)
    if scan.aggregate > c or (full and (scan.aggregate != c or not set(scan.argmax) & betti)):
        status = MISMATCH
    else:
        status = AGREE if full else INCONCLUSIVE
    out["catenary"] = entry(status, c, scan.aggregate, sb)

    dd = inv.delta_data(S)
    db = delta_bound(S) if bound is None else bound
    agg = oracle.delta_scan(G, db, budget).aggregate
    closed = {"N": dd.N, "min": dd.min_delta, "max": dd.max_delta, "exact": dd.exact}
    impossible = any(v > dd.max_delta or v % dd.min_delta for v in agg)
    if dd.determined:
        good = agg == dd.exact
    else:
        good = bool(agg) and min(agg) == dd.min_delta and max(agg) == dd.max_delta and dd.N <= agg
    if impossible or (dd.determined and not agg <= dd.exact):
        status = MISMATCH
    elif good:
        status = AGREE if dd.determined else CONSISTENT
    else:
        status = INCONCLUSIVE  # nothing contradicts the closed form; values still missing
    out["delta"] = entry(status, closed, agg, db)

    if bound is None:
        out["tame"] = None
        return out
    tb = inv.tame_lower_bound(S)
    found = oracle.tame_scan(G, bound, budget).aggregate
    if found == tb.bound:
        status = AGREE
    elif found > tb.bound:
        status = CONSISTENT
    else:
        witness = tb.witness_r if tb.bound_r >= tb.bound_s else tb.witness_s
        status = MISMATCH if witness <= bound else INCONCLUSIVE
    out["tame"] = entry(status, tb.bound, found, bound)
    return out
