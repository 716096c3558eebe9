"""Vectorized numpy versions of the compiled kernels.

Same names, signatures and return conventions as ``_numba``. Fibers are built
level by level with ``np.repeat`` expansion; pairwise quantities use dense
(F, F) distance matrices, so these are only meant for moderate fiber sizes.
"""
import numpy as np

_BIG = np.int64(2**62)


def prefix_gcds(gens):
    return np.gcd.accumulate(np.asarray(gens, dtype=np.int64))


def membership_table(gens, limit):
    gens = np.asarray(gens, dtype=np.int64)
    table = np.zeros(limit + 1, dtype=bool)
    table[0] = True
    step = int(gens.min())
    # every n in [start, start+step) only looks back past start, so a block is
    # a pure function of already-finished entries
    for start in range(1, limit + 1, step):
        stop = min(start + step, limit + 1)
        idx = np.arange(start, stop)
        block = np.zeros(stop - start, dtype=bool)
        for g in gens:
            back = idx - g
            ok = back >= 0
            block[ok] |= table[back[ok]]
        table[start:stop] = block
    return table


def _fiber(gens, pg, n, budget):
    k = gens.shape[0]
    if k == 1:
        if n % gens[0] == 0:
            return np.array([[n // gens[0]]], dtype=np.int64), 1
        return np.empty((0, 1), dtype=np.int64), 0
    rem = np.array([n], dtype=np.int64)
    cols = []  # chosen coordinates, highest index first
    for L in range(k - 1, 0, -1):
        counts = rem // gens[L] + 1
        total = int(counts.sum())
        if total > 64 * budget + 1024:
            return None, -1
        owner = np.repeat(np.arange(rem.shape[0]), counts)
        starts = np.repeat(np.cumsum(counts) - counts, counts)
        xs = np.arange(total, dtype=np.int64) - starts
        r = rem[owner] - xs * gens[L]
        keep = r % pg[L - 1] == 0
        cols = [c[owner][keep] for c in cols] + [xs[keep]]
        rem = r[keep]
    x0 = rem // gens[0]
    if x0.shape[0] > budget:
        return None, -1
    X = np.empty((x0.shape[0], k), dtype=np.int64)
    X[:, 0] = x0
    for j, c in zip(range(k - 1, 0, -1), cols):
        X[:, j] = c
    return X, X.shape[0]


def factorizations(gens, n, budget):
    gens = np.asarray(gens, dtype=np.int64)
    X, cnt = _fiber(gens, prefix_gcds(gens), int(n), budget)
    if cnt < 0:
        return np.empty((0, gens.shape[0]), dtype=np.int64), False
    return X, True


def first_factorization(gens, n):
    gens = [int(g) for g in gens]
    k = len(gens)
    pg = [int(g) for g in prefix_gcds(gens)]
    x = [0] * k

    def search(L, r):
        if L == 0:
            if r % gens[0] == 0:
                x[0] = r // gens[0]
                return True
            return False
        for v in range(r // gens[L], -1, -1):
            rr = r - v * gens[L]
            if rr % pg[L - 1] == 0:
                x[L] = v
                if search(L - 1, rr):
                    return True
        return False

    found = search(k - 1, int(n))
    return np.array(x if found else [0] * k, dtype=np.int64), found


def distance_matrix(X):
    X = np.asarray(X, dtype=np.int64)
    diff = X[:, None, :] - X[None, :, :]
    dx = np.clip(diff, 0, None).sum(axis=2)
    return np.maximum(dx, dx.T)


def catenary_of_fiber(X):
    F = X.shape[0]
    if F <= 1:
        return 0
    D = distance_matrix(X)
    best = D[0].copy()
    done = np.zeros(F, dtype=bool)
    done[0] = True
    bottleneck = 0
    for _ in range(F - 1):
        cand = np.where(done, _BIG, best)
        u = int(np.argmin(cand))
        bottleneck = max(bottleneck, int(cand[u]))
        done[u] = True
        best = np.minimum(best, D[u])
    return bottleneck


def tame_of_fiber(X):
    if X.shape[0] <= 1:
        return 0
    D = distance_matrix(X)
    t = 0
    for c in range(X.shape[1]):
        mask = X[:, c] > 0
        if mask.any():
            t = max(t, int(D[:, mask].min(axis=1).max()))
    return t


def support_components(X):
    P = (np.asarray(X) > 0).astype(np.int64)
    A = (P @ P.T) > 0
    F = A.shape[0]
    labels = np.full(F, -1, dtype=np.int64)
    count = 0
    for start in range(F):
        if labels[start] >= 0:
            continue
        reach = np.zeros(F, dtype=bool)
        reach[start] = True
        while True:
            nxt = A[reach].any(axis=0) | reach
            if (nxt == reach).all():
                break
            reach = nxt
        labels[reach] = count
        count += 1
    return count, labels


def length_gaps(X):
    lengths = np.unique(np.asarray(X).sum(axis=1))
    return np.unique(np.diff(lengths))


def _scan(gens, bound, budget, start, fn, fill):
    gens = np.asarray(gens, dtype=np.int64)
    table = membership_table(gens, bound)
    pg = prefix_gcds(gens)
    out = np.full(bound + 1, fill, dtype=np.int64)
    for n in np.flatnonzero(table):
        if n < start:
            continue
        X, cnt = _fiber(gens, pg, int(n), budget)
        if cnt < 0:
            return out, int(n)
        out[n] = fn(X)
    return out, -1


def scan_catenary(gens, bound, budget):
    return _scan(gens, bound, budget, 0, catenary_of_fiber, -1)


def scan_tame(gens, bound, budget):
    return _scan(gens, bound, budget, 1, tame_of_fiber, -1)


def scan_components(gens, bound, budget):
    return _scan(gens, bound, budget, 0, lambda X: support_components(X)[0], 0)


def scan_delta(gens, bound, budget):
    gens = np.asarray(gens, dtype=np.int64)
    table = membership_table(gens, bound)
    pg = prefix_gcds(gens)
    sizes = np.zeros(bound + 1, dtype=np.int64)
    parts = []
    for n in np.flatnonzero(table):
        X, cnt = _fiber(gens, pg, int(n), budget)
        if cnt < 0:
            offsets = np.concatenate([[0], np.cumsum(sizes)])
            return offsets, _concat(parts), int(n)
        gaps = length_gaps(X)
        sizes[n] = gaps.shape[0]
        parts.append(gaps)
    offsets = np.concatenate([[0], np.cumsum(sizes)]).astype(np.int64)
    return offsets, _concat(parts), -1


def _concat(parts):
    if not parts:
        return np.empty(0, dtype=np.int64)
    return np.concatenate(parts).astype(np.int64)


def fibers_csr(gens, lo, hi, budget):
    gens = np.asarray(gens, dtype=np.int64)
    table = membership_table(gens, hi)
    pg = prefix_gcds(gens)
    ns, blocks, offsets = [], [], [0]
    for n in np.flatnonzero(table[lo:hi]) + lo:
        X, cnt = _fiber(gens, pg, int(n), budget)
        if cnt < 0:
            break
        ns.append(int(n))
        blocks.append(X)
        offsets.append(offsets[-1] + cnt)
    else:
        n = -1
    rows = np.concatenate(blocks) if blocks else np.empty((0, gens.shape[0]), dtype=np.int64)
    return (np.array(ns, dtype=np.int64), np.array(offsets, dtype=np.int64),
            rows.astype(np.int64), int(n))


def modulus_violations(rows, offsets, a, b):
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    bad, fi, fj = 0, -1, -1
    for g in range(offsets.shape[0] - 1):
        s, e = int(offsets[g]), int(offsets[g + 1])
        if e - s < 2:
            continue
        X = rows[s:e]
        i, j = np.triu_indices(e - s, 1)
        support = (X[i] + X[j]) > 0
        lo = support.argmax(axis=1)
        hi = X.shape[1] - 1 - support[:, ::-1].argmax(axis=1)
        ok = (X[i, lo] - X[j, lo]) % b[lo] == 0
        ok &= (X[i, hi] - X[j, hi]) % a[hi - 1] == 0
        nbad = int((~ok).sum())
        if nbad and bad == 0:
            first = int(np.flatnonzero(~ok)[0])
            fi, fj = s + int(i[first]), s + int(j[first])
        bad += nbad
    return bad, fi, fj

