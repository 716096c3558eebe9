"""Compiled kernels.

All arrays are int64. A fiber is an (F, k) array with one factorization per
row; rows come out in enumeration order and callers sort when they need a
canonical order. Kernels that can blow up take a ``budget`` (maximum fiber
size) and report failure through a sentinel instead of raising, since numba
cannot raise custom exceptions with payloads.
"""
import numpy as np
from numba import njit

_BIG = np.int64(2**62)


@njit(cache=True)
def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@njit(cache=True)
def prefix_gcds(gens):
    out = np.empty(gens.shape[0], np.int64)
    g = 0
    for i in range(gens.shape[0]):
        g = _gcd(g, gens[i])
        out[i] = g
    return out


@njit(cache=True)
def membership_table(gens, limit):
    table = np.zeros(limit + 1, np.bool_)
    table[0] = True
    for g in gens:
        for n in range(g, limit + 1):
            if table[n - g]:
                table[n] = True
    return table


@njit(cache=True)
def _fiber(gens, pg, n, budget, buf):
    # Depth-first over x_{k-1}, ..., x_1; x_0 is forced. A residual is only
    # pursued when divisible by gcd of the generators still available.
    k = gens.shape[0]
    if k == 1:
        if n % gens[0] == 0:
            buf[0, 0] = n // gens[0]
            return buf, 1
        return buf, 0
    cnt = 0
    x = np.zeros(k, np.int64)
    rem = np.zeros(k + 1, np.int64)
    rem[k] = n
    L = k - 1
    x[L] = -1
    while L < k:
        x[L] += 1
        r = rem[L + 1] - x[L] * gens[L]
        if r < 0:
            L += 1
            continue
        if r % pg[L - 1] != 0:
            continue
        if L == 1:
            if cnt >= budget:
                return buf, -1
            if cnt == buf.shape[0]:
                grown = np.empty((min(2 * cnt, budget), k), np.int64)
                grown[:cnt] = buf[:cnt]
                buf = grown
            buf[cnt, 0] = r // gens[0]
            for j in range(1, k):
                buf[cnt, j] = x[j]
            cnt += 1
            continue
        rem[L] = r
        L -= 1
        x[L] = -1
    return buf, cnt


@njit(cache=True)
def factorizations(gens, n, budget):
    """Return (rows, ok); ok is False when the fiber exceeds ``budget``."""
    buf = np.empty((min(budget, 16), gens.shape[0]), np.int64)
    buf, cnt = _fiber(gens, prefix_gcds(gens), n, budget, buf)
    if cnt < 0:
        return buf[:0].copy(), False
    return buf[:cnt].copy(), True


@njit(cache=True)
def first_factorization(gens, n):
    """Greedy-first depth-first search for a single factorization of n."""
    k = gens.shape[0]
    x = np.zeros(k, np.int64)
    if k == 1:
        if n % gens[0] == 0:
            x[0] = n // gens[0]
            return x, True
        return x, False
    pg = prefix_gcds(gens)
    rem = np.zeros(k + 1, np.int64)
    rem[k] = n
    L = k - 1
    x[L] = n // gens[L] + 1
    while L < k:
        x[L] -= 1
        if x[L] < 0:
            L += 1
            continue
        r = rem[L + 1] - x[L] * gens[L]
        if r % pg[L - 1] != 0:
            continue
        if L == 1:
            x[0] = r // gens[0]
            return x, True
        rem[L] = r
        L -= 1
        x[L] = r // gens[L] + 1
    return np.zeros(k, np.int64), False


@njit(cache=True)
def _dist(X, i, j):
    dx = 0
    dy = 0
    for c in range(X.shape[1]):
        u = X[i, c]
        v = X[j, c]
        if u > v:
            dx += u - v
        else:
            dy += v - u
    return max(dx, dy)


@njit(cache=True)
def catenary_of_fiber(X):
    """Bottleneck of a minimum spanning tree of the fiber under d (Prim)."""
    F = X.shape[0]
    if F <= 1:
        return 0
    best = np.full(F, _BIG, np.int64)
    done = np.zeros(F, np.bool_)
    best[0] = 0
    bottleneck = 0
    for _ in range(F):
        u = -1
        bu = _BIG
        for v in range(F):
            if not done[v] and best[v] < bu:
                u = v
                bu = best[v]
        done[u] = True
        if bu > bottleneck:
            bottleneck = bu
        for v in range(F):
            if not done[v]:
                d = _dist(X, u, v)
                if d < best[v]:
                    best[v] = d
    return bottleneck


@njit(cache=True)
def tame_of_fiber(X):
    F, k = X.shape
    if F <= 1:
        return 0
    best = np.full((F, k), _BIG, np.int64)
    for z in range(F):
        for y in range(F):
            d = 0 if z == y else _dist(X, z, y)
            for c in range(k):
                if X[y, c] > 0 and d < best[z, c]:
                    best[z, c] = d
    t = 0
    for c in range(k):
        if best[0, c] == _BIG:
            continue  # no factorization uses generator c
        for z in range(F):
            if best[z, c] > t:
                t = best[z, c]
    return t


@njit(cache=True)
def _find(parent, u):
    while parent[u] != u:
        parent[u] = parent[parent[u]]
        u = parent[u]
    return u


@njit(cache=True)
def support_components(X):
    """Label rows by connected component of the shared-support graph.

    Labels are 0..c-1 numbered by first row of each component; returns (c, labels).
    """
    F, k = X.shape
    parent = np.arange(F)
    for i in range(F):
        for j in range(i + 1, F):
            ri = _find(parent, i)
            rj = _find(parent, j)
            if ri == rj:
                continue
            for c in range(k):
                if X[i, c] > 0 and X[j, c] > 0:
                    if ri < rj:
                        parent[rj] = ri
                    else:
                        parent[ri] = rj
                    break
    labels = np.full(F, -1, np.int64)
    count = 0
    for i in range(F):
        r = _find(parent, i)
        if labels[r] < 0:
            labels[r] = count
            count += 1
        labels[i] = labels[r]
    return count, labels


@njit(cache=True)
def length_gaps(X):
    """Sorted successive differences of the distinct factorization lengths."""
    lengths = np.sort(X.sum(axis=1))
    out = np.empty(lengths.shape[0], np.int64)
    m = 0
    for i in range(1, lengths.shape[0]):
        d = lengths[i] - lengths[i - 1]
        if d > 0:
            out[m] = d
            m += 1
    return np.unique(out[:m])


# --- streaming scans over 0..bound -------------------------------------------


@njit(cache=True)
def scan_catenary(gens, bound, budget):
    """c(n) for n in 0..bound (-1 for non-members); second value is the
    first element over budget, or -1."""
    table = membership_table(gens, bound)
    pg = prefix_gcds(gens)
    out = np.full(bound + 1, -1, np.int64)
    buf = np.empty((16, gens.shape[0]), np.int64)
    for n in range(bound + 1):
        if not table[n]:
            continue
        buf, cnt = _fiber(gens, pg, n, budget, buf)
        if cnt < 0:
            return out, n
        out[n] = catenary_of_fiber(buf[:cnt])
    return out, -1


@njit(cache=True)
def scan_tame(gens, bound, budget):
    table = membership_table(gens, bound)
    pg = prefix_gcds(gens)
    out = np.full(bound + 1, -1, np.int64)
    buf = np.empty((16, gens.shape[0]), np.int64)
    for n in range(1, bound + 1):
        if not table[n]:
            continue
        buf, cnt = _fiber(gens, pg, n, budget, buf)
        if cnt < 0:
            return out, n
        out[n] = tame_of_fiber(buf[:cnt])
    return out, -1


@njit(cache=True)
def scan_components(gens, bound, budget):
    """Number of shared-support components of each fiber (0 for non-members)."""
    table = membership_table(gens, bound)
    pg = prefix_gcds(gens)
    out = np.zeros(bound + 1, np.int64)
    buf = np.empty((16, gens.shape[0]), np.int64)
    for n in range(bound + 1):
        if not table[n]:
            continue
        buf, cnt = _fiber(gens, pg, n, budget, buf)
        if cnt < 0:
            return out, n
        c, _ = support_components(buf[:cnt])
        out[n] = c
    return out, -1


@njit(cache=True)
def scan_delta(gens, bound, budget):
    """Delta sets of all n in 0..bound in CSR form: data[offsets[n]:offsets[n+1]]."""
    table = membership_table(gens, bound)
    pg = prefix_gcds(gens)
    offsets = np.zeros(bound + 2, np.int64)
    data = np.empty(64, np.int64)
    m = 0
    buf = np.empty((16, gens.shape[0]), np.int64)
    for n in range(bound + 1):
        offsets[n] = m
        if not table[n]:
            continue
        buf, cnt = _fiber(gens, pg, n, budget, buf)
        if cnt < 0:
            offsets[n + 1:] = m
            return offsets, data[:m].copy(), n
        gaps = length_gaps(buf[:cnt])
        if m + gaps.shape[0] > data.shape[0]:
            grown = np.empty(2 * (m + gaps.shape[0]), np.int64)
            grown[:m] = data[:m]
            data = grown
        data[m:m + gaps.shape[0]] = gaps
        m += gaps.shape[0]
    offsets[bound + 1] = m
    return offsets, data[:m].copy(), -1


@njit(cache=True)
def fibers_csr(gens, lo, hi, budget):
    """All fibers of members n in [lo, hi): (ns, offsets, rows, failed_at)."""
    table = membership_table(gens, hi)
    pg = prefix_gcds(gens)
    k = gens.shape[0]
    ns = np.empty(hi - lo + 1, np.int64)
    offsets = np.zeros(hi - lo + 2, np.int64)
    rows = np.empty((64, k), np.int64)
    g = 0
    m = 0
    buf = np.empty((16, k), np.int64)
    for n in range(lo, hi):
        if not table[n]:
            continue
        buf, cnt = _fiber(gens, pg, n, budget, buf)
        if cnt < 0:
            return ns[:g].copy(), offsets[:g + 1].copy(), rows[:m].copy(), n
        if m + cnt > rows.shape[0]:
            grown = np.empty((2 * (m + cnt), k), np.int64)
            grown[:m] = rows[:m]
            rows = grown
        rows[m:m + cnt] = buf[:cnt]
        ns[g] = n
        m += cnt
        g += 1
        offsets[g] = m
    return ns[:g].copy(), offsets[:g + 1].copy(), rows[:m].copy(), -1


@njit(cache=True)
def modulus_violations(rows, offsets, a, b):
    """Count pairs within each fiber breaking the extremal-coordinate congruences.

    For x != y with m = min(x+y), m' = max(x+y): x_m = y_m mod b_{m+1} and
    x_{m'} = y_{m'} mod a_{m'}. Returns (count, first_row_i, first_row_j).
    """
    k = rows.shape[1]
    bad = 0
    fi = -1
    fj = -1
    for g in range(offsets.shape[0] - 1):
        for i in range(offsets[g], offsets[g + 1]):
            for j in range(i + 1, offsets[g + 1]):
                lo = -1
                hi = -1
                for c in range(k):
                    if rows[i, c] + rows[j, c] > 0:
                        if lo < 0:
                            lo = c
                        hi = c
                ok = (rows[i, lo] - rows[j, lo]) % b[lo] == 0
                ok = ok and (rows[i, hi] - rows[j, hi]) % a[hi - 1] == 0
                if not ok:
                    if bad == 0:
                        fi = i
                        fj = j
                    bad += 1
    return bad, fi, fj
