"""Compiled restatement of the greedy TER shift policy, fast enough for an
exhaustive sweep over small sentences. Sentences are int arrays."""

import numpy as np
from numba import njit


@njit(cache=True)
def _lev(a, b):
    n, m = a.shape[0], b.shape[0]
    d = np.empty((n + 1, m + 1), dtype=np.int64)
    for i in range(n + 1):
        d[i, 0] = i
    for j in range(m + 1):
        d[0, j] = j
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            best = d[i - 1, j] + 1
            if d[i, j - 1] + 1 < best:
                best = d[i, j - 1] + 1
            sub = d[i - 1, j - 1] + (0 if a[i - 1] == b[j - 1] else 1)
            if sub < best:
                best = sub
            d[i, j] = best
    return d[n, m]


@njit(cache=True)
def _in_ref(h, i, L, r):
    for j in range(r.shape[0] - L + 1):
        ok = True
        for k in range(L):
            if h[i + k] != r[j + k]:
                ok = False
                break
        if ok:
            return True
    return False


@njit(cache=True)
def _moved(h, i, L, d):
    n = h.shape[0]
    rest = np.empty(n - L, dtype=h.dtype)
    p = 0
    for k in range(n):
        if k < i or k >= i + L:
            rest[p] = h[k]
            p += 1
    out = np.empty(n, dtype=h.dtype)
    for k in range(d):
        out[k] = rest[k]
    for k in range(L):
        out[d + k] = h[i + k]
    for k in range(d, n - L):
        out[L + k] = rest[k]
    return out


@njit(cache=True)
def ter_greedy_jit(h, r, max_span=10):
    cur = _lev(h, r)
    shifts = 0
    while cur > 0:
        n = h.shape[0]
        best_gain, best_L, best_i, best_d = 0, 0, 0, 0
        for L in range(1, min(n, max_span) + 1):
            for i in range(n - L + 1):
                if not _in_ref(h, i, L, r):
                    continue
                for d in range(n - L + 1):
                    if d == i:
                        continue
                    gain = cur - _lev(_moved(h, i, L, d), r)
                    if gain <= 0:
                        continue
                    # larger gain, then longer, then leftmost block, then leftmost destination
                    better = False
                    if gain > best_gain:
                        better = True
                    elif gain == best_gain:
                        if L > best_L:
                            better = True
                        elif L == best_L and (i < best_i or (i == best_i and d < best_d)):
                            better = True
                    if better:
                        best_gain, best_L, best_i, best_d = gain, L, i, d
        if best_gain == 0:
            break
        h = _moved(h, best_i, best_L, best_d)
        cur -= best_gain
        shifts += 1
    return cur + shifts


@njit(cache=True)
def _chunks(assign):
    ch = 0
    prev_i, prev_j = -2, -2
    for i in range(assign.shape[0]):
        j = assign[i]
        if j < 0:
            continue
        if not (i == prev_i + 1 and j == prev_j + 1):
            ch += 1
        prev_i, prev_j = i, j
    return ch


@njit(cache=True)
def _lex_less(a, b):
    # compare the sorted link lists (i, a[i]) of two equal-size matchings
    ia, ib = 0, 0
    n = a.shape[0]
    while True:
        while ia < n and a[ia] < 0:
            ia += 1
        while ib < n and b[ib] < 0:
            ib += 1
        if ia == n or ib == n:
            return False
        if ia != ib:
            return ia < ib
        if a[ia] != b[ib]:
            return a[ia] < b[ib]
        ia += 1
        ib += 1


@njit(cache=True)
def meteor_exact_jit(h, r):
    """Exact-match METEOR by trying every assignment of hypothesis words to
    equal reference words (or to nothing). Returns (score, m, chunks)."""
    n, k = h.shape[0], r.shape[0]
    opts = np.full((n, k + 1), -1, dtype=np.int64)
    nopt = np.ones(n, dtype=np.int64)  # option 0 is "unmatched"
    for i in range(n):
        for j in range(k):
            if h[i] == r[j]:
                opts[i, nopt[i]] = j
                nopt[i] += 1
    idx = np.zeros(n, dtype=np.int64)
    assign = np.full(n, -1, dtype=np.int64)
    best = np.full(n, -1, dtype=np.int64)
    best_m, best_ch = -1, 0
    used = np.zeros(k, dtype=np.bool_)
    while True:
        ok = True
        used[:] = False
        m = 0
        for i in range(n):
            j = opts[i, idx[i]]
            assign[i] = j
            if j >= 0:
                if used[j]:
                    ok = False
                    break
                used[j] = True
                m += 1
        if ok:
            ch = _chunks(assign)
            if m > best_m or (m == best_m and (ch < best_ch or (ch == best_ch and _lex_less(assign, best)))):
                best_m, best_ch = m, ch
                best[:] = assign
        # next assignment in odometer order
        p = n - 1
        while p >= 0:
            idx[p] += 1
            if idx[p] < nopt[p]:
                break
            idx[p] = 0
            p -= 1
        if p < 0:
            break
    if best_m == 0:
        return 0.0, 0, 0
    P = best_m / n
    R = best_m / k
    f = 10 * P * R / (R + 9 * P)
    return f * (1 - 0.5 * (best_ch / best_m) ** 3), best_m, best_ch
