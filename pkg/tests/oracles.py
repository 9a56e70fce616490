"""Independent brute-force reference implementations used by the tests.

None of these import the code paths they check.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict

NULL = "<null>"


# Model 1 EM by explicit enumeration of every alignment vector.

def model1_em_bruteforce(corpus, iterations):
    """corpus: list of (src tuple, tgt tuple). Returns (t dict keyed (src, tgt), log-likelihoods)."""
    cooc = defaultdict(set)
    for e, f in corpus:
        for w in (NULL,) + tuple(e):
            cooc[w].update(f)
    t = {(w, v): 1.0 / len(vs) for w, vs in cooc.items() for v in vs}
    lls = []
    for _ in range(iterations):
        counts = defaultdict(float)
        ll = 0.0
        ntok = 0
        for e, f in corpus:
            en = (NULL,) + tuple(e)
            L = len(en)
            joint = {}
            for a in itertools.product(range(L), repeat=len(f)):
                p = 1.0
                for j, i in enumerate(a):
                    p *= t[(en[i], f[j])] / L
                joint[a] = p
            z = sum(joint.values())
            ll += math.log(z)
            ntok += len(f)
            for a, p in joint.items():
                for j, i in enumerate(a):
                    counts[(en[i], f[j])] += p / z
        lls.append(ll / ntok)
        tot = defaultdict(float)
        for (w, v), c in counts.items():
            tot[w] += c
        t = {(w, v): c / tot[w] for (w, v), c in counts.items()}
    return t, lls


# Phrase extraction by testing every span pair.

def phrases_bruteforce(src_len, tgt_len, links, max_len=7):
    out = set()
    for s1 in range(src_len):
        for s2 in range(s1 + 1, min(src_len, s1 + max_len) + 1):
            for t1 in range(tgt_len):
                for t2 in range(t1 + 1, min(tgt_len, t1 + max_len) + 1):
                    inside = False
                    ok = True
                    for i, j in links:
                        in_s = s1 <= i < s2
                        in_t = t1 <= j < t2
                        if in_s and in_t:
                            inside = True
                        elif in_s != in_t:
                            ok = False
                            break
                    if ok and inside:
                        out.add((s1, s2, t1, t2))
    return out


# BLEU with n-grams enumerated by nested loops and clipping by list removal.

def bleu_bruteforce(hyps, refs, max_n=4):
    match = [0] * max_n
    total = [0] * max_n
    rtotal = [0] * max_n
    hl = rl = 0
    for h, r in zip(hyps, refs):
        hl += len(h)
        rl += len(r)
        for n in range(1, max_n + 1):
            pool = [tuple(r[k:k + n]) for k in range(len(r) - n + 1)]
            rtotal[n - 1] += len(pool)
            for k in range(len(h) - n + 1):
                g = tuple(h[k:k + n])
                total[n - 1] += 1
                if g in pool:
                    pool.remove(g)
                    match[n - 1] += 1
    if hl == 0:
        return 0.0
    ps = []
    for n in range(max_n):
        if total[n] == 0:
            ps.append(1.0 if rtotal[n] == 0 else 0.0)
        else:
            ps.append(match[n] / total[n])
    if min(ps) == 0:
        return 0.0
    bp = 1.0 if hl > rl else math.exp(1 - rl / hl)
    return bp * math.exp(sum(math.log(p) for p in ps) / max_n)


# Levenshtein by memoized recursion.

def levenshtein_recursive(a, b):
    a, b = tuple(a), tuple(b)
    memo = {}

    def d(i, j):
        if i == 0:
            return j
        if j == 0:
            return i
        if (i, j) not in memo:
            memo[(i, j)] = min(d(i - 1, j) + 1, d(i, j - 1) + 1, d(i - 1, j - 1) + (a[i - 1] != b[j - 1]))
        return memo[(i, j)]

    return d(len(a), len(b))


def all_block_moves(h, max_span=10):
    """Every distinct sequence reachable by moving one contiguous block, with the block."""
    h = tuple(h)
    n = len(h)
    for L in range(1, min(n, max_span) + 1):
        for i in range(n - L + 1):
            block = h[i:i + L]
            rest = h[:i] + h[i + L:]
            for d in range(len(rest) + 1):
                if d == i:
                    continue
                yield L, i, d, rest[:d] + block + rest[d:]


def ter_greedy_bruteforce(h, r, max_span=10):
    """Same greedy shift policy, restated: candidates are all block moves whose
    block occurs in the reference; best = max gain, then longest, leftmost
    block, leftmost destination."""
    h = tuple(h)
    r = tuple(r)
    cur = levenshtein_recursive(h, r)
    shifts = 0
    ref_blocks = set()
    for i in range(len(r)):
        for j in range(i + 1, len(r) + 1):
            ref_blocks.add(r[i:j])
    while cur > 0:
        best_key, best = None, None
        for L, i, d, cand in all_block_moves(h, max_span):
            if h[i:i + L] not in ref_blocks:
                continue
            gain = cur - levenshtein_recursive(cand, r)
            if gain <= 0:
                continue
            key = (gain, L, -i, -d)
            if best_key is None or key > best_key:
                best_key, best = key, cand
        if best is None:
            break
        cur -= best_key[0]
        h = best
        shifts += 1
    return cur + shifts


def ter_optimal_bruteforce(h, r, max_shifts=3):
    """Minimum over all sequences of up to `max_shifts` block moves of
    (#moves + Levenshtein). Exponential; tiny inputs only."""
    best = levenshtein_recursive(h, r)
    frontier = {tuple(h)}
    seen = {tuple(h)}
    for k in range(1, max_shifts + 1):
        nxt = set()
        for s in frontier:
            for *_, cand in all_block_moves(s):
                if cand not in seen:
                    seen.add(cand)
                    nxt.add(cand)
                    best = min(best, k + levenshtein_recursive(cand, r))
        frontier = nxt
    return best


# METEOR by enumerating every matching.

def _matchings(edges):
    """All sets of disjoint edges (as lists)."""
    edges = list(edges)
    out = []

    def rec(k, used_h, used_r, cur):
        if k == len(edges):
            out.append(list(cur))
            return
        rec(k + 1, used_h, used_r, cur)
        i, j = edges[k]
        if i not in used_h and j not in used_r:
            cur.append((i, j))
            rec(k + 1, used_h | {i}, used_r | {j}, cur)
            cur.pop()

    rec(0, frozenset(), frozenset(), [])
    return out


def chunks_bruteforce(links):
    links = sorted(links)
    if not links:
        return 0
    ch = 1
    for (i0, j0), (i1, j1) in zip(links, links[1:]):
        if not (i1 == i0 + 1 and j1 == j0 + 1):
            ch += 1
    return ch


def meteor_bruteforce(h, r, syn=None):
    """syn(a, b) -> bool decides the second-stage matches; None skips it."""
    stage1_edges = [(i, j) for i in range(len(h)) for j in range(len(r)) if h[i] == r[j]]
    # most matches, then fewest chunks, then smallest sorted link list
    links = min(_matchings(stage1_edges), key=lambda m: (-len(m), chunks_bruteforce(m), sorted(m)))
    if syn is not None:
        uh = {i for i, _ in links}
        ur = {j for _, j in links}
        e2 = [(i, j) for i in range(len(h)) for j in range(len(r))
              if i not in uh and j not in ur and syn(h[i], r[j])]
        links = links + min(_matchings(e2), key=lambda m: (-len(m), chunks_bruteforce(links + m), sorted(m)))
    m = len(links)
    if m == 0:
        return 0.0, 0, 0
    P, R = m / len(h), m / len(r)
    f = 10 * P * R / (R + 9 * P)
    ch = chunks_bruteforce(links)
    return f * (1 - 0.5 * (ch / m) ** 3), m, ch


# Decoding by enumerating every ordered segmentation of the source.

def decode_exhaustive(src, phrase_table, lm, weights, distortion_limit):
    """Best (score, target) over all derivations; falls back to monotone
    order when no derivation respects the distortion limit."""
    n = len(src)
    entries = phrase_table.entries
    spans = {}
    for s1 in range(n):
        for s2 in range(s1 + 1, n + 1):
            opts = entries.get(tuple(src[s1:s2]), [])
            if opts:
                spans[(s1, s2)] = [(o.tgt, o.scores) for o in opts]
    reachable = set()
    for s1, s2 in spans:
        reachable.update(range(s1, s2))
    for i in range(n):
        if i not in reachable:
            spans[(i, i + 1)] = [((src[i],), None)]

    def phrase_score(scores, tgt):
        s = 0.0
        if scores is not None:
            for name, x in zip(("phi_ts", "phi_st", "lex_ts", "lex_st"), scores):
                s += weights[name] * math.log10(x)
        return s - weights["word_penalty"] * len(tgt)

    def search(dl):
        best = None

        def rec(covered, prev_end, partial, target):
            nonlocal best
            if len(covered) == n:
                total = partial + weights["lm"] * lm.score(target)
                text = " ".join(target)
                if best is None or total > best[0] or (total == best[0] and text < best[1]):
                    best = (total, text)
                return
            for (s1, s2), opts in spans.items():
                if any(i in covered for i in range(s1, s2)):
                    continue
                d = abs(s1 - prev_end)
                if d > dl:
                    continue
                for tgt, scores in opts:
                    rec(covered | set(range(s1, s2)), s2,
                        partial + phrase_score(scores, tgt) - weights["distortion"] * d, target + tgt)

        rec(frozenset(), 0, 0.0, ())
        return best

    return search(distortion_limit) or search(0)
