"""BLEU, TER and METEOR for single-reference evaluation.

All scores are on the [0, 1] scale (TER may exceed 1); multiply by 100 for
presentation.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import asdict, dataclass, field

from rapidfuzz.distance import Levenshtein

from .wordnet import WordnetDb, synonyms


# BLEU

@dataclass
class BleuReport:
    p_n: list[float]
    matches: list[int]
    totals: list[int]
    bp: float
    bleu: float
    hyp_len: int
    ref_len: int
    smooth: bool = False

    def to_dict(self):
        return asdict(self)


def _ngrams(tokens, n):
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


def bleu(hyps, refs, max_n: int = 4, smooth: bool = False) -> BleuReport:
    """Corpus BLEU: clipped n-gram matches and totals are summed over the
    corpus before dividing.

    An order with no hypothesis n-grams has precision 1 when the references
    have none either, else 0. Without `smooth`, any zero precision zeroes the
    score; `smooth` adds one to numerator and denominator for n >= 2.
    """
    if len(hyps) != len(refs):
        raise ValueError(f"{len(hyps)} hypotheses but {len(refs)} references")
    if not hyps:
        raise ValueError("empty test set")
    matches = [0] * max_n
    totals = [0] * max_n
    ref_totals = [0] * max_n
    hyp_len = ref_len = 0
    for h, r in zip(hyps, refs):
        hyp_len += len(h)
        ref_len += len(r)
        for n in range(1, max_n + 1):
            hc, rc = _ngrams(h, n), _ngrams(r, n)
            matches[n - 1] += sum(min(c, rc[g]) for g, c in hc.items())
            totals[n - 1] += max(len(h) - n + 1, 0)
            ref_totals[n - 1] += max(len(r) - n + 1, 0)

    p = []
    for n in range(max_n):
        m, t = matches[n], totals[n]
        if smooth and n >= 1:
            m, t = m + 1, t + 1
        if t == 0:
            p.append(1.0 if ref_totals[n] == 0 else 0.0)
        else:
            p.append(m / t)

    if hyp_len == 0:
        return BleuReport(p, matches, totals, 0.0, 0.0, hyp_len, ref_len, smooth)
    bp = min(1.0, math.exp(1.0 - ref_len / hyp_len))
    if any(x == 0.0 for x in p):
        score = 0.0
    else:
        score = bp * math.exp(sum(math.log(x) for x in p) / max_n)
    return BleuReport(p, matches, totals, bp, score, hyp_len, ref_len, smooth)


# TER

def edit_distance(a, b) -> int:
    """Word-level Levenshtein distance."""
    return Levenshtein.distance(a, b)


def apply_shift(words, start: int, length: int, dest: int):
    """Move words[start:start+length] so it begins at `dest` in the result."""
    span = words[start:start + length]
    rest = words[:start] + words[start + length:]
    return rest[:dest] + span + rest[dest:]


def _shift_candidates(hyp, ref, max_span):
    ref_spans = {tuple(ref[j:j + L]) for L in range(1, max_span + 1) for j in range(len(ref) - L + 1)}
    n = len(hyp)
    for L in range(min(max_span, n), 0, -1):
        for i in range(n - L + 1):
            if tuple(hyp[i:i + L]) not in ref_spans:
                continue
            for dest in range(n - L + 1):
                if dest != i:
                    yield L, i, dest


@dataclass
class TerReport:
    edits: int
    ref_len: int
    ter: float
    shifts: int = 0

    def to_dict(self):
        return asdict(self)


def ter_edits(hyp, ref, max_span: int = 10) -> tuple[int, int]:
    """(total edits, shifts) for one sentence.

    Greedy: apply the shift giving the largest edit-distance reduction
    (longest span, then leftmost, then leftmost destination on ties) until
    no shift reduces it; each shift costs one edit.
    """
    hyp, ref = list(hyp), list(ref)
    cur = edit_distance(hyp, ref)
    # no shift can bring the distance below the length difference
    floor = abs(len(hyp) - len(ref))
    shifts = 0
    while cur > floor:
        best = None
        for L, i, dest in _shift_candidates(hyp, ref, max_span):
            cand = apply_shift(hyp, i, L, dest)
            gain = cur - edit_distance(cand, ref)
            if gain > 0 and (best is None or gain > best[0]):
                best = (gain, cand)
        if best is None:
            break
        cur -= best[0]
        hyp = best[1]
        shifts += 1
    return cur + shifts, shifts


def ter(hyp, ref) -> TerReport:
    if not ref:
        raise ValueError("TER needs a non-empty reference")
    edits, shifts = ter_edits(hyp, ref)
    return TerReport(edits, len(ref), edits / len(ref), shifts)


def corpus_ter(hyps, refs) -> TerReport:
    if len(hyps) != len(refs):
        raise ValueError(f"{len(hyps)} hypotheses but {len(refs)} references")
    edits = shifts = ref_len = 0
    for h, r in zip(hyps, refs):
        if not r:
            raise ValueError("TER needs non-empty references")
        e, s = ter_edits(h, r)
        edits += e
        shifts += s
        ref_len += len(r)
    return TerReport(edits, ref_len, edits / ref_len, shifts)


# METEOR

EXACT_SEARCH_LIMIT = 12


@dataclass
class MeteorReport:
    matches: int
    precision: float
    recall: float
    f_mean: float
    chunks: int
    penalty: float
    score: float
    hyp_len: int = 0
    ref_len: int = 0
    alignment: list[tuple[int, int]] = field(default_factory=list)

    def to_dict(self):
        return asdict(self)


def count_chunks(links) -> int:
    """Runs of links adjacent in both hypothesis and reference order."""
    links = sorted(links)
    chunks = 0
    prev = None
    for i, j in links:
        if prev is None or not (i == prev[0] + 1 and j == prev[1] + 1):
            chunks += 1
        prev = (i, j)
    return chunks


def _best_stage_alignment(n_hyp, cands, fixed):
    """Choose new links from `cands` (hyp index -> allowed ref indices) that
    form a maximum matching disjoint from `fixed`, and among those one whose
    union with `fixed` has the fewest chunks; remaining ties go to the
    lexicographically smallest sorted link list. Exhaustive dynamic program over
    hypothesis positions with the set of used reference positions."""
    fixed_by_hyp = dict(fixed)
    used0 = 0
    for _, j in fixed:
        used0 |= 1 << j
    memo = {}

    def best(i, used, last):
        # last: ref index linked to hyp i-1, or -1
        if i == n_hyp:
            return (0, 0, ())
        key = (i, used, last)
        if key in memo:
            return memo[key]
        if i in fixed_by_hyp:
            j = fixed_by_hyp[i]
            m, d, links = best(i + 1, used, j)
            res = (m, d + (last >= 0 and j == last + 1), links)
        else:
            # links before skipping and smaller j first, so that ties keep
            # the lexicographically smallest link list
            res = None
            for j in cands.get(i, ()):
                if used >> j & 1:
                    continue
                m, d, links = best(i + 1, used | (1 << j), j)
                c = (m + 1, d + (last >= 0 and j == last + 1), ((i, j),) + links)
                if res is None or c[:2] > res[:2]:
                    res = c
            skip = best(i + 1, used, -1)
            if res is None or skip[:2] > res[:2]:
                res = skip
        memo[key] = res
        return res

    return list(best(0, used0, -1)[2])


def _greedy_stage_alignment(n_hyp, cands, fixed):
    used = {j for _, j in fixed}
    fixed_by_hyp = dict(fixed)
    links = []
    for i in range(n_hyp):
        if i in fixed_by_hyp:
            continue
        free = [j for j in cands.get(i, ()) if j not in used]
        if not free:
            continue
        # prefer continuing the previous link's diagonal, then the leftmost
        prev = fixed_by_hyp.get(i - 1)
        if prev is None:
            prev = next((jj for ii, jj in links if ii == i - 1), None)
        j = prev + 1 if prev is not None and prev + 1 in free else free[0]
        used.add(j)
        links.append((i, j))
    return links


def _stage(hyp, ref, fixed, match):
    done_h = {i for i, _ in fixed}
    done_r = {j for _, j in fixed}
    cands = {}
    for i, h in enumerate(hyp):
        if i in done_h:
            continue
        js = [j for j, r in enumerate(ref) if j not in done_r and match(h, r)]
        if js:
            cands[i] = js
    if not cands:
        return []
    if max(len(hyp), len(ref)) <= EXACT_SEARCH_LIMIT:
        return _best_stage_alignment(len(hyp), cands, fixed)
    return _greedy_stage_alignment(len(hyp), cands, fixed)


def meteor_alignment(hyp, ref, db: WordnetDb | None = None, lang: str | None = None):
    """Exact-match stage, then (with a wordnet) a synonym stage."""
    links = _stage(hyp, ref, [], lambda a, b: a == b)
    if db is not None:
        cache = {}

        def syn(a, b):
            if b not in cache:
                cache[b] = synonyms(db, b.replace(" ", "_"), lang)
            return a in cache[b]

        links = links + _stage(hyp, ref, links, syn)
    return sorted(links)


def meteor_from_alignment(links, hyp_len: int, ref_len: int) -> MeteorReport:
    m = len(links)
    if m == 0:
        return MeteorReport(0, 0.0, 0.0, 0.0, 0, 0.0, 0.0, hyp_len, ref_len, [])
    P = m / hyp_len
    R = m / ref_len
    fmean = 10 * P * R / (R + 9 * P)
    ch = count_chunks(links)
    penalty = 0.5 * (ch / m) ** 3
    return MeteorReport(m, P, R, fmean, ch, penalty, fmean * (1 - penalty), hyp_len, ref_len, list(links))


def meteor(hyp, ref, db: WordnetDb | None = None, lang: str | None = None) -> MeteorReport:
    hyp, ref = tuple(hyp), tuple(ref)
    links = meteor_alignment(hyp, ref, db, lang)
    return meteor_from_alignment(links, len(hyp), len(ref))


def corpus_meteor(hyps, refs, db: WordnetDb | None = None, lang: str | None = None) -> float:
    if len(hyps) != len(refs):
        raise ValueError(f"{len(hyps)} hypotheses but {len(refs)} references")
    if not hyps:
        return 0.0
    return sum(meteor(h, r, db, lang).score for h, r in zip(hyps, refs)) / len(hyps)


# System comparison

@dataclass
class MetricReport:
    bleu: float
    ter: float
    meteor: float
    details: dict = field(default_factory=dict, compare=False)


@dataclass
class PairedDelta:
    bleu: float
    ter: float
    meteor: float

    @property
    def improved(self) -> dict[str, bool]:
        # lower TER is better
        return {"bleu": self.bleu > 0, "ter": self.ter < 0, "meteor": self.meteor > 0}


def score_system(hyps, refs, db: WordnetDb | None = None, lang: str | None = None,
                 smooth: bool = False) -> MetricReport:
    b = bleu(hyps, refs, smooth=smooth)
    t = corpus_ter(hyps, refs)
    m = corpus_meteor(hyps, refs, db, lang)
    return MetricReport(b.bleu, t.ter, m, {"bleu": b.to_dict(), "ter": t.to_dict()})


def compare(wow: MetricReport, wwn: MetricReport) -> PairedDelta:
    """Deltas with-wordnet minus without-wordnet."""
    return PairedDelta(wwn.bleu - wow.bleu, wwn.ter - wow.ter, wwn.meteor - wow.meteor)
