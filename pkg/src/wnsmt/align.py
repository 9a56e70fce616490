"""IBM Model 1 training, Viterbi links and alignment symmetrization."""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable

from .corpus import Bitext, Sentence

NULL = "<null>"

Alignment = frozenset  # of (src_index, tgt_index)


@dataclass
class TTable:
    """Lexical translation table t(tgt | src); `src` may be NULL."""

    t: dict[tuple[str, str], float] = field(default_factory=dict)
    log_likelihoods: list[float] = field(default_factory=list)

    def prob(self, tgt: str, src: str) -> float:
        return self.t.get((src, tgt), 0.0)

    def row_sums(self) -> dict[str, float]:
        sums: dict[str, float] = defaultdict(float)
        for (s, _), p in self.t.items():
            sums[s] += p
        return dict(sums)

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            for (s, t), p in sorted(self.t.items()):
                f.write(f"{s}\t{t}\t{p!r}\n")

    @classmethod
    def load(cls, path) -> TTable:
        t = {}
        with open(path, encoding="utf-8") as f:
            for line in f:
                s, w, p = line.rstrip("\n").split("\t")
                t[(s, w)] = float(p)
        return cls(t)


def _em_step(corpus, t):
    """One EM iteration. Returns (new table, total log-likelihood, target tokens)."""
    counts: dict[tuple[str, str], float] = defaultdict(float)
    totals: dict[str, float] = defaultdict(float)
    ll = 0.0
    ntok = 0
    for src, tgt in corpus:
        srcn = (NULL,) + src
        norm = math.log(len(srcn))
        for f in tgt:
            probs = [t[(e, f)] for e in srcn]
            z = sum(probs)
            ll += math.log(z) - norm
            ntok += 1
            for e, p in zip(srcn, probs):
                c = p / z
                counts[(e, f)] += c
                totals[e] += c
    new = {k: c / totals[k[0]] for k, c in counts.items()}
    return new, ll, ntok


def train_model1(
    bitext: Bitext,
    direction: str = "src-tgt",
    iterations: int = 10,
    epsilon: float = 1e-4,
    on_iteration: Callable[[int, TTable], None] | None = None,
) -> TTable:
    """Estimate t(tgt|src) with EM, a NULL token prepended to every source.

    `direction="tgt-src"` trains the reverse table on the swapped bitext.
    `log_likelihoods[k]` is the per-target-token log-likelihood of the
    corpus under the table entering iteration k. Training stops after
    `iterations` steps or once that quantity gains less than `epsilon`.
    """
    if not bitext.pairs:
        raise ValueError("cannot train on an empty bitext")
    if iterations < 1:
        raise ValueError("iterations must be positive")
    if direction not in ("src-tgt", "tgt-src"):
        raise ValueError(f"unknown direction {direction!r}")
    corpus = bitext.pairs if direction == "src-tgt" else [(t, s) for s, t in bitext.pairs]

    cooc: dict[str, set[str]] = defaultdict(set)
    for src, tgt in corpus:
        ws = set(tgt)
        cooc[NULL].update(ws)
        for e in src:
            cooc[e].update(ws)
    t = {(e, f): 1.0 / len(fs) for e, fs in cooc.items() for f in fs}

    table = TTable(dict(t))
    prev = None
    for it in range(iterations):
        t, ll, ntok = _em_step(corpus, t)
        ll /= ntok
        table.log_likelihoods.append(ll)
        table.t = t
        if on_iteration is not None:
            on_iteration(it, table)
        if prev is not None and ll - prev < epsilon:
            break
        prev = ll
    return table


def corpus_log_likelihood(corpus, table: TTable) -> float:
    """Per-target-token log-likelihood of `corpus` (pairs oriented like the table)."""
    ll = 0.0
    n = 0
    for src, tgt in corpus:
        srcn = (NULL,) + tuple(src)
        for f in tgt:
            ll += math.log(sum(table.prob(f, e) for e in srcn)) - math.log(len(srcn))
            n += 1
    return ll / n


def viterbi_align(tt: TTable, pair: tuple[Sentence, Sentence]) -> Alignment:
    """Link every target word to its most probable source word.

    NULL wins only when strictly more probable than every real source word,
    and NULL links are not reported. Among equal real words the leftmost wins.
    """
    src, tgt = pair
    links = []
    for j, f in enumerate(tgt):
        best_i, best_p = None, -1.0
        for i, e in enumerate(src):
            p = tt.prob(f, e)
            if p > best_p:
                best_i, best_p = i, p
        if best_i is not None and tt.prob(f, NULL) > best_p:
            best_i = None
        if best_i is not None and best_p > 0.0:
            links.append((best_i, j))
    return frozenset(links)


def flip(a) -> Alignment:
    return frozenset((j, i) for i, j in a)


_NEIGHBORS = ((-1, 0), (0, -1), (1, 0), (0, 1), (-1, -1), (-1, 1), (1, -1), (1, 1))


def grow_diag_final_and(fwd, rev, src_len: int | None = None, tgt_len: int | None = None) -> Alignment:
    fwd, rev = set(fwd), set(rev)
    union = fwd | rev
    a = fwd & rev
    if src_len is None:
        src_len = 1 + max((i for i, _ in union), default=-1)
    if tgt_len is None:
        tgt_len = 1 + max((j for _, j in union), default=-1)
    src_aligned = {i for i, _ in a}
    tgt_aligned = {j for _, j in a}

    added = True
    while added:
        added = False
        for i in range(src_len):
            for j in range(tgt_len):
                if (i, j) not in a:
                    continue
                for di, dj in _NEIGHBORS:
                    p = (i + di, j + dj)
                    if p in union and p not in a and (p[0] not in src_aligned or p[1] not in tgt_aligned):
                        a.add(p)
                        src_aligned.add(p[0])
                        tgt_aligned.add(p[1])
                        added = True

    for direction in (fwd, rev):
        for i, j in sorted(direction):
            if i not in src_aligned and j not in tgt_aligned:
                a.add((i, j))
                src_aligned.add(i)
                tgt_aligned.add(j)
    return frozenset(a)


def symmetrize(fwd, rev, heuristic: str = "grow-diag-final-and",
               src_len: int | None = None, tgt_len: int | None = None) -> Alignment:
    """Combine src->tgt and tgt->src links, both given as (src_i, tgt_j)."""
    if heuristic == "intersection":
        return frozenset(fwd) & frozenset(rev)
    if heuristic == "union":
        return frozenset(fwd) | frozenset(rev)
    if heuristic in ("grow-diag-final-and", "gdfa"):
        return grow_diag_final_and(fwd, rev, src_len, tgt_len)
    raise ValueError(f"unknown symmetrization heuristic {heuristic!r}")


def align_pair(tt_fwd: TTable, tt_rev: TTable, pair, heuristic: str = "grow-diag-final-and") -> Alignment:
    src, tgt = pair
    fwd = viterbi_align(tt_fwd, (src, tgt))
    rev = flip(viterbi_align(tt_rev, (tgt, src)))
    return symmetrize(fwd, rev, heuristic, len(src), len(tgt))
