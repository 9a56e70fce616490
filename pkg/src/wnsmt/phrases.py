"""Consistent phrase-pair extraction and phrase-table estimation."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .align import NULL, TTable, align_pair
from .corpus import Bitext, Sentence

Phrase = tuple[str, ...]


def extract_phrase_spans(src_len: int, tgt_len: int, a, max_len: int = 7) -> set[tuple[int, int, int, int]]:
    """Spans (s_start, s_end, t_start, t_end), ends exclusive, of every phrase
    pair consistent with alignment `a`, unaligned boundary words included."""
    if max_len < 1:
        raise ValueError("max_len must be positive")
    spans = set()
    tgt_aligned = {j for _, j in a}
    for s1 in range(src_len):
        for s2 in range(s1, min(s1 + max_len, src_len)):
            t_lo, t_hi = tgt_len, -1
            for i, j in a:
                if s1 <= i <= s2:
                    t_lo = min(t_lo, j)
                    t_hi = max(t_hi, j)
            if t_hi < 0 or t_hi - t_lo + 1 > max_len:
                continue
            if any(t_lo <= j <= t_hi and not s1 <= i <= s2 for i, j in a):
                continue
            ts = t_lo
            while True:
                te = t_hi
                while True:
                    if te - ts + 1 <= max_len:
                        spans.add((s1, s2 + 1, ts, te + 1))
                    te += 1
                    if te >= tgt_len or te in tgt_aligned or te - ts + 1 > max_len:
                        break
                ts -= 1
                if ts < 0 or ts in tgt_aligned or t_hi - ts + 1 > max_len:
                    break
    return spans


def extract_phrases(pair: tuple[Sentence, Sentence], a, max_len: int = 7) -> set[tuple[Phrase, Phrase]]:
    src, tgt = pair
    return {
        (tuple(src[s1:s2]), tuple(tgt[t1:t2]))
        for s1, s2, t1, t2 in extract_phrase_spans(len(src), len(tgt), a, max_len)
    }


def lexical_weight(src: Phrase, tgt: Phrase, links, tt: TTable) -> float:
    """lex(tgt|src) for one alignment of the phrase pair; `links` are local
    (i, j) indices and `tt` gives t(tgt|src). Unaligned target words are
    explained by NULL."""
    by_tgt: dict[int, list[int]] = defaultdict(list)
    for i, j in links:
        by_tgt[j].append(i)
    w = 1.0
    for j, f in enumerate(tgt):
        ii = by_tgt.get(j)
        if ii:
            w *= sum(tt.prob(f, src[i]) for i in ii) / len(ii)
        else:
            w *= tt.prob(f, NULL)
    return w


@dataclass(frozen=True)
class PhraseOption:
    tgt: Phrase
    phi_ts: float
    phi_st: float
    lex_ts: float
    lex_st: float

    @property
    def scores(self) -> tuple[float, float, float, float]:
        return (self.phi_ts, self.phi_st, self.lex_ts, self.lex_st)


@dataclass
class PhraseTable:
    entries: dict[Phrase, list[PhraseOption]] = field(default_factory=dict)

    def options(self, src: Phrase) -> list[PhraseOption]:
        return self.entries.get(tuple(src), [])

    def lookup(self, src: Phrase, tgt: Phrase) -> PhraseOption | None:
        for opt in self.entries.get(tuple(src), ()):
            if opt.tgt == tuple(tgt):
                return opt
        return None

    def __len__(self):
        return sum(len(v) for v in self.entries.values())

    @property
    def max_src_len(self) -> int:
        return max((len(s) for s in self.entries), default=0)

    def lines(self):
        for src, opts in self.entries.items():
            for o in opts:
                scores = " ".join(f"{x:.6g}" for x in o.scores)
                yield f"{' '.join(src)} ||| {' '.join(o.tgt)} ||| {scores}"

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            for line in self.lines():
                f.write(line + "\n")

    @classmethod
    def load(cls, path) -> PhraseTable:
        entries: dict[Phrase, list[PhraseOption]] = {}
        with open(path, encoding="utf-8") as f:
            for lineno, line in enumerate(f, 1):
                parts = line.rstrip("\n").split(" ||| ")
                if len(parts) != 3:
                    raise ValueError(f"{path}:{lineno}: expected 3 ' ||| '-separated fields")
                src, tgt, scores = parts
                vals = [float(x) for x in scores.split()]
                if len(vals) != 4:
                    raise ValueError(f"{path}:{lineno}: expected 4 scores")
                entries.setdefault(tuple(src.split()), []).append(PhraseOption(tuple(tgt.split()), *vals))
        return cls(entries)


def build_phrase_table(
    bitext: Bitext,
    tt_fwd: TTable,
    tt_rev: TTable,
    heuristic: str = "grow-diag-final-and",
    max_len: int = 7,
    alignments=None,
) -> PhraseTable:
    """Relative-frequency phrase table with lexical weights.

    `tt_fwd` holds t(tgt|src), `tt_rev` holds t(src|tgt). Lexical weights
    take the maximum over the alignments a phrase pair was seen with.
    `alignments`, if given, replaces the Viterbi/symmetrized links.
    """
    count: dict[tuple[Phrase, Phrase], int] = defaultdict(int)
    src_count: dict[Phrase, int] = defaultdict(int)
    tgt_count: dict[Phrase, int] = defaultdict(int)
    lex_ts: dict[tuple[Phrase, Phrase], float] = {}
    lex_st: dict[tuple[Phrase, Phrase], float] = {}
    lex_cache: dict = {}

    for k, pair in enumerate(bitext.pairs):
        src, tgt = pair
        a = alignments[k] if alignments is not None else align_pair(tt_fwd, tt_rev, pair, heuristic)
        for s1, s2, t1, t2 in extract_phrase_spans(len(src), len(tgt), a, max_len):
            sp, tp = src[s1:s2], tgt[t1:t2]
            key = (sp, tp)
            count[key] += 1
            src_count[sp] += 1
            tgt_count[tp] += 1
            local = frozenset((i - s1, j - t1) for i, j in a if s1 <= i < s2 and t1 <= j < t2)
            ck = (sp, tp, local)
            if ck not in lex_cache:
                lex_cache[ck] = (
                    lexical_weight(sp, tp, local, tt_fwd),
                    lexical_weight(tp, sp, {(j, i) for i, j in local}, tt_rev),
                )
            lts, lst = lex_cache[ck]
            if lts > lex_ts.get(key, -1.0):
                lex_ts[key] = lts
            if lst > lex_st.get(key, -1.0):
                lex_st[key] = lst

    entries: dict[Phrase, list[PhraseOption]] = {}
    for (sp, tp) in sorted(count):
        c = count[(sp, tp)]
        entries.setdefault(sp, []).append(PhraseOption(
            tp,
            c / src_count[sp],
            c / tgt_count[tp],
            max(lex_ts[(sp, tp)], _FLOOR),
            max(lex_st[(sp, tp)], _FLOOR),
        ))
    return PhraseTable(entries)


# Lexical weights can underflow for long phrases; keep every score positive.
_FLOOR = 1e-300
