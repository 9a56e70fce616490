"""
Word alignment and phrase extraction
====================================

Model 1 EM is run in both directions over a toy bitext, the two Viterbi
alignments are merged with grow-diag-final-and, and consistent phrase pairs
are read off the merged alignment.
"""

from wnsmt.align import align_pair, train_model1, viterbi_align
from wnsmt.corpus import Bitext
from wnsmt.phrases import build_phrase_table, extract_phrases

pairs = [
    (("the", "house"), ("das", "haus")),
    (("the", "book"), ("das", "buch")),
    (("a", "book"), ("ein", "buch")),
    (("a", "small", "house"), ("ein", "kleines", "haus")),
]
bt = Bitext("eng", "deu", pairs)

# %%
# Log-likelihood per target token never decreases across EM iterations.
fwd = train_model1(bt, iterations=10)
rev = train_model1(bt, direction="tgt-src", iterations=10)
print("log-likelihood per token:", [round(x, 4) for x in fwd.log_likelihoods])
for src in ("the", "book", "house"):
    best = max((p, t) for (s, t), p in fwd.t.items() if s == src)
    print(f"  most likely translation of {src!r}: {best[1]!r} ({best[0]:.3f})")

# %%
pair = pairs[3]
print("forward links:", sorted(viterbi_align(fwd, pair)))
links = align_pair(fwd, rev, pair, "grow-diag-final-and")
print("symmetrized:  ", sorted(links))
for s, t in sorted(extract_phrases(pair, links)):
    print("  ", " ".join(s), "|||", " ".join(t))

# %%
# Phrase table lines: phi(t|s) phi(s|t) lex(t|s) lex(s|t).
pt = build_phrase_table(bt, fwd, rev)
for line in list(pt.lines())[:8]:
    print(line)
