"""
BLEU, TER and METEOR on small examples
======================================
"""

from wnsmt.fixtures import BLOW_UP_MAL, sample_wordnet
from wnsmt.metrics import bleu, meteor, ter

# %%
# Clipping: the hypothesis repeats "the" seven times but the reference only
# contains it twice.
rep = bleu([("the",) * 7], ["the cat is on the mat".split()])
print("clipped unigram precision:", rep.p_n[0], " BLEU:", rep.bleu)

# %%
# Half-length hypothesis: perfect precisions, brevity penalty e^-1.
ref = list("abcdefghij")
print("brevity penalty:", round(bleu([ref[:5]], [ref]).bp, 6))

# %%
# A single block move costs one edit.
r = ter(["c", "a", "b"], ["a", "b", "c"])
print(f"TER {r.ter:.4f} with {r.shifts} shift(s)")

# %%
# METEOR rewards synonyms only when it is given the wordnet.
hyp = ["അവൻ", BLOW_UP_MAL[0]]
ref = ["അവൻ", BLOW_UP_MAL[1]]
plain = meteor(hyp, ref)
with_wn = meteor(hyp, ref, sample_wordnet(), "mal")
print(f"exact only:   m={plain.matches} score={plain.score:.4f}")
print(f"with synonyms: m={with_wn.matches} score={with_wn.score:.4f}")
