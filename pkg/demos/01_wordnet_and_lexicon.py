"""
Linked wordnets and the bilingual lexicons they imply
=====================================================

Synsets in different languages hang off a shared concept id. Any two
languages that both have a synset for a concept yield one lexicon entry per
member pairing.
"""

from wnsmt import extract_bilingual_lexicon, synonyms, validate
from wnsmt.fixtures import BLOW_UP, sample_wordnet

db = sample_wordnet()
print("languages:", db.languages)
for s in db.synsets:
    print(f"  {s.concept:4d} {s.lang} {s.pos:9s} {', '.join(s.members)}")

# %%
# Lint findings are advisory; the hand-built fixture is clean.
print("lint findings:", validate(db) or "none")

# %%
# English "blow up" has three Malayalam renderings, so the lexicon has three
# entries. Multiword lemmas are stored with underscores and split on use.
lex = extract_bilingual_lexicon(db, "eng", "mal")
for e in lex:
    print(" ".join(e.src), "->", " ".join(e.tgt))
print(f"{len(lex)} entries from {lex.n_candidates} candidate pairings")

# %%
# The same links drive the synonym stage of METEOR.
mal = db.synset(BLOW_UP, "mal").members
print("synonyms of", mal[0], ":", sorted(synonyms(db, mal[0], "mal")))
