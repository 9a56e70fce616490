"""
Why the wordnet helps: an untranslatable phrasal verb
=====================================================

The miniature English-Malayalam corpus never pairs "blow up" with anything,
so the baseline decoder copies the words through. Appending the three
lexicon entries from the linked wordnet gives the phrase table a
translation for them.
"""

from wnsmt import augment, extract_bilingual_lexicon, tokenize, train_system, translate
from wnsmt.fixtures import BLOW_UP_SENTENCE, blow_up_corpus, sample_wordnet

src = tokenize(BLOW_UP_SENTENCE, "eng")
base = blow_up_corpus()
print("input:", " ".join(src))
print(f"training pairs: {len(base)}")

# %%
wow = train_system(base)
tokens, score = translate(src, wow)
print(f"without wordnet: {' '.join(tokens)}   (score {score:.3f})")

# %%
lex = extract_bilingual_lexicon(sample_wordnet(), "eng", "mal")
wwn = train_system(augment(base, lex))
tokens, score = translate(src, wwn)
print(f"with wordnet:    {' '.join(tokens)}   (score {score:.3f})")
print("phrase-table options for 'blow up':")
for opt in wwn.phrase_table.options(("blow", "up")):
    print("  ", " ".join(opt.tgt), [round(x, 3) for x in opt.scores])
