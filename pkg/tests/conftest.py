import json
import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from wnsmt.fixtures import sample_wordnet  # noqa: E402
from wnsmt.wordnet import Relation, Synset, WordnetDb  # noqa: E402


@pytest.fixture
def sample_db():
    return sample_wordnet()


@pytest.fixture
def write_jsonl(tmp_path):
    def _write(records, name="db.jsonl"):
        p = tmp_path / name
        with open(p, "w", encoding="utf-8") as f:
            for r in records:
                f.write((r if isinstance(r, str) else json.dumps(r, ensure_ascii=False)) + "\n")
        return p
    return _write


def random_wordnet(rng: random.Random, langs=("hin", "eng", "mal"), n_concepts=None, vocab=12,
                   clean=True) -> WordnetDb:
    """Random rule-abiding toy wordnet. Lemmas come from a small per-language
    pool so that synsets overlap."""
    n_concepts = n_concepts or rng.randint(1, 8)
    synsets = []
    pos_of = {}
    for c in range(n_concepts):
        pos = rng.choice(["noun", "verb", "adjective", "adverb"])
        pos_of[c] = pos
        for k, lang in enumerate(langs):
            if k > 0 and c > 0 and rng.random() < 0.3:
                continue
            size = rng.randint(1, 4)
            pool = [f"{lang}{w}" for w in range(vocab)] + [f"{lang}{w}_x" for w in range(3)]
            mem = rng.sample(pool, size)
            freq = sorted((rng.randint(0, 50) for _ in mem), reverse=True)
            synsets.append(Synset(c, lang, pos, tuple(mem), f"gloss {c}", tuple(freq)))
    relations = []
    for _ in range(rng.randint(0, 4)):
        a, b = rng.randrange(n_concepts), rng.randrange(n_concepts)
        pa, pb = pos_of[a], pos_of[b]
        if pa == pb == "verb":
            relations.append(Relation("troponymy", a, b))
        elif pa == pb == "noun":
            relations.append(Relation("meronymy", a, b, "member collection"))
        else:
            relations.append(Relation("antonymy", a, b))
    db = WordnetDb(langs[0], synsets, relations)
    return db
