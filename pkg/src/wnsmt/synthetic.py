"""Synthetic multi-parallel benchmark with a matching toy wordnet.

Toy languages render a shared concept inventory with their own invented
word forms and adjective placement. A fraction of concepts is held out of
the training corpus entirely; every test sentence contains at least one of
them, so only the wordnet can supply their translations.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .corpus import write_sentences
from .wordnet import Relation, Synset, WordnetDb, dump_wordnet

log = logging.getLogger(__name__)

_ONSETS = {
    0: ["p", "t", "k", "m", "n", "s", "l", "r", "v", "b", "d", "g"],
    1: ["ch", "sh", "z", "f", "h", "j", "w", "y", "th", "ph", "kr", "dr"],
    2: ["bl", "gl", "tr", "sk", "sp", "st", "pr", "br", "fl", "gr", "kl", "cr"],
}
_VOWELS = {0: ["a", "e", "i", "o", "u"], 1: ["aa", "ee", "oo", "ai", "au"], 2: ["ia", "io", "ua", "ei", "ou"]}
_PARTICLES = 2  # particles per language for multiword verbs


@dataclass
class Concept:
    id: int
    pos: str
    held_out: bool = False


@dataclass
class Benchmark:
    languages: list[str]
    concepts: list[Concept]
    lexicon: dict[str, dict[int, list[str]]]  # lang -> concept -> members (lemmas)
    train: dict[str, list[tuple[str, ...]]] = field(default_factory=dict)
    test: dict[str, list[tuple[str, ...]]] = field(default_factory=dict)

    def wordnet(self) -> WordnetDb:
        pivot = self.languages[0]
        synsets = []
        for lang in self.languages:
            for c in self.concepts:
                mem = self.lexicon[lang][c.id]
                freq = [100 // (k + 1) for k in range(len(mem))]
                synsets.append(Synset(c.id, lang, c.pos, tuple(mem), f"toy {c.pos} concept {c.id}", tuple(freq)))
        nouns = [c.id for c in self.concepts if c.pos == "noun"]
        relations = [Relation("hypernymy", nouns[k], nouns[0]) for k in range(1, min(6, len(nouns)))]
        return WordnetDb(pivot, synsets, relations)

    def write(self, out_dir) -> dict[str, Path]:
        d = Path(out_dir)
        d.mkdir(parents=True, exist_ok=True)
        for lang in self.languages:
            write_sentences(self.train[lang], d / f"train.{lang}")
            write_sentences(self.test[lang], d / f"test.{lang}")
        dump_wordnet(self.wordnet(), d / "wordnet.jsonl")
        return {"train_prefix": d / "train", "test_prefix": d / "test", "wordnet": d / "wordnet.jsonl"}


def _make_word(rng, style: int, taken: set[str]) -> str:
    while True:
        n = int(rng.integers(2, 4))
        w = "".join(
            _ONSETS[style][rng.integers(len(_ONSETS[style]))] + _VOWELS[style][rng.integers(len(_VOWELS[style]))]
            for _ in range(n)
        )
        if w not in taken:
            taken.add(w)
            return w


def _zipf_pick(rng, k: int) -> int:
    weights = np.array([1.0 / (i + 1) ** 1.5 for i in range(k)])
    return int(rng.choice(k, p=weights / weights.sum()))


def generate_benchmark(
    languages=("qaa", "qab"),
    n_train: int = 2000,
    n_test: int = 200,
    n_nouns: int = 60,
    n_verbs: int = 30,
    n_adjs: int = 20,
    held_out_frac: float = 0.2,
    seed: int = 0,
) -> Benchmark:
    """Deterministic for a given seed."""
    languages = list(languages)
    if len(languages) < 2:
        raise ValueError("need at least two languages")
    rng = np.random.default_rng(seed)
    concepts = []
    cid = 1000
    for pos, n in (("noun", n_nouns), ("verb", n_verbs), ("adjective", n_adjs)):
        for k in range(n):
            concepts.append(Concept(cid, pos))
            cid += 1
    for pos in ("noun", "verb", "adjective"):
        group = [c for c in concepts if c.pos == pos]
        n_held = max(1, int(round(held_out_frac * len(group))))
        for c in rng.choice(len(group), size=n_held, replace=False):
            group[int(c)].held_out = True

    taken: set[str] = set()
    lexicon: dict[str, dict[int, list[str]]] = {}
    for li, lang in enumerate(languages):
        style = li % len(_ONSETS)
        particles = [_make_word(rng, style, taken)[:3] + "q" * (li + 1) for _ in range(_PARTICLES)]
        taken.update(particles)
        lexicon[lang] = {}
        for c in concepts:
            size = int(rng.choice([1, 2, 3], p=[0.3, 0.45, 0.25]))
            mem = [_make_word(rng, style, taken) for _ in range(size)]
            if c.pos == "verb" and rng.random() < 0.2:
                mem.append(mem[0] + "_" + particles[int(rng.integers(_PARTICLES))])
            lexicon[lang][c.id] = mem

    bench = Benchmark(languages, concepts, lexicon)
    by_pos = {p: [c for c in concepts if c.pos == p] for p in ("noun", "verb", "adjective")}

    def sample_frame(held: bool):
        pool = by_pos if held else {p: [c for c in cs if not c.held_out] for p, cs in by_pos.items()}
        frame = []
        for role in ("subj", "verb", "obj"):
            if role == "verb":
                frame.append(("verb", pool["verb"][int(rng.integers(len(pool["verb"])))]))
                continue
            adj = None
            if rng.random() < 0.4:
                adj = pool["adjective"][int(rng.integers(len(pool["adjective"])))]
            noun = pool["noun"][int(rng.integers(len(pool["noun"])))]
            frame.append(("np", (adj, noun)))
        return frame

    def render(frame, lang_idx: int, choices):
        lang = languages[lang_idx]
        toks: list[str] = []
        adj_after = lang_idx % 2 == 1
        for kind, val in frame:
            items = [val] if kind == "verb" else ([val[1], val[0]] if adj_after else [val[0], val[1]])
            for c in items:
                if c is None:
                    continue
                toks.extend(choices[(lang, c.id)].split("_"))
        return tuple(toks)

    def pick_members(frame):
        ch = {}
        for lang in languages:
            for kind, val in frame:
                for c in ([val] if kind == "verb" else list(val)):
                    if c is not None:
                        mem = lexicon[lang][c.id]
                        ch[(lang, c.id)] = mem[_zipf_pick(rng, len(mem))]
        return ch

    def frame_has_held(frame):
        for kind, val in frame:
            for c in ([val] if kind == "verb" else list(val)):
                if c is not None and c.held_out:
                    return True
        return False

    seen: set[tuple[str, ...]] = set()
    bench.train = {lang: [] for lang in languages}
    while len(bench.train[languages[0]]) < n_train:
        frame = sample_frame(held=False)
        ch = pick_members(frame)
        sents = [render(frame, k, ch) for k in range(len(languages))]
        if sents[0] in seen:
            continue
        seen.add(sents[0])
        for lang, s in zip(languages, sents):
            bench.train[lang].append(s)

    bench.test = {lang: [] for lang in languages}
    while len(bench.test[languages[0]]) < n_test:
        frame = sample_frame(held=True)
        if not frame_has_held(frame):
            continue
        ch = pick_members(frame)
        sents = [render(frame, k, ch) for k in range(len(languages))]
        if sents[0] in seen:
            continue
        seen.add(sents[0])
        for lang, s in zip(languages, sents):
            bench.test[lang].append(s)
    return bench
