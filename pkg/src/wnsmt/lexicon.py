"""Bilingual word-pair extraction from concept-linked synsets."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .wordnet import WordnetDb


@dataclass(frozen=True)
class LexiconEntry:
    src: tuple[str, ...]
    tgt: tuple[str, ...]
    concept: int

    def __post_init__(self):
        if not self.src or not self.tgt:
            raise ValueError("lexicon entries need non-empty token sequences on both sides")


@dataclass
class BilingualLexicon:
    src_lang: str
    tgt_lang: str
    entries: list[LexiconEntry] = field(default_factory=list)
    # candidate pairs generated before duplicate removal
    n_candidates: int = field(default=0, compare=False)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def lemma_tokens(lemma: str) -> tuple[str, ...]:
    """blow_up -> ("blow", "up")."""
    return tuple(t for t in lemma.split("_") if t)


def candidate_pairs(db: WordnetDb, src_lang: str, tgt_lang: str) -> Iterator[LexiconEntry]:
    """Every cross-language member pairing of every shared concept, in
    (concept, src-index, tgt-index) order, duplicates included."""
    for s in db.synsets_in(src_lang):
        t = db.synset(s.concept, tgt_lang)
        if t is None:
            continue
        for a in s.members:
            for b in t.members:
                yield LexiconEntry(lemma_tokens(a), lemma_tokens(b), s.concept)


def extract_bilingual_lexicon(db: WordnetDb, src_lang: str, tgt_lang: str) -> BilingualLexicon:
    for lang in (src_lang, tgt_lang):
        if not db.synsets_in(lang):
            raise ValueError(f"language {lang!r} has no synsets in the database")
    seen: set[tuple[tuple[str, ...], tuple[str, ...]]] = set()
    entries = []
    n = 0
    for e in candidate_pairs(db, src_lang, tgt_lang):
        n += 1
        if (e.src, e.tgt) in seen:
            continue
        seen.add((e.src, e.tgt))
        entries.append(e)
    return BilingualLexicon(src_lang, tgt_lang, entries, n_candidates=n)


def write_lexicon(lex: BilingualLexicon, path) -> None:
    """TSV: src<TAB>tgt<TAB>concept, tokens space-joined."""
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for e in lex.entries:
            f.write(f"{' '.join(e.src)}\t{' '.join(e.tgt)}\t{e.concept}\n")


def read_lexicon(path, src_lang: str, tgt_lang: str) -> BilingualLexicon:
    entries = []
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise ValueError(f"{path}:{lineno}: expected 3 tab-separated columns")
            src, tgt, concept = parts
            entries.append(LexiconEntry(tuple(src.split()), tuple(tgt.split()), int(concept)))
    return BilingualLexicon(src_lang, tgt_lang, entries, n_candidates=len(entries))
