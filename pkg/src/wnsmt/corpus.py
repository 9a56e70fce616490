"""Tokenization, bitext I/O and lexicon augmentation of training corpora."""

from __future__ import annotations

import logging
import unicodedata
from dataclasses import dataclass, field

from .lexicon import BilingualLexicon

log = logging.getLogger(__name__)

Sentence = tuple[str, ...]

# Languages written in Latin script; only these are lowercased.
LATIN_SCRIPT_LANGS = {"eng", "en", "fra", "fr", "deu", "de", "spa", "es", "ita", "it", "por", "pt", "nld", "nl"}


def _is_punct(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P")


def tokenize(text: str, lang: str) -> Sentence:
    """Whitespace split with leading/trailing punctuation detached.

    >>> tokenize("He blow up the things.", "eng")
    ('he', 'blow', 'up', 'the', 'things', '.')
    """
    text = unicodedata.normalize("NFC", text)
    if lang in LATIN_SCRIPT_LANGS:
        text = unicodedata.normalize("NFC", text.lower())
    out: list[str] = []
    for chunk in text.split():
        lead = 0
        while lead < len(chunk) and _is_punct(chunk[lead]):
            lead += 1
        trail = len(chunk)
        while trail > lead and _is_punct(chunk[trail - 1]):
            trail -= 1
        out.extend(chunk[:lead])
        if trail > lead:
            out.append(chunk[lead:trail])
        out.extend(chunk[trail:])
    return tuple(out)


@dataclass
class Bitext:
    src_lang: str
    tgt_lang: str
    pairs: list[tuple[Sentence, Sentence]] = field(default_factory=list)
    dropped: int = field(default=0, compare=False)

    def __post_init__(self):
        for k, (s, t) in enumerate(self.pairs):
            if not s or not t:
                raise ValueError(f"pair {k} has an empty side")

    def __len__(self):
        return len(self.pairs)

    def reversed(self) -> Bitext:
        return Bitext(self.tgt_lang, self.src_lang, [(t, s) for s, t in self.pairs])

    def sources(self) -> list[Sentence]:
        return [s for s, _ in self.pairs]

    def targets(self) -> list[Sentence]:
        return [t for _, t in self.pairs]


def read_lines(path) -> list[str]:
    with open(path, encoding="utf-8") as f:
        return f.read().splitlines()


def load_sentences(path, lang: str) -> list[Sentence]:
    return [tokenize(line, lang) for line in read_lines(path)]


def load_bitext(src_path, tgt_path, src_lang: str, tgt_lang: str) -> Bitext:
    """Read two line-parallel files. Pairs where either side tokenizes to
    nothing are dropped and counted in `Bitext.dropped`."""
    src_lines = read_lines(src_path)
    tgt_lines = read_lines(tgt_path)
    if len(src_lines) != len(tgt_lines):
        raise ValueError(
            f"line count mismatch: {src_path} has {len(src_lines)} lines, {tgt_path} has {len(tgt_lines)}"
        )
    pairs = []
    dropped = 0
    for a, b in zip(src_lines, tgt_lines):
        s, t = tokenize(a, src_lang), tokenize(b, tgt_lang)
        if s and t:
            pairs.append((s, t))
        else:
            dropped += 1
    if dropped:
        log.info("%d pair%s dropped", dropped, "" if dropped == 1 else "s")
    return Bitext(src_lang, tgt_lang, pairs, dropped=dropped)


def write_sentences(sentences, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for s in sentences:
            f.write(" ".join(s) + "\n")


def write_bitext(bitext: Bitext, src_path, tgt_path) -> None:
    write_sentences(bitext.sources(), src_path)
    write_sentences(bitext.targets(), tgt_path)


def augment(base: Bitext, lex: BilingualLexicon, repeat: int = 1) -> Bitext:
    """Append lexicon entries to `base` as extra sentence pairs.

    The whole lexicon is appended `repeat` times, each copy in lexicon order.
    """
    if repeat < 1:
        raise ValueError(f"repeat must be a positive integer, got {repeat}")
    if (base.src_lang, base.tgt_lang) != (lex.src_lang, lex.tgt_lang):
        raise ValueError(
            f"language mismatch: bitext is {base.src_lang}-{base.tgt_lang}, lexicon is {lex.src_lang}-{lex.tgt_lang}"
        )
    extra = [(e.src, e.tgt) for e in lex.entries] * repeat
    return Bitext(base.src_lang, base.tgt_lang, list(base.pairs) + extra)
