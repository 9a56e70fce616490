"""Concept-linked multilingual wordnet store.

Synsets in every language hang off a concept id owned by the pivot language.
Records live in a JSONL file, one synset or relation per line.
"""

from __future__ import annotations

import json
import unicodedata
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator

POS_ALIASES = {
    "noun": "noun",
    "n": "noun",
    "verb": "verb",
    "v": "verb",
    "adj": "adjective",
    "adjective": "adjective",
    "a": "adjective",
    "adv": "adverb",
    "adverb": "adverb",
    "r": "adverb",
}
POS_SHORT = {"noun": "noun", "verb": "verb", "adjective": "adj", "adverb": "adv"}

RELATION_KINDS = frozenset({
    "hypernymy", "hyponymy", "holonymy", "meronymy", "troponymy",
    "entailment", "antonymy", "gradation", "compound", "conjunction",
    "similar_attribute", "function_verb", "ability_verb", "capability_verb",
    "adverb_modifies_verb", "causative", "near_synset", "adjective_modifies_noun",
})

# Allowed (from_pos, to_pos) per relation kind; kinds absent here accept any POS.
_N, _V, _A, _R = "noun", "verb", "adjective", "adverb"
RELATION_POS = {
    "hypernymy": {(_N, _N), (_V, _V)},
    "hyponymy": {(_N, _N), (_V, _V)},
    "holonymy": {(_N, _N)},
    "meronymy": {(_N, _N)},
    "troponymy": {(_V, _V)},
    "entailment": {(_V, _V)},
    "causative": {(_V, _V)},
    "compound": {(_N, _N)},
    "conjunction": {(_V, _V)},
    "similar_attribute": {(_N, _A), (_A, _N)},
    "function_verb": {(_N, _V), (_V, _N)},
    "ability_verb": {(_N, _V), (_V, _N)},
    "capability_verb": {(_N, _V), (_V, _N)},
    "adverb_modifies_verb": {(_R, _V), (_V, _R)},
    "adjective_modifies_noun": {(_A, _N), (_N, _A)},
}


class WordnetError(Exception):
    """Base class for wordnet loading problems."""


class WordnetParseError(WordnetError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class WordnetIntegrityError(WordnetError):
    pass


def normalize(text: str) -> str:
    return unicodedata.normalize("NFC", text)


def check_lemma(text: str) -> str:
    if not text:
        raise ValueError("empty lemma")
    if any(ch.isspace() for ch in text):
        raise ValueError(f"lemma {text!r} contains whitespace")
    if text.startswith("_") or text.endswith("_"):
        raise ValueError(f"lemma {text!r} has a leading or trailing underscore")
    return text


@dataclass(frozen=True)
class Synset:
    concept: int
    lang: str
    pos: str
    members: tuple[str, ...]
    gloss: str = ""
    member_freq: tuple[int, ...] | None = None

    def __post_init__(self):
        if not isinstance(self.concept, int) or isinstance(self.concept, bool) or self.concept < 0:
            raise ValueError(f"concept id must be a non-negative integer, got {self.concept!r}")
        if not self.lang:
            raise ValueError("empty language code")
        pos = POS_ALIASES.get(self.pos)
        if pos is None:
            raise ValueError(f"unknown POS {self.pos!r}")
        members = tuple(check_lemma(normalize(m)) for m in self.members)
        if not members:
            raise ValueError(f"synset ({self.concept}, {self.lang}) has no members")
        if len(set(members)) != len(members):
            raise ValueError(f"synset ({self.concept}, {self.lang}) has duplicate members")
        freq = self.member_freq
        if freq is not None:
            freq = tuple(freq)
            if len(freq) != len(members):
                raise ValueError(f"synset ({self.concept}, {self.lang}): freq length differs from members")
            if any((not isinstance(f, int)) or f < 0 for f in freq):
                raise ValueError(f"synset ({self.concept}, {self.lang}): negative or non-integer freq")
        object.__setattr__(self, "pos", pos)
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "gloss", normalize(self.gloss))
        object.__setattr__(self, "member_freq", freq)

    @property
    def key(self) -> tuple[int, str]:
        return (self.concept, self.lang)

    def to_record(self) -> dict:
        rec = {
            "type": "synset",
            "concept": self.concept,
            "lang": self.lang,
            "pos": POS_SHORT[self.pos],
            "gloss": self.gloss,
            "members": list(self.members),
        }
        if self.member_freq is not None:
            rec["freq"] = list(self.member_freq)
        return rec


@dataclass(frozen=True)
class Relation:
    kind: str
    source: int
    target: int
    subtype: str | None = None

    def __post_init__(self):
        if self.kind not in RELATION_KINDS:
            raise ValueError(f"unknown relation kind {self.kind!r}")

    def to_record(self) -> dict:
        rec = {"type": "relation", "kind": self.kind, "from": self.source, "to": self.target}
        if self.subtype is not None:
            rec["subtype"] = self.subtype
        return rec


@dataclass(frozen=True)
class LintFinding:
    code: str
    message: str
    concept: int | None = None
    lang: str | None = None

    def __str__(self):
        where = ""
        if self.concept is not None:
            where = f"[{self.concept}" + (f"/{self.lang}]" if self.lang else "]")
        return f"{self.code} {where} {self.message}".replace("  ", " ")


class WordnetDb:
    """Immutable, indexed collection of synsets and relations.

    Construction enforces the structural invariants: unique (concept, lang),
    every concept rooted in the pivot language, relations between known
    concepts.
    """

    def __init__(self, pivot_lang: str, synsets: Iterable[Synset], relations: Iterable[Relation] = ()):
        self.pivot_lang = pivot_lang
        by_key: dict[tuple[int, str], Synset] = {}
        for s in synsets:
            if s.key in by_key:
                raise WordnetIntegrityError(f"duplicate synset for concept {s.concept} in {s.lang!r}")
            by_key[s.key] = s
        pivot_concepts = {c for (c, lang) in by_key if lang == pivot_lang}
        if not pivot_concepts:
            raise WordnetIntegrityError(f"database must contain at least one pivot ({pivot_lang!r}) synset")
        for (c, lang) in sorted(by_key, key=lambda k: (k[0], k[1])):
            if c not in pivot_concepts:
                raise WordnetIntegrityError(f"synset ({c}, {lang!r}) has no pivot ({pivot_lang!r}) synset")
        rels = []
        for r in relations:
            for c in (r.source, r.target):
                if c not in pivot_concepts:
                    raise WordnetIntegrityError(f"relation {r.kind} {r.source}->{r.target} references unknown concept {c}")
            rels.append(r)

        self._synsets = {k: by_key[k] for k in sorted(by_key)}
        self._relations = tuple(sorted(set(rels), key=lambda r: (r.source, r.target, r.kind, r.subtype or "")))
        self._by_lang: dict[str, list[Synset]] = defaultdict(list)
        self._lemma_index: dict[tuple[str, str], list[Synset]] = defaultdict(list)
        for s in self._synsets.values():
            self._by_lang[s.lang].append(s)
            for m in s.members:
                self._lemma_index[(s.lang, m)].append(s)

    @property
    def synsets(self) -> tuple[Synset, ...]:
        return tuple(self._synsets.values())

    @property
    def relations(self) -> tuple[Relation, ...]:
        return self._relations

    @property
    def languages(self) -> list[str]:
        return sorted(self._by_lang)

    def synset(self, concept: int, lang: str) -> Synset | None:
        return self._synsets.get((concept, lang))

    def synsets_in(self, lang: str) -> list[Synset]:
        return list(self._by_lang.get(lang, ()))

    def concepts(self, lang: str | None = None) -> list[int]:
        if lang is None:
            lang = self.pivot_lang
        return [s.concept for s in self._by_lang.get(lang, ())]

    def synsets_containing(self, lemma: str, lang: str) -> list[Synset]:
        return list(self._lemma_index.get((lang, normalize(lemma)), ()))

    def __len__(self):
        return len(self._synsets)

    def __eq__(self, other):
        if not isinstance(other, WordnetDb):
            return NotImplemented
        return (
            self.pivot_lang == other.pivot_lang
            and set(self._synsets.values()) == set(other._synsets.values())
            and set(self._relations) == set(other._relations)
        )

    def __repr__(self):
        return f"WordnetDb(pivot={self.pivot_lang!r}, synsets={len(self._synsets)}, relations={len(self._relations)})"

    def records(self) -> Iterator[dict]:
        for s in self._synsets.values():
            yield s.to_record()
        for r in self._relations:
            yield r.to_record()


def members(db: WordnetDb, concept: int, lang: str) -> list[str]:
    """Member lemmas of the (concept, lang) synset in stored order; [] if absent."""
    s = db.synset(concept, lang)
    return list(s.members) if s is not None else []


def synonyms(db: WordnetDb, lemma: str, lang: str) -> set[str]:
    """All lemmas sharing a `lang` synset with `lemma`, excluding `lemma` itself."""
    lemma = normalize(lemma)
    out: set[str] = set()
    for s in db.synsets_containing(lemma, lang):
        out.update(s.members)
    out.discard(lemma)
    return out


def _parse_record(rec, lineno: int):
    if not isinstance(rec, dict):
        raise WordnetParseError(lineno, "record is not a JSON object")
    kind = rec.get("type")
    try:
        if kind == "synset":
            for key in ("concept", "lang", "pos", "members"):
                if key not in rec:
                    raise ValueError(f"missing field {key!r}")
            if not isinstance(rec["members"], list):
                raise ValueError("members must be a list")
            freq = rec.get("freq")
            if freq is not None and not isinstance(freq, list):
                raise ValueError("freq must be a list")
            gloss = rec.get("gloss", "")
            if not isinstance(gloss, str):
                raise ValueError("gloss must be a string")
            if not all(isinstance(m, str) for m in rec["members"]):
                raise ValueError("members must be strings")
            return Synset(
                concept=rec["concept"],
                lang=str(rec["lang"]),
                pos=rec["pos"],
                members=tuple(rec["members"]),
                gloss=gloss,
                member_freq=tuple(freq) if freq is not None else None,
            )
        if kind == "relation":
            for key in ("kind", "from", "to"):
                if key not in rec:
                    raise ValueError(f"missing field {key!r}")
            src, dst = rec["from"], rec["to"]
            if not all(isinstance(c, int) and not isinstance(c, bool) for c in (src, dst)):
                raise ValueError("relation endpoints must be integers")
            subtype = rec.get("subtype")
            return Relation(rec["kind"], src, dst, None if subtype is None else str(subtype))
    except ValueError as e:
        raise WordnetParseError(lineno, str(e)) from None
    raise WordnetParseError(lineno, f"unknown record type {kind!r}")


def read_records(path) -> Iterator[tuple[int, Synset | Relation]]:
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as e:
                raise WordnetParseError(lineno, f"malformed JSON: {e.msg}") from None
            yield lineno, _parse_record(rec, lineno)


def load_wordnet(path, pivot: str) -> WordnetDb:
    """Load and check a JSONL wordnet.

    Raises WordnetParseError (with line number) for malformed records and
    WordnetIntegrityError for duplicate synsets, dangling relations or
    non-pivot synsets without a pivot counterpart.
    """
    synsets: list[Synset] = []
    relations: list[Relation] = []
    seen: dict[tuple[int, str], int] = {}
    for lineno, rec in read_records(path):
        if isinstance(rec, Synset):
            if rec.key in seen:
                raise WordnetIntegrityError(
                    f"line {lineno}: duplicate synset ({rec.concept}, {rec.lang!r}), first defined on line {seen[rec.key]}"
                )
            seen[rec.key] = lineno
            synsets.append(rec)
        else:
            relations.append((lineno, rec))

    pivot_concepts = {s.concept for s in synsets if s.lang == pivot}
    if not pivot_concepts:
        raise WordnetIntegrityError(f"database must contain at least one pivot ({pivot!r}) synset")
    for s in synsets:
        if s.concept not in pivot_concepts:
            raise WordnetIntegrityError(
                f"line {seen[s.key]}: synset ({s.concept}, {s.lang!r}) has no pivot ({pivot!r}) synset"
            )
    for lineno, r in relations:
        for c in (r.source, r.target):
            if c not in pivot_concepts:
                raise WordnetIntegrityError(
                    f"line {lineno}: relation {r.kind} {r.source}->{r.target} references unknown concept {c}"
                )
    return WordnetDb(pivot, synsets, [r for _, r in relations])


def dump_wordnet(db: WordnetDb, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        for rec in db.records():
            f.write(json.dumps(rec, ensure_ascii=False) + "\n")


def _fold(lemma: str) -> str:
    return unicodedata.normalize("NFKC", lemma).casefold()


def validate(db: WordnetDb) -> list[LintFinding]:
    """Lint a loaded database. Never raises; [] means clean.

    Checks frequency ordering, empty glosses, same-language synsets whose
    members differ only by compatibility normalization or case, and relation
    kinds applied to POS combinations they are not defined for.
    """
    findings: list[LintFinding] = []
    for s in db.synsets:
        if s.member_freq is not None:
            for k in range(1, len(s.member_freq)):
                if s.member_freq[k] > s.member_freq[k - 1]:
                    findings.append(LintFinding(
                        "freq-order",
                        f"frequency order violated at member {k} ({s.members[k]!r}: "
                        f"{s.member_freq[k]} > {s.member_freq[k - 1]})",
                        s.concept, s.lang,
                    ))
                    break
        if not s.gloss.strip():
            findings.append(LintFinding("empty-gloss", "empty gloss", s.concept, s.lang))

    for lang in db.languages:
        groups: dict[tuple[str, ...], list[Synset]] = defaultdict(list)
        for s in db.synsets_in(lang):
            groups[tuple(_fold(m) for m in s.members)].append(s)
        for group in groups.values():
            if len({s.members for s in group}) > 1:
                ids = ", ".join(str(s.concept) for s in group)
                findings.append(LintFinding(
                    "script-variant",
                    f"member lists of concepts {ids} differ only by normalization",
                    group[0].concept, lang,
                ))

    for r in db.relations:
        allowed = RELATION_POS.get(r.kind)
        if allowed is None:
            continue
        a = db.synset(r.source, db.pivot_lang)
        b = db.synset(r.target, db.pivot_lang)
        if (a.pos, b.pos) not in allowed:
            findings.append(LintFinding(
                "relation-pos",
                f"{r.kind} not defined between {a.pos} {r.source} and {b.pos} {r.target}",
                r.source, None,
            ))
    return findings
