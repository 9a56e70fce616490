"""Small hand-built data: the Hindi "endless" synset, the English-Malayalam
"blow up" synset and a miniature English-Malayalam corpus without any
translation of "blow up"."""

from __future__ import annotations

from .corpus import Bitext, tokenize
from .wordnet import Synset, WordnetDb

ENDLESS = 101
BLOW_UP = 202

ENDLESS_HIN = ("अनंत", "असमाप्य", "अंतहीन", "अनन्त", "अन्तहीन", "अनवसान")
BLOW_UP_MAL = ("വികസിപ്പിക്കുക", "വലുതാക്കുക", "വീർപ്പിക്കുക")


def sample_wordnet() -> WordnetDb:
    synsets = [
        Synset(ENDLESS, "hin", "adj", ENDLESS_HIN, "जिसका अंत न हो"),
        Synset(ENDLESS, "eng", "adj", ("endless", "infinite"), "having no end"),
        Synset(BLOW_UP, "hin", "verb", ("फुलाना",), "हवा भरकर बड़ा करना"),
        Synset(BLOW_UP, "eng", "verb", ("blow_up",), "inflate or enlarge"),
        Synset(BLOW_UP, "mal", "verb", BLOW_UP_MAL, "വലുതാക്കുക"),
    ]
    return WordnetDb("hin", synsets)


_MINI = [
    ("he beat the things", "അവൻ കാര്യങ്ങൾ അടിക്കുക"),
    ("he saw the things", "അവൻ കാര്യങ്ങൾ കണ്ടു"),
    ("she saw the book", "അവൾ പുസ്തകം കണ്ടു"),
    ("she took the book", "അവൾ പുസ്തകം എടുത്തു"),
    ("he took the ball", "അവൻ പന്ത് എടുത്തു"),
    ("she beat the ball", "അവൾ പന്ത് അടിക്കുക"),
    ("he read the book", "അവൻ പുസ്തകം വായിച്ചു"),
    ("she read the things", "അവൾ കാര്യങ്ങൾ വായിച്ചു"),
    ("the things", "കാര്യങ്ങൾ"),
    ("the book", "പുസ്തകം"),
    ("he", "അവൻ"),
    ("she", "അവൾ"),
    ("he saw the ball .", "അവൻ പന്ത് കണ്ടു ."),
]

BLOW_UP_SENTENCE = "He blow up the things."


def blow_up_corpus() -> Bitext:
    return Bitext("eng", "mal", [(tokenize(e, "eng"), tokenize(m, "mal")) for e, m in _MINI])
