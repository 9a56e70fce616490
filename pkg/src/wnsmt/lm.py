"""Back-off n-gram language model with Witten-Bell discounting.

For a context h with c(h) observed tokens of T(h) distinct types:

    p(w | h) = c(h, w) / (c(h) + T(h))                 if c(h, w) > 0
             = beta(h) * p(w | h[1:])                  otherwise

where beta(h) spreads the reserved mass T(h) / (c(h) + T(h)) over unseen
words in proportion to the shorter-context distribution. Unigrams reserve
their Witten-Bell mass for the single unknown-word type.
"""

from __future__ import annotations

import math
from collections import defaultdict

BOS = "<s>"
EOS = "</s>"
UNK = "<unk>"


class LanguageModel:
    def __init__(self, order: int = 3):
        if order < 1:
            raise ValueError("order must be positive")
        self.order = order
        # ngram counts, keyed by tuple, for n = 1..order
        self.counts: dict[tuple[str, ...], int] = defaultdict(int)
        self._followers: dict[tuple[str, ...], dict[str, int]] = {}
        self._ctx_total: dict[tuple[str, ...], int] = {}
        self._beta: dict[tuple[str, ...], float] = {}
        self._cache: dict[tuple[tuple[str, ...], str], float] = {}
        self.vocab: set[str] = set()

    def _finalize(self):
        followers: dict[tuple[str, ...], dict[str, int]] = defaultdict(dict)
        for ng, c in self.counts.items():
            followers[ng[:-1]][ng[-1]] = c
        self._followers = dict(followers)
        self._ctx_total = {h: sum(f.values()) for h, f in self._followers.items()}
        self.vocab = set(self._followers.get((), {}))
        self._beta = {}
        self._cache = {}

    def fit(self, sentences) -> LanguageModel:
        for s in sentences:
            toks = (BOS,) + tuple(s) + (EOS,)
            for k in range(1, len(toks)):
                for n in range(1, self.order + 1):
                    if k - n + 1 < 0:
                        break
                    self.counts[toks[k - n + 1:k + 1]] += 1
        if not self.counts:
            raise ValueError("cannot train a language model on an empty corpus")
        self._finalize()
        return self

    def _backoff_weight(self, h: tuple[str, ...]) -> float:
        beta = self._beta.get(h)
        if beta is None:
            seen = self._followers[h]
            c, t = self._ctx_total[h], len(seen)
            reserved = t / (c + t)
            covered = sum(self.prob(w, h[1:]) for w in seen)
            beta = reserved / (1.0 - covered)
            self._beta[h] = beta
        return beta

    def prob(self, word: str, context=()) -> float:
        """p(word | context); only the last order-1 context tokens are used."""
        h = tuple(context)[-(self.order - 1):] if self.order > 1 else ()
        key = (h, word)
        p = self._cache.get(key)
        if p is not None:
            return p
        if word not in self.vocab:
            word = UNK
        # unseen contexts defer to the shorter one
        while h and h not in self._followers:
            h = h[1:]
        seen = self._followers[h]
        c, t = self._ctx_total[h], len(seen)
        if word in seen:
            p = seen[word] / (c + t)
        elif not h:
            p = t / (c + t) if word == UNK else 0.0
        else:
            p = self._backoff_weight(h) * self.prob(word, h[1:])
        self._cache[key] = p
        return p

    def logprob(self, word: str, context=()) -> float:
        return math.log10(self.prob(word, context))

    def score(self, sentence) -> float:
        """Sum of log10 conditional probabilities, including </s>."""
        toks = (BOS,) + tuple(sentence) + (EOS,)
        total = 0.0
        for k in range(1, len(toks)):
            total += self.logprob(toks[k], toks[max(0, k - self.order + 1):k])
        return total

    def contexts(self):
        return list(self._followers)

    def predictable(self) -> list[str]:
        """Every word the model can predict: training vocabulary plus <unk>."""
        return sorted(self.vocab) + [UNK]

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(f"#order\t{self.order}\n")
            for ng, c in sorted(self.counts.items()):
                f.write(f"{' '.join(ng)}\t{c}\n")

    @classmethod
    def load(cls, path) -> LanguageModel:
        with open(path, encoding="utf-8") as f:
            header = f.readline().rstrip("\n").split("\t")
            if header[0] != "#order":
                raise ValueError(f"{path}: missing #order header")
            lm = cls(int(header[1]))
            for line in f:
                ng, c = line.rstrip("\n").split("\t")
                lm.counts[tuple(ng.split(" "))] = int(c)
        lm._finalize()
        return lm


def train_lm(sentences, order: int = 3) -> LanguageModel:
    sentences = list(sentences)
    if not sentences:
        raise ValueError("cannot train a language model on an empty corpus")
    return LanguageModel(order).fit(sentences)
