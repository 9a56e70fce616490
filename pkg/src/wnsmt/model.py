"""Training a complete phrase-based system and storing it on disk."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

from .align import TTable, train_model1
from .corpus import Bitext
from .lm import LanguageModel, train_lm
from .phrases import PhraseTable, build_phrase_table

log = logging.getLogger(__name__)


@dataclass
class TranslationModel:
    phrase_table: PhraseTable
    lm: LanguageModel
    tt_fwd: TTable | None = None
    tt_rev: TTable | None = None

    def save(self, model_dir) -> None:
        d = Path(model_dir)
        d.mkdir(parents=True, exist_ok=True)
        self.phrase_table.save(d / "phrase-table")
        self.lm.save(d / "lm.tsv")
        if self.tt_fwd is not None:
            self.tt_fwd.save(d / "ttable.fwd.tsv")
        if self.tt_rev is not None:
            self.tt_rev.save(d / "ttable.rev.tsv")

    @classmethod
    def load(cls, model_dir) -> TranslationModel:
        d = Path(model_dir)
        fwd = d / "ttable.fwd.tsv"
        rev = d / "ttable.rev.tsv"
        return cls(
            PhraseTable.load(d / "phrase-table"),
            LanguageModel.load(d / "lm.tsv"),
            TTable.load(fwd) if fwd.exists() else None,
            TTable.load(rev) if rev.exists() else None,
        )


def train_system(
    bitext: Bitext,
    iterations: int = 10,
    epsilon: float = 1e-4,
    heuristic: str = "grow-diag-final-and",
    max_phrase: int = 7,
    lm_order: int = 3,
) -> TranslationModel:
    """Model 1 both ways, symmetrized phrase extraction, target-side LM."""
    tt_fwd = train_model1(bitext, "src-tgt", iterations, epsilon)
    tt_rev = train_model1(bitext, "tgt-src", iterations, epsilon)
    pt = build_phrase_table(bitext, tt_fwd, tt_rev, heuristic, max_phrase)
    lm = train_lm(bitext.targets(), lm_order)
    log.debug("trained %s-%s: %d pairs, %d phrase pairs", bitext.src_lang, bitext.tgt_lang, len(bitext), len(pt))
    return TranslationModel(pt, lm, tt_fwd, tt_rev)
