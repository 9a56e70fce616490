"""Wordnet-augmented phrase-based statistical machine translation."""

from .corpus import Bitext, augment, load_bitext, tokenize
from .decoder import DecoderConfig, decode, score_derivation, translate
from .lexicon import BilingualLexicon, LexiconEntry, extract_bilingual_lexicon, read_lexicon, write_lexicon
from .metrics import bleu, compare, meteor, ter
from .model import TranslationModel, train_system
from .wordnet import Synset, WordnetDb, load_wordnet, members, synonyms, validate

__version__ = "0.1.0"

__all__ = [
    "Bitext", "augment", "load_bitext", "tokenize",
    "DecoderConfig", "decode", "score_derivation", "translate",
    "BilingualLexicon", "LexiconEntry", "extract_bilingual_lexicon", "read_lexicon", "write_lexicon",
    "bleu", "compare", "meteor", "ter",
    "TranslationModel", "train_system",
    "Synset", "WordnetDb", "load_wordnet", "members", "synonyms", "validate",
]
