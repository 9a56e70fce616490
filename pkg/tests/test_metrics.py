import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (
    bleu_bruteforce,
    chunks_bruteforce,
    levenshtein_recursive,
    meteor_bruteforce,
    ter_greedy_bruteforce,
    ter_optimal_bruteforce,
)
from wnsmt.fixtures import BLOW_UP_MAL
from wnsmt.metrics import (
    MetricReport,
    apply_shift,
    bleu,
    compare,
    corpus_meteor,
    corpus_ter,
    count_chunks,
    edit_distance,
    meteor,
    score_system,
    ter,
    ter_edits,
)
from wnsmt.wordnet import synonyms

sentence = st.lists(st.sampled_from("abcd"), min_size=1, max_size=6).map(tuple)


class TestBleu:
    def test_identity(self):
        h = [("a", "b", "c", "d", "e")]
        assert bleu(h, h).bleu == 1.0

    def test_clipped_unigrams(self):
        rep = bleu([("the",) * 7], [tuple("the cat is on the mat".split())])
        assert rep.p_n[0] == pytest.approx(2 / 7)
        assert rep.matches[0] == 2 and rep.totals[0] == 7
        assert rep.bleu == 0.0  # no bigram matches in strict mode

    def test_brevity_penalty(self):
        ref = tuple("a b c d e f g h i j".split())
        rep = bleu([ref[:5]], [ref])
        assert rep.p_n == [1.0, 1.0, 1.0, 1.0]
        assert rep.bp == pytest.approx(math.exp(-1))
        assert rep.bp == pytest.approx(0.367879, abs=5e-7)
        assert rep.bleu == pytest.approx(rep.bp)

    def test_corpus_level_sums_before_dividing(self):
        hyps = [("a", "b"), ("c", "x")]
        refs = [("a", "b"), ("c", "d")]
        rep = bleu(hyps, refs, max_n=1)
        assert rep.p_n == [3 / 4]

    def test_smoothing(self):
        rep = bleu([("a", "x", "b")], [("a", "y", "b")], smooth=True)
        assert rep.p_n[1] == pytest.approx(1 / 3)
        assert rep.bleu > 0
        assert bleu([("a", "x", "b")], [("a", "y", "b")]).bleu == 0

    def test_errors_and_empty_hyp(self):
        with pytest.raises(ValueError):
            bleu([("a",)], [])
        with pytest.raises(ValueError):
            bleu([], [])
        assert bleu([()], [("a",)]).bleu == 0.0

    @settings(max_examples=300, deadline=None)
    @given(st.lists(st.tuples(sentence, sentence), min_size=1, max_size=3))
    def test_matches_oracle(self, pairs):
        hyps = [h for h, _ in pairs]
        refs = [r for _, r in pairs]
        assert bleu(hyps, refs).bleu == pytest.approx(bleu_bruteforce(hyps, refs), abs=1e-9)

    @settings(max_examples=200, deadline=None)
    @given(st.lists(sentence, min_size=1, max_size=4), st.lists(sentence, min_size=1, max_size=4))
    def test_range(self, a, b):
        n = min(len(a), len(b))
        assert 0.0 <= bleu(a[:n], b[:n]).bleu <= 1.0
        assert bleu(a, a).bleu == pytest.approx(1.0)


class TestTer:
    def test_identity(self):
        assert ter(("a", "b"), ("a", "b")).ter == 0.0

    def test_substitution(self):
        rep = ter(tuple("abxde"), tuple("abcde"))
        assert rep.edits == 1 and rep.ter == pytest.approx(0.2)

    def test_single_shift(self):
        rep = ter(("c", "a", "b"), ("a", "b", "c"))
        assert rep.edits == 1 and rep.shifts == 1
        assert rep.ter == pytest.approx(1 / 3)
        assert ter_optimal_bruteforce(("c", "a", "b"), ("a", "b", "c")) == 1

    def test_greedy_can_miss_optimum(self):
        # greedy shifting is a heuristic: here two edits suffice but it finds three
        h, r = tuple("cacbcb"), tuple("baccbc")
        assert ter_edits(h, r)[0] == 3
        assert ter_optimal_bruteforce(h, r) == 2

    def test_empty_reference(self):
        with pytest.raises(ValueError):
            ter(("a",), ())
        with pytest.raises(ValueError):
            corpus_ter([("a",)], [()])

    def test_corpus(self):
        rep = corpus_ter([tuple("abxde"), ("c", "a", "b")], [tuple("abcde"), ("a", "b", "c")])
        assert rep.edits == 2 and rep.ref_len == 8 and rep.ter == 0.25

    def test_apply_shift(self):
        assert apply_shift(list("abcde"), 0, 2, 3) == list("cdeab")
        assert apply_shift(list("abcde"), 3, 1, 0) == list("dabce")

    @settings(max_examples=300, deadline=None)
    @given(sentence, sentence)
    def test_matches_oracle(self, h, r):
        assert edit_distance(h, r) == levenshtein_recursive(h, r)
        assert ter_edits(h, r)[0] == ter_greedy_bruteforce(h, r)

    @settings(max_examples=300, deadline=None)
    @given(sentence, sentence)
    def test_bounds(self, h, r):
        rep = ter(h, r)
        assert rep.ter >= 0
        assert rep.edits <= edit_distance(h, r)
        assert (rep.ter == 0) == (h == r)


def wordnet_syn(db, lang):
    return lambda a, b: a in synonyms(db, b, lang)


class TestMeteor:
    def test_identical(self):
        rep = meteor(("a", "b", "c"), ("a", "b", "c"))
        assert (rep.precision, rep.recall, rep.chunks, rep.matches) == (1.0, 1.0, 1, 3)
        assert rep.penalty == pytest.approx(0.018519, abs=5e-7)
        assert rep.score == pytest.approx(0.981481, abs=5e-7)

    def test_no_matches(self):
        assert meteor(("a",), ("b",)).score == 0.0
        assert meteor((), ("b",)).score == 0.0

    def test_synonym_stage(self, sample_db):
        hyp = ("അവൻ", BLOW_UP_MAL[0])
        ref = ("അവൻ", BLOW_UP_MAL[1])
        without = meteor(hyp, ref)
        with_db = meteor(hyp, ref, sample_db, "mal")
        assert without.matches == 1
        assert with_db.matches == 2 and with_db.chunks == 1
        assert with_db.score > without.score

    def test_minimal_chunks(self):
        # "a" could link to either ref "a"; the diagonal choice gives one chunk
        rep = meteor(("a", "b"), ("a", "x", "a", "b"))
        assert rep.chunks == 1 and rep.alignment == [(0, 2), (1, 3)]

    def test_long_sentences_greedy(self):
        h = tuple("abcdefghijklmn")
        rep = meteor(h, h)
        assert rep.matches == 14 and rep.chunks == 1

    def test_corpus_average(self):
        pairs = [(("a", "b", "c"), ("a", "b", "c")), (("a",), ("b",))]
        assert corpus_meteor([h for h, _ in pairs], [r for _, r in pairs]) == pytest.approx(0.981481 / 2, abs=1e-6)

    def test_chunks(self):
        assert count_chunks([]) == 0
        assert count_chunks([(0, 0), (1, 1), (2, 3)]) == 2
        assert count_chunks([(0, 1), (1, 0)]) == 2

    @settings(max_examples=300, deadline=None)
    @given(sentence, sentence)
    def test_matches_oracle(self, h, r):
        rep = meteor(h, r)
        score, m, ch = meteor_bruteforce(h, r)
        assert (rep.matches, rep.chunks) == (m, ch)
        assert rep.score == pytest.approx(score, abs=1e-9)
        assert count_chunks(rep.alignment) == chunks_bruteforce(rep.alignment)
        assert 0.0 <= rep.score <= 1.0 and rep.chunks <= max(rep.matches, 0) and rep.penalty <= 0.5

    @pytest.mark.parametrize("seed", range(200))
    def test_synonym_stage_matches_oracle(self, seed, sample_db):
        rng = random.Random(seed)
        vocab = list(BLOW_UP_MAL) + ["അവൻ", "x"]
        h = tuple(rng.choice(vocab) for _ in range(rng.randint(1, 5)))
        r = tuple(rng.choice(vocab) for _ in range(rng.randint(1, 5)))
        rep = meteor(h, r, sample_db, "mal")
        score, m, ch = meteor_bruteforce(h, r, wordnet_syn(sample_db, "mal"))
        assert (rep.matches, rep.chunks) == (m, ch)
        assert rep.score == pytest.approx(score, abs=1e-9)
        assert rep.matches >= meteor(h, r).matches


class TestCompare:
    def test_delta_signs(self):
        d = compare(MetricReport(0.7006, 0.17424, 0.5), MetricReport(0.7568, 0.15456, 0.6))
        assert d.bleu * 100 == pytest.approx(5.62, abs=1e-9)
        assert d.ter * 100 == pytest.approx(-1.968, abs=1e-9)
        assert d.improved == {"bleu": True, "ter": True, "meteor": True}

    def test_identical(self):
        r = MetricReport(0.3, 0.4, 0.5)
        d = compare(r, r)
        assert (d.bleu, d.ter, d.meteor) == (0, 0, 0)
        assert d.improved == {"bleu": False, "ter": False, "meteor": False}

    def test_score_system(self):
        refs = [("a", "b", "c", "d")]
        rep = score_system(refs, refs)
        assert (rep.bleu, rep.ter) == (1.0, 0.0)
        assert rep.details["bleu"]["hyp_len"] == 4
