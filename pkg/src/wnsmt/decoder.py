"""Phrase-based stack decoder with a log-linear model.

Features (all log10 or counts, summed over the derivation):
  phi_ts, phi_st, lex_ts, lex_st  phrase-table scores, 0 for passthrough words
  lm                              target language model incl. </s>
  word_penalty                    -1 per target word
  distortion                      -sum |start - end_of_previous_phrase|
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, fields

from .model import TranslationModel

FEATURES = ("phi_ts", "phi_st", "lex_ts", "lex_st", "lm", "word_penalty", "distortion")


class CoverageError(ValueError):
    pass


@dataclass
class DecoderConfig:
    w_phi_ts: float = 0.2
    w_phi_st: float = 0.2
    w_lex_ts: float = 0.2
    w_lex_st: float = 0.2
    w_lm: float = 0.5
    w_word_penalty: float = 0.1
    w_distortion: float = 0.1
    beam_size: int | None = 100  # None: no pruning
    distortion_limit: int = 6
    ttable_limit: int | None = 20  # translation options kept per source span

    def __post_init__(self):
        if self.beam_size is not None and self.beam_size < 1:
            raise ValueError("beam_size must be >= 1")
        if self.distortion_limit < 0:
            raise ValueError("distortion_limit must be >= 0")

    @property
    def weights(self) -> dict[str, float]:
        return {f: getattr(self, "w_" + f) for f in FEATURES}

    @classmethod
    def from_file(cls, path) -> DecoderConfig:
        """Read `key = value` lines; '#' starts a comment."""
        known = {f.name: f for f in fields(cls)}
        kw = {}
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ValueError(f"{path}:{lineno}: expected 'key = value'")
                key, value = (x.strip() for x in line.split("=", 1))
                if key in FEATURES:
                    key = "w_" + key
                if key not in known:
                    raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
                if key in ("beam_size", "ttable_limit"):
                    kw[key] = None if value.lower() in ("none", "inf", "0") else int(value)
                elif key == "distortion_limit":
                    kw[key] = int(value)
                else:
                    kw[key] = float(value)
        return cls(**kw)


@dataclass(frozen=True)
class Step:
    start: int
    end: int  # exclusive
    tgt: tuple[str, ...]


@dataclass(frozen=True)
class Derivation:
    src: tuple[str, ...]
    steps: tuple[Step, ...]

    @property
    def target(self) -> tuple[str, ...]:
        return tuple(w for st in self.steps for w in st.tgt)


@dataclass
class Translation:
    tokens: tuple[str, ...]
    score: float
    derivation: Derivation


def passthrough_positions(src, model: TranslationModel) -> set[int]:
    """Source positions that no phrase-table entry matching this sentence
    covers; only these may be copied verbatim."""
    pt = model.phrase_table
    max_len = pt.max_src_len
    covered = set()
    for s1 in range(len(src)):
        for s2 in range(s1 + 1, min(len(src), s1 + max_len) + 1):
            if pt.options(src[s1:s2]):
                covered.update(range(s1, s2))
    return set(range(len(src))) - covered


def _phrase_features(opt) -> tuple[float, float, float, float]:
    return tuple(math.log10(x) for x in opt.scores)


def feature_vector(derivation: Derivation, model: TranslationModel) -> dict[str, float]:
    """Unweighted feature totals of a complete derivation."""
    src = derivation.src
    seen = [0] * len(src)
    for st in derivation.steps:
        if not 0 <= st.start < st.end <= len(src):
            raise CoverageError(f"step {st.start}:{st.end} outside source of length {len(src)}")
        for i in range(st.start, st.end):
            seen[i] += 1
    if any(c != 1 for c in seen):
        raise CoverageError("derivation must cover every source position exactly once")

    oov = passthrough_positions(src, model)
    feats = dict.fromkeys(FEATURES, 0.0)
    prev_end = 0
    for st in derivation.steps:
        opt = model.phrase_table.lookup(src[st.start:st.end], st.tgt)
        if opt is not None:
            for name, v in zip(FEATURES[:4], _phrase_features(opt)):
                feats[name] += v
        elif not (st.end - st.start == 1 and st.start in oov and st.tgt == (src[st.start],)):
            raise ValueError(f"phrase pair {src[st.start:st.end]} -> {st.tgt} is not in the model")
        feats["word_penalty"] -= len(st.tgt)
        feats["distortion"] -= abs(st.start - prev_end)
        prev_end = st.end
    feats["lm"] = model.lm.score(derivation.target) if src else 0.0
    return feats


def score_derivation(derivation: Derivation, model: TranslationModel, cfg: DecoderConfig) -> float:
    feats = feature_vector(derivation, model)
    w = cfg.weights
    return sum(w[k] * feats[k] for k in FEATURES)


@dataclass
class _Hyp:
    score: float
    covered: int
    last_end: int
    lm_state: tuple[str, ...]
    target: tuple[str, ...]
    back: _Hyp | None = field(default=None, repr=False)
    step: Step | None = None
    text: str = ""

    def derivation_steps(self) -> tuple[Step, ...]:
        steps = []
        h = self
        while h.step is not None:
            steps.append(h.step)
            h = h.back
        return tuple(reversed(steps))


def _better(a: _Hyp, b: _Hyp) -> bool:
    if a.score != b.score:
        return a.score > b.score
    return a.text < b.text


def translation_options(src, model: TranslationModel, cfg: DecoderConfig):
    """Map (start, end) -> list of (tgt, weighted phrase score)."""
    w = cfg.weights
    oov = passthrough_positions(src, model)
    max_len = max(1, model.phrase_table.max_src_len)
    opts = {}
    for s1 in range(len(src)):
        for s2 in range(s1 + 1, min(len(src), s1 + max_len) + 1):
            cands = []
            for o in model.phrase_table.options(src[s1:s2]):
                f = _phrase_features(o)
                s = w["phi_ts"] * f[0] + w["phi_st"] * f[1] + w["lex_ts"] * f[2] + w["lex_st"] * f[3]
                s -= w["word_penalty"] * len(o.tgt)
                cands.append((o.tgt, s))
            if s2 - s1 == 1 and s1 in oov:
                cands.append(((src[s1],), -w["word_penalty"]))
            if not cands:
                continue
            cands.sort(key=lambda c: (-c[1], c[0]))
            if cfg.ttable_limit is not None:
                cands = cands[:cfg.ttable_limit]
            opts[(s1, s2)] = cands
    return opts


def _search(src, model: TranslationModel, cfg: DecoderConfig, distortion_limit: int) -> _Hyp | None:
    n = len(src)
    lm = model.lm
    order = lm.order
    w_lm, w_d = cfg.w_lm, cfg.w_distortion
    full = (1 << n) - 1
    opts = translation_options(src, model, cfg)
    spans = sorted(opts)
    span_mask = {sp: ((1 << sp[1]) - 1) ^ ((1 << sp[0]) - 1) for sp in spans}

    start_state = ("<s>",)[-(order - 1):] if order > 1 else ()
    stacks: list[dict] = [dict() for _ in range(n + 1)]
    stacks[0][(0, 0, start_state)] = _Hyp(0.0, 0, 0, start_state, ())

    for k in range(n):
        hyps = sorted(stacks[k].values(), key=lambda h: (-h.score, h.text))
        if cfg.beam_size is not None:
            hyps = hyps[:cfg.beam_size]
        for h in hyps:
            for sp in spans:
                m = span_mask[sp]
                if h.covered & m:
                    continue
                d = abs(sp[0] - h.last_end)
                if d > distortion_limit:
                    continue
                covered = h.covered | m
                done = covered == full
                for tgt, pscore in opts[sp]:
                    state = h.lm_state
                    lmscore = 0.0
                    for wd in tgt:
                        lmscore += lm.logprob(wd, state)
                        state = (state + (wd,))[-(order - 1):] if order > 1 else ()
                    if done:
                        lmscore += lm.logprob("</s>", state)
                        key = (covered,)
                    else:
                        key = (covered, sp[1], state)
                    score = h.score + pscore + w_lm * lmscore - w_d * d
                    target = h.target + tgt
                    new = _Hyp(score, covered, sp[1], state, target, h, Step(sp[0], sp[1], tgt), " ".join(target))
                    stack = stacks[k + sp[1] - sp[0]]
                    old = stack.get(key)
                    if old is None or _better(new, old):
                        stack[key] = new
    final = list(stacks[n].values())
    if not final:
        return None
    return min(final, key=lambda h: (-h.score, h.text))


def decode(src, model: TranslationModel, cfg: DecoderConfig | None = None) -> Translation:
    """Best translation of a tokenized sentence, with its derivation."""
    cfg = cfg or DecoderConfig()
    src = tuple(src)
    if not src:
        return Translation((), 0.0, Derivation((), ()))
    best = _search(src, model, cfg, cfg.distortion_limit)
    if best is None:
        # every hypothesis hit a distortion dead end; monotone always completes
        best = _search(src, model, cfg, 0)
    return Translation(best.target, best.score, Derivation(src, best.derivation_steps()))


def translate(src, model: TranslationModel, cfg: DecoderConfig | None = None) -> tuple[tuple[str, ...], float]:
    t = decode(src, model, cfg)
    return t.tokens, t.score
