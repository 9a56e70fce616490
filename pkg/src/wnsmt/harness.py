"""With/without-wordnet experiment grid over ordered language pairs."""

from __future__ import annotations

import csv
import io
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from itertools import permutations
from pathlib import Path

import numpy as np

from .corpus import Bitext, augment, load_sentences, write_sentences
from .decoder import DecoderConfig, decode
from .lexicon import BilingualLexicon, extract_bilingual_lexicon, write_lexicon
from .metrics import MetricReport, compare, score_system
from .model import train_system
from .synthetic import generate_benchmark
from .wordnet import WordnetDb, load_wordnet, read_records

log = logging.getLogger(__name__)

METRICS = ("bleu", "ter", "meteor")


class ExperimentError(RuntimeError):
    def __init__(self, failures: dict[tuple[str, str], str]):
        self.failures = failures
        lines = [f"{s}-{t}: {msg}" for (s, t), msg in sorted(failures.items())]
        super().__init__("experiment failed for %d pair(s):\n%s" % (len(failures), "\n".join(lines)))


class DisjointnessError(ValueError):
    pass


@dataclass
class ExperimentSpec:
    languages: list[str]
    output_dir: Path
    train_prefix: Path | None = None
    test_prefix: Path | None = None
    wordnet: Path | None = None
    pivot: str | None = None
    test_size: int = 200
    decoder_config: Path | None = None
    seed: int = 0
    jobs: int = 1
    iterations: int = 10
    max_phrase: int = 7
    heuristic: str = "grow-diag-final-and"
    lm_order: int = 3
    repeat: int = 1
    synthetic: bool = False
    train_size: int = 2000

    @classmethod
    def from_file(cls, path) -> ExperimentSpec:
        """Parse `key = value` lines. Relative paths resolve against the
        spec file's directory."""
        path = Path(path)
        base = path.parent
        raw: dict[str, str] = {}
        with open(path, encoding="utf-8") as f:
            for lineno, line in enumerate(f, 1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ValueError(f"{path}:{lineno}: expected 'key = value'")
                k, v = (x.strip() for x in line.split("=", 1))
                raw[k] = v
        known = set(cls.__dataclass_fields__)
        unknown = set(raw) - known
        if unknown:
            raise ValueError(f"{path}: unknown keys {sorted(unknown)}")
        if "languages" not in raw or "output_dir" not in raw:
            raise ValueError(f"{path}: 'languages' and 'output_dir' are required")
        kw: dict = {"languages": raw.pop("languages").replace(",", " ").split()}
        for k, v in raw.items():
            if k in ("output_dir", "train_prefix", "test_prefix", "wordnet", "decoder_config"):
                kw[k] = (base / v).resolve() if v else None
            elif k in ("test_size", "seed", "jobs", "iterations", "max_phrase", "lm_order", "repeat", "train_size"):
                kw[k] = int(v)
            elif k == "synthetic":
                kw[k] = v.lower() in ("1", "true", "yes", "on")
            else:
                kw[k] = v
        return cls(**kw)


@dataclass(frozen=True)
class GridRow:
    src: str
    tgt: str
    metric: str
    wow: float
    wwn: float
    delta: float


@dataclass
class GridReport:
    rows: list[GridRow] = field(default_factory=list)

    @property
    def languages(self) -> list[str]:
        return sorted({r.src for r in self.rows} | {r.tgt for r in self.rows})

    def get(self, src: str, tgt: str, metric: str) -> GridRow | None:
        for r in self.rows:
            if (r.src, r.tgt, r.metric) == (src, tgt, metric):
                return r
        return None

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["src", "tgt", "metric", "wow", "wwn", "delta"])
        for r in self.rows:
            w.writerow([r.src, r.tgt, r.metric, repr(r.wow), repr(r.wwn), repr(r.delta)])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> GridReport:
        rows = []
        for rec in csv.DictReader(io.StringIO(text)):
            rows.append(GridRow(rec["src"], rec["tgt"], rec["metric"],
                                float(rec["wow"]), float(rec["wwn"]), float(rec["delta"])))
        return cls(rows)


# presentation scale and decimals per metric
_DISPLAY = {"bleu": (100.0, 2), "ter": (100.0, 3), "meteor": (1.0, 3)}


def format_cell(wow: float, wwn: float, metric: str) -> str:
    scale, digits = _DISPLAY[metric]
    return f"{wow * scale:.{digits}f} / {wwn * scale:.{digits}f}"


def render_table(report: GridReport, metric: str) -> tuple[str, str]:
    """Square text grid (rows = source, columns = target, cells "wow / wwn")
    and the CSV of that metric's rows."""
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}")
    langs = report.languages
    header = [""] + langs + [""]
    body = []
    for s in langs:
        row = [s]
        for t in langs:
            r = report.get(s, t, metric)
            row.append("" if s == t or r is None else format_cell(r.wow, r.wwn, metric))
        row.append("WOW WWN")
        body.append(row)
    widths = [max(len(r[k]) for r in [header] + body) for k in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in [header] + body]
    sub = GridReport([r for r in report.rows if r.metric == metric])
    return "\n".join(lines) + "\n", sub.to_csv()


def _bitext(train: dict, src: str, tgt: str) -> Bitext:
    pairs = [(s, t) for s, t in zip(train[src], train[tgt]) if s and t]
    return Bitext(src, tgt, pairs)


def check_disjoint(train_src, test_src) -> None:
    seen = set(map(tuple, train_src))
    clash = [k for k, s in enumerate(test_src) if tuple(s) in seen]
    if clash:
        raise DisjointnessError(f"{len(clash)} test sentence(s) also occur in training, first at test line {clash[0] + 1}")


def _lexicon_for(db: WordnetDb | None, src: str, tgt: str) -> BilingualLexicon:
    if db is None or not db.synsets_in(src) or not db.synsets_in(tgt):
        return BilingualLexicon(src, tgt, [])
    return extract_bilingual_lexicon(db, src, tgt)


def run_pair(spec: ExperimentSpec, src: str, tgt: str, train: dict, test: dict,
             db: WordnetDb | None, cfg: DecoderConfig) -> dict[str, tuple[float, float]]:
    """Train WOW and WWN for one ordered pair, decode, score, write artifacts."""
    out = Path(spec.output_dir) / "pairs" / f"{src}-{tgt}"
    out.mkdir(parents=True, exist_ok=True)
    check_disjoint(train[src], test[src])

    base = _bitext(train, src, tgt)
    lex = _lexicon_for(db, src, tgt)
    write_lexicon(lex, out / "lexicon.tsv")
    systems = {"wow": base, "wwn": augment(base, lex, spec.repeat)}
    refs = test[tgt]
    reports: dict[str, MetricReport] = {}
    for name, bt in systems.items():
        model = train_system(bt, spec.iterations, heuristic=spec.heuristic,
                             max_phrase=spec.max_phrase, lm_order=spec.lm_order)
        model.phrase_table.save(out / f"{name}.phrase-table")
        hyps = [decode(s, model, cfg).tokens for s in test[src]]
        write_sentences(hyps, out / f"{name}.hyp.{tgt}")
        reports[name] = score_system(hyps, refs, db, tgt)
    delta = compare(reports["wow"], reports["wwn"])
    summary = {
        name: {"bleu": r.bleu, "ter": r.ter, "meteor": r.meteor, **r.details}
        for name, r in reports.items()
    }
    summary["delta"] = {"bleu": delta.bleu, "ter": delta.ter, "meteor": delta.meteor}
    summary["lexicon_entries"] = len(lex)
    (out / "scores.json").write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return {m: (getattr(reports["wow"], m), getattr(reports["wwn"], m)) for m in METRICS}


def _job(args):
    spec, src, tgt, train, test, db, cfg = args
    try:
        return (src, tgt), run_pair(spec, src, tgt, train, test, db, cfg), None
    except Exception as e:  # annotated and re-raised by the caller
        return (src, tgt), None, f"{type(e).__name__}: {e}"


def prepare_data(spec: ExperimentSpec):
    """Load (or generate) train/test sentences per language and the wordnet."""
    out = Path(spec.output_dir)
    if spec.synthetic:
        bench = generate_benchmark(spec.languages, n_train=spec.train_size, n_test=spec.test_size, seed=spec.seed)
        paths = bench.write(out / "data")
        spec.train_prefix, spec.test_prefix, spec.wordnet = paths["train_prefix"], paths["test_prefix"], paths["wordnet"]
        spec.pivot = spec.pivot or spec.languages[0]
    if spec.train_prefix is None:
        raise ValueError("no training corpus: set train_prefix or synthetic = true")

    train = {lang: load_sentences(f"{spec.train_prefix}.{lang}", lang) for lang in spec.languages}
    sizes = {len(v) for v in train.values()}
    if len(sizes) != 1:
        raise ValueError(f"training files differ in length: { {k: len(v) for k, v in train.items()} }")
    if spec.test_prefix is not None:
        test = {lang: load_sentences(f"{spec.test_prefix}.{lang}", lang)[:spec.test_size] for lang in spec.languages}
    else:
        # hold out a seeded random sample of the multi-parallel corpus
        n = sizes.pop()
        if spec.test_size >= n:
            raise ValueError(f"test_size {spec.test_size} leaves no training data ({n} sentences)")
        rng = np.random.default_rng(spec.seed)
        held = set(int(k) for k in rng.choice(n, size=spec.test_size, replace=False))
        test = {lang: [s for k, s in enumerate(v) if k in held] for lang, v in train.items()}
        train = {lang: [s for k, s in enumerate(v) if k not in held] for lang, v in train.items()}
    for lang, sents in test.items():
        if any(not s for s in sents):
            raise ValueError(f"empty test sentence in language {lang!r}")

    db = None
    if spec.wordnet is not None:
        if next(read_records(spec.wordnet), None) is None:
            # an empty database yields empty lexicons, so WWN reproduces WOW
            log.warning("wordnet %s has no records; running without one", spec.wordnet)
        else:
            db = load_wordnet(spec.wordnet, spec.pivot or spec.languages[0])
    return train, test, db


def run_experiment(spec: ExperimentSpec) -> GridReport:
    if len(spec.languages) < 2:
        raise ValueError("an experiment needs at least two languages")
    spec = replace(spec)
    out = Path(spec.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    train, test, db = prepare_data(spec)
    cfg = DecoderConfig.from_file(spec.decoder_config) if spec.decoder_config else DecoderConfig()

    pairs = sorted(permutations(sorted(spec.languages), 2))
    jobs = [(spec, s, t, train, test, db, cfg) for s, t in pairs]
    if spec.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            results = list(pool.map(_job, jobs))
    else:
        results = [_job(j) for j in jobs]

    failures = {key: err for key, _, err in results if err is not None}
    if failures:
        raise ExperimentError(failures)
    scores = {key: res for key, res, _ in results}
    rows = []
    for s, t in pairs:
        for m in METRICS:
            wow, wwn = scores[(s, t)][m]
            rows.append(GridRow(s, t, m, wow, wwn, wwn - wow))
    report = GridReport(rows)
    (out / "grid.csv").write_text(report.to_csv(), encoding="utf-8")
    for m in METRICS:
        text, _ = render_table(report, m)
        (out / f"{m}.txt").write_text(text, encoding="utf-8")
    return report


def load_report(out_dir) -> GridReport:
    return GridReport.from_csv((Path(out_dir) / "grid.csv").read_text(encoding="utf-8"))
