"""Command-line entry points: wordnet, corpus, smt, eval, experiment.

Each is installed as a console script and also reachable as
``python -m wnsmt <command> ...``.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .corpus import augment, load_bitext, load_sentences, write_bitext, write_sentences
from .decoder import DecoderConfig, decode
from .lexicon import extract_bilingual_lexicon, read_lexicon, write_lexicon
from .metrics import bleu, corpus_meteor, corpus_ter, meteor
from .model import TranslationModel, train_system
from .wordnet import WordnetError, load_wordnet, validate


def _lang_of(path) -> str:
    suffix = Path(path).suffix
    if not suffix:
        raise SystemExit(f"cannot infer language from {path!r}; pass the language explicitly")
    return suffix[1:]


def wordnet_main(argv=None) -> int:
    p = argparse.ArgumentParser(prog="wordnet", description="validate wordnets and extract bilingual lexicons")
    sub = p.add_subparsers(dest="cmd", required=True)
    v = sub.add_parser("validate", help="lint a JSONL wordnet")
    v.add_argument("db")
    v.add_argument("--pivot", default="hin")
    x = sub.add_parser("extract", help="extract a bilingual lexicon as TSV")
    x.add_argument("db")
    x.add_argument("--src", required=True)
    x.add_argument("--tgt", required=True)
    x.add_argument("--pivot", default="hin")
    x.add_argument("-o", "--output", required=True)
    args = p.parse_args(argv)

    try:
        db = load_wordnet(args.db, args.pivot)
    except (WordnetError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    if args.cmd == "validate":
        findings = validate(db)
        for f in findings:
            print(f)
        return 1 if findings else 0
    try:
        lex = extract_bilingual_lexicon(db, args.src, args.tgt)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    write_lexicon(lex, args.output)
    print(f"{len(lex)} entries ({lex.n_candidates} before de-duplication) -> {args.output}", file=sys.stderr)
    return 0


def corpus_main(argv=None) -> int:
    p = argparse.ArgumentParser(prog="corpus", description="training-corpus utilities")
    sub = p.add_subparsers(dest="cmd", required=True)
    a = sub.add_parser("augment", help="append lexicon entries to a bitext")
    a.add_argument("--base-src", required=True)
    a.add_argument("--base-tgt", required=True)
    a.add_argument("--lex", required=True)
    a.add_argument("--repeat", type=int, default=1)
    a.add_argument("--src-lang")
    a.add_argument("--tgt-lang")
    a.add_argument("-o", "--output", required=True, help="output prefix; writes <prefix>.<lang> files")
    args = p.parse_args(argv)

    src_lang = args.src_lang or _lang_of(args.base_src)
    tgt_lang = args.tgt_lang or _lang_of(args.base_tgt)
    base = load_bitext(args.base_src, args.base_tgt, src_lang, tgt_lang)
    if base.dropped:
        print(f"{base.dropped} pair{'s' if base.dropped != 1 else ''} dropped", file=sys.stderr)
    lex = read_lexicon(args.lex, src_lang, tgt_lang)
    try:
        out = augment(base, lex, args.repeat)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    write_bitext(out, f"{args.output}.{src_lang}", f"{args.output}.{tgt_lang}")
    print(f"{len(out)} pairs -> {args.output}.{{{src_lang},{tgt_lang}}}", file=sys.stderr)
    return 0


def smt_main(argv=None) -> int:
    p = argparse.ArgumentParser(prog="smt", description="train and run phrase-based models")
    sub = p.add_subparsers(dest="cmd", required=True)
    t = sub.add_parser("train")
    t.add_argument("--src", required=True)
    t.add_argument("--tgt", required=True)
    t.add_argument("--out", required=True)
    t.add_argument("--src-lang")
    t.add_argument("--tgt-lang")
    t.add_argument("--iterations", type=int, default=10)
    t.add_argument("--max-phrase", type=int, default=7)
    t.add_argument("--sym", default="gdfa", choices=["gdfa", "grow-diag-final-and", "intersection", "union"])
    t.add_argument("--lm-order", type=int, default=3)
    d = sub.add_parser("translate")
    d.add_argument("--model", required=True)
    d.add_argument("--in", dest="input", required=True)
    d.add_argument("--out", required=True)
    d.add_argument("--lang", help="input language (default: input file suffix)")
    d.add_argument("--beam", type=int)
    d.add_argument("--dl", type=int)
    d.add_argument("--weights", help="decoder config file of 'key = value' lines")
    args = p.parse_args(argv)

    if args.cmd == "train":
        src_lang = args.src_lang or _lang_of(args.src)
        tgt_lang = args.tgt_lang or _lang_of(args.tgt)
        bt = load_bitext(args.src, args.tgt, src_lang, tgt_lang)
        model = train_system(bt, args.iterations, heuristic=args.sym, max_phrase=args.max_phrase,
                             lm_order=args.lm_order)
        model.save(args.out)
        print(f"{len(bt)} pairs, {len(model.phrase_table)} phrase pairs -> {args.out}", file=sys.stderr)
        return 0

    cfg = DecoderConfig.from_file(args.weights) if args.weights else DecoderConfig()
    if args.beam is not None:
        cfg.beam_size = args.beam
    if args.dl is not None:
        cfg.distortion_limit = args.dl
    model = TranslationModel.load(args.model)
    lang = args.lang or Path(args.input).suffix[1:]
    hyps = [decode(s, model, cfg).tokens for s in load_sentences(args.input, lang)]
    write_sentences(hyps, args.out)
    return 0


def eval_main(argv=None) -> int:
    p = argparse.ArgumentParser(prog="eval", description="score hypotheses against references")
    sub = p.add_subparsers(dest="cmd", required=True)
    s = sub.add_parser("score")
    s.add_argument("--hyp", required=True)
    s.add_argument("--ref", required=True)
    s.add_argument("--metric", required=True, choices=["bleu", "ter", "meteor"])
    s.add_argument("--wordnet")
    s.add_argument("--pivot", default="hin")
    s.add_argument("--lang", help="language of hypothesis and reference")
    s.add_argument("--smooth", action="store_true", help="add-one smoothing for BLEU n >= 2")
    args = p.parse_args(argv)

    lang = args.lang or ""
    hyps = load_sentences(args.hyp, lang)
    refs = load_sentences(args.ref, lang)
    if len(hyps) != len(refs):
        print(f"error: {len(hyps)} hypotheses but {len(refs)} references", file=sys.stderr)
        return 1
    if args.metric == "bleu":
        rep = bleu(hyps, refs, smooth=args.smooth).to_dict()
        rep["bleu_x100"] = rep["bleu"] * 100
    elif args.metric == "ter":
        rep = corpus_ter(hyps, refs).to_dict()
        rep["ter_x100"] = rep["ter"] * 100
    else:
        db = load_wordnet(args.wordnet, args.pivot) if args.wordnet else None
        sents = [meteor(h, r, db, args.lang) for h, r in zip(hyps, refs)]
        score = corpus_meteor(hyps, refs, db, args.lang)
        rep = {
            "meteor": score,
            "meteor_x100": score * 100,
            "sentences": [
                {k: v for k, v in m.to_dict().items() if k != "alignment"} for m in sents
            ],
        }
    print(json.dumps(rep, indent=2, ensure_ascii=False))
    return 0


def experiment_main(argv=None) -> int:
    from .harness import ExperimentError, ExperimentSpec, METRICS, load_report, render_table, run_experiment

    p = argparse.ArgumentParser(prog="experiment", description="with/without-wordnet comparison grids")
    sub = p.add_subparsers(dest="cmd", required=True)
    r = sub.add_parser("run")
    r.add_argument("spec")
    r.add_argument("-v", "--verbose", action="store_true")
    rep = sub.add_parser("report")
    rep.add_argument("out_dir")
    rep.add_argument("--metric", default="bleu", choices=list(METRICS))
    rep.add_argument("--format", default="table", choices=["table", "csv"])
    args = p.parse_args(argv)

    if args.cmd == "run":
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
        try:
            spec = ExperimentSpec.from_file(args.spec)
            report = run_experiment(spec)
        except ExperimentError as e:
            print(f"error: {e}", file=sys.stderr)
            return 2
        except (ValueError, OSError, WordnetError) as e:
            print(f"error: {e}", file=sys.stderr)
            return 2
        for m in METRICS:
            print(render_table(report, m)[0])
        return 0

    report = load_report(args.out_dir)
    table, csv_text = render_table(report, args.metric)
    sys.stdout.write(table if args.format == "table" else csv_text)
    return 0


COMMANDS = {
    "wordnet": wordnet_main,
    "corpus": corpus_main,
    "smt": smt_main,
    "eval": eval_main,
    "experiment": experiment_main,
}


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] not in COMMANDS:
        print(f"usage: python -m wnsmt {{{','.join(COMMANDS)}}} ...", file=sys.stderr)
        return 2
    return COMMANDS[argv[0]](argv[1:])
