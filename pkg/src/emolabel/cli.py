"""``emolabel`` command line: label, eval, lexicon, gen."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .corpus_io import CorpusError, label_records, read_corpus, tweet_record, write_corpus, write_labels
from .emoji_lexicon import LEXICON_ENV, LexiconError, load_lexicon
from .evaluate import EvaluationError, report
from .pipeline import CoverageMode, Fallback, PipelineConfig, run_pipeline
from .synth import SAFRISENTI_CLASS_COUNTS, SynthConfig, generate, priors_for

_FALLBACKS = {"neutral": Fallback.NEUTRAL, "none": Fallback.NONE, "majority-class": Fallback.MAJORITY_CLASS}


def _positive_int(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {value!r}") from None
    if n <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {n}")
    return n


def _fraction(value: str) -> float:
    try:
        x = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {value!r}") from None
    if not 0.0 <= x <= 1.0:
        raise argparse.ArgumentTypeError(f"must lie in [0, 1], got {x}")
    return x


def _priors(value: str) -> tuple[float, ...]:
    if value.lower() in SAFRISENTI_CLASS_COUNTS:
        return priors_for(value)
    try:
        parts = tuple(float(p) for p in value.split(","))
    except ValueError:
        parts = ()
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(
            f"expected NEG,NEU,POS fractions or one of {', '.join(SAFRISENTI_CLASS_COUNTS)}"
        )
    return parts


def _add_pipeline_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("-i", "--input", required=True, help="tweet corpus file")
    p.add_argument("-f", "--format", choices=("jsonl", "csv"), default="jsonl")
    p.add_argument("--lexicon", default=os.environ.get(LEXICON_ENV) or None,
                   help=f"emoji lexicon JSON (default: ${LEXICON_ENV} or the built-in set)")
    p.add_argument("--fallback", choices=tuple(_FALLBACKS), default="neutral",
                   help="label for step-3 ties and zero coverage")
    p.add_argument("--coverage", choices=tuple(m.value for m in CoverageMode), default="occurrences")
    p.add_argument("--export-lists", metavar="PATH", help="also write the induced word lists as JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="emolabel", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("label", help="label a corpus")
    _add_pipeline_flags(p)
    p.add_argument("-o", "--output", help="labelled JSONL (default: stdout)")

    p = sub.add_parser("eval", help="label a gold-annotated corpus and report metrics")
    _add_pipeline_flags(p)
    p.add_argument("-o", "--output", help="also write the labelled JSONL")
    p.add_argument("--report", help="write the JSON report here")

    p = sub.add_parser("lexicon", help="export the active emoji lexicon")
    p.add_argument("--lexicon", default=os.environ.get(LEXICON_ENV) or None)
    p.add_argument("-o", "--output", help="JSON file (default: stdout)")

    p = sub.add_parser("gen", help="generate a synthetic gold-labelled corpus")
    p.add_argument("--n", type=_positive_int, default=1000, help="number of tweets")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--priors", type=_priors, default=(1 / 3, 1 / 3, 1 / 3),
                   help="NEG,NEU,POS fractions or a language name (english, sepedi, setswana)")
    p.add_argument("--emoji-density", type=_fraction, default=0.6)
    p.add_argument("--noise", type=_fraction, default=0.0)
    p.add_argument("--vocab-per-class", type=int, default=200)
    p.add_argument("--shared-vocab", type=int, default=50)
    p.add_argument("-o", "--output", help="JSONL file (default: stdout)")
    return parser


def _config(args: argparse.Namespace) -> PipelineConfig:
    return PipelineConfig(_FALLBACKS[args.fallback], CoverageMode(args.coverage))


def _dump_jsonl(records, stream) -> None:
    for rec in records:
        stream.write(json.dumps(rec, ensure_ascii=False) + "\n")


def _label(args: argparse.Namespace, evaluate: bool) -> int:
    corpus = read_corpus(args.input, args.format)
    if evaluate:
        missing = [t.id for t in corpus if t.gold is None]
        if missing:
            raise EvaluationError(f"missing gold labels for ids: {', '.join(missing)}")
    lex = load_lexicon(args.lexicon)
    run = run_pipeline(corpus, lex, _config(args))
    if args.output:
        write_labels(corpus, run, args.output)
    elif not evaluate:
        _dump_jsonl(label_records(corpus, run), sys.stdout)
    if args.export_lists:
        run.word_lists.export(args.export_lists)
    print(run.summary(), file=sys.stderr)
    if evaluate:
        rep = report(run, corpus)
        if args.report:
            with open(args.report, "w", encoding="utf-8") as fh:
                fh.write(rep.to_json())
        print(rep.format_table())
    return 0


def _lexicon(args: argparse.Namespace) -> int:
    text = load_lexicon(args.lexicon).to_json()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _gen(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    try:
        cfg = SynthConfig(
            n_tweets=args.n, class_priors=args.priors, emoji_density=args.emoji_density,
            vocab_per_class=args.vocab_per_class, shared_vocab=args.shared_vocab,
            noise=args.noise, seed=args.seed,
        )
    except ValueError as exc:
        parser.error(str(exc))
    corpus = generate(cfg)
    if args.output:
        write_corpus(corpus, args.output)
    else:
        _dump_jsonl(map(tweet_record, corpus), sys.stdout)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command in ("label", "eval"):
            return _label(args, args.command == "eval")
        if args.command == "lexicon":
            return _lexicon(args)
        return _gen(args, parser)
    except (CorpusError, LexiconError, EvaluationError, OSError) as exc:
        print(f"emolabel: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
