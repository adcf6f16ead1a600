"""Command line entry point: ``transmi {merge,tokenize,stats,transliterate,ambiguity}``.

Failures print one line ``transmi: error[<category>]: <message>`` to stderr and
exit with status 1.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import TransmiError
from .merge import HISTOGRAM_BUCKETS, MergeMode, ambiguity_histogram, build_triplets
from .pipeline import PipelineConfig, compare_corpora, format_table, run_merge_pipeline
from .translit import load_rules, transliterate
from .unigram import dumps_canonical, load_model, tokenize


def _input_lines(args) -> list[str]:
    if args.text is not None:
        return args.text.split("\n")
    with open(args.file, encoding="utf-8") as f:
        return f.read().splitlines()


def _corpus_arg(value: str) -> tuple[str, Path]:
    label, sep, path = value.partition("=")
    if not sep or not label or not path:
        raise argparse.ArgumentTypeError(f"expected <label>=<path>, got {value!r}")
    return label, Path(path)


def cmd_merge(args, out) -> None:
    config = PipelineConfig(
        tokenizer_path=args.tokenizer,
        rules_dir=args.rules,
        mode=args.mode,
        out_tokenizer=args.out_tokenizer,
        report_path=args.report,
        embeddings_path=args.embeddings,
        out_embeddings=args.out_embeddings,
    )
    report = run_merge_pipeline(config)
    c = report.counts
    print(
        f"mode={report.mode.value} original={c['original_size']} merged={c['merged_size']} "
        f"one_to_one={c['one_to_one_added']} groups={c['ambiguous_groups']}",
        file=out,
    )


def cmd_tokenize(args, out) -> None:
    model = load_model(args.tokenizer)
    for line in _input_lines(args):
        seg = tokenize(model, line)
        items = [str(i) for i in seg.ids] if args.ids else list(seg.pieces)
        print(args.sep.join(items), file=out)


def cmd_stats(args, out) -> None:
    model_a = load_model(args.tokenizer)
    model_b = load_model(args.tokenizer_b) if args.tokenizer_b else None
    # empty corpora are logged by compare_corpora and listed in the JSON
    rows, skipped = compare_corpora(model_a, args.corpus, model_b)
    print(format_table(rows), file=out)
    if args.json:
        Path(args.json).write_bytes(dumps_canonical({"rows": rows, "skipped": skipped}).encode("utf-8"))


def cmd_transliterate(args, out) -> None:
    table = load_rules(args.rules)
    for line in _input_lines(args):
        print(transliterate(table, line), file=out)


def cmd_ambiguity(args, out) -> None:
    model = load_model(args.tokenizer)
    table = load_rules(args.rules)
    hist = ambiguity_histogram(build_triplets(model, table), model)
    for bucket in HISTOGRAM_BUCKETS:
        print(f"{bucket}\t{hist[bucket]}", file=out)
    print(f"total\t{sum(hist.values())}", file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="transmi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("merge", help="merge transliterated subwords into a tokenizer")
    p.add_argument("--tokenizer", type=Path, required=True)
    p.add_argument("--embeddings", type=Path)
    p.add_argument("--rules", type=Path, required=True)
    p.add_argument("--mode", choices=[m.value for m in MergeMode], required=True)
    p.add_argument("--out-tokenizer", type=Path, required=True)
    p.add_argument("--out-embeddings", type=Path)
    p.add_argument("--report", type=Path, required=True)
    p.set_defaults(func=cmd_merge)

    p = sub.add_parser("tokenize", help="segment text, one output line per input line")
    p.add_argument("--tokenizer", type=Path, required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--text")
    src.add_argument("--file", type=Path)
    p.add_argument("--ids", action="store_true", help="print token ids instead of surfaces")
    p.add_argument("--sep", default=" ")
    p.set_defaults(func=cmd_tokenize)

    p = sub.add_parser("stats", help="average sequence length per labelled corpus")
    p.add_argument("--tokenizer", type=Path, required=True)
    p.add_argument("--tokenizer-b", type=Path)
    p.add_argument("--corpus", type=_corpus_arg, action="append", required=True, metavar="LABEL=PATH")
    p.add_argument("--json", type=Path)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("transliterate", help="transliterate text line by line")
    p.add_argument("--rules", type=Path, required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--text")
    src.add_argument("--file", type=Path)
    p.set_defaults(func=cmd_transliterate)

    p = sub.add_parser("ambiguity", help="histogram of transliteration multiplicities")
    p.add_argument("--tokenizer", type=Path, required=True)
    p.add_argument("--rules", type=Path, required=True)
    p.set_defaults(func=cmd_ambiguity)

    return parser


def _one_line(exc: Exception) -> str:
    return " ".join(str(exc).split())


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except TransmiError as exc:
        print(f"transmi: error[{exc.category}]: {_one_line(exc)}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"transmi: error[io]: {_one_line(exc)}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
