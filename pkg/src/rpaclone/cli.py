"""Command-line pipeline: scan -> normalize -> match/report.

Each stage can consume the previous stage's JSON output or run the
earlier stages itself when given a workflow directory (or a CSV log
with --logs). Exit codes: 0 success (including zero matches), 1
operational error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import dictionary as dict_mod
from . import ingest, report as report_mod, similarity
from .errors import RpaCloneError
from .model import (
    Corpus,
    corpus_from_json_obj,
    corpus_to_json_obj,
    meta_processes_from_json_obj,
    meta_processes_to_json_obj,
)

PROG = "rpaclone"


def _positive_int(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def _add_input_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", help="workflow directory, CSV log (--logs), or stage JSON file")
    p.add_argument("--logs", action="store_true", help="treat input as a CSV process log")
    p.add_argument("--case-column", default="case_id", help="log column with the case id")
    p.add_argument("--activity-column", default="activity", help="log column with the activity name")
    p.add_argument("--order-column", default=None, help="log column giving event order within a case")
    p.add_argument("--ext", default=".xaml", help="workflow file extension for directory scans")
    p.add_argument(
        "--ns-prefix",
        action="append",
        default=None,
        metavar="PREFIX",
        help="activity namespace prefix to extract (repeatable; default: ui)",
    )


def _add_dictionary_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--dictionary", default=None, help="dictionary JSON file (default: builtin)")
    p.add_argument(
        "--case",
        choices=dict_mod.LOOKUP_CASES,
        default="insensitive",
        dest="lookup_case",
        help="dictionary lookup case handling",
    )


def _add_match_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=("pairwise", "repeats"), default="repeats")
    p.add_argument("--min-length", type=_positive_int, default=3)
    p.add_argument("--format", choices=report_mod.FORMATS, default="text")
    p.add_argument("--allow-intra", action="store_true", help="also report repeats within one process")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Find repeated activity sequences across RPA workflows for refactoring.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_scan = sub.add_parser("scan", help="extract activity sequences to corpus JSON")
    _add_input_options(p_scan)
    p_scan.add_argument("--out", default=None, help="output path (default: stdout)")

    p_norm = sub.add_parser("normalize", help="apply the dictionary, emit meta-process JSON")
    _add_input_options(p_norm)
    _add_dictionary_options(p_norm)
    p_norm.add_argument("--out", default=None)

    for name, help_text in (
        ("match", "mine matches and emit a report"),
        ("report", "full pipeline: scan, normalize, mine, report"),
    ):
        p = sub.add_parser(name, help=help_text)
        _add_input_options(p)
        _add_dictionary_options(p)
        _add_match_options(p)
        p.add_argument("--out", default=None)

    return parser


def parse_args(argv: list[str]) -> argparse.Namespace:
    return build_parser().parse_args(argv)


def _extraction_config(args: argparse.Namespace) -> ingest.ExtractionConfig:
    cfg = ingest.DEFAULT_EXTRACTION_CONFIG
    prefixes = frozenset(args.ns_prefix) if args.ns_prefix else cfg.ns_prefixes
    return ingest.ExtractionConfig(
        ns_prefixes=prefixes,
        core_activities=cfg.core_activities,
        deny_tags=cfg.deny_tags,
        workflow_extension=args.ext,
        skip_property_elements=cfg.skip_property_elements,
    )


def _load_corpus(args: argparse.Namespace) -> Corpus:
    path = Path(args.input)
    if args.logs:
        return ingest.ingest_log(
            path.read_text(encoding="utf-8"),
            ingest.ColumnMap(
                case_id=args.case_column,
                activity=args.activity_column,
                order=args.order_column,
            ),
        )
    if path.is_dir():
        return ingest.scan_corpus(path, _extraction_config(args))
    if path.suffix == ".json":
        obj = json.loads(path.read_text(encoding="utf-8"))
        if not isinstance(obj, list):
            raise RpaCloneError(f"{path}: not a corpus JSON file (expected a list of processes)")
        return corpus_from_json_obj(obj, origin=str(path))
    raise RpaCloneError(f"cannot ingest {path}: not a directory, corpus JSON, or --logs CSV")


def _load_dictionary(args: argparse.Namespace) -> dict_mod.ActivityDictionary:
    if args.dictionary:
        return dict_mod.load_dictionary(args.dictionary)
    return dict_mod.builtin_dictionary()


def _write(data: bytes, out: str | None) -> None:
    if out:
        Path(out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()


def _stage_bytes(obj) -> bytes:
    return (json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def run(args: argparse.Namespace) -> int:
    if args.command == "scan":
        corpus = _load_corpus(args)
        _write(_stage_bytes(corpus_to_json_obj(corpus)), args.out)
        return 0

    if args.command == "normalize":
        corpus = _load_corpus(args)
        d = _load_dictionary(args)
        metas = dict_mod.normalize_corpus(corpus, d, args.lookup_case)
        obj = meta_processes_to_json_obj(metas, d.name, d.version, args.lookup_case)
        _write(_stage_bytes(obj), args.out)
        return 0

    # match / report
    run_warnings = []
    if args.min_length < 3:
        run_warnings.append(
            f"min-length {args.min_length} is below the recommended threshold of 3"
        )

    path = Path(args.input)
    meta_input = None
    if path.is_file() and path.suffix == ".json" and not args.logs:
        obj = json.loads(path.read_text(encoding="utf-8"))
        if isinstance(obj, dict) and "processes" in obj:
            meta_input = obj

    if meta_input is not None:
        metas, dict_identity, lookup_case = meta_processes_from_json_obj(meta_input)
        summary = report_mod.CorpusSummary(
            origin=str(path),
            process_count=len(metas),
            token_count=sum(len(m.tokens) for m in metas),
        )
    else:
        corpus = _load_corpus(args)
        d = _load_dictionary(args)
        lookup_case = args.lookup_case
        metas = dict_mod.normalize_corpus(corpus, d, lookup_case)
        dict_identity = {"name": d.name, "version": d.version}
        summary = report_mod.CorpusSummary(
            origin=corpus.origin,
            process_count=len(corpus.sequences),
            token_count=sum(len(m.tokens) for m in metas),
            skipped=[{"path": s.path, "reason": s.reason} for s in corpus.skipped],
            warnings=list(corpus.warnings),
        )

    if args.mode == "pairwise":
        ms = similarity.find_matches_pairwise(metas, args.min_length)
    else:
        ms = similarity.find_matches_repeats(metas, args.min_length, args.allow_intra)

    rep = report_mod.build_report(
        ms,
        summary,
        dict_identity,
        report_mod.RunParameters(
            mode=args.mode,
            min_length=args.min_length,
            lookup_case=lookup_case,
            allow_intra=args.allow_intra,
            warnings=run_warnings,
        ),
    )
    _write(report_mod.emit(rep, args.format), args.out)
    return 0


def main(argv: list[str] | None = None) -> int:
    args = parse_args(sys.argv[1:] if argv is None else argv)
    try:
        return run(args)
    except RpaCloneError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 1


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
