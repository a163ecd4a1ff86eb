"""Rank matches as refactoring candidates and serialize results.

Default score: token-list length times distinct-process count, so both
block size and reuse breadth count. All serializations are byte-stable
functions of the input report.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .model import Match, MatchSet, Occurrence

REPORT_SCHEMA_VERSION = "1"
FORMATS = ("json", "csv", "text")


@dataclass
class RefactorCandidate:
    match: Match
    score: int
    rank: int


@dataclass
class CorpusSummary:
    origin: str
    process_count: int
    token_count: int
    skipped: list[dict] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)


@dataclass
class RunParameters:
    mode: str
    min_length: int
    lookup_case: str
    allow_intra: bool = False
    warnings: list[str] = field(default_factory=list)


@dataclass
class Report:
    corpus: CorpusSummary
    dictionary: dict  # {"name": ..., "version": ...}
    parameters: RunParameters
    candidates: list[RefactorCandidate]
    histogram: dict[int, int]
    corpus_fingerprint: str = ""


def score_match(m: Match) -> int:
    return m.length * m.process_count


def rank_candidates(ms: MatchSet) -> list[RefactorCandidate]:
    """Total order: score desc, length desc, token list lexicographic asc."""
    ordered = sorted(
        ms.matches, key=lambda m: (-score_match(m), -m.length, m.tokens)
    )
    return [
        RefactorCandidate(match=m, score=score_match(m), rank=i + 1)
        for i, m in enumerate(ordered)
    ]


def build_report(
    ms: MatchSet,
    corpus_summary: CorpusSummary,
    dictionary_identity: dict,
    parameters: RunParameters,
) -> Report:
    from .similarity import histogram

    return Report(
        corpus=corpus_summary,
        dictionary=dictionary_identity,
        parameters=parameters,
        candidates=rank_candidates(ms),
        histogram=histogram(ms),
        corpus_fingerprint=ms.corpus_fingerprint,
    )


def report_to_json_obj(report: Report) -> dict:
    return {
        "schema_version": REPORT_SCHEMA_VERSION,
        "corpus": {
            "origin": report.corpus.origin,
            "process_count": report.corpus.process_count,
            "token_count": report.corpus.token_count,
            "skipped": report.corpus.skipped,
            "warnings": report.corpus.warnings,
        },
        "dictionary": report.dictionary,
        "parameters": {
            "mode": report.parameters.mode,
            "min_length": report.parameters.min_length,
            "lookup_case": report.parameters.lookup_case,
            "allow_intra": report.parameters.allow_intra,
            "warnings": report.parameters.warnings,
        },
        "corpus_fingerprint": report.corpus_fingerprint,
        "candidates": [
            {
                "rank": c.rank,
                "score": c.score,
                "length": c.match.length,
                "process_count": c.match.process_count,
                "tokens": list(c.match.tokens),
                "occurrences": [
                    {"process_id": o.process_id, "offset": o.offset}
                    for o in c.match.occurrences
                ],
            }
            for c in report.candidates
        ],
        "histogram": {str(k): v for k, v in report.histogram.items()},
    }


def report_from_json_obj(obj: dict) -> Report:
    candidates = [
        RefactorCandidate(
            match=Match(
                tokens=tuple(c["tokens"]),
                occurrences=[
                    Occurrence(o["process_id"], o["offset"]) for o in c["occurrences"]
                ],
            ),
            score=c["score"],
            rank=c["rank"],
        )
        for c in obj["candidates"]
    ]
    return Report(
        corpus=CorpusSummary(
            origin=obj["corpus"]["origin"],
            process_count=obj["corpus"]["process_count"],
            token_count=obj["corpus"]["token_count"],
            skipped=list(obj["corpus"]["skipped"]),
            warnings=list(obj["corpus"]["warnings"]),
        ),
        dictionary=dict(obj["dictionary"]),
        parameters=RunParameters(
            mode=obj["parameters"]["mode"],
            min_length=obj["parameters"]["min_length"],
            lookup_case=obj["parameters"]["lookup_case"],
            allow_intra=obj["parameters"]["allow_intra"],
            warnings=list(obj["parameters"]["warnings"]),
        ),
        candidates=candidates,
        histogram={int(k): v for k, v in sorted(obj["histogram"].items(), key=lambda kv: int(kv[0]))},
        corpus_fingerprint=obj.get("corpus_fingerprint", ""),
    )


def _emit_json(report: Report) -> bytes:
    obj = report_to_json_obj(report)
    return (json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def _emit_csv(report: Report) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["rank", "score", "length", "process_count", "occurrence_count", "tokens", "process_ids"]
    )
    for c in report.candidates:
        pids = sorted({o.process_id for o in c.match.occurrences})
        writer.writerow(
            [
                c.rank,
                c.score,
                c.match.length,
                c.match.process_count,
                len(c.match.occurrences),
                "|".join(c.match.tokens),
                ";".join(pids),
            ]
        )
    return buf.getvalue().encode("utf-8")


def _emit_text(report: Report, top_n: int = 20) -> bytes:
    lines = []
    lines.append(f"Corpus: {report.corpus.origin}")
    lines.append(
        f"Processes: {report.corpus.process_count}   Tokens: {report.corpus.token_count}"
        f"   Skipped files: {len(report.corpus.skipped)}"
    )
    lines.append(
        f"Dictionary: {report.dictionary.get('name', '?')} {report.dictionary.get('version', '')}".rstrip()
    )
    lines.append(
        f"Mode: {report.parameters.mode}   Min length: {report.parameters.min_length}"
        f"   Case: {report.parameters.lookup_case}"
    )
    for w in report.parameters.warnings:
        lines.append(f"Warning: {w}")
    lines.append("")
    lines.append("Length  Count")
    for length, count in report.histogram.items():
        lines.append(f"{length:>6}  {count}")
    if not report.histogram:
        lines.append("    (no matches)")
    lines.append("")
    lines.append(f"Candidates: {len(report.candidates)} (showing up to {top_n})")
    for c in report.candidates[:top_n]:
        lines.append(
            f"#{c.rank}  score={c.score}  length={c.match.length}"
            f"  processes={c.match.process_count}"
        )
        lines.append(f"    tokens: {' -> '.join(c.match.tokens)}")
        locs = ", ".join(f"{o.process_id}@{o.offset}" for o in c.match.occurrences)
        lines.append(f"    at: {locs}")
    lines.append("")
    return "\n".join(lines).encode("utf-8")


def emit(report: Report, format: str = "text") -> bytes:
    """Serialize a report. Unknown format is a usage error."""
    if format == "json":
        return _emit_json(report)
    if format == "csv":
        return _emit_csv(report)
    if format == "text":
        return _emit_text(report)
    raise ValueError(f"unknown report format {format!r} (expected one of {FORMATS})")
