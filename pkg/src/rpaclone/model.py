"""Core data types shared across the pipeline.

Activity tokens are plain strings; invariants (stripped, no namespace
separator) are enforced at ingestion time.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class SkipRecord:
    """A file that could not be ingested, with the reason it was skipped."""

    path: str
    reason: str


@dataclass
class ActivitySequence:
    """One process as an ordered list of raw activity tokens."""

    process_id: str
    source_kind: str  # "design" | "log"
    tokens: list[str]


@dataclass
class Corpus:
    """All ingested processes, canonically sorted by process id."""

    sequences: list[ActivitySequence]
    origin: str
    skipped: list[SkipRecord] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def total_tokens(self) -> int:
        return sum(len(s.tokens) for s in self.sequences)


def corpus_to_json_obj(corpus: Corpus) -> list[dict]:
    """Intermediate corpus format: a list of {process_id, source_kind, tokens}."""
    return [
        {"process_id": s.process_id, "source_kind": s.source_kind, "tokens": list(s.tokens)}
        for s in corpus.sequences
    ]


def corpus_from_json_obj(obj: list[dict], origin: str = "<json>") -> Corpus:
    seqs = [
        ActivitySequence(
            process_id=item["process_id"],
            source_kind=item.get("source_kind", "design"),
            tokens=list(item["tokens"]),
        )
        for item in obj
    ]
    seqs.sort(key=lambda s: s.process_id)
    return Corpus(sequences=seqs, origin=origin)


@dataclass
class MetaProcess:
    """An abstracted token sequence produced by dictionary normalization."""

    process_id: str
    tokens: list[str]


@dataclass(frozen=True, order=True)
class Occurrence:
    """Location of one match occurrence: process id plus zero-based offset."""

    process_id: str
    offset: int


@dataclass
class Match:
    """A repeated meta-token sequence with every place it occurs."""

    tokens: tuple[str, ...]
    occurrences: list[Occurrence]

    @property
    def process_count(self) -> int:
        return len({o.process_id for o in self.occurrences})

    @property
    def length(self) -> int:
        return len(self.tokens)


def canonical_match_order(matches: list[Match]) -> list[Match]:
    """Sort by (length desc, process_count desc, token list lexicographic asc)."""
    return sorted(matches, key=lambda m: (-m.length, -m.process_count, m.tokens))


@dataclass
class MatchSet:
    """The mined matches plus the parameters that produced them."""

    matches: list[Match]
    mode: str  # "pairwise" | "repeats"
    min_length: int
    corpus_fingerprint: str


def corpus_fingerprint(metas: list[MetaProcess]) -> str:
    """Content hash of the normalized corpus; pins match provenance."""
    payload = json.dumps(
        [[m.process_id, list(m.tokens)] for m in metas],
        ensure_ascii=False,
        separators=(",", ":"),
    )
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def meta_processes_to_json_obj(
    metas: list[MetaProcess], dictionary_name: str, dictionary_version: str, lookup_case: str
) -> dict:
    """Intermediate meta-process format (stage output of `normalize`)."""
    return {
        "dictionary": {"name": dictionary_name, "version": dictionary_version},
        "lookup_case": lookup_case,
        "processes": [
            {"process_id": m.process_id, "tokens": list(m.tokens)} for m in metas
        ],
    }


def meta_processes_from_json_obj(obj: dict) -> tuple[list[MetaProcess], dict, str]:
    metas = [
        MetaProcess(process_id=p["process_id"], tokens=list(p["tokens"]))
        for p in obj["processes"]
    ]
    return metas, dict(obj.get("dictionary", {})), obj.get("lookup_case", "insensitive")
