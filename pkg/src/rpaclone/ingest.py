"""Turn on-disk artifacts into ordered activity sequences.

XAML workflows are flattened by pre-order traversal: every matching
element contributes one token, in start-tag order, regardless of how
deeply it is nested. Structural containers (Sequence, Variables, ...)
and XAML property elements (names containing a dot) never produce
tokens but their descendants are still visited.
"""

from __future__ import annotations

import csv
import io
import xml.parsers.expat as expat
from dataclasses import dataclass, field
from pathlib import Path, PurePosixPath

from .errors import EmptyCorpusError, RpaCloneError, SchemaError, XamlParseError
from .model import ActivitySequence, Corpus, SkipRecord

# Activities UiPath keeps in the core workflow namespace (no ui: prefix)
# that are still real process steps rather than containers.
DEFAULT_CORE_ACTIVITIES = frozenset(
    {
        "If",
        "IfElseIf",
        "Switch",
        "ForEach",
        "InterruptibleWhile",
        "InterruptibleDoWhile",
        "ParallelForEach",
        "WriteLine",
        "LogMessage",
        "AppendLine",
    }
)

# Structural tags that organize the workflow but are not activities.
DEFAULT_DENY_TAGS = frozenset(
    {
        "Sequence",
        "Variables",
        "Variable",
        "ViewState",
        "Annotation",
        "Members",
        "Property",
        "Metadata",
        "Collection",
        "Dictionary",
        "TextExpression",
        "HintSize",
    }
)


@dataclass(frozen=True)
class ExtractionConfig:
    """Knobs controlling which XAML elements become activity tokens."""

    ns_prefixes: frozenset[str] = frozenset({"ui"})
    core_activities: frozenset[str] = DEFAULT_CORE_ACTIVITIES
    deny_tags: frozenset[str] = DEFAULT_DENY_TAGS
    workflow_extension: str = ".xaml"
    # XAML property-element syntax (Foo.Bar) is structural by definition.
    skip_property_elements: bool = True


DEFAULT_EXTRACTION_CONFIG = ExtractionConfig()

_NS_SEP = "\n"


def _strip_prefixes(type_args: str) -> str:
    """Render a TypeArguments value with namespace prefixes removed.

    "x:Object" -> "Object"; "x:String, x:Int32" -> "String,Int32";
    "scg:List(x:Int32)" -> "List(Int32)".
    """
    parts = []
    for arg in type_args.split(","):
        arg = arg.strip()
        cleaned = []
        for piece in arg.replace("(", " ( ").replace(")", " ) ").split():
            if piece in ("(", ")"):
                cleaned.append(piece)
            else:
                cleaned.append(piece.split(":")[-1])
        parts.append("".join(cleaned))
    return ",".join(parts)


def extract_activities(
    xaml_document: str, config: ExtractionConfig = DEFAULT_EXTRACTION_CONFIG
) -> list[str]:
    """Extract activity tokens from a XAML document in document order.

    Raises XamlParseError (naming the byte offset) on malformed XML.
    An empty result is not an error.
    """
    tokens: list[str] = []
    # prefix -> stack of namespace URIs currently bound to it
    bindings: dict[str, list[str]] = {}

    parser = expat.ParserCreate(namespace_separator=_NS_SEP)

    def start_ns(prefix, uri):
        bindings.setdefault(prefix or "", []).append(uri or "")

    def end_ns(prefix):
        stack = bindings.get(prefix or "")
        if stack:
            stack.pop()

    def start_element(name, attrs):
        if _NS_SEP in name:
            uri, local = name.split(_NS_SEP, 1)
        else:
            uri, local = "", name
        if config.skip_property_elements and "." in local:
            return
        if local in config.deny_tags:
            return
        allowed = local in config.core_activities
        if not allowed:
            for prefix in config.ns_prefixes:
                stack = bindings.get(prefix)
                if stack and stack[-1] == uri:
                    allowed = True
                    break
        if not allowed:
            return
        type_args = None
        for key, value in attrs.items():
            attr_local = key.split(_NS_SEP, 1)[-1]
            if attr_local == "TypeArguments":
                type_args = value
                break
        if type_args:
            tokens.append(f"{local}<{_strip_prefixes(type_args)}>")
        else:
            tokens.append(local)

    parser.StartNamespaceDeclHandler = start_ns
    parser.EndNamespaceDeclHandler = end_ns
    parser.StartElementHandler = start_element

    try:
        parser.Parse(xaml_document, True)
    except expat.ExpatError as exc:
        offset = parser.ErrorByteIndex
        raise XamlParseError(
            f"XML parse error at byte offset {offset}: {exc}", byte_offset=offset
        ) from exc
    return tokens


def _discover(root: Path, extension: str) -> list[Path]:
    """Enumerate workflow files under root. Separated out so tests can
    inject adversarial discovery orders."""
    return [p for p in root.rglob(f"*{extension}") if p.is_file()]


def scan_corpus(
    root_path: str | Path, config: ExtractionConfig = DEFAULT_EXTRACTION_CONFIG
) -> Corpus:
    """Recursively ingest every workflow file under root_path.

    Files that fail to parse are recorded as skipped; output is sorted by
    process id so it is independent of filesystem enumeration order.
    """
    root = Path(root_path)
    if not root.is_dir():
        raise RpaCloneError(f"not a readable directory: {root}")

    sequences: list[ActivitySequence] = []
    skipped: list[SkipRecord] = []
    warnings: list[str] = []
    for path in _discover(root, config.workflow_extension):
        process_id = PurePosixPath(path.relative_to(root).as_posix()).as_posix()
        try:
            text = path.read_text(encoding="utf-8")
            tokens = extract_activities(text, config)
        except (XamlParseError, OSError, UnicodeDecodeError) as exc:
            skipped.append(SkipRecord(path=process_id, reason=str(exc)))
            continue
        if not tokens:
            warnings.append(f"no activities extracted from {process_id}")
        sequences.append(
            ActivitySequence(process_id=process_id, source_kind="design", tokens=tokens)
        )

    if not sequences:
        raise EmptyCorpusError(f"empty corpus: no parseable {config.workflow_extension} files under {root}")
    sequences.sort(key=lambda s: s.process_id)
    skipped.sort(key=lambda s: s.path)
    warnings.sort()
    return Corpus(sequences=sequences, origin=str(root), skipped=skipped, warnings=warnings)


@dataclass(frozen=True)
class ColumnMap:
    """Names of the log columns carrying case id, activity and ordering."""

    case_id: str = "case_id"
    activity: str = "activity"
    order: str | None = None


def _order_key(value: str):
    try:
        return (0, float(value), "")
    except (TypeError, ValueError):
        return (1, 0.0, value)


def ingest_log(log_table: str, column_map: ColumnMap = ColumnMap()) -> Corpus:
    """Ingest a CSV process log: one ActivitySequence per case id.

    Rows within a case follow the ordering column when given, else input
    row order. The result is sorted by case id.
    """
    reader = csv.DictReader(io.StringIO(log_table))
    header = reader.fieldnames or []
    for col in (column_map.case_id, column_map.activity):
        if col not in header:
            raise SchemaError(f"missing column '{col}' in log header {header}")
    if column_map.order is not None and column_map.order not in header:
        raise SchemaError(f"missing ordering column '{column_map.order}' in log header {header}")

    cases: dict[str, list[tuple]] = {}
    for idx, row in enumerate(reader):
        case = (row[column_map.case_id] or "").strip()
        activity = (row[column_map.activity] or "").strip()
        if not case:
            raise SchemaError(f"row {idx + 2}: empty case id")
        if not activity:
            raise SchemaError(f"row {idx + 2}: empty activity name")
        order = row[column_map.order] if column_map.order else None
        cases.setdefault(case, []).append((order, idx, activity))

    if not cases:
        raise EmptyCorpusError("empty corpus: log has no rows")

    sequences = []
    for case in sorted(cases):
        rows = cases[case]
        if column_map.order is not None:
            rows = sorted(rows, key=lambda r: _order_key(r[0]))
        sequences.append(
            ActivitySequence(
                process_id=case, source_kind="log", tokens=[r[2] for r in rows]
            )
        )
    return Corpus(sequences=sequences, origin="<log>")
