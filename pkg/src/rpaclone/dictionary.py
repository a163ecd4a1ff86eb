"""Activity-equivalence dictionary: rewrite raw activity tokens into
meta-action tokens so differently-implemented but equivalent steps
become comparable.

Rules are ordered. Lookup precedence at each position: longest pattern
first, then earliest rule in dictionary order. Multi-token patterns
(e.g. copy-to-clipboard followed by paste) collapse into one meta token.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import DictionaryError
from .model import Corpus, ActivitySequence, MetaProcess

LOOKUP_CASES = ("insensitive", "sensitive")


@dataclass(frozen=True)
class DictionaryRule:
    meta_action: str
    pattern: tuple[str, ...]


@dataclass
class ActivityDictionary:
    rules: list[DictionaryRule]
    name: str
    version: str

    def meta_actions(self) -> list[str]:
        seen: dict[str, None] = {}
        for rule in self.rules:
            seen.setdefault(rule.meta_action)
        return list(seen)


# Builtin equivalence table for UiPath Studio activities (OCR, Excel,
# Word, UI Automation, Mail and System packages). Each entry is one
# meta action with the activity names that realize it; a nested list is
# a multi-activity sequence pattern.
_BUILTIN_TABLE: list[tuple[str, list]] = [
    ("Write in UI", ["NTypeInto", ["SetToClipboard", "NKeyboardShortcuts"], "CVTypeIntoWithDescriptor"]),
    ("Write to Text File", ["WriteTextFile", "WordAppendText", "DocumentAppendText", "AppendLine",
                            "DocumentReplaceText", "NTypeInto"]),
    ("Write to Spreadsheet", ["WriteCSVFile", "WriteCellX", "AppendCsvFile", "WriteRangeX", "AutoFillX",
                              "ExportExcelToCsvX", "InvokeVBAX", "CopyPasteRangeX", "AppendRangeX",
                              "AutoFitX", "FindReplaceValueX", "AppendRange", "WriteCell", "WriteRange",
                              "ExecuteMacroX", "OutputDataTable", "AddDataRow", "UpdateRowItem", "NTypeInto"]),
    ("Creation of Data Objects", ["BuildCollection<Object>", "CreateList<Object>", "BuildDataTable"]),
    ("Write to Data Objects", ["AppendItemToCollection<Object>", "AppendItemToList<Object>",
                               "UpdateListItem<Object>", "AddDataRow", "UpdateRowItem"]),
    ("SAP login OCR", ["Login", "Logon", "GoogleCloudOCR", "MicrosoftAzureComputerVisionOCR", "CjkOCR",
                       "GoogleOCR", "UiPathDocumentOCR", "UiPathScreenOCR"]),
    ("Send Mail", ["SendMail", "SendOutlookMail", "SendMailX"]),
    ("Receive Mail", ["GetPOP3MailMessages", "GetOutlookMailMessages", "GetIMAPMailMessages"]),
    ("Save Mail", ["SaveMail", "SaveOutlookMailMessage", "SaveMailX"]),
    ("User Message", ["LogMessage", "WriteLine"]),
    ("Get text", ["CVGetTextWithDescriptor", "NGetText", "GetOCRText"]),
    ("Click", ["CVClickWithDescriptor", "Nclick", "ClickOCRText"]),
    ("Hover", ["CVHoverWithDescriptor", "Nhover", "HoverOCRText"]),
    ("Highlight", ["CVHighlightWithDescriptor", "Nhighlight"]),
    ("Extract DataTable", ["CvExtractDataTableWithDescriptor", "NExtractData"]),
    ("Read File Text", ["DocumentReadText", "WordTextRead", "ReadTextFile"]),
    ("Save to clipboard", ["SetToClipboard", "CopySelectedText"]),
    ("Loop", ["ForEach<Object>", "InterruptibleWhile", "InterruptibleDoWhile", "ParallelForEach<Int32>"]),
    ("Condition", ["If", "IfElseIf", "Switch<Int32>"]),
]

BUILTIN_DICTIONARY_NAME = "uipath-builtin"
BUILTIN_DICTIONARY_VERSION = "2023.4"


def builtin_dictionary() -> ActivityDictionary:
    """The builtin UiPath dictionary: 19 meta actions, one rule per
    (meta action, activity) pair, in table order."""
    rules = []
    for meta, activities in _BUILTIN_TABLE:
        for entry in activities:
            pattern = tuple(entry) if isinstance(entry, list) else (entry,)
            rules.append(DictionaryRule(meta_action=meta, pattern=pattern))
    d = ActivityDictionary(
        rules=rules, name=BUILTIN_DICTIONARY_NAME, version=BUILTIN_DICTIONARY_VERSION
    )
    validate_dictionary(d)
    return d


def validate_dictionary(d: ActivityDictionary) -> None:
    """Check every dictionary invariant; raise DictionaryError listing
    all violations at once."""
    violations = []
    pattern_names = set()
    seen_rules = set()
    for i, rule in enumerate(d.rules):
        if not rule.meta_action or not rule.meta_action.strip():
            violations.append(f"rule {i}: empty meta action")
        if not rule.pattern:
            violations.append(f"rule {i} ({rule.meta_action!r}): empty pattern")
        for name in rule.pattern:
            if not name or not name.strip():
                violations.append(f"rule {i} ({rule.meta_action!r}): empty activity name in pattern")
            else:
                pattern_names.add(name.casefold())
        key = (rule.meta_action, rule.pattern)
        if key in seen_rules:
            violations.append(f"rule {i}: duplicate rule {key!r}")
        seen_rules.add(key)
    # Meta actions must be disjoint from activity names so normalization
    # is idempotent.
    for rule in d.rules:
        if rule.meta_action.casefold() in pattern_names:
            violations.append(
                f"meta action {rule.meta_action!r} also appears as an activity name in a pattern"
            )
            break
    if violations:
        raise DictionaryError(violations)


def dictionary_to_json_obj(d: ActivityDictionary) -> dict:
    return {
        "name": d.name,
        "version": d.version,
        "rules": [{"meta": r.meta_action, "pattern": list(r.pattern)} for r in d.rules],
    }


def load_dictionary(path: str | Path) -> ActivityDictionary:
    """Load and validate a dictionary file (JSON; rule order is
    dictionary order)."""
    raw = Path(path).read_text(encoding="utf-8")
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise DictionaryError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    try:
        rules = [
            DictionaryRule(meta_action=r["meta"], pattern=tuple(r["pattern"]))
            for r in obj["rules"]
        ]
        d = ActivityDictionary(rules=rules, name=obj.get("name", str(path)), version=obj.get("version", ""))
    except (KeyError, TypeError) as exc:
        raise DictionaryError(f"{path}: malformed dictionary structure: {exc}") from exc
    validate_dictionary(d)
    return d


def builtin_dictionary_path() -> Path:
    """Path of the shipped reference dictionary file."""
    return Path(str(resources.files("rpaclone").joinpath("data/uipath_dictionary.json")))


@dataclass
class _Lookup:
    """Rules indexed by first pattern token, ordered by precedence."""

    by_first: dict[str, list[tuple[tuple[str, ...], str]]] = field(default_factory=dict)
    fold: bool = True

    @classmethod
    def build(cls, d: ActivityDictionary, lookup_case: str) -> "_Lookup":
        if lookup_case not in LOOKUP_CASES:
            raise ValueError(f"lookup_case must be one of {LOOKUP_CASES}, got {lookup_case!r}")
        fold = lookup_case == "insensitive"
        indexed = sorted(
            enumerate(d.rules), key=lambda ir: (-len(ir[1].pattern), ir[0])
        )
        by_first: dict[str, list[tuple[tuple[str, ...], str]]] = {}
        for _, rule in indexed:
            pat = tuple(t.casefold() for t in rule.pattern) if fold else rule.pattern
            by_first.setdefault(pat[0], []).append((pat, rule.meta_action))
        return cls(by_first=by_first, fold=fold)

    def match_at(self, tokens: list[str], pos: int) -> tuple[str, int] | None:
        key = tokens[pos].casefold() if self.fold else tokens[pos]
        for pat, meta in self.by_first.get(key, ()):
            end = pos + len(pat)
            if end > len(tokens):
                continue
            window = tokens[pos:end]
            if self.fold:
                window = [t.casefold() for t in window]
            if tuple(window) == pat:
                return meta, len(pat)
        return None


def normalize(
    sequence: ActivitySequence,
    dictionary: ActivityDictionary,
    lookup_case: str = "insensitive",
) -> MetaProcess:
    """Rewrite one activity sequence into its meta process."""
    lookup = _Lookup.build(dictionary, lookup_case)
    return _normalize_with(sequence, lookup)


def _normalize_with(sequence: ActivitySequence, lookup: _Lookup) -> MetaProcess:
    out: list[str] = []
    tokens = sequence.tokens
    pos = 0
    n = len(tokens)
    while pos < n:
        hit = lookup.match_at(tokens, pos)
        if hit is None:
            out.append(tokens[pos])
            pos += 1
        else:
            meta, consumed = hit
            out.append(meta)
            pos += consumed
    return MetaProcess(process_id=sequence.process_id, tokens=out)


def normalize_corpus(
    corpus: Corpus,
    dictionary: ActivityDictionary,
    lookup_case: str = "insensitive",
) -> list[MetaProcess]:
    """Apply normalize to every sequence, preserving corpus order."""
    lookup = _Lookup.build(dictionary, lookup_case)
    return [_normalize_with(s, lookup) for s in corpus.sequences]
