"""rpaclone: clone detection for RPA workflows.

Extracts ordered activity sequences from UiPath-style XAML designs or
process logs, abstracts them through an equivalence dictionary, and
mines repeated sequences across processes as refactoring candidates.
"""

from .dictionary import (
    ActivityDictionary,
    DictionaryRule,
    builtin_dictionary,
    load_dictionary,
    normalize,
    normalize_corpus,
)
from .ingest import (
    ColumnMap,
    ExtractionConfig,
    extract_activities,
    ingest_log,
    scan_corpus,
)
from .model import (
    ActivitySequence,
    Corpus,
    Match,
    MatchSet,
    MetaProcess,
    Occurrence,
    SkipRecord,
)
from .report import Report, RefactorCandidate, build_report, emit, rank_candidates
from .similarity import (
    find_matches_pairwise,
    find_matches_repeats,
    histogram,
    pairwise_lcs,
)

__version__ = "0.1.0"

__all__ = [
    "ActivityDictionary",
    "ActivitySequence",
    "ColumnMap",
    "Corpus",
    "DictionaryRule",
    "ExtractionConfig",
    "Match",
    "MatchSet",
    "MetaProcess",
    "Occurrence",
    "RefactorCandidate",
    "Report",
    "SkipRecord",
    "builtin_dictionary",
    "build_report",
    "emit",
    "extract_activities",
    "find_matches_pairwise",
    "find_matches_repeats",
    "histogram",
    "ingest_log",
    "load_dictionary",
    "normalize",
    "normalize_corpus",
    "pairwise_lcs",
    "rank_candidates",
    "scan_corpus",
]
