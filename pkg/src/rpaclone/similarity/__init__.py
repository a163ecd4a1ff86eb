"""Mining of common/repeated meta-token sequences across processes.

Two modes share one match definition (length >= min_length, spanning
at least two processes unless intra-process repeats are enabled):

* pairwise: for every process pair, the longest common contiguous run
  (all tied runs), merged across pairs by token list;
* repeats: every maximal repeated contiguous sequence corpus-wide,
  mined from a generalized suffix array in near-linear time.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import RpaCloneError
from ..model import (
    Match,
    MatchSet,
    MetaProcess,
    Occurrence,
    canonical_match_order,
    corpus_fingerprint,
)
from ._backend import backend_name, get_kernels
from ._suffix import suffix_array

__all__ = [
    "CommonRun",
    "pairwise_lcs",
    "find_matches_pairwise",
    "find_matches_repeats",
    "histogram",
    "backend_name",
]


def _encode_pair(a: list[str], b: list[str]) -> tuple[np.ndarray, np.ndarray]:
    vocab: dict[str, int] = {}
    enc_a = np.array([vocab.setdefault(t, len(vocab)) for t in a], dtype=np.int64)
    enc_b = np.array([vocab.setdefault(t, len(vocab)) for t in b], dtype=np.int64)
    return enc_a, enc_b


@dataclass(frozen=True)
class CommonRun:
    """One longest common contiguous sequence of a process pair, with
    every offset at which it occurs in either process."""

    tokens: tuple[str, ...]
    offsets_a: tuple[int, ...]
    offsets_b: tuple[int, ...]


def pairwise_lcs(a: MetaProcess, b: MetaProcess) -> list[CommonRun]:
    """All distinct token sequences of maximal common length occurring
    contiguously in both a and b. Empty list when nothing is shared."""
    if not a.tokens or not b.tokens:
        return []
    enc_a, enc_b = _encode_pair(a.tokens, b.tokens)
    table = get_kernels().lcs_lengths(enc_a, enc_b)
    k = int(table.max()) if table.size else 0
    if k == 0:
        return []
    runs: dict[tuple[str, ...], tuple[set[int], set[int]]] = {}
    for i, j in np.argwhere(table == k):
        start_a = int(i) - k + 1
        start_b = int(j) - k + 1
        key = tuple(a.tokens[start_a : start_a + k])
        offs = runs.setdefault(key, (set(), set()))
        offs[0].add(start_a)
        offs[1].add(start_b)
    return [
        CommonRun(tokens=key, offsets_a=tuple(sorted(oa)), offsets_b=tuple(sorted(ob)))
        for key, (oa, ob) in sorted(runs.items())
    ]


def find_matches_pairwise(metas: list[MetaProcess], min_length: int = 3) -> MatchSet:
    """Longest-common-sequence scan over every unordered process pair.

    Runs shorter than min_length are dropped; identical token lists
    found in different pairs are merged into one Match.
    """
    if len(metas) < 2:
        raise RpaCloneError("need at least two processes for pairwise matching")
    merged: dict[tuple[str, ...], set[Occurrence]] = {}
    for i in range(len(metas)):
        for j in range(i + 1, len(metas)):
            for run in pairwise_lcs(metas[i], metas[j]):
                if len(run.tokens) < min_length:
                    continue
                occs = merged.setdefault(run.tokens, set())
                occs.update(Occurrence(metas[i].process_id, o) for o in run.offsets_a)
                occs.update(Occurrence(metas[j].process_id, o) for o in run.offsets_b)
    matches = [
        Match(tokens=tokens, occurrences=sorted(occs)) for tokens, occs in merged.items()
    ]
    return MatchSet(
        matches=canonical_match_order(matches),
        mode="pairwise",
        min_length=min_length,
        corpus_fingerprint=corpus_fingerprint(metas),
    )


def _encode_corpus(metas: list[MetaProcess]):
    """Concatenate all processes into one int array, each followed by a
    separator unique to that process (ids above the token alphabet), so
    no repeat can cross a process boundary."""
    vocab: dict[str, int] = {}
    for m in metas:
        for t in m.tokens:
            vocab.setdefault(t, len(vocab))
    sep_base = len(vocab)
    parts: list[int] = []
    starts: list[int] = []
    for idx, m in enumerate(metas):
        starts.append(len(parts))
        parts.extend(vocab[t] for t in m.tokens)
        parts.append(sep_base + idx)
    text = np.asarray(parts, dtype=np.int64)
    starts_arr = np.asarray(starts, dtype=np.int64)
    inv_vocab = [None] * len(vocab)
    for tok, tid in vocab.items():
        inv_vocab[tid] = tok
    return text, starts_arr, inv_vocab


def find_matches_repeats(
    metas: list[MetaProcess], min_length: int = 3, allow_intra: bool = False
) -> MatchSet:
    """Mine every maximal repeated contiguous sequence in the corpus.

    A sequence qualifies when it is at least min_length tokens long,
    occurs at two or more positions spanning two or more distinct
    processes (or two positions anywhere with allow_intra), and no
    one-token extension to the left or right is shared by all of its
    occurrences. Occurrence lists are exhaustive.
    """
    if len(metas) < (1 if allow_intra else 2):
        raise RpaCloneError("need at least two processes for repeat mining")

    text, starts, inv_vocab = _encode_corpus(metas)
    n = int(text.size)
    # position -> (process index, in-process offset); separators get -1
    pos_proc = np.full(n, -1, dtype=np.int64)
    pos_off = np.full(n, -1, dtype=np.int64)
    for idx, m in enumerate(metas):
        s = int(starts[idx])
        length = len(m.tokens)
        pos_proc[s : s + length] = idx
        pos_off[s : s + length] = np.arange(length)

    kernels = get_kernels()
    sa = suffix_array(text)
    lcp = kernels.lcp_kasai(text, sa)
    ells, lbs, rbs = kernels.lcp_intervals(lcp)

    matches: list[Match] = []
    for ell, lb, rb in zip(ells.tolist(), lbs.tolist(), rbs.tolist()):
        if ell < min_length:
            continue
        occ_pos = sa[lb : rb + 1]
        # left-maximality: the preceding tokens must not be uniform
        # (position 0 and per-process separators count as distinct)
        prevs = np.where(occ_pos > 0, text[occ_pos - 1], -1)
        if np.unique(prevs).size < 2:
            continue
        procs = pos_proc[occ_pos]
        if not allow_intra and np.unique(procs).size < 2:
            continue
        start = int(occ_pos[0])
        tokens = tuple(inv_vocab[t] for t in text[start : start + ell])
        occurrences = sorted(
            Occurrence(metas[int(p)].process_id, int(pos_off[pos]))
            for p, pos in zip(procs, occ_pos)
        )
        matches.append(Match(tokens=tokens, occurrences=occurrences))

    return MatchSet(
        matches=canonical_match_order(matches),
        mode="repeats",
        min_length=min_length,
        corpus_fingerprint=corpus_fingerprint(metas),
    )


def histogram(ms: MatchSet) -> dict[int, int]:
    """Match count per token-list length, ascending by length."""
    counts: dict[int, int] = {}
    for m in ms.matches:
        counts[m.length] = counts.get(m.length, 0) + 1
    return dict(sorted(counts.items()))
