"""Independent brute-force oracles used to check the mining code.

These deliberately share no code with rpaclone.similarity: repeats are
found by enumerating every substring, pairwise LCS by intersecting full
substring sets.
"""

from __future__ import annotations

from collections import defaultdict


def brute_force_repeats(
    procs: list[tuple[str, list[str]]], min_length: int, allow_intra: bool = False
) -> dict[tuple[str, ...], frozenset]:
    """All repeated substrings of length >= min_length (spanning >=2
    processes, or >=2 positions anywhere with allow_intra) for which no
    one-token extension is shared by every occurrence.

    Returns {token tuple: frozenset of (process_id, offset)}.
    """
    occ = defaultdict(list)
    for pid, toks in procs:
        for i in range(len(toks)):
            for j in range(i + min_length, len(toks) + 1):
                occ[tuple(toks[i:j])].append((pid, i))
    by_id = dict(procs)
    out = {}
    for tokens, occs in occ.items():
        pids = {p for p, _ in occs}
        if allow_intra:
            if len(occs) < 2:
                continue
        elif len(pids) < 2:
            continue
        length = len(tokens)
        lefts, rights = set(), set()
        left_open = right_open = False
        for p, o in occs:
            if o == 0:
                left_open = True
            else:
                lefts.add(by_id[p][o - 1])
            if o + length == len(by_id[p]):
                right_open = True
            else:
                rights.add(by_id[p][o + length])
        left_maximal = left_open or len(lefts) >= 2
        right_maximal = right_open or len(rights) >= 2
        if left_maximal and right_maximal:
            out[tokens] = frozenset(occs)
    return out


def brute_force_lcs(
    a: list[str], b: list[str]
) -> dict[tuple[str, ...], tuple[frozenset, frozenset]]:
    """All common contiguous sequences of maximal length, each with its
    full offset sets in a and b. Empty dict when nothing is shared."""
    subs_a, subs_b = defaultdict(set), defaultdict(set)
    for i in range(len(a)):
        for j in range(i + 1, len(a) + 1):
            subs_a[tuple(a[i:j])].add(i)
    for i in range(len(b)):
        for j in range(i + 1, len(b) + 1):
            subs_b[tuple(b[i:j])].add(i)
    common = set(subs_a) & set(subs_b)
    if not common:
        return {}
    k = max(len(t) for t in common)
    return {
        t: (frozenset(subs_a[t]), frozenset(subs_b[t])) for t in common if len(t) == k
    }
