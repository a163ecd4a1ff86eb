"""Pure numpy/Python kernel implementations.

Fallback path when numba is unavailable or disabled via
RPACLONE_BACKEND=numpy. Same signatures and results as the numba
kernels; lcp_kasai and lcp_intervals are inherently sequential and run
as plain Python loops here.
"""

from __future__ import annotations

import numpy as np


def lcp_kasai(text: np.ndarray, sa: np.ndarray) -> np.ndarray:
    """Kasai LCP array: lcp[r] = LCP(suffix sa[r-1], suffix sa[r]), lcp[0] = 0."""
    n = int(sa.size)
    lcp = np.zeros(n, dtype=np.int64)
    if n == 0:
        return lcp
    rank = np.empty(n, dtype=np.int64)
    rank[sa] = np.arange(n)
    h = 0
    for i in range(n):
        r = rank[i]
        if r > 0:
            j = sa[r - 1]
            while i + h < n and j + h < n and text[i + h] == text[j + h]:
                h += 1
            lcp[r] = h
            if h > 0:
                h -= 1
        else:
            h = 0
    return lcp


def lcp_intervals(lcp: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Enumerate all lcp-intervals (internal suffix-tree nodes).

    Returns (depths, left_bounds, right_bounds); interval i groups the
    suffix-array rows left_bounds[i]..right_bounds[i] (inclusive), all
    sharing a prefix of exactly depths[i] tokens that cannot be extended
    to the right uniformly (right-maximal repeats).
    """
    n = int(lcp.size)
    ells: list[int] = []
    lbs: list[int] = []
    rbs: list[int] = []
    stack: list[tuple[int, int]] = [(0, 0)]
    for i in range(1, n + 1):
        cur = int(lcp[i]) if i < n else 0
        lb = i - 1
        while cur < stack[-1][0]:
            top_l, top_lb = stack.pop()
            ells.append(top_l)
            lbs.append(top_lb)
            rbs.append(i - 1)
            lb = top_lb
        if cur > stack[-1][0]:
            stack.append((cur, lb))
    return (
        np.asarray(ells, dtype=np.int64),
        np.asarray(lbs, dtype=np.int64),
        np.asarray(rbs, dtype=np.int64),
    )


def lcs_lengths(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Classic longest-common-substring DP table.

    out[i, j] = length of the longest common run ending at a[i] and b[j].
    Vectorized one row at a time.
    """
    m, n = int(a.size), int(b.size)
    out = np.zeros((m, n), dtype=np.int32)
    if m == 0 or n == 0:
        return out
    prev = np.zeros(n, dtype=np.int32)
    for i in range(m):
        eq = b == a[i]
        row = np.zeros(n, dtype=np.int32)
        row[eq] = 1
        row[1:][eq[1:]] += prev[:-1][eq[1:]]
        out[i] = row
        prev = row
    return out
