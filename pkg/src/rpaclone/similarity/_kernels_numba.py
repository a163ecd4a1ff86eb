"""Numba-jitted kernel implementations (default hot path).

Import fails if numba is not installed; the backend selector falls back
to the numpy module in that case.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def lcp_kasai(text: np.ndarray, sa: np.ndarray) -> np.ndarray:
    n = sa.size
    lcp = np.zeros(n, dtype=np.int64)
    if n == 0:
        return lcp
    rank = np.empty(n, dtype=np.int64)
    for r in range(n):
        rank[sa[r]] = r
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


@njit(cache=True)
def lcp_intervals(lcp: np.ndarray):
    n = lcp.size
    # at most n internal nodes
    ells = np.empty(n + 1, dtype=np.int64)
    lbs = np.empty(n + 1, dtype=np.int64)
    rbs = np.empty(n + 1, dtype=np.int64)
    count = 0
    stack_l = np.empty(n + 2, dtype=np.int64)
    stack_lb = np.empty(n + 2, dtype=np.int64)
    stack_l[0] = 0
    stack_lb[0] = 0
    top = 0
    for i in range(1, n + 1):
        cur = lcp[i] if i < n else 0
        lb = i - 1
        while cur < stack_l[top]:
            ells[count] = stack_l[top]
            lbs[count] = stack_lb[top]
            rbs[count] = i - 1
            lb = stack_lb[top]
            top -= 1
            count += 1
        if cur > stack_l[top]:
            top += 1
            stack_l[top] = cur
            stack_lb[top] = lb
    return ells[:count], lbs[:count], rbs[:count]


@njit(cache=True)
def lcs_lengths(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    m = a.size
    n = b.size
    out = np.zeros((m, n), dtype=np.int32)
    for i in range(m):
        ai = a[i]
        for j in range(n):
            if b[j] == ai:
                if i > 0 and j > 0:
                    out[i, j] = out[i - 1, j - 1] + 1
                else:
                    out[i, j] = 1
    return out
