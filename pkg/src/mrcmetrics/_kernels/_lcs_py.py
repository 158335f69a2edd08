"""Pure-Python LCS kernel, used when the compiled extension is unavailable.

Same two-row dynamic program as the compiled version; results are
identical, only slower.
"""

from __future__ import annotations

from typing import Sequence


def lcs_len_ids(a: Sequence[int], b: Sequence[int]) -> int:
    """Length of the longest common subsequence of two int sequences."""
    n, m = len(a), len(b)
    if n == 0 or m == 0:
        return 0
    prev = [0] * (m + 1)
    cur = [0] * (m + 1)
    for i in range(n):
        ai = a[i]
        for j in range(m):
            if ai == b[j]:
                cur[j + 1] = prev[j] + 1
            else:
                up = prev[j + 1]
                left = cur[j]
                cur[j + 1] = up if up >= left else left
        prev, cur = cur, prev
    return prev[m]
