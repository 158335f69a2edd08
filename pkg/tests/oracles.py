"""Independent brute-force reference implementations used only by tests.

These deliberately avoid the library's data structures and algorithms:
n-gram clipping scans raw token lists position by position, and the LCS
oracle enumerates subsequences exhaustively. Slow but obviously correct.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence


def occurrences(seq: Sequence[str], gram: Sequence[str]) -> int:
    """How many times ``gram`` occurs contiguously in ``seq``."""
    k = len(gram)
    return sum(1 for i in range(len(seq) - k + 1) if tuple(seq[i : i + k]) == tuple(gram))


def naive_clipped_hits(
    cand: Sequence[str], refs: list[Sequence[str]], order: int
) -> int:
    """Clipped n-gram hits via position scanning, no Counters."""
    grams = [tuple(cand[i : i + order]) for i in range(len(cand) - order + 1)]
    hits = 0
    for gram in set(grams):
        cand_count = occurrences(cand, gram)
        ref_best = max((occurrences(r, gram) for r in refs), default=0)
        hits += min(cand_count, ref_best)
    return hits


def naive_clipped_hits_sum(
    cand: Sequence[str], refs: list[Sequence[str]], order: int
) -> int:
    """Variant clipping against the total count across all references."""
    grams = [tuple(cand[i : i + order]) for i in range(len(cand) - order + 1)]
    hits = 0
    for gram in set(grams):
        cand_count = occurrences(cand, gram)
        ref_total = sum(occurrences(r, gram) for r in refs)
        hits += min(cand_count, ref_total)
    return hits


def is_subsequence(needle: Sequence[str], hay: Sequence[str]) -> bool:
    it = iter(hay)
    return all(tok in it for tok in needle)


def brute_force_lcs(a: Sequence[str], b: Sequence[str]) -> int:
    """Longest common subsequence by enumerating subsequences of the shorter side."""
    short, long_ = (a, b) if len(a) <= len(b) else (b, a)
    for length in range(len(short), 0, -1):
        for picks in combinations(range(len(short)), length):
            sub = [short[i] for i in picks]
            if is_subsequence(sub, long_):
                return length
    return 0
