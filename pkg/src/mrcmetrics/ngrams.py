"""N-gram multisets and the three clipping variants used by BLEU scoring.

Clipping caps each candidate n-gram count at the largest count observed in
any single reference (or entity string). The opinion-restricted variant
considers only references whose label equals the candidate's; the entity
variant counts occurrences inside the gold entity strings.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .corpus import OpinionLabel
from .tokenization import TokenSequence


@dataclass(frozen=True)
class NGramCounts:
    """Counts of all contiguous ``order``-grams of one token sequence."""

    order: int
    counts: dict[tuple[str, ...], int]

    def total(self) -> int:
        return sum(self.counts.values())


def count_ngrams(seq: TokenSequence, order: int) -> NGramCounts:
    """Sliding-window n-gram counts; empty when the sequence is too short."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    tokens = seq.tokens
    grams = Counter(
        tokens[i : i + order] for i in range(len(tokens) - order + 1)
    )
    return NGramCounts(order=order, counts=dict(grams))


def _check_orders(cand: NGramCounts, others: list[NGramCounts]) -> None:
    for other in others:
        if other.order != cand.order:
            raise ValueError(
                f"order mismatch: candidate has {cand.order}, reference has {other.order}"
            )


def clipped_hits(cand: NGramCounts, refs: list[NGramCounts]) -> int:
    """Sum over candidate n-grams of min(count, max count in any reference)."""
    _check_orders(cand, refs)
    hits = 0
    for gram, count in cand.counts.items():
        best = max((ref.counts.get(gram, 0) for ref in refs), default=0)
        hits += min(count, best)
    return hits


def clipped_hits_same_opinion(
    cand: NGramCounts,
    refs: list[tuple[NGramCounts, OpinionLabel | None]],
    cand_opinion: OpinionLabel | None,
) -> int:
    """Clipped hits restricted to references sharing the candidate's label.

    Returns 0 when the candidate carries no label or no reference label
    matches. Label equality is exact, uniformly across all three labels.
    """
    if cand_opinion is None:
        return 0
    matching = [counts for counts, label in refs if label is cand_opinion]
    return clipped_hits(cand, matching)


def clipped_hits_entities(
    cand: NGramCounts,
    entities: list[TokenSequence],
    aggregate: str = "max",
) -> int:
    """Clipped hits of candidate n-grams against the gold entity strings.

    ``aggregate`` selects how per-entity occurrence counts combine into the
    clip ceiling: ``"max"`` (default) caps at the largest count in any
    single entity string, mirroring reference clipping; ``"sum"`` caps at
    the total across all entity strings.
    """
    if aggregate not in ("max", "sum"):
        raise ValueError(f"aggregate must be 'max' or 'sum', got {aggregate!r}")
    if not entities:
        return 0
    order = cand.order
    entity_counts = [count_ngrams(e, order).counts for e in entities]
    hits = 0
    for gram, count in cand.counts.items():
        per_entity = [c.get(gram, 0) for c in entity_counts]
        ceiling = max(per_entity) if aggregate == "max" else sum(per_entity)
        hits += min(count, ceiling)
    return hits
