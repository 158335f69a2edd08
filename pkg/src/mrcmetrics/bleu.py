"""Cumulative BLEU-n with optional opinion and entity bonuses.

Sentence scores come from a per-sample precision ledger: for each order i,
the numerator holds clipped hits and the denominator the candidate n-gram
total, with the applicable bonus added to both sides. Corpus scores sum
the ledgers element-wise over all samples and apply the score formula once
to the summed ledger; reference/candidate lengths for the brevity penalty
are summed the same way.

Ledger sums use ``math.fsum``, which is exactly rounded, so corpus results
are bit-identical under any permutation or partition of the sample list.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .corpus import QuestionSample, QuestionType
from .ngrams import (
    clipped_hits,
    clipped_hits_entities,
    clipped_hits_same_opinion,
    count_ngrams,
)
from .tokenization import DEFAULT_CONFIG, TokenizerConfig, tokenize


@dataclass(frozen=True)
class BleuParams:
    """Scoring knobs: max n-gram order, bonus weights, bonus on/off.

    ``alpha`` weighs the opinion-agreement bonus on yes-no questions,
    ``beta`` the entity bonus on entity questions. ``adapted=False``
    disables both regardless of the weights. ``smooth_eps`` > 0 turns on
    add-epsilon smoothing of zero-hit precisions (off by default: a zero
    hit count at any order zeroes the sentence score).
    """

    n: int = 4
    alpha: float = 2.0
    beta: float = 1.0
    adapted: bool = True
    smooth_eps: float = 0.0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.alpha < 0 or self.beta < 0:
            raise ValueError("bonus weights must be non-negative")

    def vanilla(self) -> "BleuParams":
        return BleuParams(n=self.n, adapted=False, smooth_eps=self.smooth_eps)


@dataclass(frozen=True)
class PrecisionLedger:
    """Per-order precision numerators/denominators plus BP lengths.

    Index i-1 holds order i. Numerators never exceed denominators (the
    bonus is added to both sides). Values are reals because bonus weights
    may be fractional.
    """

    numerators: tuple[float, ...]
    denominators: tuple[float, ...]
    ref_len: int
    cand_len: int

    @property
    def max_order(self) -> int:
        return len(self.numerators)

    def is_degenerate(self) -> bool:
        """True when no score is defined: empty candidate or empty ledger."""
        return self.cand_len == 0 or any(d == 0 for d in self.denominators)


def _closest_ref_len(cand_len: int, ref_lens: Iterable[int]) -> int:
    # Ties between equidistant reference lengths pick the shorter one.
    return min(ref_lens, key=lambda r: (abs(r - cand_len), r))


def brevity_penalty(ref_len: int, cand_len: int) -> float:
    """exp(min(1 - r/c, 0)); 1 when the candidate is at least as long.

    Defined as 0 for an empty candidate, where the ratio diverges.
    """
    if cand_len == 0:
        return 0.0
    return math.exp(min(1.0 - ref_len / cand_len, 0.0))


def sample_ledger(
    sample: QuestionSample,
    params: BleuParams,
    tok: TokenizerConfig = DEFAULT_CONFIG,
) -> PrecisionLedger:
    """Build one sample's precision ledger under ``params``."""
    cand = tokenize(sample.candidate.text, tok)
    refs = [tokenize(r.text, tok) for r in sample.references]
    entities = [tokenize(e, tok) for e in sample.entities]

    numerators: list[float] = []
    denominators: list[float] = []
    for order in range(1, params.n + 1):
        cand_counts = count_ngrams(cand, order)
        ref_counts = [count_ngrams(r, order) for r in refs]
        hits = clipped_hits(cand_counts, ref_counts)
        total = cand_counts.total()

        bonus = 0.0
        if params.adapted:
            if sample.qtype is QuestionType.YES_NO:
                same = clipped_hits_same_opinion(
                    cand_counts,
                    [(rc, r.opinion) for rc, r in zip(ref_counts, sample.references)],
                    sample.candidate.opinion,
                )
                bonus = params.alpha * same
            elif sample.qtype is QuestionType.ENTITY:
                bonus = params.beta * clipped_hits_entities(cand_counts, entities)

        numerators.append(hits + bonus)
        denominators.append(total + bonus)

    return PrecisionLedger(
        numerators=tuple(numerators),
        denominators=tuple(denominators),
        ref_len=_closest_ref_len(len(cand), (len(r) for r in refs)),
        cand_len=len(cand),
    )


def bleu_from_ledger(
    ledger: PrecisionLedger, n: int | None = None, smooth_eps: float = 0.0
) -> float:
    """Geometric mean of orders 1..n times the brevity penalty.

    Without smoothing, any zero numerator (or any degenerate zero
    denominator) yields 0.0.
    """
    if n is None:
        n = ledger.max_order
    if n < 1 or n > ledger.max_order:
        raise ValueError(f"ledger covers orders 1..{ledger.max_order}, asked for {n}")
    log_sum = 0.0
    for num, den in zip(ledger.numerators[:n], ledger.denominators[:n]):
        if smooth_eps > 0.0:
            num, den = num + smooth_eps, den + smooth_eps
        if num <= 0.0 or den <= 0.0:
            return 0.0
        log_sum += math.log(num / den)
    bp = brevity_penalty(ledger.ref_len, ledger.cand_len)
    return bp * math.exp(log_sum / n)


def sentence_bleu(
    sample: QuestionSample,
    params: BleuParams,
    tok: TokenizerConfig = DEFAULT_CONFIG,
) -> float:
    """Sentence-level cumulative BLEU-n of one sample."""
    return bleu_from_ledger(sample_ledger(sample, params, tok), params.n, params.smooth_eps)


def sum_ledgers(ledgers: Iterable[PrecisionLedger]) -> PrecisionLedger:
    """Element-wise, exactly-rounded sum of sample ledgers."""
    ledgers = list(ledgers)
    if not ledgers:
        raise ValueError("cannot sum an empty collection of ledgers")
    orders = {lg.max_order for lg in ledgers}
    if len(orders) != 1:
        raise ValueError(f"ledgers cover different max orders: {sorted(orders)}")
    (n,) = orders
    return PrecisionLedger(
        numerators=tuple(
            math.fsum(lg.numerators[i] for lg in ledgers) for i in range(n)
        ),
        denominators=tuple(
            math.fsum(lg.denominators[i] for lg in ledgers) for i in range(n)
        ),
        ref_len=sum(lg.ref_len for lg in ledgers),
        cand_len=sum(lg.cand_len for lg in ledgers),
    )


def corpus_bleu(
    samples: list[QuestionSample],
    params: BleuParams,
    tok: TokenizerConfig = DEFAULT_CONFIG,
) -> float:
    """Corpus-level BLEU: score formula applied to the summed ledger."""
    if not samples:
        raise ValueError("corpus must be non-empty")
    summed = sum_ledgers(sample_ledger(s, params, tok) for s in samples)
    return bleu_from_ledger(summed, params.n, params.smooth_eps)
