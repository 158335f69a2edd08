"""ROUGE-L with optional opinion and entity bonuses.

Per reference, precision is LCS length over candidate length and recall is
LCS length over reference length; the applicable bonus is added to both
the numerator and denominator of each. With multiple references the
maximum precision and maximum recall are selected independently before
combining (an alternative mode taking the best per-reference combined
score is available via ``per_reference_max``). Corpus score is the
arithmetic mean over samples.

The combination weighs recall ``gamma`` times as strongly as precision:
(1 + gamma^2) * R * P / (R + gamma^2 * P). ``harmonic=True`` forces the
plain harmonic mean (gamma = 1), the convention the worked examples use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._kernels import lcs_len_ids
from .corpus import QuestionSample, QuestionType
from .tokenization import DEFAULT_CONFIG, TokenizerConfig, TokenSequence, tokenize


@dataclass(frozen=True)
class RougeParams:
    """Scoring knobs: recall weight, bonus weights, bonus/combination modes."""

    gamma: float = 1.2
    alpha: float = 2.0
    beta: float = 1.0
    adapted: bool = True
    harmonic: bool = False
    per_reference_max: bool = False

    def __post_init__(self):
        if self.gamma <= 0:
            raise ValueError(f"gamma must be positive, got {self.gamma}")
        if self.alpha < 0 or self.beta < 0:
            raise ValueError("bonus weights must be non-negative")

    def vanilla(self) -> "RougeParams":
        return RougeParams(
            gamma=self.gamma,
            adapted=False,
            harmonic=self.harmonic,
            per_reference_max=self.per_reference_max,
        )


@dataclass(frozen=True)
class LcsResult:
    length: int
    cand_len: int
    ref_len: int


def lcs_length(a: TokenSequence, b: TokenSequence) -> LcsResult:
    """Token-level longest common subsequence length of candidate ``a`` vs ``b``."""
    ids: dict[str, int] = {}
    seq_a = [ids.setdefault(t, len(ids)) for t in a.tokens]
    seq_b = [ids.setdefault(t, len(ids)) for t in b.tokens]
    return LcsResult(
        length=lcs_len_ids(seq_a, seq_b), cand_len=len(a), ref_len=len(b)
    )


def _contains_contiguous(hay: tuple[str, ...], needle: tuple[str, ...]) -> bool:
    k = len(needle)
    return any(hay[i : i + k] == needle for i in range(len(hay) - k + 1))


def entity_bonus_length(cand: TokenSequence, entities: list[TokenSequence]) -> int:
    """Total token length of the gold entities present in the candidate.

    An entity counts when its token sequence occurs contiguously in the
    candidate, and counts at most once however often it reoccurs.
    """
    total = 0
    for entity in entities:
        if len(entity) and _contains_contiguous(cand.tokens, entity.tokens):
            total += len(entity)
    return total


def combine_precision_recall(p: float, r: float, gamma: float) -> float:
    """(1 + gamma^2) * R * P / (R + gamma^2 * P); 0 when both are 0."""
    g2 = gamma * gamma
    denom = r + g2 * p
    if denom == 0.0:
        return 0.0
    return (1.0 + g2) * r * p / denom


def rouge_l_sample(
    sample: QuestionSample,
    params: RougeParams,
    tok: TokenizerConfig = DEFAULT_CONFIG,
) -> float:
    """ROUGE-L of one sample under ``params``, in [0, 1]."""
    cand = tokenize(sample.candidate.text, tok)
    gamma = 1.0 if params.harmonic else params.gamma

    ent_bonus = 0.0
    if params.adapted and sample.qtype is QuestionType.ENTITY:
        entities = [tokenize(e, tok) for e in sample.entities]
        ent_bonus = params.beta * entity_bonus_length(cand, entities)

    precisions: list[float] = []
    recalls: list[float] = []
    for ref_answer in sample.references:
        ref = tokenize(ref_answer.text, tok)
        lcs = lcs_length(cand, ref).length

        bonus = 0.0
        if params.adapted:
            if (
                sample.qtype is QuestionType.YES_NO
                and sample.candidate.opinion is not None
                and sample.candidate.opinion is ref_answer.opinion
            ):
                bonus = params.alpha * lcs
            elif sample.qtype is QuestionType.ENTITY:
                bonus = ent_bonus

        p_den = len(cand) + bonus
        r_den = len(ref) + bonus
        precisions.append((lcs + bonus) / p_den if p_den > 0 else 0.0)
        recalls.append((lcs + bonus) / r_den if r_den > 0 else 0.0)

    if params.per_reference_max:
        return max(
            combine_precision_recall(p, r, gamma)
            for p, r in zip(precisions, recalls)
        )
    return combine_precision_recall(max(precisions), max(recalls), gamma)


def corpus_rouge_l(
    samples: list[QuestionSample],
    params: RougeParams,
    tok: TokenizerConfig = DEFAULT_CONFIG,
) -> float:
    """Mean per-sample ROUGE-L over a non-empty corpus."""
    if not samples:
        raise ValueError("corpus must be non-empty")
    scores = [rouge_l_sample(s, params, tok) for s in samples]
    return math.fsum(scores) / len(scores)
