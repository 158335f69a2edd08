"""Correlation of metric scores with human judgments, plus significance tests.

Provides Pearson correlation with a two-sided t-test, paired bootstrap
resampling for comparing two metrics, a group-sampling protocol that
correlates system-level aggregate scores, and bonus-weight sweeps.

All randomized procedures are fully determined by their seed (see rng
module); every accumulation uses ``math.fsum`` so results do not depend on
iteration order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

from .bleu import BleuParams, sentence_bleu
from .corpus import QuestionSample, QuestionType
from .rng import substream
from .rouge import RougeParams, rouge_l_sample
from .tokenization import DEFAULT_CONFIG, TokenizerConfig


class DegenerateDataError(ValueError):
    """Input data admits no correlation (too few points or zero variance)."""


@dataclass(frozen=True)
class ScorePair:
    """One question's metric score in [0, 1] and mean human score in [1, 5]."""

    metric_score: float
    human_score: float

    def __post_init__(self):
        if not 0.0 <= self.metric_score <= 1.0:
            raise ValueError(f"metric_score {self.metric_score} outside [0, 1]")
        if not 1.0 <= self.human_score <= 5.0:
            raise ValueError(f"human_score {self.human_score} outside [1, 5]")


@dataclass(frozen=True)
class CorrelationReport:
    pcc: float
    n: int
    t_statistic: float
    p_value: float

    def to_dict(self) -> dict:
        return {
            "pcc": self.pcc,
            "n": self.n,
            "t_statistic": self.t_statistic,
            "p_value": self.p_value,
        }


@dataclass(frozen=True)
class BootstrapReport:
    iterations: int
    wins_a: int
    wins_b: int
    ties: int
    significant: bool

    def to_dict(self) -> dict:
        return {
            "iterations": self.iterations,
            "wins_a": self.wins_a,
            "wins_b": self.wins_b,
            "ties": self.ties,
            "significant": self.significant,
        }


def _betacf(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta (modified Lentz method)."""
    max_iter, eps, tiny = 300, 3e-16, 1e-300
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, max_iter + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < eps:
            return h
    raise ArithmeticError("incomplete beta continued fraction did not converge")


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """I_x(a, b), accurate to ~1e-10 over the t-test parameter range."""
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    ln_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x) / b


def student_t_two_sided_p(t: float, dof: int) -> float:
    """P(|T| >= |t|) for a Student t variable with ``dof`` degrees of freedom."""
    if dof < 1:
        raise ValueError(f"degrees of freedom must be >= 1, got {dof}")
    if math.isinf(t):
        return 0.0
    return regularized_incomplete_beta(dof / 2.0, 0.5, dof / (dof + t * t))


def _split_pairs(pairs: Iterable) -> tuple[list[float], list[float]]:
    xs: list[float] = []
    ys: list[float] = []
    for pair in pairs:
        if isinstance(pair, ScorePair):
            xs.append(pair.metric_score)
            ys.append(pair.human_score)
        else:
            x, y = pair
            xs.append(float(x))
            ys.append(float(y))
    return xs, ys


def _pcc(xs: Sequence[float], ys: Sequence[float]) -> float | None:
    """Product-moment coefficient, or None when either variance is zero."""
    n = len(xs)
    mx = math.fsum(xs) / n
    my = math.fsum(ys) / n
    dx = [x - mx for x in xs]
    dy = [y - my for y in ys]
    sxx = math.fsum(d * d for d in dx)
    syy = math.fsum(d * d for d in dy)
    if sxx == 0.0 or syy == 0.0:
        return None
    sxy = math.fsum(a * b for a, b in zip(dx, dy))
    pcc = sxy / math.sqrt(sxx * syy)
    # Rounding can push the ratio a hair past +/-1; clamp for the t-statistic.
    return max(-1.0, min(1.0, pcc))


def pearson(pairs: Iterable) -> CorrelationReport:
    """Pearson correlation with a two-sided t-test over (metric, human) pairs.

    Accepts ScorePair objects or plain (x, y) tuples. Requires at least
    three pairs and nonzero variance in both variables.
    """
    xs, ys = _split_pairs(pairs)
    n = len(xs)
    if n < 3:
        raise DegenerateDataError(f"need at least 3 pairs, got {n}")
    if all(x == xs[0] for x in xs):
        raise DegenerateDataError("metric_score has zero variance")
    if all(y == ys[0] for y in ys):
        raise DegenerateDataError("human_score has zero variance")
    pcc = _pcc(xs, ys)
    if pcc is None:  # distinct values that cancel is impossible; be safe
        raise DegenerateDataError("zero variance after centering")
    if abs(pcc) >= 1.0:
        t = math.copysign(math.inf, pcc)
    else:
        t = pcc * math.sqrt((n - 2) / (1.0 - pcc * pcc))
    return CorrelationReport(
        pcc=pcc, n=n, t_statistic=t, p_value=student_t_two_sided_p(t, n - 2)
    )


def paired_bootstrap(
    metric_a: Sequence[float],
    metric_b: Sequence[float],
    human: Sequence[float],
    iterations: int = 100,
    seed: int = 0,
    win_rate: float = 0.95,
) -> BootstrapReport:
    """Compare two metrics by recomputing correlations on resampled data.

    Each iteration draws len(human) indices with replacement (the same
    indices for all three lists), recomputes both metric-vs-human
    correlations, and tallies which is higher. Significance means one side
    won at least ``win_rate`` of the iterations. A correlation undefined
    on a degenerate resample is treated as 0 for the comparison.
    """
    if not (len(metric_a) == len(metric_b) == len(human)):
        raise ValueError(
            f"length mismatch: {len(metric_a)}, {len(metric_b)}, {len(human)}"
        )
    if len(human) < 3:
        raise DegenerateDataError(f"need at least 3 questions, got {len(human)}")
    if iterations < 1:
        raise ValueError(f"iterations must be >= 1, got {iterations}")

    n = len(human)
    wins_a = wins_b = ties = 0
    for round_idx in range(iterations):
        gen = substream(seed, round_idx)
        idx = gen.indices_with_replacement(n, n)
        h = [human[i] for i in idx]
        pa = _pcc([metric_a[i] for i in idx], h) or 0.0
        pb = _pcc([metric_b[i] for i in idx], h) or 0.0
        if pa > pb:
            wins_a += 1
        elif pb > pa:
            wins_b += 1
        else:
            ties += 1
    significant = (wins_a / iterations >= win_rate) or (
        wins_b / iterations >= win_rate
    )
    return BootstrapReport(
        iterations=iterations,
        wins_a=wins_a,
        wins_b=wins_b,
        ties=ties,
        significant=significant,
    )


def overall_level_protocol(
    per_question_scores: dict[str, list[tuple[float, float]]],
    group_size: int = 30,
    rounds: int = 100,
    seed: int = 0,
    with_replacement: bool = False,
) -> CorrelationReport:
    """Correlate group-aggregated scores across systems.

    ``per_question_scores`` maps each system name to its per-question
    (metric, human) pairs over a shared question set. Each round samples
    ``group_size`` question indices (without replacement by default),
    shared across systems; every system contributes one (mean metric,
    mean human) pair per round, giving rounds * systems pairs in total.
    """
    if not per_question_scores:
        raise ValueError("need at least one system")
    lengths = {name: len(qs) for name, qs in per_question_scores.items()}
    n_questions = next(iter(lengths.values()))
    if any(length != n_questions for length in lengths.values()):
        raise ValueError(f"systems disagree on question count: {lengths}")
    if group_size < 1 or group_size > n_questions:
        raise ValueError(
            f"group_size {group_size} outside [1, {n_questions}]"
        )
    if rounds < 1:
        raise ValueError(f"rounds must be >= 1, got {rounds}")

    systems = sorted(per_question_scores)
    pairs: list[tuple[float, float]] = []
    for round_idx in range(rounds):
        gen = substream(seed, round_idx)
        if with_replacement:
            idx = gen.indices_with_replacement(n_questions, group_size)
        else:
            idx = gen.sample_without_replacement(n_questions, group_size)
        for name in systems:
            scores = per_question_scores[name]
            metric_mean = math.fsum(scores[i][0] for i in idx) / group_size
            human_mean = math.fsum(scores[i][1] for i in idx) / group_size
            pairs.append((metric_mean, human_mean))
    return pearson(pairs)


SweepMetric = Literal["bleu", "rouge-l"]
SweepWeight = Literal["alpha", "beta"]


def weight_sweep(
    samples: list[QuestionSample],
    metric: SweepMetric,
    vary: SweepWeight,
    grid: Sequence[float],
    fixed_other: float,
    tok: TokenizerConfig = DEFAULT_CONFIG,
    bleu_n: int = 4,
    gamma: float = 1.2,
) -> list[tuple[float, float]]:
    """Question-level correlation of an adapted metric across bonus weights.

    Varying alpha evaluates the yes-no subset; varying beta the entity
    subset. Only samples with human scores participate. Returns
    ``[(weight, pcc), ...]``, one row per grid value.
    """
    if metric not in ("bleu", "rouge-l"):
        raise ValueError(f"metric must be 'bleu' or 'rouge-l', got {metric!r}")
    if vary not in ("alpha", "beta"):
        raise ValueError(f"vary must be 'alpha' or 'beta', got {vary!r}")
    if not grid:
        raise ValueError("grid must be non-empty")
    if any(w < 0 for w in grid):
        raise ValueError("grid weights must be non-negative")

    target = QuestionType.YES_NO if vary == "alpha" else QuestionType.ENTITY
    subset = [
        s for s in samples if s.qtype is target and s.mean_human_score() is not None
    ]
    if not subset:
        raise ValueError(
            f"no {target.value} sample carries human scores; nothing to correlate"
        )
    humans = [s.mean_human_score() for s in subset]

    rows: list[tuple[float, float]] = []
    for weight in grid:
        alpha, beta = (
            (weight, fixed_other) if vary == "alpha" else (fixed_other, weight)
        )
        if metric == "bleu":
            params = BleuParams(n=bleu_n, alpha=alpha, beta=beta, adapted=True)
            scores = [sentence_bleu(s, params, tok) for s in subset]
        else:
            rparams = RougeParams(gamma=gamma, alpha=alpha, beta=beta, adapted=True)
            scores = [rouge_l_sample(s, rparams, tok) for s in subset]
        rows.append((weight, pearson(zip(scores, humans)).pcc))
    return rows
