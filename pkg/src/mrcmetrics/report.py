"""Assembles per-question and corpus scores into renderable reports.

Reports carry vanilla and adapted values for both metrics, the parameters
that produced them, and flags for degenerate questions (which are scored
as 0 and kept, never dropped, so corpus aggregates cover every question).

JSON rendering is canonical: keys sorted, floats fixed at six decimal
places, so equal reports render byte-identically.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any

from .bleu import BleuParams, bleu_from_ledger, sum_ledgers, sample_ledger
from .corpus import QuestionSample
from .rouge import RougeParams, rouge_l_sample
from .tokenization import DEFAULT_CONFIG, TokenizerConfig


@dataclass(frozen=True)
class QuestionScores:
    id: str
    qtype: str
    scores: dict[str, float]


@dataclass(frozen=True)
class ScoreReport:
    corpus_scores: dict[str, float]
    per_question: list[QuestionScores]
    params_used: dict[str, Any]
    degenerate_flags: list[tuple[str, str]]
    metric_names: tuple[str, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "corpus_scores": dict(self.corpus_scores),
            "per_question": [
                {"id": q.id, "type": q.qtype, "scores": dict(q.scores)}
                for q in self.per_question
            ],
            "params_used": self.params_used,
            "degenerate_flags": [
                {"id": qid, "reason": reason} for qid, reason in self.degenerate_flags
            ],
            "metric_names": list(self.metric_names),
        }


def report_from_dict(obj: dict[str, Any]) -> ScoreReport:
    return ScoreReport(
        corpus_scores={k: float(v) for k, v in obj["corpus_scores"].items()},
        per_question=[
            QuestionScores(
                id=q["id"],
                qtype=q["type"],
                scores={k: float(v) for k, v in q["scores"].items()},
            )
            for q in obj["per_question"]
        ],
        params_used=obj["params_used"],
        degenerate_flags=[(d["id"], d["reason"]) for d in obj["degenerate_flags"]],
        metric_names=tuple(obj["metric_names"]),
    )


def _params_dict(
    bleu_params: BleuParams, rouge_params: RougeParams, tok: TokenizerConfig
) -> dict[str, Any]:
    return {
        "bleu": {
            "n": bleu_params.n,
            "alpha": bleu_params.alpha,
            "beta": bleu_params.beta,
            "adapted": bleu_params.adapted,
            "smooth_eps": bleu_params.smooth_eps,
        },
        "rouge": {
            "gamma": rouge_params.gamma,
            "alpha": rouge_params.alpha,
            "beta": rouge_params.beta,
            "adapted": rouge_params.adapted,
            "harmonic": rouge_params.harmonic,
            "per_reference_max": rouge_params.per_reference_max,
        },
        "tokenizer": {
            "mode": tok.mode.value,
            "lowercase": tok.lowercase,
        },
    }


def _score_one(
    sample: QuestionSample,
    bleu_params: BleuParams,
    rouge_params: RougeParams,
    tok: TokenizerConfig,
):
    ledger_v = sample_ledger(sample, bleu_params.vanilla(), tok)
    ledger_a = sample_ledger(sample, bleu_params, tok)
    smooth = bleu_params.smooth_eps
    scores = {
        "vanilla_bleu": bleu_from_ledger(ledger_v, bleu_params.n, smooth),
        "adapted_bleu": bleu_from_ledger(ledger_a, bleu_params.n, smooth),
        "vanilla_rouge": rouge_l_sample(sample, rouge_params.vanilla(), tok),
        "adapted_rouge": rouge_l_sample(sample, rouge_params, tok),
    }
    flags: list[str] = []
    if ledger_v.cand_len == 0:
        flags.append("empty candidate")
    else:
        for order, num in enumerate(ledger_v.numerators, start=1):
            if num == 0.0:
                flags.append(f"no n-gram overlap at order {order}")
                break
    return ledger_v, ledger_a, scores, flags


def score_corpus(
    samples: list[QuestionSample],
    bleu_params: BleuParams = BleuParams(),
    rouge_params: RougeParams = RougeParams(),
    tok: TokenizerConfig = DEFAULT_CONFIG,
    max_workers: int = 1,
) -> ScoreReport:
    """Score a corpus with vanilla and adapted BLEU-n and ROUGE-L.

    ``max_workers`` > 1 scores questions in a thread pool; output is
    identical regardless because results are reassembled in corpus order.
    """
    if not samples:
        raise ValueError("corpus must be non-empty")

    bleu_name = f"bleu{bleu_params.n}"
    names = (bleu_name, f"{bleu_name}_adapted", "rougeL", "rougeL_adapted")

    if max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            results = list(
                pool.map(
                    lambda s: _score_one(s, bleu_params, rouge_params, tok), samples
                )
            )
    else:
        results = [_score_one(s, bleu_params, rouge_params, tok) for s in samples]

    per_question: list[QuestionScores] = []
    degenerate: list[tuple[str, str]] = []
    for sample, (_, _, scores, flags) in zip(samples, results):
        per_question.append(
            QuestionScores(
                id=sample.id,
                qtype=sample.qtype.value,
                scores={
                    names[0]: scores["vanilla_bleu"],
                    names[1]: scores["adapted_bleu"],
                    names[2]: scores["vanilla_rouge"],
                    names[3]: scores["adapted_rouge"],
                },
            )
        )
        for reason in flags:
            degenerate.append((sample.id, reason))

    smooth = bleu_params.smooth_eps
    corpus_scores = {
        names[0]: bleu_from_ledger(
            sum_ledgers(r[0] for r in results), bleu_params.n, smooth
        ),
        names[1]: bleu_from_ledger(
            sum_ledgers(r[1] for r in results), bleu_params.n, smooth
        ),
        names[2]: math.fsum(q.scores["rougeL"] for q in per_question) / len(samples),
        names[3]: math.fsum(q.scores["rougeL_adapted"] for q in per_question)
        / len(samples),
    }

    return ScoreReport(
        corpus_scores=corpus_scores,
        per_question=per_question,
        params_used=_params_dict(bleu_params, rouge_params, tok),
        degenerate_flags=degenerate,
        metric_names=names,
    )


def _canonical_json(value: Any, out: list[str]) -> None:
    if isinstance(value, dict):
        out.append("{")
        for i, key in enumerate(sorted(value)):
            if i:
                out.append(",")
            out.append(json.dumps(str(key)))
            out.append(":")
            _canonical_json(value[key], out)
        out.append("}")
    elif isinstance(value, (list, tuple)):
        out.append("[")
        for i, item in enumerate(value):
            if i:
                out.append(",")
            _canonical_json(item, out)
        out.append("]")
    elif isinstance(value, bool) or value is None:
        out.append(json.dumps(value))
    elif isinstance(value, float):
        out.append(f"{value:.6f}")
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, str):
        out.append(json.dumps(value, ensure_ascii=False))
    else:
        raise TypeError(f"cannot render {type(value).__name__} canonically")


def canonical_json_bytes(value: Any) -> bytes:
    """Canonical JSON encoding: sorted keys, floats at six decimal places."""
    out: list[str] = []
    _canonical_json(value, out)
    return ("".join(out) + "\n").encode("utf-8")


def render_json(report: ScoreReport) -> bytes:
    return canonical_json_bytes(report.to_dict())


def parse_report(data: bytes) -> ScoreReport:
    return report_from_dict(json.loads(data.decode("utf-8")))


def render_tsv(report: ScoreReport) -> bytes:
    lines = ["\t".join(("id", "type") + report.metric_names)]
    for q in report.per_question:
        row = [q.id, q.qtype] + [
            f"{q.scores[name]:.6f}" for name in report.metric_names
        ]
        lines.append("\t".join(row))
    return ("\n".join(lines) + "\n").encode("utf-8")


def render_text(report: ScoreReport) -> bytes:
    width = max(len(name) for name in report.metric_names)
    lines = ["corpus scores"]
    for name in report.metric_names:
        lines.append(f"  {name:<{width}}  {report.corpus_scores[name]:.2f}")
    lines.append("")
    lines.append(f"per-question scores ({len(report.per_question)} questions)")
    header = ["id", "type"] + list(report.metric_names)
    rows = [header] + [
        [q.id, q.qtype] + [f"{q.scores[n]:.2f}" for n in report.metric_names]
        for q in report.per_question
    ]
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    for row in rows:
        lines.append("  " + "  ".join(cell.ljust(w) for cell, w in zip(row, widths)))
    if report.degenerate_flags:
        lines.append("")
        lines.append("degenerate questions")
        for qid, reason in report.degenerate_flags:
            lines.append(f"  {qid}: {reason}")
    lines.append("")
    tok = report.params_used["tokenizer"]
    bleu = report.params_used["bleu"]
    rouge = report.params_used["rouge"]
    lines.append(
        "params: "
        f"bleu n={bleu['n']} alpha={bleu['alpha']} beta={bleu['beta']} "
        f"adapted={bleu['adapted']}; rouge gamma={rouge['gamma']} "
        f"alpha={rouge['alpha']} beta={rouge['beta']} adapted={rouge['adapted']} "
        f"harmonic={rouge['harmonic']}; tokenizer {tok['mode']} "
        f"lowercase={tok['lowercase']}"
    )
    return ("\n".join(lines) + "\n").encode("utf-8")


_RENDERERS = {"json": render_json, "tsv": render_tsv, "text": render_text}


def render(report: ScoreReport, format: str = "json") -> bytes:
    """Render a report as canonical JSON, TSV, or a plain-text summary."""
    try:
        renderer = _RENDERERS[format.lower()]
    except KeyError:
        raise ValueError(
            f"format must be one of {sorted(_RENDERERS)}, got {format!r}"
        ) from None
    return renderer(report)
