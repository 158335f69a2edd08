"""Question/answer data model and the JSON-lines corpus format.

One sample object per line, UTF-8. Field names are fixed:

    {"id": "...", "question_type": "YES_NO" | "ENTITY" | "DESCRIPTION",
     "candidate": {"text": "...", "opinion": "Yes" | "No" | "Depends" | null},
     "references": [{"text": "...", "opinion": ...}, ...],
     "entities": ["...", ...],
     "human_scores": [1..5, ...]}

``entities``, ``human_scores`` and both ``opinion`` keys may be omitted.
Every line either yields a sample or a located error; no line is silently
dropped.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any


class OpinionLabel(Enum):
    YES = "Yes"
    NO = "No"
    DEPENDS = "Depends"


class QuestionType(Enum):
    YES_NO = "YES_NO"
    ENTITY = "ENTITY"
    DESCRIPTION = "DESCRIPTION"


class CorpusError(Exception):
    """Base for corpus ingestion failures; carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class CorpusParseError(CorpusError):
    """Line is not a valid JSON object."""


class CorpusValidationError(CorpusError):
    """Line parsed but violates a sample invariant; message names the field."""


@dataclass(frozen=True)
class CandidateAnswer:
    text: str
    opinion: OpinionLabel | None = None


@dataclass(frozen=True)
class ReferenceAnswer:
    text: str
    opinion: OpinionLabel | None = None


@dataclass(frozen=True)
class QuestionSample:
    id: str
    qtype: QuestionType
    candidate: CandidateAnswer
    references: tuple[ReferenceAnswer, ...]
    entities: tuple[str, ...] = ()
    human_scores: tuple[int, ...] | None = None

    def mean_human_score(self) -> float | None:
        if not self.human_scores:
            return None
        return sum(self.human_scores) / len(self.human_scores)


def validate_sample(sample: QuestionSample) -> list[str]:
    """Return one entry per violated invariant; empty list iff well formed."""
    violations: list[str] = []
    if not sample.id:
        violations.append("id: must be a non-empty string")
    if not sample.references:
        violations.append("references: must be non-empty")
    if sample.qtype is QuestionType.YES_NO:
        for i, ref in enumerate(sample.references):
            if ref.opinion is None:
                violations.append(
                    f"references[{i}].opinion: required for YES_NO questions"
                )
    if sample.entities and sample.qtype is not QuestionType.ENTITY:
        violations.append("entities: only ENTITY questions may carry an entity list")
    if sample.human_scores is not None:
        for i, score in enumerate(sample.human_scores):
            if not 1 <= score <= 5:
                violations.append(f"human_scores[{i}]: {score} outside [1, 5]")
    return violations


_OPINIONS = {label.value: label for label in OpinionLabel}
_QTYPES = {qt.value: qt for qt in QuestionType}
_SAMPLE_KEYS = {"id", "question_type", "candidate", "references", "entities", "human_scores"}
_ANSWER_KEYS = {"text", "opinion"}


def _parse_opinion(raw: Any, where: str) -> OpinionLabel | None:
    if raw is None:
        return None
    if not isinstance(raw, str) or raw not in _OPINIONS:
        raise CorpusValidationError(
            f"{where}: opinion must be one of {sorted(_OPINIONS)} or null, got {raw!r}"
        )
    return _OPINIONS[raw]


def _parse_answer(raw: Any, where: str) -> tuple[str, OpinionLabel | None]:
    if not isinstance(raw, dict):
        raise CorpusValidationError(f"{where}: expected an object with a text field")
    unknown = set(raw) - _ANSWER_KEYS
    if unknown:
        raise CorpusValidationError(f"{where}: unknown field {sorted(unknown)[0]!r}")
    text = raw.get("text")
    if not isinstance(text, str):
        raise CorpusValidationError(f"{where}.text: must be a string")
    return text, _parse_opinion(raw.get("opinion"), where)


def sample_from_dict(obj: dict[str, Any]) -> QuestionSample:
    """Build a sample from a decoded JSON object, checking field shapes.

    Raises :class:`CorpusValidationError` (without a line number) on any
    malformed or invariant-violating field.
    """
    if not isinstance(obj, dict):
        raise CorpusValidationError("sample: expected a JSON object")
    unknown = set(obj) - _SAMPLE_KEYS
    if unknown:
        raise CorpusValidationError(f"sample: unknown field {sorted(unknown)[0]!r}")

    sample_id = obj.get("id")
    if not isinstance(sample_id, str):
        raise CorpusValidationError("id: must be a string")
    qtype_raw = obj.get("question_type")
    if not isinstance(qtype_raw, str) or qtype_raw.upper() not in _QTYPES:
        raise CorpusValidationError(
            f"question_type: must be one of {sorted(_QTYPES)}, got {qtype_raw!r}"
        )
    qtype = _QTYPES[qtype_raw.upper()]

    cand_text, cand_opinion = _parse_answer(obj.get("candidate"), "candidate")

    refs_raw = obj.get("references")
    if not isinstance(refs_raw, list):
        raise CorpusValidationError("references: must be a list")
    references = tuple(
        ReferenceAnswer(*_parse_answer(r, f"references[{i}]"))
        for i, r in enumerate(refs_raw)
    )

    ents_raw = obj.get("entities", [])
    if not isinstance(ents_raw, list) or not all(isinstance(e, str) for e in ents_raw):
        raise CorpusValidationError("entities: must be a list of strings")

    scores_raw = obj.get("human_scores")
    if scores_raw is not None:
        if not isinstance(scores_raw, list) or not all(
            isinstance(s, int) and not isinstance(s, bool) for s in scores_raw
        ):
            raise CorpusValidationError("human_scores: must be a list of integers")
        scores = tuple(scores_raw)
    else:
        scores = None

    sample = QuestionSample(
        id=sample_id,
        qtype=qtype,
        candidate=CandidateAnswer(cand_text, cand_opinion),
        references=references,
        entities=tuple(ents_raw),
        human_scores=scores,
    )
    violations = validate_sample(sample)
    if violations:
        raise CorpusValidationError("; ".join(violations))
    return sample


def sample_to_dict(sample: QuestionSample) -> dict[str, Any]:
    """Inverse of :func:`sample_from_dict`; omits absent optional fields."""

    def answer(text: str, opinion: OpinionLabel | None) -> dict[str, Any]:
        out: dict[str, Any] = {"text": text}
        if opinion is not None:
            out["opinion"] = opinion.value
        return out

    obj: dict[str, Any] = {
        "id": sample.id,
        "question_type": sample.qtype.value,
        "candidate": answer(sample.candidate.text, sample.candidate.opinion),
        "references": [answer(r.text, r.opinion) for r in sample.references],
    }
    if sample.entities:
        obj["entities"] = list(sample.entities)
    if sample.human_scores is not None:
        obj["human_scores"] = list(sample.human_scores)
    return obj


def _iter_lines(path: str | Path):
    try:
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                yield lineno, line
    except UnicodeDecodeError as exc:
        raise CorpusParseError(f"{path}: corpus files must be UTF-8 ({exc})") from exc


def load_corpus(path: str | Path) -> list[QuestionSample]:
    """Load a JSON-lines corpus, raising on the first malformed line.

    Blank lines are permitted and skipped. Duplicate sample ids are
    rejected so downstream reports stay unambiguous.
    """
    samples: list[QuestionSample] = []
    seen_ids: set[str] = set()
    for lineno, line in _iter_lines(path):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusParseError(f"invalid JSON: {exc.msg}", line=lineno) from exc
        try:
            sample = sample_from_dict(obj)
        except CorpusValidationError as exc:
            raise CorpusValidationError(str(exc), line=lineno) from exc
        if sample.id in seen_ids:
            raise CorpusValidationError(f"id: duplicate {sample.id!r}", line=lineno)
        seen_ids.add(sample.id)
        samples.append(sample)
    return samples


def scan_corpus(path: str | Path) -> tuple[list[QuestionSample], list[tuple[int, str]]]:
    """Lenient pass over a corpus: collect valid samples and every problem.

    Unlike :func:`load_corpus` this never raises on bad lines; it returns
    ``(samples, [(line_number, message), ...])`` so callers can report all
    violations at once.
    """
    samples: list[QuestionSample] = []
    problems: list[tuple[int, str]] = []
    seen_ids: set[str] = set()
    for lineno, line in _iter_lines(path):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            problems.append((lineno, f"invalid JSON: {exc.msg}"))
            continue
        try:
            sample = sample_from_dict(obj)
        except CorpusValidationError as exc:
            problems.append((lineno, str(exc)))
            continue
        if sample.id in seen_ids:
            problems.append((lineno, f"id: duplicate {sample.id!r}"))
            continue
        seen_ids.add(sample.id)
        samples.append(sample)
    return samples, problems
