from __future__ import annotations

from pathlib import Path

import pytest

from mrcmetrics import (
    CandidateAnswer,
    OpinionLabel,
    QuestionSample,
    QuestionType,
    ReferenceAnswer,
)

FIXTURES = Path(__file__).parent / "fixtures"

# The two worked-example questions used throughout the golden tests.
YN_CANDIDATE = "Skipping rope is an aerobic exercise."
YN_GOLD_1 = "Skipping rope is a kind of aerobic exercise with low intensity."
YN_GOLD_2 = (
    "Skipping rope can be regarded as an aerobic exercise only when "
    "skipping for a long time."
)
YN_TRIVIAL = "exercise with low intensity"

ENT_CANDIDATE = (
    "Qin unified China in 221 BC after the war against other kingdoms "
    "which lasted ten years."
)
ENT_CANDIDATE_SHORT = "Qin unified China in 221 BC after the war against other kingdoms."
ENT_GOLD = "Qin unified China in ten years, from 230 BC to 221 BC."
ENT_ENTITIES = ("ten years", "230 BC", "221 BC")


def make_yn_sample(
    candidate: str = YN_CANDIDATE,
    opinion: OpinionLabel | None = OpinionLabel.YES,
    sample_id: str = "yn-aerobic",
    human_scores: tuple[int, ...] | None = None,
) -> QuestionSample:
    return QuestionSample(
        id=sample_id,
        qtype=QuestionType.YES_NO,
        candidate=CandidateAnswer(candidate, opinion),
        references=(
            ReferenceAnswer(YN_GOLD_1, OpinionLabel.YES),
            ReferenceAnswer(YN_GOLD_2, OpinionLabel.DEPENDS),
        ),
        human_scores=human_scores,
    )


def make_ent_sample(
    candidate: str = ENT_CANDIDATE,
    sample_id: str = "ent-qin",
    human_scores: tuple[int, ...] | None = None,
) -> QuestionSample:
    return QuestionSample(
        id=sample_id,
        qtype=QuestionType.ENTITY,
        candidate=CandidateAnswer(candidate),
        references=(ReferenceAnswer(ENT_GOLD),),
        entities=ENT_ENTITIES,
        human_scores=human_scores,
    )


@pytest.fixture
def yn_sample() -> QuestionSample:
    return make_yn_sample()


@pytest.fixture
def ent_sample() -> QuestionSample:
    return make_ent_sample()


@pytest.fixture
def examples_path() -> Path:
    return FIXTURES / "examples.jsonl"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one PASS/FAIL line per acceptance criterion after every run."""
    entries = {}
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance" in nodeid and getattr(rep, "when", None) == "call":
                entries[nodeid.split("::")[-1]] = outcome
    if not entries:
        return
    terminalreporter.write_sep("-", "acceptance checklist")
    for name in sorted(entries):
        mark = "PASS" if entries[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"[{mark}] {name}")
