"""Random sample generators shared by the property and acceptance suites."""

from __future__ import annotations

import random

from mrcmetrics import (
    CandidateAnswer,
    OpinionLabel,
    QuestionSample,
    QuestionType,
    ReferenceAnswer,
)

VOCAB = ["a", "b", "c", "d", "red", "blue", "king", "year", "212", "BC"]
LABELS = list(OpinionLabel)


def random_text(rng: random.Random, max_len: int = 12, vocab=VOCAB) -> str:
    return " ".join(rng.choice(vocab) for _ in range(rng.randint(0, max_len)))


def random_sample(rng: random.Random, sample_id: str) -> QuestionSample:
    """A structurally valid sample of any question type.

    Candidates share the reference vocabulary so overlaps (and therefore
    nonzero scores and bonuses) are common.
    """
    qtype = rng.choice(list(QuestionType))
    n_refs = rng.randint(1, 3)
    if qtype is QuestionType.YES_NO:
        refs = tuple(
            ReferenceAnswer(random_text(rng), rng.choice(LABELS))
            for _ in range(n_refs)
        )
        cand_opinion = rng.choice(LABELS + [None])
        entities: tuple[str, ...] = ()
    elif qtype is QuestionType.ENTITY:
        refs = tuple(ReferenceAnswer(random_text(rng)) for _ in range(n_refs))
        cand_opinion = None
        entities = tuple(
            random_text(rng, max_len=2) or "a" for _ in range(rng.randint(0, 3))
        )
    else:
        refs = tuple(ReferenceAnswer(random_text(rng)) for _ in range(n_refs))
        cand_opinion = None
        entities = ()

    cand_text = random_text(rng)
    if qtype is QuestionType.ENTITY and entities and rng.random() < 0.7:
        # Splice an entity in so the bonus path is exercised often.
        cand_text = (cand_text + " " + rng.choice(entities)).strip()

    return QuestionSample(
        id=sample_id,
        qtype=qtype,
        candidate=CandidateAnswer(cand_text, cand_opinion),
        references=refs,
        entities=entities,
    )


def random_bonus_sample(rng: random.Random, sample_id: str) -> QuestionSample:
    """A sample guaranteed to have a positive bonus base.

    Yes-no samples get a candidate that copies a chunk of a same-labeled
    reference; entity samples get a candidate containing a gold entity.
    """
    if rng.random() < 0.5:
        label = rng.choice(LABELS)
        ref_tokens = random_text(rng, max_len=8).split() or ["a"]
        start = rng.randrange(len(ref_tokens))
        chunk = ref_tokens[start : start + rng.randint(1, 4)]
        cand_tokens = chunk + random_text(rng, max_len=4).split()
        refs = [ReferenceAnswer(" ".join(ref_tokens), label)]
        for _ in range(rng.randint(0, 2)):
            refs.append(ReferenceAnswer(random_text(rng), rng.choice(LABELS)))
        rng.shuffle(refs)
        return QuestionSample(
            id=sample_id,
            qtype=QuestionType.YES_NO,
            candidate=CandidateAnswer(" ".join(cand_tokens), label),
            references=tuple(refs),
        )
    entities = tuple(
        random_text(rng, max_len=2) or "a" for _ in range(rng.randint(1, 3))
    )
    cand_text = (random_text(rng, max_len=6) + " " + rng.choice(entities)).strip()
    return QuestionSample(
        id=sample_id,
        qtype=QuestionType.ENTITY,
        candidate=CandidateAnswer(cand_text),
        references=(ReferenceAnswer(random_text(rng) or "a"),),
        entities=entities,
    )
