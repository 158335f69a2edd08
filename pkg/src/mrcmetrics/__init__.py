"""Evaluation metrics for reading-comprehension answers.

Vanilla and bonus-adapted cumulative BLEU-n and ROUGE-L: the adaptations
add lexical-overlap bonuses for yes-no opinion agreement and entity-list
correctness. Includes a statistics suite for correlating metric scores
with human judgments (Pearson + t-test, paired bootstrap resampling, a
group-sampling protocol, and bonus-weight sweeps) and a CLI.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .bleu import (
    BleuParams,
    PrecisionLedger,
    bleu_from_ledger,
    brevity_penalty,
    corpus_bleu,
    sample_ledger,
    sentence_bleu,
    sum_ledgers,
)
from .corpus import (
    CandidateAnswer,
    CorpusError,
    CorpusParseError,
    CorpusValidationError,
    OpinionLabel,
    QuestionSample,
    QuestionType,
    ReferenceAnswer,
    load_corpus,
    sample_from_dict,
    sample_to_dict,
    scan_corpus,
    validate_sample,
)
from .ngrams import (
    NGramCounts,
    clipped_hits,
    clipped_hits_entities,
    clipped_hits_same_opinion,
    count_ngrams,
)
from .report import ScoreReport, parse_report, render, score_corpus
from .rouge import (
    LcsResult,
    RougeParams,
    corpus_rouge_l,
    entity_bonus_length,
    lcs_length,
    rouge_l_sample,
)
from .stats import (
    BootstrapReport,
    CorrelationReport,
    DegenerateDataError,
    ScorePair,
    overall_level_protocol,
    paired_bootstrap,
    pearson,
    weight_sweep,
)
from .tokenization import (
    TokenizerConfig,
    TokenizerMode,
    TokenSequence,
    tokenize,
)

__version__ = "0.1.0"

__all__ = [
    "BleuParams",
    "BootstrapReport",
    "CandidateAnswer",
    "CorpusError",
    "CorpusParseError",
    "CorpusValidationError",
    "CorrelationReport",
    "DegenerateDataError",
    "KERNEL_BACKEND",
    "LcsResult",
    "NGramCounts",
    "OpinionLabel",
    "PrecisionLedger",
    "QuestionSample",
    "QuestionType",
    "ReferenceAnswer",
    "RougeParams",
    "ScorePair",
    "ScoreReport",
    "TokenSequence",
    "TokenizerConfig",
    "TokenizerMode",
    "bleu_from_ledger",
    "brevity_penalty",
    "clipped_hits",
    "clipped_hits_entities",
    "clipped_hits_same_opinion",
    "corpus_bleu",
    "corpus_rouge_l",
    "count_ngrams",
    "entity_bonus_length",
    "lcs_length",
    "load_corpus",
    "overall_level_protocol",
    "paired_bootstrap",
    "parse_report",
    "pearson",
    "render",
    "rouge_l_sample",
    "sample_from_dict",
    "sample_ledger",
    "sample_to_dict",
    "scan_corpus",
    "score_corpus",
    "sentence_bleu",
    "sum_ledgers",
    "tokenize",
    "validate_sample",
    "weight_sweep",
]
