"""Deterministic tokenization shared by every metric.

Two modes are offered: word-level splitting where each punctuation mark
becomes its own token (the convention the worked English examples follow,
with the sentence-final period counted and no stemming or lemmatization),
and character-level splitting, the common convention for Chinese corpora.
The choice is surfaced to the user; nothing here depends on locale or
environment state.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from enum import Enum


class TokenizerMode(Enum):
    WHITESPACE_PUNCT = "whitespace"
    CHARACTER = "char"


@dataclass(frozen=True)
class TokenizerConfig:
    """Fully determines tokenizer behaviour: mode plus optional casefolding."""

    mode: TokenizerMode = TokenizerMode.WHITESPACE_PUNCT
    lowercase: bool = False


@dataclass(frozen=True)
class TokenSequence:
    """Ordered tokens plus the string they came from.

    No token is ever empty; joining the tokens loses only separator
    characters, never token content.
    """

    tokens: tuple[str, ...]
    source_text: str = field(default="", compare=False)

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)


DEFAULT_CONFIG = TokenizerConfig()

# Punctuation and symbols (Unicode categories P* and S*) split into
# standalone tokens so they are deterministic and language-neutral.
_SEPARABLE_CATEGORIES = ("P", "S")


def _is_separable(ch: str) -> bool:
    return unicodedata.category(ch)[0] in _SEPARABLE_CATEGORIES


def tokenize(text: str, config: TokenizerConfig = DEFAULT_CONFIG) -> TokenSequence:
    """Tokenize ``text`` under ``config``; empty text yields an empty sequence."""
    source = text
    if config.lowercase:
        text = text.casefold()

    if config.mode is TokenizerMode.CHARACTER:
        tokens = tuple(ch for ch in text if not ch.isspace())
        return TokenSequence(tokens=tokens, source_text=source)

    tokens: list[str] = []
    word: list[str] = []
    for ch in text:
        if ch.isspace():
            if word:
                tokens.append("".join(word))
                word.clear()
        elif _is_separable(ch):
            if word:
                tokens.append("".join(word))
                word.clear()
            tokens.append(ch)
        else:
            word.append(ch)
    if word:
        tokens.append("".join(word))
    return TokenSequence(tokens=tuple(tokens), source_text=source)
