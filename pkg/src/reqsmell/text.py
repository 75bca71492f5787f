"""Deterministic text normalization, tokenization, and sentence splitting.

Every metric in the package consumes the output of these functions, so all
of them are pure and produce identical results for identical inputs.
"""

from __future__ import annotations

import re
import unicodedata
from typing import NamedTuple

# A token is a maximal run of alphanumeric characters; apostrophes and
# hyphens are kept when they sit between alphanumerics ("don't", "re-use").
# [^\W_] is "word character minus underscore", i.e. Unicode alphanumeric.
_TOKEN_RE = re.compile(r"[^\W_]+(?:['’-][^\W_]+)*")

# A sentence boundary is a run of terminator characters.
_TERMINATOR_RE = re.compile(r"[.!?;]+")


class Token(NamedTuple):
    """One word of normalized text with its character span."""

    text: str
    letter_count: int
    start: int
    end: int


class Sentence(NamedTuple):
    """Half-open range [start, end) of token indices forming one sentence."""

    start: int
    end: int

    @property
    def token_count(self) -> int:
        return self.end - self.start


def normalize(text: str) -> str:
    """Case-fold and canonically compose (NFC) the given text.

    Idempotent, so dictionaries and requirement text normalized separately
    still compare equal token-by-token.
    """
    return unicodedata.normalize("NFC", text.casefold())


def tokenize(text: str) -> list[Token]:
    """Split normalized text into word tokens.

    Tokens are maximal alphanumeric runs; internal apostrophes and hyphens
    stay inside the token. ``letter_count`` counts alphabetic characters
    only, so digits and the joining punctuation are excluded.
    """
    return [
        Token(
            text=m.group(),
            letter_count=sum(1 for ch in m.group() if ch.isalpha()),
            start=m.start(),
            end=m.end(),
        )
        for m in _TOKEN_RE.finditer(text)
    ]


def split_sentences(text: str, tokens: list[Token]) -> list[Sentence]:
    """Group ``tokens`` into sentences of the normalized ``text``.

    A boundary occurs after each run of '.', '!', '?' or ';'. Text with
    tokens but no terminator forms exactly one sentence; tokenless text
    yields no sentences. Every token belongs to exactly one sentence.
    """
    sentences: list[Sentence] = []
    first = 0
    total = len(tokens)
    for match in _TERMINATOR_RE.finditer(text):
        cut = match.end()
        last = first
        while last < total and tokens[last].start < cut:
            last += 1
        if last > first:
            sentences.append(Sentence(first, last))
            first = last
    if first < total:
        sentences.append(Sentence(first, total))
    return sentences
