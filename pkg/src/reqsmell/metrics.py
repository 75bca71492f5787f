"""Per-requirement metric computation.

For one requirement this produces the full nine-value vector: the seven
dictionary counts (V, NR1, NR2, O, S, W, NC), the word count NW, and the
readability score ARI. Dictionary matches never cross sentence boundaries,
which keeps counts additive when independently terminated texts are
concatenated. Different metrics count the same tokens independently; only
matches of one metric are mutually non-overlapping.

ARI here is average words per sentence plus nine times average letters per
word; empty text yields a degenerate all-zero vector instead of an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Mapping, NamedTuple, Sequence

from .dictionaries import (
    DICTIONARY_METRICS,
    Dictionary,
    PhraseMatcher,
    builtin_dictionaries,
    compile_dictionary,
)
from .text import Sentence, Token, normalize, split_sentences, tokenize

if TYPE_CHECKING:
    from .ingestion import Requirement

# All reported metrics, in report order.
ALL_METRICS = DICTIONARY_METRICS + ("NW", "ARI")


class MatchSpan(NamedTuple):
    """One dictionary hit: metric id, matched phrase, half-open token range."""

    metric: str
    phrase: str
    start: int
    end: int


class ReadabilityStats(NamedTuple):
    """Counts and averages feeding the readability score."""

    word_count: int
    sentence_count: int
    letter_count: int
    words_per_sentence: float
    letters_per_word: float

    @property
    def ari(self) -> float:
        return self.words_per_sentence + 9.0 * self.letters_per_word


@dataclass(frozen=True)
class MetricVector:
    """The nine metric values for one requirement, plus match evidence."""

    counts: Mapping[str, int]
    word_count: int
    ari: float
    degenerate: bool
    spans: tuple[MatchSpan, ...]
    readability: ReadabilityStats

    def value(self, metric_id: str) -> float:
        """Value of any reported metric, counts and NW/ARI alike."""
        if metric_id == "NW":
            return self.word_count
        if metric_id == "ARI":
            return self.ari
        return self.counts[metric_id]

    def as_dict(self) -> dict[str, float]:
        """All nine values keyed by metric id, in report order."""
        return {metric: self.value(metric) for metric in ALL_METRICS}


@dataclass(frozen=True)
class AnalysisConfig:
    """Immutable bundle of the seven dictionaries and their matchers."""

    dictionaries: Mapping[str, Dictionary]
    matchers: Mapping[str, PhraseMatcher]

    @classmethod
    def from_dictionaries(cls, dictionaries: Mapping[str, Dictionary]) -> AnalysisConfig:
        missing = [m for m in DICTIONARY_METRICS if m not in dictionaries]
        if missing:
            raise ValueError(f"missing dictionaries for metrics: {', '.join(missing)}")
        matchers = {m: compile_dictionary(dictionaries[m]) for m in DICTIONARY_METRICS}
        return cls(dict(dictionaries), matchers)

    @classmethod
    def default(cls) -> AnalysisConfig:
        return cls.from_dictionaries(builtin_dictionaries())


def _find_spans(
    words: Sequence[str], sentences: Sequence[Sentence], matcher: PhraseMatcher
) -> list[MatchSpan]:
    spans: list[MatchSpan] = []
    metric = matcher.metric_id
    for sentence in sentences:
        for start, end, phrase in matcher.find_matches(words[sentence.start:sentence.end]):
            spans.append(
                MatchSpan(metric, phrase, sentence.start + start, sentence.start + end)
            )
    return spans


def count_matches(
    tokens: Sequence[Token], sentences: Sequence[Sentence], matcher: PhraseMatcher
) -> tuple[int, list[MatchSpan]]:
    """Count one dictionary's occurrences over a tokenized requirement.

    Each sentence is scanned independently (greedy, longest match wins,
    matched tokens consumed), so a phrase never straddles a boundary.
    Returned span indices refer to the full token sequence.
    """
    spans = _find_spans([tok.text for tok in tokens], sentences, matcher)
    return len(spans), spans


def compute_readability(
    tokens: Sequence[Token], sentences: Sequence[Sentence]
) -> ReadabilityStats:
    """Word, sentence, and letter counts plus the two averages behind ARI."""
    word_count = len(tokens)
    sentence_count = len(sentences)
    letter_count = sum(tok.letter_count for tok in tokens)
    return ReadabilityStats(
        word_count=word_count,
        sentence_count=sentence_count,
        letter_count=letter_count,
        words_per_sentence=word_count / sentence_count if sentence_count else 0.0,
        letters_per_word=letter_count / word_count if word_count else 0.0,
    )


def analyze_text(text: str, config: AnalysisConfig) -> MetricVector:
    """Compute the full metric vector for one requirement text."""
    normalized = normalize(text)
    tokens = tokenize(normalized)
    sentences = split_sentences(normalized, tokens)
    readability = compute_readability(tokens, sentences)
    if not tokens:
        return MetricVector(
            counts={metric: 0 for metric in DICTIONARY_METRICS},
            word_count=0,
            ari=0.0,
            degenerate=True,
            spans=(),
            readability=readability,
        )
    words = [tok.text for tok in tokens]
    counts: dict[str, int] = {}
    spans: list[MatchSpan] = []
    for metric in DICTIONARY_METRICS:
        found = _find_spans(words, sentences, config.matchers[metric])
        counts[metric] = len(found)
        spans.extend(found)
    return MetricVector(
        counts=counts,
        word_count=len(tokens),
        ari=readability.ari,
        degenerate=False,
        spans=tuple(spans),
        readability=readability,
    )


def analyze_requirement(requirement: Requirement, config: AnalysisConfig) -> MetricVector:
    """Convenience wrapper: analyze a loaded requirement's text."""
    return analyze_text(requirement.text, config)
