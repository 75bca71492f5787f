"""Keyword dictionaries for the smell metrics, plus the phrase matcher.

Each metric with a keyword list gets one :class:`Dictionary` of compiled
:class:`PhrasePattern` entries. The built-in lists ship with the package;
a user-supplied override file can replace any of them per metric.

Matching semantics (shared by the matcher and all its tests): scan a token
sequence left to right; at each position the longest matching pattern wins
and its tokens are consumed, so patterns of one metric never overlap. A
literal pattern beats a participle-slot pattern of the same length.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import MalformedDictionaryError
from .text import normalize, tokenize

# Metric identifiers, in report order. These are part of the file-format and
# report contracts (section headers, CSV columns), not abbreviations of ours.
DICTIONARY_METRICS = ("V", "NR1", "NR2", "O", "S", "W", "NC")

BUILTIN = "builtin"
USER_FILE = "user-file"

# Marker for "one past-participle token follows" at the end of a phrase line.
PARTICIPLE_MARKER = "<PP>"

# V: words and phrases that admit several readings.
_VAGUENESS_PHRASES = (
    "may", "could", "has to", "have to", "might", "will",
    "all the other", "all other", "based on", "some", "appropriate",
    "as a", "as an", "a minimum", "up to", "adequate", "as applicable",
    "be able to", "be capable", "but not limited to", "capability of",
    "capability to", "effective", "normal",
)
# V, continued: "should have"/"must have" followed by a past participle.
_VAGUENESS_PARTICIPLE_PREFIXES = ("should have", "must have")

# NR1: phrases that point the reader at another document.
_DOCUMENT_REFERENCE_PHRASES = (
    "defined in reference", "defined in the reference",
    "specified in reference", "specified in the reference",
    "specified by reference", "specified by the reference",
    "see reference", "see the reference",
    "refer to reference", "refer to the reference",
    "further reference", "follow reference", "follow the reference",
    "see document",
    "see",
)

# NR2: pointers to figures, tables, notes, examples.
_NOTATION_REFERENCE_PHRASES = ("for example", "figure", "table", "note")

# O: words that leave implementers latitude.
_OPTIONALITY_PHRASES = ("can", "may", "optionally")

# S: personal opinion or relative judgment.
_SUBJECTIVITY_PHRASES = (
    "similar", "better", "similarly", "worse",
    "having in mind", "take into account", "take into consideration",
    "as possible",
)

# W: phrases that weaken a statement by leaving room for interpretation.
_WEAKNESS_PHRASES = (
    "adequate", "as appropriate", "be able to", "be capable of",
    "capability of", "capability to", "effective", "as required",
    "normal", "provide for", "timely", "easy to",
)

# NC: default conjunction list; coordinating plus common subordinating.
# Replaceable through a dictionary override file.
_CONJUNCTION_PHRASES = (
    "and", "or", "but", "nor", "yet", "so", "for",
    "although", "because", "since", "unless", "until", "while", "whereas",
    "if", "when", "whenever", "after", "before", "once", "though",
)

# Irregular past participles that the ed/en suffix check misses. Used by the
# participle-slot heuristic; redundant -ed/-en forms are harmless here.
IRREGULAR_PARTICIPLES = frozenset({
    "done", "made", "given", "taken", "set", "put", "built", "written",
    "shown", "begun", "bent", "bet", "bound", "bought", "brought", "burnt",
    "burst", "cast", "caught", "come", "cost", "cut", "dealt", "drawn",
    "drunk", "dug", "fed", "felt", "flown", "fought", "found", "gone",
    "got", "grown", "had", "heard", "held", "hit", "hung", "hurt", "kept",
    "known", "laid", "lain", "learnt", "led", "left", "lent", "let", "lit",
    "lost", "meant", "met", "paid", "read", "run", "said", "sat", "sent",
    "shot", "shut", "slept", "sold", "spent", "split", "spread", "spun",
    "stood", "struck", "sung", "sunk", "swum", "taught", "thought",
    "thrown", "told", "understood", "won", "worn", "wound",
})


def is_participle(word: str) -> bool:
    """Heuristic past-participle test: -ed/-en suffix or known irregular."""
    return word.endswith(("ed", "en")) or word in IRREGULAR_PARTICIPLES


@dataclass(frozen=True)
class PhrasePattern:
    """One dictionary entry: literal tokens, optionally ending in a
    past-participle slot that matches exactly one additional token."""

    tokens: tuple[str, ...]
    participle_slot: bool = False

    def __post_init__(self) -> None:
        if not self.tokens or any(not tok for tok in self.tokens):
            raise ValueError("pattern tokens must be non-empty")

    @property
    def length(self) -> int:
        """Number of tokens a match consumes, slot included."""
        return len(self.tokens) + (1 if self.participle_slot else 0)

    @property
    def phrase(self) -> str:
        suffix = f" {PARTICIPLE_MARKER}" if self.participle_slot else ""
        return " ".join(self.tokens) + suffix


@dataclass(frozen=True)
class Dictionary:
    """A named metric's pattern set and where it came from."""

    metric_id: str
    patterns: frozenset[PhrasePattern]
    origin: str = BUILTIN

    def __post_init__(self) -> None:
        if self.metric_id not in DICTIONARY_METRICS:
            raise ValueError(f"unknown metric id {self.metric_id!r}")
        if not self.patterns:
            raise ValueError(f"dictionary {self.metric_id} has no patterns")
        token_lists = [p.tokens for p in self.patterns]
        if len(set(token_lists)) != len(token_lists):
            raise ValueError(f"dictionary {self.metric_id} has duplicate token lists")


def _phrase_pattern(phrase: str, participle_slot: bool = False) -> PhrasePattern:
    tokens = tuple(tok.text for tok in tokenize(normalize(phrase)))
    return PhrasePattern(tokens, participle_slot)


def _builtin(metric_id: str, phrases: Iterable[str],
             participle_prefixes: Iterable[str] = ()) -> Dictionary:
    patterns = {_phrase_pattern(p) for p in phrases}
    patterns |= {_phrase_pattern(p, participle_slot=True) for p in participle_prefixes}
    return Dictionary(metric_id, frozenset(patterns), origin=BUILTIN)


def builtin_dictionaries() -> dict[str, Dictionary]:
    """The seven shipped dictionaries, keyed by metric id in report order."""
    return {
        "V": _builtin("V", _VAGUENESS_PHRASES, _VAGUENESS_PARTICIPLE_PREFIXES),
        "NR1": _builtin("NR1", _DOCUMENT_REFERENCE_PHRASES),
        "NR2": _builtin("NR2", _NOTATION_REFERENCE_PHRASES),
        "O": _builtin("O", _OPTIONALITY_PHRASES),
        "S": _builtin("S", _SUBJECTIVITY_PHRASES),
        "W": _builtin("W", _WEAKNESS_PHRASES),
        "NC": _builtin("NC", _CONJUNCTION_PHRASES),
    }


class _TrieNode:
    __slots__ = ("children", "literal", "slot")

    def __init__(self) -> None:
        self.children: dict[str, _TrieNode] = {}
        self.literal: PhrasePattern | None = None
        self.slot: PhrasePattern | None = None


class PhraseMatcher:
    """Token-level trie scanner for one dictionary.

    ``find_matches`` implements the longest-match, non-overlapping scan
    described in the module docstring and returns (start, end, phrase)
    triples with half-open token ranges. For a participle-slot match the
    phrase includes the concrete participle token.
    """

    def __init__(self, dictionary: Dictionary):
        self.metric_id = dictionary.metric_id
        self._root = _TrieNode()
        for pattern in sorted(dictionary.patterns, key=lambda p: (p.tokens, p.participle_slot)):
            node = self._root
            for token in pattern.tokens:
                node = node.children.setdefault(token, _TrieNode())
            if pattern.participle_slot:
                node.slot = pattern
            else:
                node.literal = pattern

    def find_matches(self, words: Sequence[str]) -> list[tuple[int, int, str]]:
        matches: list[tuple[int, int, str]] = []
        total = len(words)
        root = self._root
        i = 0
        while i < total:
            node = root
            j = i
            best_end = i
            best_phrase = ""
            best_literal = False
            while True:
                if node.literal is not None and (
                    j > best_end or (j == best_end and not best_literal)
                ):
                    best_end = j
                    best_phrase = node.literal.phrase
                    best_literal = True
                if (
                    node.slot is not None
                    and j < total
                    and is_participle(words[j])
                    and j + 1 > best_end
                ):
                    best_end = j + 1
                    best_phrase = " ".join(node.slot.tokens) + " " + words[j]
                    best_literal = False
                if j >= total:
                    break
                node = node.children.get(words[j])  # type: ignore[assignment]
                if node is None:
                    break
                j += 1
            if best_end > i:
                matches.append((i, best_end, best_phrase))
                i = best_end
            else:
                i += 1
        return matches


def compile_dictionary(dictionary: Dictionary) -> PhraseMatcher:
    """Compile one dictionary into its scanner."""
    return PhraseMatcher(dictionary)


def _parse_phrase_line(line: str, lineno: int) -> PhrasePattern:
    fields = line.split()
    slot = fields[-1].upper() == PARTICIPLE_MARKER
    literal_fields = fields[:-1] if slot else fields
    if any(f.upper() == PARTICIPLE_MARKER for f in literal_fields):
        raise MalformedDictionaryError(
            f"{PARTICIPLE_MARKER} is only allowed at the end of a phrase", lineno
        )
    tokens = tuple(tok.text for tok in tokenize(normalize(" ".join(literal_fields))))
    if not tokens:
        raise MalformedDictionaryError("empty phrase", lineno)
    return PhrasePattern(tokens, slot)


def load_dictionary_file(path: str | os.PathLike[str]) -> dict[str, Dictionary]:
    """Load dictionary overrides and merge them over the built-ins.

    Returns all seven dictionaries: a ``[METRIC]`` section in the file fully
    replaces that metric's built-in list; absent metrics keep theirs. Lines
    are normalized like requirement text, ``#`` starts a comment, and a
    trailing ``<PP>`` marks a participle slot.
    """
    with open(path, "r", encoding="utf-8-sig") as handle:
        try:
            raw_lines = handle.read().splitlines()
        except UnicodeDecodeError as exc:
            raise MalformedDictionaryError(f"file is not valid UTF-8 ({exc.reason})") from exc

    sections: dict[str, list[PhrasePattern]] = {}
    current: str | None = None
    current_header_line = 0
    seen_tokens: set[tuple[str, ...]] = set()

    def close_section() -> None:
        if current is not None and not sections[current]:
            raise MalformedDictionaryError(
                f"section [{current}] has no phrases", current_header_line
            )

    for lineno, raw in enumerate(raw_lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            close_section()
            metric = line[1:-1].strip().upper()
            if metric not in DICTIONARY_METRICS:
                raise MalformedDictionaryError(f"unknown metric {metric!r}", lineno)
            if metric in sections:
                raise MalformedDictionaryError(f"duplicate section [{metric}]", lineno)
            sections[metric] = []
            current = metric
            current_header_line = lineno
            seen_tokens = set()
            continue
        if current is None:
            raise MalformedDictionaryError("phrase appears before any [METRIC] section", lineno)
        pattern = _parse_phrase_line(line, lineno)
        if pattern.tokens in seen_tokens:
            raise MalformedDictionaryError(f"duplicate phrase {pattern.phrase!r}", lineno)
        seen_tokens.add(pattern.tokens)
        sections[current].append(pattern)
    close_section()

    merged = builtin_dictionaries()
    for metric, patterns in sections.items():
        merged[metric] = Dictionary(metric, frozenset(patterns), origin=USER_FILE)
    return merged


def format_dictionary_file(dictionaries: dict[str, Dictionary]) -> str:
    """Serialize dictionaries back to the override file format.

    Inverse of :func:`load_dictionary_file` up to comments and ordering:
    loading the output reproduces the same pattern sets.
    """
    blocks: list[str] = []
    for metric in DICTIONARY_METRICS:
        if metric not in dictionaries:
            continue
        patterns = sorted(
            dictionaries[metric].patterns, key=lambda p: (p.tokens, p.participle_slot)
        )
        lines = [f"[{metric}]"] + [p.phrase for p in patterns]
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"
