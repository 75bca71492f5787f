"""reqsmell: bad-smell detection for natural-language requirements.

Computes nine dictionary- and statistics-based metrics per requirement
(vagueness, document and notation references, optionality, subjectivity,
weakness, conjunction count, word count, readability), flags requirements
against user-supplied thresholds, and renders deterministic reports.
"""

from .dictionaries import (
    DICTIONARY_METRICS,
    Dictionary,
    PhraseMatcher,
    PhrasePattern,
    builtin_dictionaries,
    compile_dictionary,
    format_dictionary_file,
    load_dictionary_file,
)
from .errors import (
    CorpusError,
    DuplicateIdError,
    EncodingError,
    MalformedDictionaryError,
    MalformedThresholdError,
    MissingColumnError,
    ReqsmellError,
    RowArityError,
)
from .ingestion import ColumnMapping, EmptyCorpusWarning, Requirement, load_requirements
from .metrics import (
    ALL_METRICS,
    AnalysisConfig,
    MatchSpan,
    MetricVector,
    ReadabilityStats,
    analyze_requirement,
    analyze_text,
    compute_readability,
    count_matches,
)
from .reporting import (
    AnalysisReport,
    RequirementEntry,
    ThresholdRule,
    apply_thresholds,
    build_report,
    load_threshold_file,
    parse_threshold_rules,
    render,
    summarize,
)
from .text import Sentence, Token, normalize, split_sentences, tokenize

__version__ = "0.1.0"

__all__ = [
    "ALL_METRICS",
    "AnalysisConfig",
    "AnalysisReport",
    "ColumnMapping",
    "CorpusError",
    "DICTIONARY_METRICS",
    "Dictionary",
    "DuplicateIdError",
    "EmptyCorpusWarning",
    "EncodingError",
    "MalformedDictionaryError",
    "MalformedThresholdError",
    "MatchSpan",
    "MetricVector",
    "MissingColumnError",
    "PhraseMatcher",
    "PhrasePattern",
    "ReadabilityStats",
    "ReqsmellError",
    "Requirement",
    "RequirementEntry",
    "RowArityError",
    "Sentence",
    "ThresholdRule",
    "Token",
    "analyze_requirement",
    "analyze_text",
    "apply_thresholds",
    "build_report",
    "builtin_dictionaries",
    "compile_dictionary",
    "compute_readability",
    "count_matches",
    "format_dictionary_file",
    "load_dictionary_file",
    "load_requirements",
    "load_threshold_file",
    "normalize",
    "parse_threshold_rules",
    "render",
    "split_sentences",
    "summarize",
    "tokenize",
]
