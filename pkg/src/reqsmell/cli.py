"""Command-line entry point: ingest, analyze, flag, render.

Exit codes follow lint-tool convention so CI can tell findings from
failures: 0 clean run, 2 when --fail-on-flagged is set and at least one
requirement is flagged, 1 for usage, IO, or validation errors (reported on
stderr, never as a traceback).
"""

from __future__ import annotations

import argparse
import datetime
import os
import sys
import tempfile
import warnings
from typing import Sequence

from . import __version__
from .dictionaries import builtin_dictionaries, load_dictionary_file
from .errors import ReqsmellError
from .ingestion import ColumnMapping, load_requirements
from .metrics import AnalysisConfig
from .reporting import REPORT_FORMATS, build_report, load_threshold_file, render

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FLAGGED = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reqsmell",
        description=(
            "Detect bad smells in natural-language requirements: vague, optional, "
            "subjective, and weak wording, external references, conjunction load, "
            "size, and readability."
        ),
    )
    parser.add_argument("--input", required=True, help="delimited requirements file (UTF-8, header row)")
    parser.add_argument("--id-column", default="ID", help="header name of the id column (default: ID)")
    parser.add_argument("--text-column", default="Text", help="header name of the text column (default: Text)")
    parser.add_argument("--delimiter", default=",", help="field delimiter, single character or \\t (default: ,)")
    parser.add_argument("--dictionaries", help="dictionary override file replacing built-in keyword lists per metric")
    parser.add_argument("--thresholds", help="threshold rules file (METRIC OP LIMIT per line)")
    parser.add_argument("--format", choices=REPORT_FORMATS, default="table", help="report format (default: table)")
    parser.add_argument("--output", help="write the report here instead of stdout")
    parser.add_argument("--fail-on-flagged", action="store_true",
                        help="exit with code 2 when any requirement is flagged")
    parser.add_argument("--timestamp", action="store_true",
                        help="include a generation timestamp in the report (off by default for stable diffs)")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def _write_output(payload: bytes, output: str | None) -> None:
    if output is None:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()
        return
    # Write via a temp file and rename, so a failed run never leaves a
    # partial report and an existing file survives untouched on error.
    directory = os.path.dirname(os.path.abspath(output))
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".reqsmell-")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(payload)
        os.replace(tmp_path, output)
    except BaseException:
        os.unlink(tmp_path)
        raise


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed help/usage; fold its exit codes into ours
        return EXIT_OK if exc.code in (0, None) else EXIT_ERROR

    try:
        delimiter = "\t" if args.delimiter == "\\t" else args.delimiter
        try:
            mapping = ColumnMapping(args.id_column, args.text_column, delimiter)
        except ValueError as exc:
            raise ReqsmellError(str(exc)) from exc

        if args.dictionaries:
            dictionaries = load_dictionary_file(args.dictionaries)
        else:
            dictionaries = builtin_dictionaries()
        rules = load_threshold_file(args.thresholds) if args.thresholds else ()

        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            requirements = load_requirements(args.input, mapping)
        for warning in caught:
            print(f"warning: {warning.message}", file=sys.stderr)

        timestamp = None
        if args.timestamp:
            timestamp = datetime.datetime.now(datetime.timezone.utc).isoformat(
                timespec="seconds"
            )
        report = build_report(
            requirements,
            config=AnalysisConfig.from_dictionaries(dictionaries),
            rules=rules,
            column_mapping=mapping,
            version=__version__,
            timestamp=timestamp,
        )
        _write_output(render(report, args.format), args.output)
    except (ReqsmellError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    if args.fail_on_flagged and report.summary.flagged_count > 0:
        return EXIT_FLAGGED
    return EXIT_OK


def main() -> None:
    sys.exit(run())
