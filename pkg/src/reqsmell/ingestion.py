"""Loading requirements from delimited text files.

Input is a UTF-8 (optionally BOM-prefixed) file whose first record is a
header; a :class:`ColumnMapping` names the id and text columns. Standard
quoting applies, so delimiters and newlines inside quoted fields are fine.
Rows are numbered by record: the header is record 1.
"""

from __future__ import annotations

import csv
import os
import warnings
from dataclasses import dataclass, field

from .errors import (
    CorpusError,
    DuplicateIdError,
    EncodingError,
    MissingColumnError,
    RowArityError,
)


class EmptyCorpusWarning(UserWarning):
    """The file parsed fine but contained no data rows."""


@dataclass(frozen=True)
class ColumnMapping:
    """Which columns hold the requirement id and text, and the delimiter."""

    id_column: str = "ID"
    text_column: str = "Text"
    delimiter: str = ","

    def __post_init__(self) -> None:
        if self.id_column == self.text_column:
            raise ValueError("id column and text column must differ")
        if len(self.delimiter) != 1:
            raise ValueError(f"delimiter must be a single character, got {self.delimiter!r}")


@dataclass(frozen=True)
class Requirement:
    """One requirement as read from the input file."""

    id: str
    text: str
    row: int
    extra: dict[str, str] = field(default_factory=dict)


def _column_index(header: list[str], name: str) -> int:
    hits = [i for i, col in enumerate(header) if col == name]
    if not hits:
        raise MissingColumnError(name)
    if len(hits) > 1:
        raise CorpusError(f"column {name!r} appears {len(hits)} times in header")
    return hits[0]


def load_requirements(
    path: str | os.PathLike[str], mapping: ColumnMapping
) -> list[Requirement]:
    """Read one requirement per data row, in file order.

    Raises :class:`MissingColumnError`, :class:`DuplicateIdError`,
    :class:`RowArityError`, :class:`EncodingError`, or :class:`CorpusError`
    on invalid input; OS-level failures propagate as ``OSError``. A file
    with a header but no data rows returns ``[]`` and emits
    :class:`EmptyCorpusWarning`.
    """
    requirements: list[Requirement] = []
    seen_ids: dict[str, int] = {}
    record = 1
    with open(path, "r", encoding="utf-8-sig", newline="") as handle:
        reader = csv.reader(handle, delimiter=mapping.delimiter)
        try:
            header = next(reader, None)
            if header is None:
                raise CorpusError("file is empty; a header row is required")
            id_index = _column_index(header, mapping.id_column)
            text_index = _column_index(header, mapping.text_column)
            for row in reader:
                record += 1
                if not row:
                    continue  # blank line, not a data row
                if len(row) != len(header):
                    raise RowArityError(record, expected=len(header), actual=len(row))
                requirement_id = row[id_index]
                if not requirement_id:
                    raise CorpusError(f"row {record}: empty value in id column")
                if requirement_id in seen_ids:
                    raise DuplicateIdError(requirement_id, seen_ids[requirement_id], record)
                seen_ids[requirement_id] = record
                extra = {
                    column: value
                    for i, (column, value) in enumerate(zip(header, row))
                    if i not in (id_index, text_index)
                }
                requirements.append(
                    Requirement(id=requirement_id, text=row[text_index], row=record, extra=extra)
                )
        except UnicodeDecodeError as exc:
            raise EncodingError(record + 1, exc.reason) from exc
    if not requirements:
        warnings.warn("no requirements found (header-only file)", EmptyCorpusWarning, stacklevel=2)
    return requirements
