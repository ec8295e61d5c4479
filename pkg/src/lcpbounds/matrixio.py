"""Matrix and vector file parsing and emission.

Two matrix formats are auto-detected:

  * plain text: first token is the dimension n, followed by n*n
    whitespace-separated entries in row-major order;
  * CSV: n lines of n comma-separated entries, no header.

Entries are decimals or simple integer fractions ``p/q``, so rational
fixtures round-trip to the nearest binary double without a decimal
transcription step.  Vector files are plain numbers separated by whitespace
or commas, with the same token syntax.
"""

from __future__ import annotations

import re

import numpy as np

from .errors import EmptyFile, NonSquare, ParseError

_TOKEN_RE = re.compile(r"[^\s,]+")
_INT_RE = re.compile(r"[+-]?\d+\Z")


def _tokens(text: str, split_commas: bool):
    """Yield (token, line, column), 1-based positions."""
    pattern = _TOKEN_RE if split_commas else re.compile(r"\S+")
    for line_no, line in enumerate(text.splitlines(), start=1):
        for match in pattern.finditer(line):
            yield match.group(0), line_no, match.start() + 1


def _parse_number(token: str, line: int, column: int) -> float:
    if "/" in token:
        num, _, den = token.partition("/")
        if not (_INT_RE.match(num) and _INT_RE.match(den)):
            raise ParseError(line, column, f"malformed fraction {token!r}")
        denominator = int(den)
        if denominator == 0:
            raise ParseError(line, column, f"zero denominator in {token!r}")
        return int(num) / denominator
    try:
        value = float(token)
    except ValueError:
        raise ParseError(line, column, f"not a number: {token!r}") from None
    if not np.isfinite(value):
        raise ParseError(line, column, f"non-finite entry {token!r}")
    return value


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def parse_matrix(path: str) -> np.ndarray:
    """Parse a matrix file in either supported format."""
    text = _read(path)
    if not text.strip():
        raise EmptyFile(f"{path} contains no data")
    if "," in text:
        return _parse_csv(text)
    return _parse_plain(text)


def _parse_csv(text: str) -> np.ndarray:
    rows = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        row = [
            _parse_number(m.group(0), line_no, m.start() + 1)
            for m in _TOKEN_RE.finditer(line)
        ]
        rows.append(row)
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise NonSquare(f"CSV has {n} rows but row lengths {sorted({len(r) for r in rows})}")
    return np.array(rows)


def _parse_plain(text: str) -> np.ndarray:
    stream = list(_tokens(text, split_commas=False))
    token, line, column = stream[0]
    if not _INT_RE.match(token) or int(token) <= 0:
        raise ParseError(line, column, f"expected a positive dimension, got {token!r}")
    n = int(token)
    entries = stream[1:]
    if len(entries) < n * n:
        raise ParseError(line, column, f"expected {n * n} entries, found {len(entries)}")
    if len(entries) > n * n:
        extra = entries[n * n]
        raise ParseError(extra[1], extra[2], f"trailing data after {n * n} entries")
    values = [_parse_number(tok, ln, col) for tok, ln, col in entries]
    return np.array(values).reshape(n, n)


def parse_vector(path: str) -> np.ndarray:
    """Parse a vector file: numbers separated by whitespace and/or commas."""
    text = _read(path)
    if not text.strip():
        raise EmptyFile(f"{path} contains no data")
    values = [_parse_number(tok, ln, col) for tok, ln, col in _tokens(text, split_commas=True)]
    return np.array(values)


def format_matrix(m: np.ndarray) -> str:
    """Plain-text dump that reparses bit-exactly (entries via ``repr``)."""
    lines = [str(m.shape[0])]
    lines.extend(" ".join(repr(float(v)) for v in row) for row in m)
    return "\n".join(lines) + "\n"
