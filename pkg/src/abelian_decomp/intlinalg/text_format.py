"""
Plain-text matrix format.

    rows cols
    a11 a12 ... a1n
    ...
    am1 am2 ... amn

Entries are decimal integers separated by whitespace. A matrix with zero
columns is written as its header followed by `rows` empty lines.
"""

import re
from typing import List, Tuple

from ..errors import MatrixParseError
from .matrix import IntMatrix

_TOKEN = re.compile(r"\S+")
_INTEGER = re.compile(r"[+-]?\d+")


def _tokens(line: str) -> List[Tuple[int, str]]:
    """(1-based column, token) pairs of a line."""
    return [(match.start() + 1, match.group()) for match in _TOKEN.finditer(line)]


def _parse_int(token: str, line: int, column: int) -> int:
    if not _INTEGER.fullmatch(token):
        raise MatrixParseError(f"expected an integer, found {token!r}", line, column)
    return int(token)


def parse_matrix(text: str) -> IntMatrix:
    lines = text.splitlines()
    # trailing blank lines carry no information
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise MatrixParseError("missing 'rows cols' header", 1, 1)

    header = _tokens(lines[0])
    if len(header) != 2:
        column = header[2][0] if len(header) > 2 else len(lines[0]) + 1
        raise MatrixParseError("header must be exactly 'rows cols'", 1, column)
    rows, cols = (_parse_int(token, 1, column) for column, token in header)
    if rows < 0 or cols < 0:
        raise MatrixParseError("dimensions must be non-negative", 1, 1)

    body = lines[1:]
    if cols == 0:
        stray = next(
            (index for index, line in enumerate(body) if line.strip()), None
        )
        if stray is not None:
            raise MatrixParseError(
                "a matrix with zero columns has no entries", stray + 2, 1
            )
        return IntMatrix.zeros(rows, 0)

    data_lines = [(index + 2, line) for index, line in enumerate(body) if line.strip()]
    if len(data_lines) != rows:
        line_number = data_lines[rows][0] if len(data_lines) > rows else len(lines) + 1
        raise MatrixParseError(
            f"expected {rows} rows, found {len(data_lines)}", line_number, 1
        )

    matrix_rows = []
    for line_number, line in data_lines:
        tokens = _tokens(line)
        if len(tokens) != cols:
            column = tokens[cols][0] if len(tokens) > cols else len(line) + 1
            raise MatrixParseError(
                f"expected {cols} entries, found {len(tokens)}", line_number, column
            )
        matrix_rows.append(
            [_parse_int(token, line_number, column) for column, token in tokens]
        )
    return IntMatrix.from_rows(matrix_rows, cols=cols)


def format_matrix(m: IntMatrix) -> str:
    lines = [f"{m.rows} {m.cols}"]
    lines.extend(" ".join(str(x) for x in m.row(i)) for i in range(m.rows))
    return "\n".join(lines) + "\n"
