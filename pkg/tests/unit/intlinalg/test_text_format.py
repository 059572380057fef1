"""Tests for the plain-text matrix format."""

import pytest

from abelian_decomp.errors import MatrixParseError
from abelian_decomp.intlinalg.matrix import IntMatrix
from abelian_decomp.intlinalg.text_format import format_matrix, parse_matrix


class TestParseMatrix:
    """Test parsing of the 'rows cols' text format."""

    def test_parse_simple(self):
        m = parse_matrix("2 2\n2 4\n6 8\n")

        assert m == IntMatrix.from_rows([[2, 4], [6, 8]])

    def test_whitespace_and_signs(self):
        """Extra spaces, blank lines and explicit signs are accepted."""
        m = parse_matrix("  1   3 \n\n +7\t-2   0\n\n\n")

        assert m.to_rows() == [[7, -2, 0]]

    def test_zero_columns(self):
        assert parse_matrix("2 0\n\n\n").shape == (2, 0)

    def test_zero_rows(self):
        assert parse_matrix("0 4\n").shape == (0, 4)

    def test_big_integers(self):
        m = parse_matrix(f"1 1\n{10**40}\n")

        assert m[0, 0] == 10**40

    def test_format_then_parse(self):
        m = IntMatrix.from_rows([[1, -2, 3], [0, 0, 99]])

        assert format_matrix(m) == "2 3\n1 -2 3\n0 0 99\n"
        assert parse_matrix(format_matrix(m)) == m

    @pytest.mark.parametrize(
        "text, line, column",
        [
            ("", 1, 1),
            ("2\n", 1, 2),
            ("1 2 3\n", 1, 5),
            ("x 2\n1 2\n", 1, 1),
            ("1 2\n1 x\n", 2, 3),
            ("1 2\n1 2 3\n", 2, 5),
            ("1 3\n1 2\n", 2, 4),
            ("2 2\n1 2\n", 3, 1),
            ("1 2\n1 2\n3 4\n", 3, 1),
            ("1 0\n5\n", 2, 1),
            ("1 2\n1.5 2\n", 2, 1),
        ],
    )
    def test_errors_carry_position(self, text, line, column):
        """Malformed input reports a 1-based line and column."""
        with pytest.raises(MatrixParseError) as exc_info:
            parse_matrix(text)

        assert exc_info.value.line == line
        assert exc_info.value.column == column
        assert str(exc_info.value).startswith(f"line {line}, column {column}:")

    def test_negative_dimension(self):
        with pytest.raises(MatrixParseError):
            parse_matrix("-1 2\n")
