"""
E2E test specific fixtures.
This file contains helpers that drive the command-line entry point in-process.
"""

from pathlib import Path
from typing import Callable, NamedTuple

import pytest

from abelian_decomp.cli.main import main


class CliResult(NamedTuple):
    code: int
    out: str
    err: str


@pytest.fixture
def run_cli(capsys) -> Callable[..., CliResult]:
    """
    Fixture to run `abelian-decomp` with the given arguments.

    Returns the exit code together with everything written to stdout and stderr.
    """

    def _run(*argv: str) -> CliResult:
        capsys.readouterr()
        code = main(list(argv))
        captured = capsys.readouterr()
        return CliResult(code, captured.out, captured.err)

    return _run


@pytest.fixture
def matrix_file(tmp_path) -> Callable[[str], Path]:
    """Fixture that writes matrix text to a temporary file and returns its path."""

    def _write(text: str) -> Path:
        path = tmp_path / "matrix.txt"
        path.write_text(text)
        return path

    return _write
