import logging
import sys
from pathlib import Path
from typing import Optional, TextIO

from ..config.run_config import RunConfig
from ..decompose.pipeline import decompose
from ..decompose.schemas import Decomposition, VerificationReport
from ..decompose.verify import verify_decomposition
from ..groups.registry import parse_group_spec
from ..intlinalg.matrix import IntMatrix, mat_det, mat_mul
from ..intlinalg.snf import snf
from ..intlinalg.text_format import parse_matrix
from .schemas import SnfReport

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_VERIFICATION = 3
EXIT_CAPACITY = 4


def _write_matrix(out: TextIO, m: IntMatrix):
    for i in range(m.rows):
        out.write("  " + " ".join(str(x) for x in m.row(i)) + "\n")


def cmd_snf(matrix_file: str, config: RunConfig, out: Optional[TextIO] = None) -> int:
    """Print the Smith normal form of a matrix file with a self-check line."""
    out = out or sys.stdout
    a = parse_matrix(Path(matrix_file).read_text())
    result = snf(a)
    check = (
        mat_mul(mat_mul(result.u, a), result.v) == result.normal_form(a.rows, a.cols)
        and abs(mat_det(result.u)) == 1
        and abs(mat_det(result.v)) == 1
    )

    if config.output_format == "structured":
        out.write(SnfReport.from_result(a, result, check).model_dump_json(indent=2) + "\n")
    else:
        diagonal = " ".join(str(x) for x in result.d)
        out.write(f"d = {diagonal}".rstrip() + "\n")
        out.write(f"rank = {result.rank}\n")
        out.write("u =\n")
        _write_matrix(out, result.u)
        out.write("v =\n")
        _write_matrix(out, result.v)
        out.write(f"check: u*A*v == normal form, u and v unimodular: {'ok' if check else 'FAILED'}\n")
    return EXIT_OK if check else EXIT_VERIFICATION


def _write_decomposition(out: TextIO, dec: Decomposition, report: VerificationReport):
    out.write(f"group: {dec.group}\n")
    out.write(f"seed: {dec.seed}  c: {dec.margin_c}  k: {dec.k}  attempts: {dec.attempts}\n")
    out.write("summands:\n")
    width = max((len(s.generator) for s in dec.summands), default=0)
    for s in dec.summands:
        out.write(f"  {s.generator.ljust(width)}  order {s.prime}^{s.exponent} = {s.order}\n")
    out.write(f"order = {dec.group_order}\n")
    factors = " ".join(str(n) for n in dec.invariant_factors())
    out.write(f"invariant factors = {factors or '(trivial)'}\n")
    out.write(f"verified = {'yes' if report.ok else 'no'} ({report.reason})\n")


def cmd_decompose(
    group_spec: str,
    config: RunConfig,
    output: Optional[str] = None,
    out: Optional[TextIO] = None,
) -> int:
    out = out or sys.stdout
    g = parse_group_spec(group_spec)
    dec = decompose(g, config)
    report = verify_decomposition(g, dec, enumeration_limit=config.verify_enumeration_limit)

    if output:
        Path(output).write_text(dec.to_structured())
    if config.output_format == "structured":
        out.write(dec.to_structured())
        if not report.ok:
            sys.stderr.write(f"verification failed: {report.reason}\n")
    else:
        _write_decomposition(out, dec, report)
    return EXIT_OK if report.ok else EXIT_VERIFICATION


def cmd_verify(
    group_spec: str,
    decomposition_file: str,
    config: RunConfig,
    out: Optional[TextIO] = None,
) -> int:
    out = out or sys.stdout
    g = parse_group_spec(group_spec)
    dec = Decomposition.from_structured(Path(decomposition_file).read_text())
    report = verify_decomposition(g, dec, enumeration_limit=config.verify_enumeration_limit)
    if config.output_format == "structured":
        out.write(report.model_dump_json(indent=2) + "\n")
    else:
        out.write(f"verified = {'yes' if report.ok else 'no'} ({report.reason})\n")
    return EXIT_OK if report.ok else EXIT_VERIFICATION
