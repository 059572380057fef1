from typing import List

from pydantic import BaseModel

from ..intlinalg.matrix import IntMatrix
from ..intlinalg.snf import SnfResult


class SnfReport(BaseModel):
    """Structured output of the `snf` command."""

    rows: int
    cols: int
    d: List[int]
    rank: int
    u: List[List[int]]
    v: List[List[int]]
    check: bool

    @classmethod
    def from_result(cls, a: IntMatrix, result: SnfResult, check: bool) -> "SnfReport":
        return cls(
            rows=a.rows,
            cols=a.cols,
            d=list(result.d),
            rank=result.rank,
            u=result.u.to_rows(),
            v=result.v.to_rows(),
            check=check,
        )
