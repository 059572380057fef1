"""
Smith normal form with unimodular certificates.

For an integer matrix A, `snf` returns d, u, v with

    u · A · v = [D 0; 0 0],   D = Diag(d[0], ..., d[rank-1])

where u and v are unimodular, every d[i] is positive and d[0] | d[1] | ... .
The inverse of u is carried along as well (`u_inv`); it is the matrix whose
columns express the new generators in terms of the old ones when the normal
form is applied to a relation lattice.

Only elementary operations are used: swapping two rows/columns, negating a
row, and adding an integer multiple of one row/column to another.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from ..errors import ContractViolationError
from .matrix import IntMatrix, mat_apply, mat_identity

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SnfResult:
    d: Tuple[int, ...]
    u: IntMatrix
    v: IntMatrix
    u_inv: IntMatrix

    @property
    def rank(self) -> int:
        return len(self.d)

    def normal_form(self, rows: int, cols: int) -> IntMatrix:
        """The block matrix [D 0; 0 0] of the given shape."""
        entries = [0] * (rows * cols)
        for i, di in enumerate(self.d):
            entries[i * cols + i] = di
        return IntMatrix(rows, cols, tuple(entries))


class _Elimination:
    """Mutable working state of one SNF computation."""

    def __init__(self, a: IntMatrix):
        self.m = a.rows
        self.n = a.cols
        self.a = a.to_rows()
        self.u = mat_identity(self.m).to_rows()
        self.u_inv = mat_identity(self.m).to_rows()
        self.v = mat_identity(self.n).to_rows()

    # --- row operations (left multiplication; u_inv gets the inverse on the right)

    def swap_rows(self, i: int, j: int):
        if i == j:
            return
        self.a[i], self.a[j] = self.a[j], self.a[i]
        self.u[i], self.u[j] = self.u[j], self.u[i]
        for row in self.u_inv:
            row[i], row[j] = row[j], row[i]

    def add_row(self, target: int, source: int, factor: int):
        """row[target] += factor * row[source]"""
        if factor == 0:
            return
        for rows in (self.a, self.u):
            t, s = rows[target], rows[source]
            for col, x in enumerate(s):
                if x:
                    t[col] += factor * x
        for row in self.u_inv:
            if row[target]:
                row[source] -= factor * row[target]

    def negate_row(self, i: int):
        self.a[i] = [-x for x in self.a[i]]
        self.u[i] = [-x for x in self.u[i]]
        for row in self.u_inv:
            row[i] = -row[i]

    # --- column operations (right multiplication)

    def swap_cols(self, i: int, j: int):
        if i == j:
            return
        for rows in (self.a, self.v):
            for row in rows:
                row[i], row[j] = row[j], row[i]

    def add_col(self, target: int, source: int, factor: int):
        """col[target] += factor * col[source]"""
        if factor == 0:
            return
        for rows in (self.a, self.v):
            for row in rows:
                if row[source]:
                    row[target] += factor * row[source]

    # --- the algorithm

    def find_pivot(self, t: int) -> Optional[Tuple[int, int]]:
        """Position of the nonzero entry of least absolute value in a[t:, t:]."""
        best = None
        best_abs = 0
        for i in range(t, self.m):
            row = self.a[i]
            for j in range(t, self.n):
                x = row[j]
                if x and (best is None or abs(x) < best_abs):
                    best, best_abs = (i, j), abs(x)
                    if best_abs == 1:
                        return best
        return best

    def clear_cross(self, t: int) -> bool:
        """Reduce column t below and row t right of the pivot; True when both are zero."""
        pivot = self.a[t][t]
        for i in range(t + 1, self.m):
            if self.a[i][t]:
                self.add_row(i, t, -(self.a[i][t] // pivot))
        row = self.a[t]
        for j in range(t + 1, self.n):
            if row[j]:
                self.add_col(j, t, -(row[j] // pivot))
        return not any(self.a[i][t] for i in range(t + 1, self.m)) and not any(
            row[j] for j in range(t + 1, self.n)
        )

    def find_indivisible_row(self, t: int) -> Optional[int]:
        pivot = self.a[t][t]
        for i in range(t + 1, self.m):
            if any(x % pivot for x in self.a[i][t + 1 :]):
                return i
        return None

    def run(self) -> List[int]:
        diagonal = []
        for t in range(min(self.m, self.n)):
            while True:
                position = self.find_pivot(t)
                if position is None:
                    return diagonal
                self.swap_rows(t, position[0])
                self.swap_cols(t, position[1])
                if not self.clear_cross(t):
                    continue
                # divisibility repair: fold an offending row into the pivot row
                offending = self.find_indivisible_row(t)
                if offending is None:
                    break
                self.add_row(t, offending, 1)
            if self.a[t][t] < 0:
                self.negate_row(t)
            diagonal.append(self.a[t][t])
        return diagonal


@lru_cache(maxsize=512)
def snf(a: IntMatrix) -> SnfResult:
    """Smith normal form of `a` with unimodular transforms u, v (and u⁻¹)."""
    work = _Elimination(a)
    diagonal = work.run()
    logger.debug(f"snf of {a.rows}x{a.cols} matrix: d={diagonal}")
    return SnfResult(
        d=tuple(diagonal),
        u=IntMatrix.from_rows(work.u, cols=work.m),
        v=IntMatrix.from_rows(work.v, cols=work.n),
        u_inv=IntMatrix.from_rows(work.u_inv, cols=work.m),
    )


def intcol_membership(m: IntMatrix, v: Sequence[int]) -> bool:
    """True iff `v` is an integer combination of the columns of `m`."""
    if len(v) != m.rows:
        raise ContractViolationError(
            f"vector of length {len(v)} cannot lie in a lattice of {m.rows}-vectors"
        )
    result = snf(m)
    w = mat_apply(result.u, v)
    for i, wi in enumerate(w):
        if i < result.rank:
            if wi % result.d[i]:
                return False
        elif wi:
            return False
    return True
