"""
Dense matrices of Python integers.

Python's `int` is arbitrary precision, so none of the operations here can
overflow; callers may mix entries of any size.
"""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from ..errors import ContractViolationError

IntVector = Tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable rows x cols integer matrix stored row-major."""

    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ContractViolationError(
                f"matrix dimensions must be non-negative, got {self.rows}x{self.cols}"
            )
        if len(self.entries) != self.rows * self.cols:
            raise ContractViolationError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        """Build a matrix from a list of rows; `cols` is required for 0-row matrices."""
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise ContractViolationError(
                    f"row {i} has {len(row)} entries, expected {cols}"
                )
        return cls(len(rows), cols, tuple(int(x) for row in rows for x in row))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        for j, column in enumerate(columns):
            if len(column) != rows:
                raise ContractViolationError(
                    f"column {j} has {len(column)} entries, expected {rows}"
                )
        return cls(
            rows,
            len(columns),
            tuple(int(columns[j][i]) for i in range(rows) for j in range(len(columns))),
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> IntVector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> IntVector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def columns(self) -> Iterator[IntVector]:
        return (self.column(j) for j in range(self.cols))

    def to_rows(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))


def mat_identity(n: int) -> IntMatrix:
    if n < 0:
        raise ContractViolationError(f"identity size must be non-negative, got {n}")
    return IntMatrix(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))


def mat_scale(a: IntMatrix, c: int) -> IntMatrix:
    return IntMatrix(a.rows, a.cols, tuple(c * x for x in a.entries))


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.cols != b.rows:
        raise ContractViolationError(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}"
        )
    b_columns = [b.column(j) for j in range(b.cols)]
    entries = []
    for i in range(a.rows):
        row = a.row(i)
        for column in b_columns:
            entries.append(sum(x * y for x, y in zip(row, column)))
    return IntMatrix(a.rows, b.cols, tuple(entries))


def mat_hconcat(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Horizontal concatenation [a | b]."""
    if a.rows != b.rows:
        raise ContractViolationError(
            f"cannot concatenate {a.rows}-row and {b.rows}-row matrices"
        )
    return IntMatrix(
        a.rows,
        a.cols + b.cols,
        tuple(x for i in range(a.rows) for x in a.row(i) + b.row(i)),
    )


def mat_apply(a: IntMatrix, v: Sequence[int]) -> IntVector:
    """Matrix-vector product a·v."""
    if len(v) != a.cols:
        raise ContractViolationError(
            f"vector of length {len(v)} does not fit a {a.rows}x{a.cols} matrix"
        )
    return tuple(sum(x * y for x, y in zip(a.row(i), v)) for i in range(a.rows))


def mat_det(a: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if a.rows != a.cols:
        raise ContractViolationError(f"determinant of a non-square {a.shape} matrix")
    n = a.rows
    if n == 0:
        return 1
    work = a.to_rows()
    sign = 1
    previous = 1
    for k in range(n - 1):
        if work[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if work[i][k] != 0), None)
            if swap is None:
                return 0
            work[k], work[swap] = work[swap], work[k]
            sign = -sign
        pivot = work[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (work[i][j] * pivot - work[i][k] * work[k][j]) // previous
        previous = pivot
    return sign * work[n - 1][n - 1]
