"""Exception hierarchy shared by the library and the command-line front end."""

from typing import Optional


class AbelianDecompError(Exception):
    """Base class for every error raised by this package."""


class ContractViolationError(AbelianDecompError, ValueError):
    """A caller broke an operation's precondition."""


class InvalidBoundError(ContractViolationError):
    """The supplied exponent bound does not annihilate the element."""


class InfiniteOrderError(ContractViolationError):
    """The relation lattice is rank deficient, so some generator has infinite order."""


class GroupSpecError(ContractViolationError):
    """A group specification string could not be parsed."""


class MatrixParseError(ContractViolationError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class CapacityExceededError(AbelianDecompError):
    """The hidden-subgroup oracle would have to tabulate too many elements."""

    def __init__(self, subgroup_size: int, capacity: int):
        super().__init__(
            f"subgroup of size at least {subgroup_size} exceeds oracle capacity {capacity}"
        )
        self.subgroup_size = subgroup_size
        self.capacity = capacity


class GenerationFailedError(AbelianDecompError):
    """Sampling never produced a generating set within the retry budget."""

    def __init__(self, attempts: int, best_order: int, cardinality: Optional[int]):
        super().__init__(
            f"no generating set after {attempts} attempts "
            f"(best order {best_order}, expected {cardinality})"
        )
        self.attempts = attempts
        self.best_order = best_order
        self.cardinality = cardinality
