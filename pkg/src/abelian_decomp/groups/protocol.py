import random
from typing import NewType, Optional, Protocol, runtime_checkable

# Canonical byte encoding of a group element: two elements are equal exactly
# when their encodings are byte-identical.
GroupElement = NewType("GroupElement", bytes)


@runtime_checkable
class AbelianGroup(Protocol):
    """
    Black-box finite Abelian group.

    Backends provide canonical element encodings, the group operation and
    inverse, membership recognition, uniform sampling and a known multiple of
    every element order. `cardinality` may return None when the backend does
    not know |G|; the decomposition pipeline never depends on it.
    """

    @property
    def descriptor(self) -> str:
        """Group-spec string that recreates this group (e.g. 'znstar:15')."""
        ...

    def identity(self) -> GroupElement: ...

    def op(self, a: GroupElement, b: GroupElement) -> GroupElement: ...

    def inverse(self, a: GroupElement) -> GroupElement: ...

    def is_element(self, data: bytes) -> bool: ...

    def sample(self, rng: random.Random) -> GroupElement:
        """Uniformly random element drawn from the caller's seeded stream."""
        ...

    def exponent_bound(self) -> int:
        """A multiple of every element order, at least |G|; the pipeline sizes k from it."""
        ...

    def cardinality(self) -> Optional[int]: ...

    def display(self, a: GroupElement) -> str: ...

    def parse_element(self, text: str) -> GroupElement:
        """Inverse of `display`; raises ContractViolationError on non-members."""
        ...
