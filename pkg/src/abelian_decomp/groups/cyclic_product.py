import random
from math import prod
from typing import Optional, Sequence, Tuple

from ..errors import ContractViolationError
from .encoding import decode_ints, encode_ints
from .protocol import GroupElement


class CyclicProductGroup:
    """Z_{m1} x ... x Z_{mr} under componentwise addition."""

    def __init__(self, moduli: Sequence[int]):
        if any(m < 1 for m in moduli):
            raise ContractViolationError(f"moduli must be >= 1, got {list(moduli)}")
        self.moduli: Tuple[int, ...] = tuple(moduli)
        self._identity = GroupElement(encode_ints((0,) * len(self.moduli)))

    def __repr__(self) -> str:
        return f"CyclicProductGroup(moduli={list(self.moduli)})"

    @property
    def descriptor(self) -> str:
        return "cyclic:" + ",".join(str(m) for m in self.moduli)

    def element(self, coordinates: Sequence[int]) -> GroupElement:
        if len(coordinates) != len(self.moduli):
            raise ContractViolationError(
                f"expected {len(self.moduli)} coordinates, got {len(coordinates)}"
            )
        return GroupElement(
            encode_ints(tuple(x % m for x, m in zip(coordinates, self.moduli)))
        )

    def decode(self, a: GroupElement) -> Tuple[int, ...]:
        return decode_ints(a)

    def identity(self) -> GroupElement:
        return self._identity

    def op(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return GroupElement(
            encode_ints(
                tuple(
                    (x + y) % m
                    for x, y, m in zip(decode_ints(a), decode_ints(b), self.moduli)
                )
            )
        )

    def inverse(self, a: GroupElement) -> GroupElement:
        return GroupElement(
            encode_ints(tuple(-x % m for x, m in zip(decode_ints(a), self.moduli)))
        )

    def is_element(self, data: bytes) -> bool:
        try:
            values = decode_ints(data)
        except ContractViolationError:
            return False
        return len(values) == len(self.moduli) and all(
            0 <= x < m for x, m in zip(values, self.moduli)
        )

    def sample(self, rng: random.Random) -> GroupElement:
        return GroupElement(encode_ints(tuple(rng.randrange(m) for m in self.moduli)))

    def exponent_bound(self) -> int:
        return prod(self.moduli)

    def cardinality(self) -> Optional[int]:
        return prod(self.moduli)

    def display(self, a: GroupElement) -> str:
        return ",".join(str(x) for x in decode_ints(a))

    def parse_element(self, text: str) -> GroupElement:
        text = text.strip()
        try:
            values = tuple(int(part) for part in text.split(",")) if text else ()
        except ValueError:
            raise ContractViolationError(f"not a coordinate vector: {text!r}")
        data = encode_ints(values)
        if not self.is_element(data):
            raise ContractViolationError(f"{text!r} is not an element of {self.descriptor}")
        return GroupElement(data)


def cyclic_product(moduli: Sequence[int]) -> CyclicProductGroup:
    return CyclicProductGroup(moduli)
