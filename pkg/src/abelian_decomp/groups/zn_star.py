import random
from math import gcd
from typing import Optional

from ..errors import ContractViolationError
from ..numtheory.primes import euler_phi, factor
from .encoding import decode_ints, encode_ints
from .protocol import GroupElement


class ZnStarGroup:
    """The multiplicative group of residues modulo n that are coprime to n."""

    def __init__(self, n: int):
        if n < 2:
            raise ContractViolationError(f"Z_n^* needs n >= 2, got {n}")
        self.n = n
        self.factorization = factor(n)
        self._phi = euler_phi(self.factorization)
        self._identity = self.element(1)

    def __repr__(self) -> str:
        return f"ZnStarGroup(n={self.n})"

    @property
    def descriptor(self) -> str:
        return f"znstar:{self.n}"

    def element(self, residue: int) -> GroupElement:
        residue %= self.n
        if gcd(residue, self.n) != 1:
            raise ContractViolationError(f"{residue} is not a unit modulo {self.n}")
        return GroupElement(encode_ints((residue,)))

    def decode(self, a: GroupElement) -> int:
        (residue,) = decode_ints(a)
        return residue

    def identity(self) -> GroupElement:
        return self._identity

    def op(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return GroupElement(encode_ints((self.decode(a) * self.decode(b) % self.n,)))

    def inverse(self, a: GroupElement) -> GroupElement:
        return GroupElement(encode_ints((pow(self.decode(a), -1, self.n),)))

    def is_element(self, data: bytes) -> bool:
        try:
            values = decode_ints(data)
        except ContractViolationError:
            return False
        if len(values) != 1:
            return False
        residue = values[0]
        return 1 <= residue < self.n and gcd(residue, self.n) == 1

    def sample(self, rng: random.Random) -> GroupElement:
        while True:
            residue = rng.randrange(1, self.n)
            if gcd(residue, self.n) == 1:
                return GroupElement(encode_ints((residue,)))

    def exponent_bound(self) -> int:
        return self._phi

    def cardinality(self) -> Optional[int]:
        return self._phi

    def display(self, a: GroupElement) -> str:
        return str(self.decode(a))

    def parse_element(self, text: str) -> GroupElement:
        try:
            residue = int(text.strip())
        except ValueError:
            raise ContractViolationError(f"not a residue: {text!r}")
        if not 1 <= residue < self.n:
            raise ContractViolationError(f"{residue} is not a canonical residue modulo {self.n}")
        return self.element(residue)


def zn_star(n: int) -> ZnStarGroup:
    return ZnStarGroup(n)
