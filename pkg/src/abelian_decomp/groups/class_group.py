"""
Class groups of imaginary quadratic discriminants.

Elements are reduced primitive positive definite binary quadratic forms
(a, b, c) with b^2 - 4ac = D < 0. A reduced form is the unique representative
of its equivalence class, so encoding (a, b, c) gives canonical bytes.
Composition follows Cohen's "A Course in Computational Algebraic Number
Theory", Algorithm 5.4.7, and reduction Algorithm 5.4.2.
"""

import logging
import random
from functools import lru_cache
from math import gcd
from typing import Optional, Tuple

from ..errors import ContractViolationError
from ..numtheory.arith import ext_gcd
from .encoding import decode_ints, encode_ints
from .protocol import GroupElement

logger = logging.getLogger(__name__)

Form = Tuple[int, int, int]


def is_valid_discriminant(d: int) -> bool:
    return d < 0 and d % 4 in (0, 1)


def is_reduced(form: Form) -> bool:
    a, b, c = form
    if not (abs(b) <= a <= c):
        return False
    if (abs(b) == a or a == c) and b < 0:
        return False
    return True


def reduce_form(form: Form) -> Form:
    """The reduced form equivalent to a positive definite form."""
    a, b, c = form
    # normalize: -a < b <= a
    r = (a - b) // (2 * a)
    b, c = b + 2 * r * a, a * r * r + b * r + c
    while not (-a < b <= a <= c and (a != c or b >= 0)):
        s = (c + b) // (2 * c)
        a, b, c = c, -b + 2 * s * c, c * s * s - b * s + a
    return a, b, c


def compose_forms(f1: Form, f2: Form, d: int) -> Form:
    """Gauss composition of two primitive forms of discriminant d, reduced."""
    if f1[0] > f2[0]:
        f1, f2 = f2, f1
    a1, b1, _ = f1
    a2, b2, c2 = f2
    s = (b1 + b2) // 2
    n = b2 - s

    if a2 % a1 == 0:
        y1 = 0
        g = a1
    else:
        g, y1, _ = ext_gcd(a2, a1)

    if s % g == 0:
        y2, x2, g1 = -1, 0, g
    else:
        g1, x2, y2 = ext_gcd(s, g)
        y2 = -y2

    v1 = a1 // g1
    v2 = a2 // g1
    r = (y1 * y2 * n - x2 * c2) % v1
    b3 = b2 + 2 * v2 * r
    a3 = v1 * v2
    c3 = (b3 * b3 - d) // (4 * a3)
    return reduce_form((a3, b3, c3))


@lru_cache(maxsize=256)
def reduced_forms(d: int) -> Tuple[Form, ...]:
    """All reduced primitive forms of discriminant d, sorted."""
    if not is_valid_discriminant(d):
        raise ContractViolationError(
            f"discriminant must be negative and 0 or 1 mod 4, got {d}"
        )
    forms = []
    a = 1
    # a reduced form satisfies 3a^2 <= |d|
    while 3 * a * a <= -d:
        for b in range(-a + 1, a + 1):
            if (b * b - d) % (4 * a):
                continue
            c = (b * b - d) // (4 * a)
            form = (a, b, c)
            if is_reduced(form) and gcd(gcd(a, b), c) == 1:
                forms.append(form)
        a += 1
    return tuple(sorted(forms))


def class_number(d: int) -> int:
    return len(reduced_forms(d))


class ClassGroup:
    """Form class group of a negative discriminant, by full enumeration."""

    def __init__(self, d: int):
        if not is_valid_discriminant(d):
            raise ContractViolationError(
                f"discriminant must be negative and 0 or 1 mod 4, got {d}"
            )
        self.d = d
        self.forms = reduced_forms(d)
        k = d % 2
        self.principal_form: Form = (1, k, (k * k - d) // 4)
        self._identity = GroupElement(encode_ints(self.principal_form))
        logger.debug(f"class group of discriminant {d}: {len(self.forms)} reduced forms")

    def __repr__(self) -> str:
        return f"ClassGroup(d={self.d})"

    @property
    def descriptor(self) -> str:
        return f"classgroup:{self.d}"

    def element(self, form: Form) -> GroupElement:
        """Encode (the reduction of) a primitive positive definite form."""
        a, b, c = form
        if b * b - 4 * a * c != self.d:
            raise ContractViolationError(f"{form} does not have discriminant {self.d}")
        if a <= 0:
            raise ContractViolationError(f"{form} is not positive definite")
        if gcd(gcd(a, b), c) != 1:
            raise ContractViolationError(f"{form} is not primitive")
        return GroupElement(encode_ints(reduce_form(form)))

    def decode(self, a: GroupElement) -> Form:
        return decode_ints(a)

    def identity(self) -> GroupElement:
        return self._identity

    def op(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return GroupElement(encode_ints(compose_forms(self.decode(a), self.decode(b), self.d)))

    def inverse(self, a: GroupElement) -> GroupElement:
        x, y, z = self.decode(a)
        return GroupElement(encode_ints(reduce_form((x, -y, z))))

    def is_element(self, data: bytes) -> bool:
        try:
            values = decode_ints(data)
        except ContractViolationError:
            return False
        if len(values) != 3:
            return False
        a, b, c = values
        return (
            a > 0
            and b * b - 4 * a * c == self.d
            and is_reduced(values)
            and gcd(gcd(a, b), c) == 1
        )

    def sample(self, rng: random.Random) -> GroupElement:
        return GroupElement(encode_ints(rng.choice(self.forms)))

    def exponent_bound(self) -> int:
        return len(self.forms)

    def cardinality(self) -> Optional[int]:
        return len(self.forms)

    def display(self, a: GroupElement) -> str:
        x, y, z = self.decode(a)
        return f"({x},{y},{z})"

    def parse_element(self, text: str) -> GroupElement:
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ContractViolationError(f"expected a form '(a,b,c)', got {text!r}")
        try:
            values = tuple(int(part) for part in body[1:-1].split(","))
        except ValueError:
            raise ContractViolationError(f"expected a form '(a,b,c)', got {text!r}")
        data = encode_ints(values)
        if not self.is_element(data):
            raise ContractViolationError(f"{text!r} is not a reduced form of discriminant {self.d}")
        return GroupElement(data)


def class_group(d: int) -> ClassGroup:
    return ClassGroup(d)
