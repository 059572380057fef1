from math import prod
from typing import Sequence, Tuple

from ..errors import ContractViolationError


def ext_gcd(p: int, q: int) -> Tuple[int, int, int]:
    """
    Extended Euclidean algorithm.

    Returns (g, r, s) with r*p + s*q == g == gcd(p, q) and g >= 0.
    """
    if p == 0 and q == 0:
        raise ContractViolationError("ext_gcd(0, 0) is undefined")
    old_r, r = p, q
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_s, s = s, old_s - quotient * s
        old_t, t = t, old_t - quotient * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def crt_coefficients(moduli: Sequence[int]) -> Tuple[int, ...]:
    """
    Coefficients c_i with sum(c_i * M/m_i) = 1 (mod M), M the product of the
    pairwise coprime moduli m_i.

    Used to put an element back together from its prime-power components.
    """
    total = prod(moduli)
    coefficients = []
    for m in moduli:
        cofactor = total // m
        g, r, _ = ext_gcd(cofactor, m)
        if g != 1:
            raise ContractViolationError(f"moduli {list(moduli)} are not pairwise coprime")
        coefficients.append(r)
    return tuple(coefficients)
