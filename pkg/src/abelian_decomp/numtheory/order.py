from ..errors import ContractViolationError, InvalidBoundError
from ..groups.power import group_pow
from ..groups.protocol import AbelianGroup, GroupElement
from .primes import factor


def order(g: AbelianGroup, a: GroupElement, exponent_bound: int) -> int:
    """
    Order of `a`, given a known multiple `exponent_bound` of it.

    Classical stand-in for quantum order finding: factor the bound and strip
    each prime while the reduced power still annihilates `a`.
    """
    if exponent_bound < 1:
        raise ContractViolationError(f"exponent bound must be positive, got {exponent_bound}")
    identity = g.identity()
    if group_pow(g, a, exponent_bound) != identity:
        raise InvalidBoundError(
            f"{g.display(a)} is not annihilated by the exponent bound {exponent_bound}"
        )
    n = exponent_bound
    for p, e in factor(exponent_bound).factors:
        for _ in range(e):
            if group_pow(g, a, n // p) != identity:
                break
            n //= p
    return n
