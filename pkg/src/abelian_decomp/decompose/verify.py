"""Independent checks of a Decomposition against a group backend."""

import logging
from math import prod

from ..errors import ContractViolationError
from ..groups.power import group_pow
from ..groups.protocol import AbelianGroup
from ..numtheory.primes import is_probable_prime
from .schemas import Decomposition, Summand, VerificationReport

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_LIMIT = 10**4


def _fail(reason: str, checked_enumeration: bool = False) -> VerificationReport:
    logger.info(f"verification failed: {reason}")
    return VerificationReport(ok=False, reason=reason, checked_enumeration=checked_enumeration)


def _power(summand: Summand) -> str:
    return f"{summand.prime}^{summand.exponent}"


def _within(summand: Summand, limit: int) -> bool:
    # p^e <= limit implies e <= limit.bit_length()
    return (
        summand.prime <= limit
        and summand.exponent <= limit.bit_length()
        and summand.order <= limit
    )


def verify_decomposition(
    g: AbelianGroup,
    dec: Decomposition,
    enumeration_limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> VerificationReport:
    """
    Check that `dec` decomposes `g`.

    (i) every generator has order exactly p^e; (ii) the orders multiply to |G|
    when the backend knows it; (iii) for |G| <= enumeration_limit all products
    g_1^x_1 ... g_l^x_l with 0 <= x_i < p_i^e_i are distinct group elements,
    so the product map is a bijection onto G.

    Never raises on a malformed record. Orders are bounded by |G| (or by the
    exponent bound when |G| is unknown) before any power is taken.
    """
    if dec.group != g.descriptor:
        return _fail(f"decomposition is for {dec.group}, not {g.descriptor}")
    try:
        elements = dec.elements(g)
    except ContractViolationError as e:
        return _fail(f"generator is not a group element: {e}")

    cardinality = g.cardinality()
    limit = cardinality if cardinality is not None else g.exponent_bound()
    for i, summand in enumerate(dec.summands):
        if not _within(summand, limit):
            return _fail(f"summand {i} has order above the bound {limit}")
        if not is_probable_prime(summand.prime):
            return _fail(f"{summand.prime} is not prime")

    computed = prod(summand.order for summand in dec.summands)
    if dec.group_order != computed:
        return _fail("recorded group order does not match the product of summand orders")
    if cardinality is not None and computed != cardinality:
        powers = " * ".join(_power(s) for s in dec.summands) or "1"
        return _fail(f"product of orders {powers} != |G| = {cardinality}")

    identity = g.identity()
    for summand, x in zip(dec.summands, elements):
        if group_pow(g, x, summand.order) != identity:
            return _fail(f"{summand.generator} is not annihilated by {_power(summand)}")
        if group_pow(g, x, summand.order // summand.prime) == identity:
            return _fail(f"{summand.generator} has order smaller than {_power(summand)}")

    if cardinality is None:
        return VerificationReport(ok=True, reason="orders checked; |G| unknown")
    if cardinality > enumeration_limit:
        return VerificationReport(ok=True, reason="orders and |G| checked")

    # grow <g_1> (+) ... (+) <g_i> one summand at a time; a collision means the sum is not direct
    span = {identity}
    for summand, x in zip(dec.summands, elements):
        multiples = [identity]
        for _ in range(summand.order - 1):
            multiples.append(g.op(multiples[-1], x))
        grown = {g.op(h, m) for h in span for m in multiples}
        if len(grown) != len(span) * summand.order:
            return _fail(f"sum is not direct at {summand.generator}", checked_enumeration=True)
        span = grown
    if not all(g.is_element(h) for h in span):
        return _fail("a product left the group", checked_enumeration=True)
    return VerificationReport(ok=True, reason="bijective product map", checked_enumeration=True)
