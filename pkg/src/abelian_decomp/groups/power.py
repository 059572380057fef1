from .protocol import AbelianGroup, GroupElement


def group_pow(g: AbelianGroup, a: GroupElement, n: int) -> GroupElement:
    """a^n by square-and-multiply; negative n goes through the inverse."""
    if n < 0:
        a = g.inverse(a)
        n = -n
    result = g.identity()
    base = a
    while n:
        if n & 1:
            result = g.op(result, base)
        n >>= 1
        if n:
            base = g.op(base, base)
    return result


def group_product(g: AbelianGroup, *elements: GroupElement) -> GroupElement:
    result = g.identity()
    for element in elements:
        result = g.op(result, element)
    return result
