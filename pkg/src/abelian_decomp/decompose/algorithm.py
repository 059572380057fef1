"""
Decomposition of a p-group from generators and its relation lattice.

Given generators a_1..a_k and a matrix M whose integer column span is exactly
the set of exponent vectors x with a_1^x_1 ... a_k^x_k = e, the Smith normal
form u·M·v = Diag(d) yields new generators a_i' = prod_j a_j^(u⁻¹)[j][i] of
order d_i that are independent; dropping those with d_i = 1 leaves a direct
sum of cyclic groups.
"""

import logging
from typing import List, NamedTuple, Sequence, Tuple

from ..errors import ContractViolationError, InfiniteOrderError
from ..groups.power import group_pow, group_product
from ..groups.protocol import AbelianGroup, GroupElement
from ..hsp.instance import HspInstance, RelationLattice
from ..hsp.protocol import HiddenSubgroupOracle
from ..intlinalg.matrix import IntMatrix, IntVector, mat_hconcat, mat_identity, mat_scale
from ..intlinalg.snf import snf

logger = logging.getLogger(__name__)


class QuotientPresentation(NamedTuple):
    """Z_q^k / K presented by M' = [q·I | A] on the cosets of e_1..e_k."""

    m_prime: IntMatrix
    basis: List[IntVector]


def invariant_vectors(m: IntMatrix) -> List[Tuple[IntVector, int]]:
    """
    (y_i, d_i) with d_i > 1: y_i expresses the i-th new generator in the old ones.
    """
    result = snf(m)
    if result.rank < m.rows:
        raise InfiniteOrderError(
            f"relation lattice has rank {result.rank} < {m.rows}; "
            "the generated group would be infinite"
        )
    return [
        (result.u_inv.column(i), di) for i, di in enumerate(result.d) if di > 1
    ]


def reduce_generators(
    g: AbelianGroup, gens: Sequence[GroupElement], m: RelationLattice
) -> List[Tuple[GroupElement, int]]:
    """Independent generators (g_i, d_i) of <gens> with d_1 | d_2 | ...."""
    if m.m.rows != len(gens):
        raise ContractViolationError(
            f"relation lattice has {m.m.rows} rows for {len(gens)} generators"
        )
    return [
        (group_product(g, *(group_pow(g, a, x) for a, x in zip(gens, y) if x)), d)
        for y, d in invariant_vectors(m.m)
    ]


def quotient_generators(q: int, k: int, a: IntMatrix) -> QuotientPresentation:
    """M' = [q·I | a]; the quotient Z_q^k / intcol(a) is generated by e_i + K."""
    if a.rows != k:
        raise ContractViolationError(f"hidden subgroup matrix has {a.rows} rows, expected {k}")
    m_prime = mat_hconcat(mat_scale(mat_identity(k), q), a)
    basis = list(mat_identity(k).columns())
    return QuotientPresentation(m_prime, basis)


def decompose_group(
    g: AbelianGroup,
    gens: Sequence[GroupElement],
    q: int,
    oracle: HiddenSubgroupOracle,
) -> List[Tuple[GroupElement, int]]:
    """
    Decompose <gens> for generators of prime-power order dividing q.

    1. the oracle finds the hidden subgroup K of x -> prod a_i^x_i on Z_q^k;
    2. the columns of [q·I | K] generate every relation among the a_i in Z^k,
       so `reduce_generators` on that lattice gives independent generators;
    3. Z_q^k / K is isomorphic to <gens>, so those generators decompose it.
    """
    inst = HspInstance(g, tuple(gens), q)
    lattice = oracle.hidden_subgroup(inst)
    presentation = quotient_generators(q, inst.k, lattice.m)
    fragment = reduce_generators(g, inst.generators, RelationLattice(presentation.m_prime))
    logger.debug(f"q={q}: {inst.k} generators reduce to orders {[d for _, d in fragment]}")
    return fragment
