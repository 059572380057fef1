"""
Exact classical hidden-subgroup oracle.

The relation lattice is built one generator at a time. A table maps every
element of H_i = <a_1, ..., a_i> to one exponent vector producing it. For
a_{i+1} the least e >= 1 with a_{i+1}^e in H_i gives the relation

    e * e_{i+1} - w  (w the table's witness for a_{i+1}^e),

and H_{i+1} is tabulated as the union of a_{i+1}^j H_i for 0 <= j < e.
The k relations form a triangular basis with diagonal (e_1, ..., e_k), whose
determinant |<a_1, ..., a_k>| equals the index of K in Z^k, so they generate
K exactly.
"""

import logging
from typing import Dict, List, Tuple

from ..errors import CapacityExceededError, ContractViolationError
from ..intlinalg.matrix import IntMatrix
from .instance import HspInstance, RelationLattice

logger = logging.getLogger(__name__)

DEFAULT_CAPACITY = 2**20


class ClassicalRelationOracle:
    """Tabulates <a_1, ..., a_k>; work and memory grow with the subgroup size."""

    def __init__(self, capacity: int = DEFAULT_CAPACITY):
        if capacity < 1:
            raise ValueError("capacity must be at least 1")
        self.capacity = capacity

    def hidden_subgroup(self, inst: HspInstance) -> RelationLattice:
        g = inst.group
        k, q = inst.k, inst.q
        table: Dict[bytes, Tuple[int, ...]] = {g.identity(): (0,) * k}
        columns: List[Tuple[int, ...]] = []

        for i, a in enumerate(inst.generators):
            power, e = a, 1
            while power not in table:
                if e >= q:
                    raise ContractViolationError(
                        f"generator {i} has no power inside the tabulated subgroup below q={q}"
                    )
                # H_{i+1} has at least len(table) * (e + 1) elements once a^e misses H_i
                if len(table) * (e + 1) > self.capacity:
                    raise CapacityExceededError(
                        subgroup_size=len(table) * (e + 1), capacity=self.capacity
                    )
                power = g.op(power, a)
                e += 1
            witness = table[power]
            columns.append(
                tuple(e if j == i else -witness[j] % q for j in range(k))
            )

            if e > 1:
                layer = list(table.items())
                step = a
                for j in range(1, e):
                    for element, vector in layer:
                        table[g.op(element, step)] = vector[:i] + (j,) + vector[i + 1 :]
                    step = g.op(step, a)
                logger.debug(f"relation oracle: generator {i} has index {e}, |H| = {len(table)}")

        return RelationLattice(IntMatrix.from_columns(columns, rows=k))
