"""Tests for the exact classical hidden-subgroup oracle."""

from itertools import product

import pytest

from abelian_decomp.errors import CapacityExceededError
from abelian_decomp.groups.class_group import ClassGroup
from abelian_decomp.groups.cyclic_product import CyclicProductGroup, cyclic_product
from abelian_decomp.hsp.classical_oracle import ClassicalRelationOracle
from abelian_decomp.hsp.instance import HspInstance, evaluate
from abelian_decomp.hsp.protocol import HiddenSubgroupOracle
from abelian_decomp.intlinalg.matrix import IntMatrix
from abelian_decomp.intlinalg.snf import intcol_membership


def assert_exact(inst: HspInstance, m: IntMatrix):
    """Columns lie in K, and every x in Z_q^k with g(x) = e lies in intcol(m)."""
    identity = inst.group.identity()
    for column in m.columns():
        assert evaluate(inst, column) == identity
    for x in product(range(inst.q), repeat=inst.k):
        assert intcol_membership(m, x) == (evaluate(inst, x) == identity), x


class CountingCyclicGroup(CyclicProductGroup):
    def __init__(self, moduli):
        super().__init__(moduli)
        self.op_calls = 0

    def op(self, a, b):
        self.op_calls += 1
        return super().op(a, b)


class TestClassicalRelationOracle:
    """Test soundness, completeness and the capacity limit."""

    def test_satisfies_protocol(self):
        assert isinstance(ClassicalRelationOracle(), HiddenSubgroupOracle)

    def test_z8(self, z8):
        inst = HspInstance(z8, [z8.element(3), z8.element(5), z8.element(7)], 2)
        m = ClassicalRelationOracle().hidden_subgroup(inst).m

        assert list(m.columns()) == [(2, 0, 0), (0, 2, 0), (1, 1, 1)]
        assert_exact(inst, m)

    def test_full_cyclic(self):
        g = cyclic_product([4])
        inst = HspInstance(g, [g.element((1,))], 4)

        assert ClassicalRelationOracle().hidden_subgroup(inst).m.to_rows() == [[4]]

    def test_identity_generator(self, z15):
        inst = HspInstance(z15, [z15.identity()], 8)

        assert ClassicalRelationOracle().hidden_subgroup(inst).m.to_rows() == [[1]]

    def test_no_generators(self, z15):
        inst = HspInstance(z15, [], 4)

        assert ClassicalRelationOracle().hidden_subgroup(inst).m.shape == (0, 0)

    @pytest.mark.parametrize(
        "moduli, coordinates, q",
        [
            ([4, 2], [(1, 0), (2, 1), (3, 1)], 4),
            ([8], [(2,), (4,), (6,)], 8),
            ([3, 9], [(1, 3), (0, 3), (2, 6)], 9),
            ([2, 2, 2], [(1, 1, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)], 2),
        ],
    )
    def test_exact_on_cyclic_products(self, moduli, coordinates, q):
        g = cyclic_product(moduli)
        inst = HspInstance(g, [g.element(c) for c in coordinates], q)

        assert_exact(inst, ClassicalRelationOracle().hidden_subgroup(inst).m)

    def test_exact_on_class_group(self):
        g = ClassGroup(-84)
        inst = HspInstance(g, [g.element(f) for f in g.forms], 2)

        assert_exact(inst, ClassicalRelationOracle().hidden_subgroup(inst).m)

    def test_capacity_exceeded(self):
        """The error names a lower bound on the subgroup that would be tabulated."""
        g = cyclic_product([4, 4])
        inst = HspInstance(g, [g.element((1, 0)), g.element((0, 1))], 4)

        with pytest.raises(CapacityExceededError) as exc_info:
            ClassicalRelationOracle(capacity=8).hidden_subgroup(inst)

        assert exc_info.value.subgroup_size == 12
        assert exc_info.value.capacity == 8
        assert "12" in str(exc_info.value)

    def test_capacity_bounds_work_on_long_cycles(self):
        """A generator of huge order is rejected after about `capacity` operations."""
        g = CountingCyclicGroup([10**9])
        inst = HspInstance(g, [g.element((1,))], 10**9)
        g.op_calls = 0

        with pytest.raises(CapacityExceededError):
            ClassicalRelationOracle(capacity=10).hidden_subgroup(inst)

        assert g.op_calls <= 10

    def test_capacity_at_limit_is_allowed(self):
        g = cyclic_product([4, 4])
        inst = HspInstance(g, [g.element((1, 0)), g.element((0, 1))], 4)

        assert ClassicalRelationOracle(capacity=16).hidden_subgroup(inst).k == 2

    def test_invalid_capacity(self):
        with pytest.raises(ValueError):
            ClassicalRelationOracle(capacity=0)
