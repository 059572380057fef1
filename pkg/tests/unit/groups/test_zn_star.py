"""Tests for the multiplicative group of units modulo n."""

from math import gcd

import pytest
import sympy

from abelian_decomp.errors import ContractViolationError
from abelian_decomp.groups.encoding import encode_ints
from abelian_decomp.groups.protocol import AbelianGroup
from abelian_decomp.groups.zn_star import ZnStarGroup, zn_star


class TestZnStarGroup:
    """Test Z_n^* as an AbelianGroup backend."""

    def test_satisfies_protocol(self, z15):
        assert isinstance(z15, AbelianGroup)
        assert z15.descriptor == "znstar:15"

    def test_membership(self, z15):
        assert not z15.is_element(encode_ints((5,)))
        assert z15.is_element(encode_ints((7,)))
        assert not z15.is_element(encode_ints((16,)))
        assert not z15.is_element(encode_ints((7, 1)))
        assert not z15.is_element(b"\x05")

    def test_operation(self, z15):
        assert z15.op(z15.element(7), z15.element(13)) == z15.identity()
        assert z15.inverse(z15.element(2)) == z15.element(8)

    def test_cardinality(self, z8):
        assert z8.cardinality() == 4
        assert z8.exponent_bound() == 4

    def test_cardinality_counts_units(self):
        """|Z_n^*| equals phi(n) and the number of recognized residues."""
        for n in range(2, 501):
            g = zn_star(n)
            members = sum(g.is_element(encode_ints((r,))) for r in range(n))

            assert g.cardinality() == sympy.totient(n) == members, n

    def test_sample_is_member(self, z15, rng):
        for _ in range(200):
            a = z15.sample(rng)

            assert z15.is_element(a)
            assert gcd(z15.decode(a), 15) == 1

    def test_sample_covers_group(self, z15, rng):
        assert {z15.display(z15.sample(rng)) for _ in range(400)} == {
            "1", "2", "4", "7", "8", "11", "13", "14"
        }

    def test_display_and_parse(self, z15):
        a = z15.element(-2)

        assert z15.display(a) == "13"
        assert z15.parse_element(" 13 ") == a

    @pytest.mark.parametrize("text", ["5", "0", "15", "x", "-2"])
    def test_parse_rejects_non_members(self, z15, text):
        with pytest.raises(ContractViolationError):
            z15.parse_element(text)

    @pytest.mark.parametrize("n", [1, 0, -7])
    def test_small_modulus_rejected(self, n):
        with pytest.raises(ContractViolationError):
            ZnStarGroup(n)

    def test_z2_is_trivial(self, rng):
        g = ZnStarGroup(2)

        assert g.cardinality() == 1
        assert g.sample(rng) == g.identity()
