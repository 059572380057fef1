"""Tests for form class groups of negative discriminants."""

from itertools import product

import pytest

from abelian_decomp.errors import ContractViolationError
from abelian_decomp.groups.class_group import (
    ClassGroup,
    class_group,
    class_number,
    compose_forms,
    is_reduced,
    reduce_form,
    reduced_forms,
)
from abelian_decomp.groups.encoding import encode_ints
from abelian_decomp.groups.power import group_pow
from abelian_decomp.groups.protocol import AbelianGroup


class TestReduction:
    """Test reduction of positive definite forms."""

    @pytest.mark.parametrize(
        "form, reduced",
        [
            ((3, 1, 2), (2, -1, 3)),
            ((1, 1, 6), (1, 1, 6)),
            ((2, -2, 2), (2, 2, 2)),
            ((6, 5, 2), (2, -1, 3)),
            ((1, 6, 10), (1, 0, 1)),
        ],
    )
    def test_reduce_form(self, form, reduced):
        assert reduce_form(form) == reduced
        assert is_reduced(reduced)

    def test_reduction_preserves_discriminant(self, rng):
        for _ in range(300):
            a = rng.randint(1, 60)
            b = rng.randint(-200, 200)
            # pick c so that the form is positive definite
            c = (b * b) // (4 * a) + rng.randint(1, 60)
            r = reduce_form((a, b, c))

            assert r[1] ** 2 - 4 * r[0] * r[2] == b * b - 4 * a * c
            assert is_reduced(r)
            assert reduce_form(r) == r


class TestClassNumber:
    """Test enumeration of reduced primitive forms."""

    @pytest.mark.parametrize(
        "d, h",
        [
            (-3, 1),
            (-4, 1),
            (-7, 1),
            (-12, 1),
            (-15, 2),
            (-16, 1),
            (-20, 2),
            (-23, 3),
            (-47, 5),
            (-71, 7),
            (-84, 4),
            (-163, 1),
        ],
    )
    def test_known_class_numbers(self, d, h):
        assert class_number(d) == h

    def test_forms_for_minus_23(self):
        assert reduced_forms(-23) == ((1, 1, 6), (2, -1, 3), (2, 1, 3))

    @pytest.mark.parametrize("d", [-5, -1, 0, 8, -10])
    def test_invalid_discriminant(self, d):
        with pytest.raises(ContractViolationError):
            reduced_forms(d)
        with pytest.raises(ContractViolationError):
            ClassGroup(d)


class TestComposition:
    """Test Gauss composition of reduced forms."""

    def test_examples(self):
        assert compose_forms((2, 1, 3), (2, 1, 3), -23) == (2, -1, 3)
        assert compose_forms((2, 1, 3), (2, -1, 3), -23) == (1, 1, 6)
        assert compose_forms((2, 1, 6), (3, 1, 4), -47) == (2, -1, 6)

    @pytest.mark.parametrize("d", [-23, -47, -84, -231, -399, -1003])
    def test_group_laws(self, d):
        """Closure, identity, inverses, commutativity and associativity."""
        g = class_group(d)
        forms = list(g.forms)
        elements = [g.element(f) for f in forms]
        e = g.identity()

        for a in elements:
            assert g.op(e, a) == a
            assert g.op(a, g.inverse(a)) == e
            assert group_pow(g, a, g.cardinality()) == e
        for a, b in product(elements, repeat=2):
            ab = g.op(a, b)
            assert g.is_element(ab)
            assert ab == g.op(b, a)
        for a, b, c in product(elements[:8], repeat=3):
            assert g.op(g.op(a, b), c) == g.op(a, g.op(b, c))

    def test_non_fundamental_discriminant(self):
        """Discriminant -36 has forms (1,0,9) and (2,2,5); (3,0,3) is not primitive."""
        g = ClassGroup(-36)
        a = g.element((2, 2, 5))

        assert g.cardinality() == 2
        assert g.op(a, a) == g.identity()


class TestClassGroup:
    """Test ClassGroup as an AbelianGroup backend."""

    def test_satisfies_protocol(self, cg23):
        assert isinstance(cg23, AbelianGroup)
        assert cg23.descriptor == "classgroup:-23"

    @pytest.mark.parametrize("d, principal", [(-3, (1, 1, 1)), (-4, (1, 0, 1)), (-23, (1, 1, 6))])
    def test_principal_form(self, d, principal):
        assert ClassGroup(d).principal_form == principal

    def test_element_reduces(self, cg23):
        assert cg23.element((3, 1, 2)) == cg23.element((2, -1, 3))

    @pytest.mark.parametrize("form", [(1, 1, 5), (-2, 1, -3), (2, 2, 2)])
    def test_element_rejects_bad_forms(self, form):
        g = ClassGroup(-12 if form == (2, 2, 2) else -23)

        with pytest.raises(ContractViolationError):
            g.element(form)

    def test_membership(self, cg23):
        assert cg23.is_element(encode_ints((2, 1, 3)))
        assert not cg23.is_element(encode_ints((3, 1, 2)))
        assert not cg23.is_element(encode_ints((2, 1)))
        assert not cg23.is_element(b"")

    def test_sample_covers_group(self, cg23, rng):
        assert {cg23.sample(rng) for _ in range(100)} == {
            cg23.element(f) for f in cg23.forms
        }

    def test_display_and_parse(self, cg23):
        a = cg23.element((2, -1, 3))

        assert cg23.display(a) == "(2,-1,3)"
        assert cg23.parse_element("(2,-1,3)") == a

    @pytest.mark.parametrize("text", ["(3,1,2)", "2,1,3", "(a,b,c)", "(1,1,5)"])
    def test_parse_rejects(self, cg23, text):
        with pytest.raises(ContractViolationError):
            cg23.parse_element(text)
