"""Stabilizer chains: order, membership, orbits, classes, primitivity."""

import pytest

from beauville.bsgs import (
    ConjClass,
    GroupHandle,
    build_bsgs,
    conj_class,
    element_closure,
    is_perfect,
    is_primitive,
    jordan_witness,
    minimal_block,
)
from beauville.errors import BudgetExceeded, NotInGroup, NotTransitive
from beauville.perm import Permutation, parse_cycles


def P(text, degree):
    return parse_cycles(text, degree)


def alt_group(n):
    # standard generators: (1,2,3) and, depending on parity, an n- or
    # (n-1)-cycle avoiding a sign obstruction
    tri = P("(1,2,3)", n)
    if n % 2 == 1:
        cyc = Permutation(tuple(range(1, n)) + (0,))
    else:
        cyc = Permutation((0,) + tuple(range(2, n)) + (1,))
    return GroupHandle([tri, cyc], name=f"A{n}")


def sym_group(n):
    return GroupHandle(
        [P("(1,2)", n), Permutation(tuple(range(1, n)) + (0,))], name=f"S{n}"
    )


class TestOrder:
    def test_alternating_orders(self):
        assert alt_group(4).order() == 12
        assert alt_group(5).order() == 60
        assert alt_group(6).order() == 360
        assert alt_group(7).order() == 2520

    def test_symmetric_orders(self):
        assert sym_group(4).order() == 24
        assert sym_group(6).order() == 720
        assert sym_group(8).order() == 40320

    def test_two_generated_degree_eight_group(self):
        # (1,2)(3..8) together with its conjugate by (1,3,4) generate a
        # group of order 20160 on 8 points
        a = P("(1,2)(3,4,5,6,7,8)", 8)
        b = a.conj(P("(1,3,4)", 8))
        assert build_bsgs([a, b]).order() == 20160

    def test_cyclic(self):
        g = GroupHandle([P("(1,2,3,4,5,6)", 6)])
        assert g.order() == 6

    def test_trivial(self):
        g = GroupHandle([], degree=5)
        assert g.order() == 1
        assert g.contains(Permutation.identity(5))

    def test_klein_four(self):
        g = GroupHandle([P("(1,2)(3,4)", 4), P("(1,3)(2,4)", 4)])
        assert g.order() == 4


class TestMembership:
    def test_contains_generators_and_products(self):
        g = alt_group(5)
        for gen in g.generators:
            assert g.contains(gen)
        assert g.contains(g.generators[0] * g.generators[1])

    def test_rejects_odd_permutation(self):
        g = alt_group(5)
        assert not g.contains(P("(1,2)", 5))

    def test_rejects_wrong_degree(self):
        g = alt_group(5)
        assert not g.contains(Permutation.identity(6))

    def test_sift_residue_identity_for_members(self):
        g = sym_group(5)
        assert g.sift(P("(1,3,5)", 5)).is_identity()


class TestClosureAgreement:
    @pytest.mark.parametrize(
        "gens_text, degree",
        [
            (["(1,2,3)", "(1,2)"], 3),
            (["(1,2,3,4)", "(1,2)"], 4),
            (["(1,2,3)", "(2,3,4)"], 4),
            (["(1,2)(3,4)", "(1,3)(2,4)"], 4),
            (["(1,2,3,4,5)", "(1,2,3)"], 5),
            (["(1,2,3,4,5,6,7)", "(1,2)(3,4)"], 7),
        ],
    )
    def test_order_matches_brute_closure(self, gens_text, degree):
        gens = [P(t, degree) for t in gens_text]
        brute = element_closure(gens)
        assert build_bsgs(gens).order() == len(brute)

    def test_elements_iterator_matches_closure(self):
        gens = [P("(1,2,3)", 4), P("(2,3,4)", 4)]
        g = build_bsgs(gens)
        listed = list(g.elements())
        assert len(listed) == g.order() == 12
        assert set(p.key() for p in listed) == set(
            p.key() for p in element_closure(gens)
        )

    def test_closure_budget(self):
        with pytest.raises(BudgetExceeded):
            element_closure([P("(1,2,3,4,5,6,7)", 7), P("(1,2)", 7)], budget=100)


class TestOrbits:
    def test_transitive(self):
        assert alt_group(5).is_transitive()
        assert alt_group(5).orbits() == [[0, 1, 2, 3, 4]]

    def test_intransitive(self):
        g = GroupHandle([P("(1,2)", 5), P("(4,5)", 5)])
        assert not g.is_transitive()
        assert g.orbits() == [[0, 1], [2], [3, 4]]


class TestConjClass:
    def test_three_cycles_in_a4(self):
        g = alt_group(4)
        cls = conj_class(g, P("(1,2,3)", 4))
        assert cls.size == 4

    def test_double_transpositions_in_a4(self):
        g = alt_group(4)
        cls = conj_class(g, P("(1,2)(3,4)", 4))
        assert cls.size == 3

    def test_class_of_big_cycle_in_a6(self):
        # (2,4)-elements of A6 form one class of size 90
        g = alt_group(6)
        cls = conj_class(g, P("(1,2)(3,4,5,6)", 6))
        assert cls.size == 90

    def test_representative_is_minimal_member(self):
        g = alt_group(4)
        cls = conj_class(g, P("(2,3,4)", 4))
        assert cls.representative.key() in cls.members
        assert cls.size == 4

    def test_rejects_nonmember(self):
        with pytest.raises(NotInGroup):
            conj_class(alt_group(4), P("(1,2)", 4))

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            conj_class(sym_group(8), P("(1,2)", 8), budget=5)

    def test_class_id_stable(self):
        g = alt_group(5)
        c1 = conj_class(g, P("(1,2,3)", 5))
        c2 = conj_class(g, P("(2,4,5)", 5))
        assert c1.class_id == c2.class_id


class TestPrimitivity:
    def test_alternating_primitive(self):
        ok, block = is_primitive(alt_group(5))
        assert ok and block is None

    def test_dihedral_on_six_points_imprimitive(self):
        rot = P("(1,2,3,4,5,6)", 6)
        flip = P("(2,6)(3,5)", 6)
        ok, block = is_primitive(GroupHandle([rot, flip]))
        assert not ok
        assert block is not None
        assert 0 in block
        assert len(block) in (2, 3)
        assert 6 % len(block) == 0

    def test_cyclic_prime_primitive(self):
        ok, block = is_primitive(GroupHandle([P("(1,2,3,4,5)", 5)]))
        assert ok

    def test_intransitive_rejected(self):
        with pytest.raises(NotTransitive):
            is_primitive(GroupHandle([P("(1,2)", 4)]))

    def test_minimal_block_contains_seeds(self):
        rot = P("(1,2,3,4,5,6)", 6)
        flip = P("(2,6)(3,5)", 6)
        block = minimal_block(GroupHandle([rot, flip]), 0, 3)
        assert 0 in block and 3 in block


class TestPerfect:
    def test_alternating_perfect(self):
        assert is_perfect(alt_group(5))
        assert is_perfect(alt_group(6))

    def test_symmetric_not_perfect(self):
        assert not is_perfect(sym_group(4))

    def test_abelian_not_perfect(self):
        assert not is_perfect(GroupHandle([P("(1,2,3)", 3)]))

    def test_trivial_perfect(self):
        assert is_perfect(GroupHandle([], degree=3))


class TestRandomAndBase:
    def test_random_element_deterministic(self):
        g = alt_group(6)
        assert g.random_element(7) == g.random_element(7)

    def test_random_element_is_member(self):
        g = alt_group(6)
        for seed in range(10):
            assert g.contains(g.random_element(seed))

    def test_base_points_increasing_first(self):
        g = sym_group(5)
        base = g.base()
        assert base[0] == 0
        assert len(set(base)) == len(base)


class TestJordanWitness:
    def test_finds_three_cycle_with_fixed_points(self):
        # A7 contains 3-cycles fixing 4 points
        g = alt_group(7)
        w = jordan_witness(g)
        assert w is not None
        cycles = w.cycles()
        assert len(cycles) == 1
        assert len(cycles[0]) in (2, 3, 5, 7)
        assert g.degree - len(cycles[0]) >= 3

    def test_none_when_absent(self):
        # a cyclic group of order 6 on 6 points fixes nothing
        g = GroupHandle([P("(1,2,3,4,5,6)", 6)])
        assert jordan_witness(g) is None
