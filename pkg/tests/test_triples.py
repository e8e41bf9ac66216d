"""Triple predicates, Sigma sets, mixability, lifts, and equivalence."""

import pytest
from hypothesis import given, settings, strategies as st

from beauville.bsgs import GroupHandle, build_bsgs
from beauville.errors import NotCoprime, NotInGroup, NotTriple
from beauville.perm import Permutation, parse_cycles
from beauville.triples import (
    FIRST_PAIR_NOT_GENERATING,
    NON_HYPERBOLIC,
    NOT_GENERATING,
    NOT_PERFECT,
    NU_NOT_COPRIME,
    ORDER_X1_ODD,
    ORDER_Y1_ODD,
    SECOND_PAIR_NOT_GENERATING,
    TripleType,
    cyclic_alignments,
    direct_product,
    find_tuple_conjugator,
    inequivalent_by_type,
    is_hyperbolic_triple,
    is_mixable,
    lift_coprime_triple,
    pair_element,
    sigma_brute,
    sigma_set,
    triple_type,
    triples_equivalent,
)


def P(text, degree):
    return parse_cycles(text, degree)


def alt(n):
    tri = P("(1,2,3)", n)
    pts = range(1, n + 1) if n % 2 else range(2, n + 1)
    cyc = P("(" + ",".join(map(str, pts)) + ")", n)
    return build_bsgs([tri, cyc], name=f"A{n}")


def sym(n):
    return build_bsgs(
        [P("(1,2)", n), P("(" + ",".join(map(str, range(1, n + 1))) + ")", n)],
        name=f"S{n}",
    )


# the degree-6 quadruple of type (4,4,4;5,5,5)
A6_X1 = "(1,2)(3,4,5,6)"
A6_Y1 = "(1,5,6,4)(2,3)"
A6_X2 = "(1,2,3,4,5)"


def a6_quadruple():
    x1, y1 = P(A6_X1, 6), P(A6_Y1, 6)
    x2 = P(A6_X2, 6)
    y2 = x2.conj(P("(1,3,6)", 6))
    return x1, y1, x2, y2


class TestTripleType:
    def test_even_pair(self):
        x1, y1, _, _ = a6_quadruple()
        assert triple_type(x1, y1) == TripleType(4, 4, 4)

    def test_odd_pair(self):
        _, _, x2, y2 = a6_quadruple()
        assert triple_type(x2, y2) == TripleType(5, 5, 5)

    def test_identity(self):
        e = Permutation.identity(4)
        assert triple_type(e, e) == TripleType(1, 1, 1)

    def test_hyperbolicity_boundary(self):
        assert not TripleType(2, 3, 6).is_hyperbolic()  # sum exactly 1
        assert not TripleType(2, 2, 2).is_hyperbolic()
        assert TripleType(2, 3, 7).is_hyperbolic()
        assert TripleType(4, 4, 4).is_hyperbolic()

    def test_string(self):
        assert str(TripleType(4, 4, 4)) == "(4,4,4)"


class TestHyperbolicTriple:
    def test_accepts_a6_even_pair(self):
        g = alt(6)
        x1, y1, _, _ = a6_quadruple()
        check = is_hyperbolic_triple(g, x1, y1)
        assert check.ok and check.reasons == ()

    def test_boundary_type_rejected(self):
        # (2,3,6)-style pair in S6 ambient would be flat; build one in A6:
        # a (2,2,n) pair is never hyperbolic
        g = alt(6)
        x = P("(1,2)(3,4)", 6)
        y = P("(1,2)(5,6)", 6)
        check = is_hyperbolic_triple(g, x, y)
        assert not check.ok
        assert NON_HYPERBOLIC in check.reasons

    def test_proper_subgroup_rejected(self):
        g = alt(6)
        x = P("(1,2,3)", 6)
        y = P("(1,3,2)", 6)
        check = is_hyperbolic_triple(g, x, y)
        assert not check.ok
        assert NOT_GENERATING in check.reasons

    def test_nonmember_raises(self):
        with pytest.raises(NotInGroup):
            is_hyperbolic_triple(alt(6), P("(1,2)", 6), P("(1,2,3)", 6))


class TestMixable:
    def test_a6_quadruple_passes(self):
        outcome = is_mixable(alt(6), *a6_quadruple())
        assert outcome.ok
        assert outcome.structure.type_string() == "(4,4,4;5,5,5)"
        assert outcome.structure.nu1 == 64
        assert outcome.structure.nu2 == 125

    def test_odd_first_pair_rejected(self):
        # putting the (5,5,5) pair first violates the evenness conditions
        x1, y1, x2, y2 = a6_quadruple()
        outcome = is_mixable(alt(6), x2, y2, x1, y1)
        assert not outcome.ok
        assert ORDER_X1_ODD in outcome.violations
        assert ORDER_Y1_ODD in outcome.violations

    def test_noncoprime_rejected(self):
        x1, y1, _, _ = a6_quadruple()
        outcome = is_mixable(alt(6), x1, y1, x1, y1)
        assert not outcome.ok
        assert NU_NOT_COPRIME in outcome.violations

    def test_nongenerating_second_pair_rejected(self):
        x1, y1, _, _ = a6_quadruple()
        t = P("(1,2,3)", 6)
        outcome = is_mixable(alt(6), x1, y1, t, t.inverse())
        assert not outcome.ok
        assert SECOND_PAIR_NOT_GENERATING in outcome.violations

    def test_nongenerating_first_pair_rejected(self):
        x1, y1, x2, y2 = a6_quadruple()
        v = P("(1,2)(3,4)", 6)
        w = P("(1,3)(2,4)", 6)
        outcome = is_mixable(alt(6), v, w, x2, y2)
        assert not outcome.ok
        assert FIRST_PAIR_NOT_GENERATING in outcome.violations

    def test_imperfect_group_rejected(self):
        g = sym(6)
        x1 = P("(1,2)", 6)
        y1 = P("(1,2,3,4,5,6)", 6)
        outcome = is_mixable(g, x1, y1, x1, y1)
        assert not outcome.ok
        assert NOT_PERFECT in outcome.violations

    def test_nonmember_raises(self):
        x1, y1, x2, y2 = a6_quadruple()
        with pytest.raises(NotInGroup):
            is_mixable(alt(6), P("(1,2)", 6), y1, x2, y2)


class TestSigma:
    def test_identity_pair(self):
        g = alt(4)
        e = Permutation.identity(4)
        s = sigma_set(g, e, e)
        assert len(s) == 1
        assert s.contains(e)

    def test_a4_three_cycles(self):
        g = alt(4)
        s = sigma_set(g, P("(1,2,3)", 4), P("(1,3,2)", 4))
        assert len(s) == 9

    def test_a6_even_pair_size_pinned(self):
        # value frozen from the brute-force double loop
        g = alt(6)
        x1, y1, _, _ = a6_quadruple()
        assert len(sigma_set(g, x1, y1)) == 136

    def test_a6_odd_pair_size_pinned(self):
        g = alt(6)
        _, _, x2, y2 = a6_quadruple()
        assert len(sigma_set(g, x2, y2)) == 145

    def test_always_contains_identity(self):
        g = alt(5)
        s = sigma_set(g, P("(1,2,3)", 5), P("(1,2)(3,4)", 5))
        assert s.contains(Permutation.identity(5))

    @pytest.mark.parametrize(
        "gens,degree",
        [
            (["(1,2,3)", "(2,3,4)"], 4),  # A4, order 12
            (["(1,2,3,4)", "(1,2)"], 4),  # S4, order 24
            (["(1,2,3,4,5)", "(1,2,3)"], 5),  # A5, order 60
            (["(1,2,3,4,5)", "(1,2)"], 5),  # S5, order 120
        ],
    )
    def test_class_method_equals_brute_loop(self, gens, degree):
        g = build_bsgs([P(t, degree) for t in gens])
        assert g.order() <= 500
        x = g.random_element(3)
        y = g.random_element(14)
        assert sigma_set(g, x, y).members == sigma_brute(g, x, y)

    def test_conjugation_invariance(self):
        g = alt(5)
        x = P("(1,2,3,4,5)", 5)
        y = P("(1,2)(3,4)", 5)
        base = sigma_set(g, x, y)
        for seed in range(5):
            t = g.random_element(seed)
            moved = sigma_set(g, x.conj(t), y.conj(t))
            assert moved.members == base.members


class TestDirectProduct:
    def test_orders(self):
        a6 = alt(6)
        assert direct_product(a6, a6).order() == 129600
        trivial = GroupHandle([], degree=1)
        assert direct_product(alt(5), trivial).order() == 60

    def test_pair_identity(self):
        e = Permutation.identity(3)
        assert pair_element(e, e) == Permutation.identity(6)

    def test_pair_element_orders(self):
        x = P("(1,2)", 4)
        y = P("(1,2,3)", 4)
        assert pair_element(x, y).order() == 6


class TestLift:
    def test_a5_coprime_triple(self):
        g = alt(5)
        x = P("(1,2)(3,4)", 5)
        y = P("(1,4,5,2,3)", 5)
        assert triple_type(x, y) == TripleType(2, 5, 5)
        lift = lift_coprime_triple(g, x, y)
        assert lift.product.order() == 3600
        assert lift.type == TripleType(10, 10, 5)
        # the lifted pair also forms a hyperbolic generating triple
        check = is_hyperbolic_triple(lift.product, lift.x, lift.y)
        assert check.ok

    def test_psl2_8_lift(self):
        from beauville.psl2 import element_of_order, psl2_group

        g = psl2_group(8)
        x = element_of_order(g, 2, seed=0)
        y = None
        for seed in range(200):
            cand = element_of_order(g, 7, seed=seed)
            if (
                cand is not None
                and (x * cand).order() == 7
                and build_bsgs([x, cand], degree=9).order() == 504
            ):
                y = cand
                break
        assert y is not None, "no (2,7,7) pair found"
        lift = lift_coprime_triple(g, x, y)
        assert lift.type == TripleType(14, 14, 7)
        assert lift.product.order() == 504 ** 2

    def test_product_diagonal(self):
        # third coordinate of the lift is the diagonal (xy, xy)
        g = alt(5)
        x = P("(1,2)(3,4)", 5)
        y = P("(1,4,5,2,3)", 5)
        lift = lift_coprime_triple(g, x, y)
        assert lift.x * lift.y == pair_element(x * y, x * y)

    def test_not_coprime(self):
        g = alt(5)
        x = P("(1,2,3,4,5)", 5)
        y = P("(1,3,5,2,4)", 5)
        with pytest.raises(NotCoprime):
            lift_coprime_triple(g, x, y)

    def test_not_triple(self):
        g = alt(5)
        x = P("(1,2)(3,4)", 5)
        y = P("(1,2,3)", 5)  # <x,y> fixes 5
        with pytest.raises(NotTriple):
            lift_coprime_triple(g, x, y)


class TestInequivalentByType:
    def test_examples(self):
        assert inequivalent_by_type(TripleType(3, 3, 9), TripleType(3, 9, 9))
        assert not inequivalent_by_type(TripleType(4, 4, 4), TripleType(4, 4, 4))
        assert inequivalent_by_type(TripleType(10, 10, 10), TripleType(10, 10, 8))

    def test_reordering_is_ignored(self):
        assert not inequivalent_by_type(TripleType(2, 3, 7), TripleType(7, 3, 2))


class TestConjugatorSearch:
    def test_identity_for_equal_tuples(self):
        g = sym(6)
        x1, y1, _, _ = a6_quadruple()
        found = find_tuple_conjugator(g, (x1, y1), (x1, y1))
        assert found is not None
        assert x1.conj(found) == x1 and y1.conj(found) == y1

    def test_recovers_constructed_conjugation(self):
        s8 = sym(8)
        a1 = P("(1,2)(3,4,5,6,7,8)", 8)
        b1 = a1.conj(P("(1,3,4)", 8))
        t = P("(1,2)", 8)
        found = find_tuple_conjugator(s8, (a1, b1), (a1.conj(t), b1.conj(t)))
        assert found is not None
        assert a1.conj(found) == a1.conj(t)
        assert b1.conj(found) == b1.conj(t)

    def test_degree_eight_twin_pairs_inequivalent(self):
        # the two (6,6,6) pairs below generate the same group but no
        # ambient conjugation aligns them, under any cyclic rotation
        s8 = sym(8)
        a1 = P("(1,2)(3,4,5,6,7,8)", 8)
        b1 = a1.conj(P("(1,3,4)", 8))
        b1_alt = a1.conj(P("(1,4,3)", 8))
        assert build_bsgs([a1, b1]).order() == build_bsgs([a1, b1_alt]).order()
        assert triples_equivalent(s8, (a1, b1), (a1, b1_alt)) is None

    def test_none_when_types_differ(self):
        g = sym(5)
        assert (
            find_tuple_conjugator(
                g,
                (P("(1,2)", 5), P("(1,2,3)", 5)),
                (P("(1,2)(3,4)", 5), P("(1,2,3)", 5)),
            )
            is None
        )

    def test_ambient_membership_respected(self):
        # conjugating (1,2,3) to (1,2,4) needs an odd permutation, so the
        # search inside A5 must fail even though S5 succeeds
        a5 = alt(5)
        s5 = sym(5)
        x = P("(1,2,3)", 5)
        y = P("(1,2,3,4,5)", 5)
        target_t = P("(4,5)", 5)
        t2 = (x.conj(target_t), y.conj(target_t))
        assert find_tuple_conjugator(s5, (x, y), t2) is not None
        assert find_tuple_conjugator(a5, (x, y), t2) is None

    def test_cyclic_alignments_shape(self):
        x1, y1, _, _ = a6_quadruple()
        forms = cyclic_alignments((x1, y1))
        assert len(forms) == 3
        assert forms[0] == (x1, y1)
        # each aligned pair keeps the same product-triple up to rotation
        z = (x1 * y1).inverse()
        assert forms[1] == (y1, z) and forms[2] == (z, x1)


@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_conjugator_search_complete_on_solvable_instances(data):
    g = alt(5)
    ambient = sym(5)
    x = g.random_element(data.draw(st.integers(0, 10 ** 6)))
    y = g.random_element(data.draw(st.integers(0, 10 ** 6)))
    t = ambient.random_element(data.draw(st.integers(0, 10 ** 6)))
    found = find_tuple_conjugator(ambient, (x, y), (x.conj(t), y.conj(t)))
    assert found is not None
    assert x.conj(found) == x.conj(t)
    assert y.conj(found) == y.conj(t)
