import random

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy.combinatorics import Permutation, PermutationGroup

from conftest import perm_lists, perms
from polydual.errors import CapExceeded, DegreeMismatch, ParseError
from polydual.permcore import (
    Perm,
    PermGroup,
    center,
    center_scan,
    conjugator_search,
    conjugators,
    conjugators_scan,
    derived_subgroup,
    derived_subgroup_scan,
    direct_sum,
    evaluate_word,
    paired_group,
    parse_cycles,
    subgroup_intersection,
    subgroup_intersection_scan,
)


def sym(g: Perm) -> Permutation:
    return Permutation(list(g))


def sym_group(n, gens) -> PermutationGroup:
    return PermutationGroup([sym(g) for g in gens] or [Permutation(list(range(n)))])


class TestPerm:
    def test_right_action(self):
        a = Perm.from_cycles("(1,2)", 3)
        b = Perm.from_cycles("(2,3)", 3)
        # a first, then b: 1 -> 2 -> 3
        assert (a * b).image(1) == 3
        assert str(a * b) == "(1,3,2)"

    def test_cycle_text_round_trip(self):
        g = Perm.from_cycles("(1,7,6)(2,4,5,3)(8,9)", 9)
        assert str(g) == "(1,7,6)(2,4,5,3)(8,9)"
        assert Perm.from_cycles(str(g), 9) == g
        assert g.order() == 12

    def test_identity_text(self):
        assert str(Perm.identity(4)) == "()"
        assert Perm.from_cycles("()", 4).is_identity()

    @pytest.mark.parametrize("bad", ["(1,2", "(1,x)", "(1,1)"])
    def test_parse_errors(self, bad):
        with pytest.raises((ParseError, ValueError)):
            Perm.from_cycles(bad, 3)

    def test_point_out_of_range(self):
        with pytest.raises(ValueError):
            Perm.from_cycles("(1,5)", 4)

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            Perm.identity(3) * Perm.identity(4)

    def test_not_a_permutation(self):
        with pytest.raises(ValueError):
            Perm([0, 0, 1])

    def test_parse_cycles_whitespace(self):
        assert parse_cycles(" ( 1 , 2 ) (3,4)") == [[1, 2], [3, 4]]

    @given(perms(), st.data())
    def test_group_laws(self, g, data):
        h = data.draw(perms(len(g)))
        k = data.draw(perms(len(g)))
        e = Perm.identity(len(g))
        assert (g * h) * k == g * (h * k)
        assert g * g.inverse() == e
        assert g ** g.order() == e
        assert g ** -1 == g.inverse()

    @given(perms(), st.data())
    def test_matches_sympy_product(self, g, data):
        h = data.draw(perms(len(g)))
        # sympy also composes left to right
        assert list(sym(g) * sym(h)) == list(g * h)

    def test_direct_sum(self):
        a = Perm.from_cycles("(1,2)", 2)
        b = Perm.from_cycles("(1,3)", 3)
        assert str(direct_sum(a, b)) == "(1,2)(3,5)"

    def test_evaluate_word(self):
        gens = [Perm.from_cycles("(1,2)", 3), Perm.from_cycles("(2,3)", 3)]
        assert evaluate_word(gens, [0, 1]) == gens[0] * gens[1]
        assert evaluate_word(gens, [], 3).is_identity()


class TestPermGroup:
    @given(perm_lists())
    def test_order_matches_sympy(self, data):
        n, gens = data
        assert PermGroup(n, tuple(gens)).order() == sym_group(n, gens).order()

    @given(perm_lists(), st.data())
    def test_membership_matches_sympy(self, data, d):
        n, gens = data
        g = d.draw(perms(n))
        assert PermGroup(n, tuple(gens)).contains(g) == sym_group(n, gens).contains(sym(g))

    @given(perm_lists())
    def test_elements_count(self, data):
        n, gens = data
        G = PermGroup(n, tuple(gens))
        assert len(G.elements) == G.order()

    @given(perm_lists(max_degree=6), st.randoms(use_true_random=False))
    def test_word_for(self, data, rnd):
        n, gens = data
        G = PermGroup(n, tuple(gens))
        g = G.random_element(rnd)
        assert evaluate_word(gens, G.word_for(g), n) == g

    def test_symmetric_orders(self):
        for n in range(2, 11):
            cyc = Perm([*range(1, n), 0])
            tr = Perm.from_cycles("(1,2)", n)
            assert PermGroup(n, (cyc, tr)).order() == __import__("math").factorial(n)

    def test_orbits(self):
        G = PermGroup.of([Perm.from_cycles("(1,2)(4,5)", 6)])
        assert G.orbits() == [[0, 1], [2], [3, 4], [5]]

    def test_element_cap(self):
        S8 = PermGroup.of([Perm([*range(1, 8), 0]), Perm.from_cycles("(1,2)", 8)], element_cap=100)
        assert S8.order() == 40320  # the order never needs enumeration
        with pytest.raises(CapExceeded):
            S8.elements

    @given(perm_lists(max_degree=6), st.data())
    def test_intersection_matches_scan(self, data, d):
        n, gens = data
        other = [d.draw(perms(n)) for _ in range(2)]
        A, B = PermGroup(n, tuple(gens)), PermGroup(n, tuple(other))
        assert subgroup_intersection(A, B).elements == subgroup_intersection_scan(A, B)

    @given(perm_lists(max_degree=6))
    def test_center_matches_scan_and_sympy(self, data):
        n, gens = data
        G = PermGroup(n, tuple(gens))
        assert center(G).elements == center_scan(G)
        assert center(G).order() == sym_group(n, gens).center().order()

    @given(perm_lists(max_degree=5))
    def test_derived_matches_scan_and_sympy(self, data):
        n, gens = data
        G = PermGroup(n, tuple(gens))
        assert derived_subgroup(G).elements == derived_subgroup_scan(G)
        assert derived_subgroup(G).order() == sym_group(n, gens).derived_subgroup().order()

    @given(perm_lists(max_degree=6), st.randoms(use_true_random=False))
    def test_conjugators_match_scan(self, data, rnd):
        n, gens = data
        G = PermGroup(n, tuple(gens))
        c = G.random_element(rnd)
        ys = [x.conjugate(c) for x in gens]
        found = conjugators(G, gens, ys)
        assert found == conjugators_scan(G, gens, ys)
        assert c in found
        assert conjugator_search(G, gens, ys, "chain") == conjugator_search(G, gens, ys, "scan")

    def test_conjugator_absent(self):
        G = PermGroup.of([Perm.from_cycles("(1,2,3)", 3)])
        x = Perm.from_cycles("(1,2,3)", 3)
        assert conjugator_search(G, [x], [x.inverse()]) is None

    def test_paired_group(self):
        r = Perm.from_cycles("(1,2)", 2)
        s = Perm.from_cycles("(1,2,3)", 3)
        # C2 paired with C3 is cyclic of order 6
        assert paired_group([r], [s]).order() == 6

    def test_random_stress_against_sympy(self):
        rng = random.Random(7)
        for _ in range(20):
            n = rng.randrange(6, 11)
            gens = [Perm(rng.sample(range(n), n)) for _ in range(2)]
            assert PermGroup(n, tuple(gens)).order() == sym_group(n, gens).order()
