import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polydual import constructions as C
from polydual import cpr
from polydual.duality import EXTERNAL, INTERNAL, classify, dual
from polydual.errors import NotInternallySelfDual, NotPolytopal, RankMismatch
from polydual.mixer import (
    comix_image_criterion,
    int_to_ext,
    mix,
    mix_edge,
    mix_internally_self_dual,
    shared_dualizing_word,
)
from polydual.sggi import covers, schlafli_type

ALL_P_WORD = [0, 2, 1] * 6


def all_p(p):
    return cpr.to_sggi(cpr.family_all_p(p))


@pytest.fixture(scope="module")
def seven():
    return all_p(7)


class TestMix:
    def test_diagonal(self):
        P = C.torus44(3).sggi
        M = mix(P, P)
        assert M.order() == P.order()
        assert classify(M).kind == classify(P).kind

    def test_polygons(self):
        M = mix(C.polygon(5), C.polygon(7))
        assert schlafli_type(M) == [35]
        assert M.order() == 70

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatch):
            mix(C.polygon(5), C.simplex(3))

    @given(st.integers(2, 9), st.integers(2, 9))
    def test_covers_both(self, p, q):
        P, Q = C.polygon(p), C.polygon(q)
        M = mix(P, Q)
        assert covers(M, P) and covers(M, Q)
        assert M.component(0).gens == P.gens and M.component(1).gens == Q.gens
        o = M.order()
        assert (P.order() * Q.order()) % o == 0
        assert o % math.lcm(P.order(), Q.order()) == 0
        assert dual(M).gens == mix(dual(P), dual(Q)).gens

    def test_shared_word(self):
        P, Q = all_p(7), all_p(9)
        assert shared_dualizing_word(P, Q, ALL_P_WORD)
        assert mix_internally_self_dual(P, Q)

    def test_not_polytopal(self):
        bad = cpr.to_sggi(cpr.family_even_k(6, 1))
        with pytest.raises(NotPolytopal):
            mix_internally_self_dual(bad, bad)

    def test_polygon_mixes(self):
        assert mix_internally_self_dual(C.polygon(3), C.polygon(3))
        assert not mix_internally_self_dual(C.polygon(6), C.polygon(6))


class TestEdge:
    def test_order_doubles(self, seven):
        E = mix_edge(seven, 0)
        assert E.order() == 2 * seven.order()
        assert schlafli_type(E) == [14, 7]

    def test_twice_same_position(self, seven):
        E = mix_edge(seven, 0)
        assert mix_edge(E, 0).order() == E.order()

    def test_edge_mix_not_internal(self, seven):
        assert classify(mix_edge(seven, 0)).kind != INTERNAL

    def test_bad_position(self, seven):
        with pytest.raises(ValueError):
            mix_edge(seven, 1)

    def test_dual_edge(self):
        assert dual(C.edge()) == C.edge()


class TestIntToExt:
    def test_all_p_seven(self, seven):
        X = int_to_ext(seven)
        assert classify(X).kind == EXTERNAL
        assert X.order() == 4 * seven.order()
        assert schlafli_type(X) == [14, 14]

    def test_pentagon(self):
        X = int_to_ext(C.polygon(5))
        assert schlafli_type(X) == [10]
        assert classify(X).kind == EXTERNAL

    def test_even_type_keeps_type(self):
        P = cpr.to_sggi(cpr.family_even_k(6, 3))
        assert schlafli_type(int_to_ext(P)) == [6, 6]

    def test_rejects_external(self):
        with pytest.raises(NotInternallySelfDual):
            int_to_ext(C.polygon(4))

    def test_internal_with_external_mix(self, seven):
        # the mix covers the externally self-dual factor
        Q = int_to_ext(seven)
        P = mix_edge(mix_edge(seven, 0), 2)
        assert not mix_internally_self_dual(P, Q)


class TestComix:
    def test_polygons(self):
        # {5} and {15}: the comix is {5}
        P, Q = C.polygon(5), C.polygon(15)
        assert comix_image_criterion(P, Q, C.polygon(5))
        assert classify(mix(P, Q)).kind == INTERNAL

    def test_agrees_with_mix(self):
        P, Q = C.polygon(3), C.polygon(5)
        # comix of {3} and {5} is the rank-2 group of order 2
        from polydual.fpgroup import comix_presentation, coxeter, to_sggi
        Cx = to_sggi(comix_presentation(coxeter([3]), coxeter([5])))
        assert comix_image_criterion(P, Q, Cx) == (classify(mix(P, Q)).kind == INTERNAL)
