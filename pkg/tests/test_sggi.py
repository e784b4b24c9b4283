from itertools import combinations

import pytest
from hypothesis import given
from sympy.combinatorics import Permutation, PermutationGroup

from conftest import sggis
from polydual import constructions as C
from polydual import cpr
from polydual.errors import (
    IdentityGenerator,
    NotACovering,
    NotCommuting,
    NotInvolution,
    ParseError,
)
from polydual.permcore import Perm
from polydual.sggi import (
    Sggi,
    abelianization_identifies,
    block_systems,
    check_intersection,
    check_intersection_exhaustive,
    check_report,
    check_string,
    covers,
    generated,
    is_string_c_group,
    parabolic,
    parse_text,
    quotient_criterion,
    quotients,
    restrict,
    schlafli_type,
    to_text,
)


def P(*cycles, degree):
    return [Perm.from_cycles(c, degree) for c in cycles]


def sympy_intersection_ok(S: Sggi) -> bool:
    """Oracle: every (I, J) by explicit element sets."""
    def elems(I):
        gens = [Permutation(list(S.gens[i])) for i in I]
        if not gens:
            return {tuple(range(S.degree))}
        return {tuple(g.array_form) for g in PermutationGroup(gens).elements}

    subsets = [c for k in range(S.rank + 1) for c in combinations(range(S.rank), k)]
    cache = {I: elems(I) for I in subsets}
    return all(cache[I] & cache[J] == cache[tuple(sorted(set(I) & set(J)))]
               for I in subsets for J in subsets)


class TestValidation:
    def test_simplex_table_generators(self):
        S = check_string(P("(1,2)", "(2,4)", "(3,4)", degree=4))
        assert S.rank == 3 and S.degree == 4

    def test_rank_two_equal_generators_pass_string_check(self):
        assert check_string(P("(1,2)", "(1,2)", degree=2)).rank == 2

    def test_not_commuting(self):
        with pytest.raises(NotCommuting) as err:
            check_string(P("(1,2)", "(3,4)", "(1,3)", degree=4))
        assert (err.value.i, err.value.j) == (0, 2)

    def test_not_involution(self):
        with pytest.raises(NotInvolution):
            check_string(P("(1,2,3)", "(1,2)", degree=3))

    def test_identity_generator(self):
        with pytest.raises(IdentityGenerator):
            check_string(P("()", "(1,2)", degree=3))


class TestStructure:
    def test_schlafli(self):
        assert schlafli_type(C.simplex_labelled()) == [3, 3]
        assert schlafli_type(cpr.to_sggi(cpr.family_all_p(9))) == [9, 9]
        assert schlafli_type(C.torus44(5).sggi) == [4, 4]

    @given(sggis())
    def test_schlafli_entries(self, S):
        t = schlafli_type(S)
        assert all(p >= 1 for p in t)
        for i, j in combinations(range(S.rank), 2):
            if j - i >= 2:
                assert (S.gens[i] * S.gens[j]).order() <= 2

    def test_parabolics(self):
        S = C.simplex(3)
        assert parabolic(S, set()).order() == 24
        assert parabolic(S, {2}).order() == 6
        assert parabolic(S, {0, 1}).order() == 2
        assert parabolic(S, {0, 1, 2}).order() == 1
        assert generated(S, [0, 1]).order() == 6


class TestIntersection:
    def test_simplex(self):
        assert is_string_c_group(C.simplex(3))

    @pytest.mark.parametrize("p", range(7, 13))
    def test_all_p_graphs(self, p):
        assert is_string_c_group(cpr.to_sggi(cpr.family_all_p(p)))

    def test_failure_has_witness(self):
        S = Sggi(tuple(P("(1,2)", "(2,3)", "(1,2)", degree=3)), 3)
        res = check_intersection(S)
        assert not res
        assert (res.I, res.J) == ((0, 1), (1, 2))
        assert not generated(S, [1]).contains(res.element)
        assert generated(S, [0, 1]).contains(res.element)
        assert res.to_json()["witness"]["I"] == [0, 1]

    @given(sggis())
    def test_fast_path_matches_exhaustive_and_sympy(self, S):
        fast = check_intersection(S).ok
        assert fast == check_intersection_exhaustive(S).ok
        assert fast == sympy_intersection_ok(S)

    def test_rank_three_corpus_fast_path(self):
        from polydual.corpus import default_corpus
        for inst in default_corpus():
            if inst.sggi.rank == 3 and inst.sggi.order() <= 50000:
                assert check_intersection(inst.sggi).ok == check_intersection_exhaustive(inst.sggi).ok


class TestCovers:
    def test_reflexive(self):
        S = C.torus44(3).sggi
        assert covers(S, S)
        assert quotient_criterion(S, S)

    def test_block_quotient(self):
        S = C.polygon(6)
        # {6} acts on the pairs of opposite vertices as {3}
        blocks = [b for b in block_systems(S) if len(b) == 3]
        assert blocks
        Q = [q for q in quotients(S) if q.degree == 3][0]
        assert covers(S, Q)
        assert not covers(Q, S)

    def test_unrelated(self):
        T = C.torus44(3).sggi
        A = cpr.to_sggi(cpr.family_all_p(7))
        assert not covers(T, A)

    def test_quotient_criterion_larger_facet(self):
        # {4,4}_(2,0) onto a map of type {2,4}: the square facet collapses
        G = C.torus44(2).sggi
        L = [q for q in quotients(G) if schlafli_type(q) == [2, 4]][0]
        assert covers(G, L)
        assert not quotient_criterion(G, L)

    def test_torus_cover_certified(self):
        from polydual import fpgroup
        G = fpgroup.to_sggi(fpgroup.torus_presentation(6))
        L = C.torus44(3).sggi
        assert covers(G, L)
        assert quotient_criterion(G, L)

    def test_not_a_covering(self):
        with pytest.raises(NotACovering):
            quotient_criterion(C.torus44(3).sggi, C.torus44(4).sggi)

    def test_restrict_orbit(self):
        S = Sggi(tuple(P("(1,2)(4,5)", "(2,3)(5,6)", degree=6)), 6)
        R = restrict(S, [0, 1, 2])
        assert R.order() == 6 and covers(S, R) and covers(R, S)


class TestAbelianization:
    def test_trivial(self):
        assert abelianization_identifies(C.torus44(4).sggi, 1, 1)

    def test_simplex(self):
        assert abelianization_identifies(C.simplex(3), 0, 2)

    def test_even_torus(self):
        assert not abelianization_identifies(C.torus44(4).sggi, 0, 2)


class TestText:
    @given(sggis())
    def test_round_trip(self, S):
        assert parse_text(to_text(S)) == S

    def test_header_errors(self):
        with pytest.raises(ParseError):
            parse_text("rank 2\n(1,2)\n(2,3)\n")
        with pytest.raises(ParseError) as err:
            parse_text("rank 2 degree 3\n(1,2)\n(2,5)\n")
        assert err.value.line == 3
        with pytest.raises(ParseError):
            parse_text("rank 3 degree 3\n(1,2)\n")

    def test_report(self):
        rep = check_report(C.simplex(3))
        assert rep == {"valid": True, "rank": 3, "degree": 4, "order": 24,
                       "schlafli": [3, 3], "intersection": {"ok": True}}
