import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from polydual.permcore import Perm

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def perms(draw, degree=None, max_degree=8):
    n = degree if degree is not None else draw(st.integers(1, max_degree))
    return Perm(draw(st.permutations(range(n))))


@st.composite
def perm_lists(draw, count=st.integers(1, 3), max_degree=7):
    n = draw(st.integers(2, max_degree))
    k = draw(count)
    return n, [draw(perms(n)) for _ in range(k)]


@st.composite
def involutions(draw, degree):
    """A random fixed-point-partial matching on range(degree)."""
    pts = draw(st.permutations(range(degree)))
    pairs = draw(st.integers(0, degree // 2))
    img = list(range(degree))
    for a, b in zip(pts[: 2 * pairs : 2], pts[1 : 2 * pairs : 2]):
        img[a], img[b] = b, a
    return Perm(img)


_INVOLUTIONS: dict[int, list[Perm]] = {}


def all_involutions(n: int) -> list[Perm]:
    if n not in _INVOLUTIONS:
        from itertools import permutations
        _INVOLUTIONS[n] = [p for p in map(Perm, permutations(range(n)))
                           if (p * p).is_identity() and not p.is_identity()]
    return _INVOLUTIONS[n]


@st.composite
def sggis(draw, rank=st.integers(2, 4), degree=st.integers(3, 6)):
    """Random string groups generated by involutions (possibly not C-groups)."""
    from hypothesis import assume

    from polydual.sggi import Sggi

    n, k = draw(rank), draw(degree)
    gens: list[Perm] = []
    for i in range(n):
        cands = [g for g in all_involutions(k)
                 if all(g * gens[j] == gens[j] * g for j in range(i - 1))]
        assume(cands)
        gens.append(draw(st.sampled_from(cands)))
    return Sggi(tuple(gens), k)
