"""Explicit models: polygons, simplices, the edge, and cubic toroids.

Toroid vertices are the points of (Z/sZ)^n, numbered ``1 + sum x_i s^(i-1)``
(first coordinate fastest).  The generators act by

    ρ0: x1 -> 1 - x1,   ρ_i: swap x_i and x_{i+1} (0 < i < n),   ρ_n: x_n -> -x_n.

The vertex action is faithful once s >= 3.  For s = 2 it is not, so the model
then acts on flags instead; a flag is a vertex together with a signed frame
(a_1, ..., a_n), its i-face being the cube spanned from the vertex by
a_1..a_i.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations, product

from .errors import BadParameter, SggiError
from .permcore import Perm
from .sggi import Sggi

# Face names of the labelled tetrahedron used in the worked simplex example.
SIMPLEX_EDGE_NAMES = {
    frozenset({1, 2}): "a", frozenset({1, 3}): "b", frozenset({1, 4}): "c",
    frozenset({2, 3}): "d", frozenset({2, 4}): "e", frozenset({3, 4}): "f",
}
SIMPLEX_FACET_NAMES = {
    frozenset({1, 2, 4}): "L", frozenset({1, 2, 3}): "D",
    frozenset({1, 3, 4}): "F", frozenset({2, 3, 4}): "R",
}


def edge() -> Sggi:
    return Sggi((Perm.from_cycles("(1,2)", 2),), 2)


def polygon(p: int) -> Sggi:
    """{p} acting on its vertices 0..p-1 (points 1..p); base edge {1, 2}."""
    if not isinstance(p, int) or p < 2:
        raise BadParameter("p must be an integer >= 2")
    r0 = Perm((1 - v) % p for v in range(p))
    r1 = Perm((-v) % p for v in range(p))
    if p == 2:
        # the digon: vertices alone do not separate the two edges
        return Sggi((Perm.from_cycles("(1,2)(3,4)", 4), Perm.from_cycles("(1,3)(2,4)", 4)), 4)
    return Sggi((r0, r1), p)


def polygon_witness_word(p: int) -> list[int]:
    """(ρ0ρ1)^((p-1)/2) ρ0 for odd p."""
    if p % 2 == 0:
        raise BadParameter("only odd polygons have this dualizing word")
    return [0, 1] * ((p - 1) // 2) + [0]


def simplex(n: int) -> Sggi:
    """The n-simplex: S_{n+1} with ρ_i = (i+1, i+2)."""
    if n < 1:
        raise BadParameter("n must be positive")
    return Sggi(tuple(Perm.from_cycles([[i + 1, i + 2]], n + 1) for i in range(n)), n + 1)


def simplex_labelled() -> Sggi:
    """The 3-simplex with vertex actions ρ0 = (1,2), ρ1 = (2,4), ρ2 = (3,4)."""
    return Sggi.from_cycles(["(1,2)", "(2,4)", "(3,4)"], 4)


def simplex_face_names(L, flag) -> tuple[str, ...]:
    """Names of the faces of a flag of ``build_lattice(simplex_labelled())``."""
    def vertices(i, a):
        return frozenset(L.point_of_vertex(v) + 1 for v in L.vertex_set(i, a))

    names = [str(min(vertices(0, flag[0])))]
    names.append(SIMPLEX_EDGE_NAMES[vertices(1, flag[1])])
    names.append(SIMPLEX_FACET_NAMES[vertices(2, flag[2])])
    return tuple(names)


def bubble_sort_word(n: int) -> list[int]:
    """(ρ0ρ1…ρ_{n-1})(ρ0…ρ_{n-2})…(ρ0ρ1)(ρ0)."""
    word: list[int] = []
    for top in range(n, 0, -1):
        word += list(range(top))
    return word


# ---------------------------------------------------------------------------
# Cubic toroids


def _affine(n: int, s: int, i: int):
    """Generator i as (linear map on vectors, map on points)."""
    if i == 0:
        def lin(a):
            return (-a[0],) + a[1:]

        def pt(x):
            return ((1 - x[0]) % s,) + x[1:]
    elif i == n:
        def lin(a):
            return a[:-1] + (-a[-1],)

        def pt(x):
            return x[:-1] + ((-x[-1]) % s,)
    else:
        def lin(a):
            return a[: i - 1] + (a[i], a[i - 1]) + a[i + 1:]

        pt = lin
    return lin, pt


@dataclass(frozen=True)
class ToroidModel:
    n: int
    s: int

    def __post_init__(self):
        if self.n < 1 or self.s < 2:
            raise BadParameter("need n >= 1 and s >= 2")

    # vertex indexing --------------------------------------------------

    def vertex_index(self, x) -> int:
        """0-based point of a coordinate vector."""
        return sum((c % self.s) * self.s ** k for k, c in enumerate(x))

    def vertex_coords(self, idx: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.n):
            idx, c = divmod(idx, self.s)
            out.append(c)
        return tuple(out)

    @cached_property
    def vertices(self) -> list[tuple[int, ...]]:
        return [self.vertex_coords(k) for k in range(self.s ** self.n)]

    @cached_property
    def vertex_gens(self) -> tuple[Perm, ...]:
        """The generator actions on vertices (some may be trivial when s = 2)."""
        gens = []
        for i in range(self.n + 1):
            _, pt = _affine(self.n, self.s, i)
            gens.append(Perm(self.vertex_index(pt(x)) for x in self.vertices))
        return tuple(gens)

    @cached_property
    def vertex_sggi(self) -> Sggi | None:
        """The vertex action as an Sggi, or None when a generator acts trivially."""
        try:
            return Sggi(self.vertex_gens, len(self.vertices))
        except SggiError:
            return None

    # flags ------------------------------------------------------------

    @cached_property
    def flags(self) -> list[tuple]:
        n = self.n
        frames = []
        for perm in permutations(range(n)):
            for signs in product((1, -1), repeat=n):
                frames.append(tuple(
                    tuple(signs[k] if j == perm[k] else 0 for j in range(n)) for k in range(n)
                ))
        return [(x, fr) for x in self.vertices for fr in sorted(frames, reverse=True)]

    @cached_property
    def base_flag(self) -> tuple:
        e = tuple(tuple(1 if j == k else 0 for j in range(self.n)) for k in range(self.n))
        return ((0,) * self.n, e)

    @cached_property
    def flag_sggi(self) -> Sggi:
        index = {f: k for k, f in enumerate(self.flags)}
        gens = []
        for i in range(self.n + 1):
            lin, pt = _affine(self.n, self.s, i)
            gens.append(Perm(index[(pt(x), tuple(lin(a) for a in fr))] for x, fr in self.flags))
        return Sggi(tuple(gens), len(self.flags))

    def flag_count(self) -> int:
        return self.s ** self.n * 2 ** self.n * math.factorial(self.n)

    @cached_property
    def on_flags(self) -> bool:
        """True when the vertex action is not faithful."""
        V = self.vertex_sggi
        return V is None or V.order() != self.flag_count()

    @property
    def sggi(self) -> Sggi:
        return self.flag_sggi if self.on_flags else self.vertex_sggi

    @property
    def base_point(self) -> int:
        """0-based point of ``sggi`` representing the base vertex (or base flag)."""
        if self.on_flags:
            return self.flags.index(self.base_flag)
        return 0

    def point_vertex(self, point: int) -> tuple[int, ...]:
        """Coordinates of the vertex carried by a 0-based point of ``sggi``."""
        if self.on_flags:
            return self.flags[point][0]
        return self.vertex_coords(point)


def toroid_face(model: ToroidModel, L, i: int, a: int) -> list[tuple[int, ...]]:
    """Sorted vertex coordinates of the i-face ``a`` of ``build_lattice(model.sggi)``."""
    return sorted(model.point_vertex(L.point_of_vertex(v, model.base_point))
                  for v in L.vertex_set(i, a))


def torus44(s: int) -> ToroidModel:
    return ToroidModel(2, s)


def cubic_toroid(n: int, s: int) -> ToroidModel:
    if n < 2:
        raise BadParameter("n must be at least 2")
    return ToroidModel(n, s)


def geometric_flag_count(n: int, s: int) -> int:
    """Maximal chains of cells in the cubical tessellation of R^n / sZ^n.

    A cell is (corner mod s, set of axes); (c, A) lies in (d, B) when A ⊆ B,
    c agrees with d off B \\ A, and c - d is 0 or 1 (mod s) on B \\ A.
    Independent of the group actions above.
    """
    if s < 2:
        raise BadParameter("s must be at least 2")
    corners = list(product(range(s), repeat=n))

    def below(c, A, d, B):
        for j in range(n):
            diff = (c[j] - d[j]) % s
            if j in B and j not in A:
                if diff not in (0, 1 % s):
                    return False
            elif diff != 0:
                return False
        return True

    def count(c, A) -> int:
        if len(A) == n:
            return 1
        total = 0
        for j in range(n):
            if j in A:
                continue
            B = A | {j}
            for step in (0, 1):
                d = tuple((c[k] - step) % s if k == j else c[k] for k in range(n))
                if below(c, A, d, B):
                    total += count(d, B)
        return total

    return sum(count(c, frozenset()) for c in corners)


def cells(n: int, s: int) -> dict[int, int]:
    """Number of cells of each dimension, for the counting oracle."""
    return {i: s ** n * len(list(combinations(range(n), i))) for i in range(n + 1)}
