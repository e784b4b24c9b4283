"""Permutation representation graphs (CPR graphs).

Vertices are 1..k.  An edge ``a -i- b`` records that ρ_i swaps a and b, so the
i-labelled edges must form a partial matching.  Family constructors follow
the vertex numbering of the published figures so that displayed
permutations can be used verbatim as test vectors.
"""

from __future__ import annotations

import re
from collections.abc import Iterable
from dataclasses import dataclass, field

from .errors import BadParameter, IdentityGenerator, ParseError
from .permcore import Perm, PermGroup, _sym_conjugators
from .sggi import Sggi

Edge = tuple[int, int, int]


@dataclass(frozen=True)
class CprGraph:
    vertex_count: int
    rank: int
    edges: tuple[Edge, ...]
    meta: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        norm = tuple((min(a, b), max(a, b), i) for a, b, i in self.edges)
        object.__setattr__(self, "edges", norm)

    def edges_with_label(self, i: int) -> list[tuple[int, int]]:
        return [(a, b) for a, b, lab in self.edges if lab == i]


def validate(g: CprGraph) -> tuple[bool, str | None]:
    """Check ranges and the matching condition; returns (ok, first violation)."""
    if g.vertex_count < 1 or g.rank < 1:
        return False, "vertex count and rank must be positive"
    seen_edges = set()
    matched: dict[tuple[int, int], tuple[int, int]] = {}
    for a, b, i in g.edges:
        if not (1 <= a <= g.vertex_count and 1 <= b <= g.vertex_count):
            return False, f"edge {a} -{i}- {b} leaves 1..{g.vertex_count}"
        if a == b:
            return False, f"loop at vertex {a}"
        if not 0 <= i < g.rank:
            return False, f"label {i} outside 0..{g.rank - 1}"
        if (a, b, i) in seen_edges:
            return False, f"duplicate edge {a} -{i}- {b}"
        seen_edges.add((a, b, i))
        for v in (a, b):
            if (v, i) in matched:
                c, d = matched[(v, i)]
                return False, f"vertex {v} lies on two {i}-edges ({c},{d}) and ({a},{b})"
            matched[(v, i)] = (a, b)
    return True, None


def to_sggi(g: CprGraph) -> Sggi:
    ok, why = validate(g)
    if not ok:
        raise ValueError(why)
    gens = []
    for i in range(g.rank):
        pairs = g.edges_with_label(i)
        if not pairs:
            raise IdentityGenerator(i)
        gens.append(Perm.transpositions(pairs, g.vertex_count))
    return Sggi(tuple(gens), g.vertex_count)


def from_sggi(P: Sggi) -> CprGraph:
    edges = []
    for i, r in enumerate(P.gens):
        for cyc in r.cycles():
            edges.append((cyc[0], cyc[1], i))
    return CprGraph(P.degree, P.rank, tuple(edges))


# ---------------------------------------------------------------------------
# Text and DOT

_EDGE_RE = re.compile(r"^(\d+)\s*-\s*(\d+)\s*-\s*(\d+)$")
_HEADER_RE = re.compile(r"^cpr\s+rank\s*=\s*(\d+)\s+vertices\s*=\s*(\d+)$")


def serialize(g: CprGraph) -> str:
    lines = [f"cpr rank={g.rank} vertices={g.vertex_count}"]
    lines += [f"{a} -{i}- {b}" for a, b, i in g.edges]
    return "\n".join(lines) + "\n"


def parse(text: str) -> CprGraph:
    rank = vertices = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _HEADER_RE.match(line)
        if m:
            if edges or rank is not None:
                raise ParseError("header must come first", lineno)
            rank, vertices = int(m.group(1)), int(m.group(2))
            continue
        m = _EDGE_RE.match(line)
        if not m:
            raise ParseError(f"cannot read {line!r}", lineno)
        a, i, b = (int(x) for x in m.groups())
        edges.append((a, b, i))
    if not edges and rank is None:
        raise ParseError("no edges")
    if rank is None:
        rank = max(i for _, _, i in edges) + 1
        vertices = max(max(a, b) for a, b, _ in edges)
    return CprGraph(vertices, rank, tuple(edges))


def to_dot(g: CprGraph) -> str:
    lines = ["graph cpr {"]
    lines += [f"  {v};" for v in range(1, g.vertex_count + 1)]
    lines += [f'  {a} -- {b} [label="{i}"];' for a, b, i in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def dual_symmetries(g: CprGraph) -> list[Perm]:
    """Vertex bijections carrying every i-edge to an (n-1-i)-edge (0-based images)."""
    P = to_sggi(g)
    xs = list(P.gens)
    ys = list(reversed(P.gens))
    return sorted(_sym_conjugators(P.degree, xs, ys, [list(range(P.degree))]))


def components_without(g: CprGraph, label: int) -> list[list[int]]:
    """Connected components (1-based) after deleting every edge with the given label."""
    gens = [Perm.transpositions(g.edges_with_label(i), g.vertex_count)
            for i in range(g.rank) if i != label]
    grp = PermGroup(g.vertex_count, tuple(gens))
    return [[p + 1 for p in orb] for orb in grp.orbits()]


# ---------------------------------------------------------------------------
# Families


def _diamond() -> list[Edge]:
    # left diamond shared by the rank-n graphs: labels 0 and 2, then a 1-edge from 4
    return [(3, 4, 2), (3, 2, 0), (4, 1, 0), (2, 1, 2)]


def family_all_p(p: int) -> CprGraph:
    """Type {p,p} polyhedron on p points with dualizing element (ρ0ρ2ρ1)^6."""
    if p < 7:
        raise BadParameter("p must be at least 7")
    edges: list[Edge] = [
        (1, 2, 0), (3, 4, 0), (5, 6, 0),
        (3, 4, 2), (1, 5, 2), (2, 6, 2),
        (4, 5, 1), (2, 3, 1), (6, 7, 1),
    ]
    for v in range(7, p):
        if v % 2:
            edges += [(v, v + 1, 0), (v, v + 1, 2)]
        else:
            edges.append((v, v + 1, 1))
    return CprGraph(p, 3, tuple(edges))


def even_k_block(p: int) -> list[Edge]:
    """Edges of the building block on 2p-6 points."""
    edges: list[Edge] = []
    edges += [(a, a + 1, 0) for a in range(2, p - 5, 2)]
    edges += [(p - 4, p - 2, 0), (p - 3, p - 1, 0)]
    edges += [(a, a + 1, 1) for a in range(1, p - 4, 2)]
    edges += [(a, a + 1, 1) for a in range(p - 1, 2 * p - 6, 2)]
    edges += [(p - 4, p - 3, 2), (p - 2, p - 1, 2)]
    edges += [(a, a + 1, 2) for a in range(p, 2 * p - 7, 2)]
    return edges


def family_even_k(p: int, k: int) -> CprGraph:
    """N = k(p-4) blocks chained in a cycle by 1-edges (p-2, j) -- (p-3, j+1).

    Vertex (i, j) of block j is point (j-1)(2p-6) + i.
    """
    if p < 6 or p % 2:
        raise BadParameter("p must be even and at least 6")
    if k < 1 or k % 2 == 0:
        raise BadParameter("k must be a positive odd integer")
    size = 2 * p - 6
    N = k * (p - 4)

    def pt(i: int, j: int) -> int:
        return ((j - 1) % N) * size + i

    block = even_k_block(p)
    edges: list[Edge] = []
    for j in range(1, N + 1):
        edges += [(pt(a, j), pt(b, j), lab) for a, b, lab in block]
    for j in range(1, N + 1):
        edges.append((pt(p - 2, j), pt(p - 3, j + 1), 1))
    meta = {"p": p, "k": k, "blocks": N, "block_size": size}
    return CprGraph(N * size, 3, tuple(edges), meta)


def even_k_point(p: int, k: int, i: int, j: int) -> int:
    """1-based point of block vertex (i, j), with j taken mod N."""
    N = k * (p - 4)
    return ((j - 1) % N) * (2 * p - 6) + i


def family_rank_n(n: int) -> CprGraph:
    """Rank-n internally self-dual polytope on n+5 points."""
    if n < 5:
        raise BadParameter("n must be at least 5")
    edges = _diamond()
    edges += [(v, v + 1, v - 3) for v in range(4, n + 2)]
    edges += [
        (n + 2, n + 3, n - 3), (n + 2, n + 5, n - 1),
        (n + 3, n + 4, n - 1), (n + 5, n + 4, n - 3),
    ]
    return CprGraph(n + 5, n, tuple(edges))


def family_n3plus(n: int) -> CprGraph:
    """Diamond plus a simple chain: rank n on n+3 points."""
    if n < 4:
        raise BadParameter("n must be at least 4")
    edges = _diamond() + [(v, v + 1, v - 3) for v in range(4, n + 3)]
    return CprGraph(n + 3, n, tuple(edges))


def family_n4plus(n: int) -> CprGraph:
    """Diamond, chain, then the tail n-2 / n-1 / n-2: rank n on n+4 points."""
    if n < 6:
        raise BadParameter("n must be at least 6")
    edges = _diamond() + [(v, v + 1, v - 3) for v in range(4, n + 1)]
    edges += [(n + 1, n + 2, n - 2), (n + 2, n + 3, n - 1), (n + 3, n + 4, n - 2)]
    return CprGraph(n + 4, n, tuple(edges))


def family_petrie_simplex(n: int) -> CprGraph:
    """Path on n+3 points with labels 1, 0, 1, 2, ..., n-1, n-2."""
    if n < 5:
        raise BadParameter("n must be at least 5")
    labels = [1, 0] + list(range(1, n)) + [n - 2]
    edges = [(v + 1, v + 2, lab) for v, lab in enumerate(labels)]
    return CprGraph(n + 3, n, tuple(edges))


FAMILIES = {
    "all-p": family_all_p,
    "even-k": family_even_k,
    "rank-n": family_rank_n,
    "n3plus": family_n3plus,
    "n4plus": family_n4plus,
    "petrie-simplex": family_petrie_simplex,
}


def edges_from(pairs: Iterable[tuple[int, int]], label: int) -> list[Edge]:
    return [(a, b, label) for a, b in pairs]
