"""Exact permutation arithmetic and bounded permutation-group search.

Permutations act on the right: ``a * b`` applies ``a`` first and then ``b``,
so ``(a * b)[x] == b[a[x]]``.  Internally points are 0-based; every textual
form (cycle notation, ``image``) is 1-based.

Two engines sit side by side.  Breadth-first closure (``PermGroup.elements``)
materializes a group and is capped.  A Schreier-Sims stabilizer chain
(``StabChain``) gives orders and membership for groups far too large to list;
subgroup intersection and conjugator search are built on it.  The exhaustive
versions are kept as ``*_scan`` functions and serve as test oracles.
"""

from __future__ import annotations

import math
import re
from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property, reduce

from .config import default_element_cap
from .errors import CapExceeded, DegreeMismatch, ParseError


class Perm(tuple):
    """A permutation of ``{0, ..., n-1}`` stored as its image tuple."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int] = ()):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images!r}")
        return tuple.__new__(cls, images)

    @classmethod
    def _raw(cls, images: Iterable[int]) -> Perm:
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, degree: int) -> Perm:
        return tuple.__new__(cls, range(degree))

    @classmethod
    def from_cycles(cls, cycles: str | Sequence[Sequence[int]], degree: int) -> Perm:
        """Build from 1-based cycles, either as text ``(1,7,6)(2,4)`` or lists."""
        if isinstance(cycles, str):
            cycles = parse_cycles(cycles)
        images = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= degree:
                    raise ValueError(f"point {x} outside 1..{degree}")
                if x in seen:
                    raise ValueError(f"point {x} appears twice")
                seen.add(x)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                images[a - 1] = b - 1
        return tuple.__new__(cls, images)

    @classmethod
    def transpositions(cls, pairs: Iterable[tuple[int, int]], degree: int) -> Perm:
        """Product of disjoint 1-based transpositions."""
        images = list(range(degree))
        for a, b in pairs:
            if images[a - 1] != a - 1 or images[b - 1] != b - 1 or a == b:
                raise ValueError(f"transpositions overlap at ({a},{b})")
            images[a - 1], images[b - 1] = b - 1, a - 1
        return tuple.__new__(cls, images)

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other: Perm) -> Perm:
        if len(self) != len(other):
            raise DegreeMismatch(f"degrees {len(self)} and {len(other)}")
        return tuple.__new__(Perm, map(other.__getitem__, self))

    __rmul__ = None  # tuple repetition must never sneak in

    def __pow__(self, k: int) -> Perm:
        if k < 0:
            return self.inverse() ** (-k)
        result = Perm.identity(len(self))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> Perm:
        inv = [0] * len(self)
        for i, x in enumerate(self):
            inv[x] = i
        return tuple.__new__(Perm, inv)

    def conjugate(self, by: Perm) -> Perm:
        """``by^-1 * self * by``."""
        return by.inverse() * self * by

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self))

    def image(self, point: int) -> int:
        """1-based image of a 1-based point."""
        return self[point - 1] + 1

    def support(self) -> list[int]:
        return [i + 1 for i, x in enumerate(self) if i != x]

    def cycles(self) -> list[list[int]]:
        """Disjoint 1-based cycles, each starting at its minimum, sorted; fixed points omitted."""
        seen = [False] * len(self)
        out = []
        for start in range(len(self)):
            if seen[start] or self[start] == start:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x + 1)
                x = self[x]
            out.append(cyc)
        return out

    def order(self) -> int:
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Perm.from_cycles({str(self)!r}, {len(self)})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[list[int]]:
    """Parse ``(1,7,6)(2,4,5,3)``; whitespace-insensitive, ``()`` is the identity."""
    compact = re.sub(r"\s+", " ", text.strip())
    if not compact:
        raise ParseError("empty permutation text")
    leftover = _CYCLE_RE.sub("", compact).strip()
    if leftover:
        raise ParseError(f"unexpected text {leftover!r} in {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(compact):
        parts = [p for p in re.split(r"[,\s]+", body.strip()) if p]
        if not parts:
            continue
        try:
            cycles.append([int(p) for p in parts])
        except ValueError:
            raise ParseError(f"bad cycle ({body})") from None
    return cycles


def compose(a: Perm, b: Perm) -> Perm:
    """``x -> b(a(x))``."""
    return a * b


def order_of(g: Perm) -> int:
    return g.order()


def cycles(g: Perm) -> list[list[int]]:
    return g.cycles()


def evaluate_word(gens: Sequence[Perm], word: Iterable[int], degree: int | None = None) -> Perm:
    """Product ``gens[w0] * gens[w1] * ...`` (left to right)."""
    if degree is None:
        degree = len(gens[0]) if gens else 0
    result = Perm.identity(degree)
    for i in word:
        result = result * gens[i]
    return result


# ---------------------------------------------------------------------------
# Schreier-Sims


class StabChain:
    """Base and strong generating set built by deterministic Schreier-Sims.

    ``levels[i]`` holds the strong generators fixing ``base[:i]`` and a
    transversal mapping each point of the basic orbit of ``base[i]`` to an
    element carrying ``base[i]`` there.
    """

    def __init__(self, degree: int, gens: Iterable[Perm], base: Sequence[int] = ()):
        self.degree = degree
        self.gens = [g for g in gens if not g.is_identity()]
        self.base: list[int] = list(base)
        self.strong: list[list[Perm]] = []
        self.trans: list[dict[int, Perm]] = []
        self.trans_inv: list[dict[int, Perm]] = []
        self._build()

    def _orbit(self, level: int) -> None:
        b = self.base[level]
        ident = Perm.identity(self.degree)
        t = {b: ident}
        q = deque([b])
        gens = self.strong[level]
        while q:
            pt = q.popleft()
            u = t[pt]
            for s in gens:
                nxt = s[pt]
                if nxt not in t:
                    t[nxt] = u * s
                    q.append(nxt)
        self.trans[level] = t
        self.trans_inv[level] = {pt: u.inverse() for pt, u in t.items()}

    def _new_level(self) -> None:
        self.strong.append([])
        self.trans.append({})
        self.trans_inv.append({})

    def _build(self) -> None:
        for g in self.gens:
            if all(g[b] == b for b in self.base):
                self.base.append(next(x for x in range(self.degree) if g[x] != x))
        for i in range(len(self.base)):
            self._new_level()
            fixed = self.base[:i]
            self.strong[i] = [g for g in self.gens if all(g[b] == b for b in fixed)]
            self._orbit(i)
        i = len(self.base) - 1
        while i >= 0:
            done = True
            t, tinv = self.trans[i], self.trans_inv[i]
            for beta, u in list(t.items()):
                for s in self.strong[i]:
                    h = u * s * tinv[s[beta]]
                    if h.is_identity():
                        continue
                    res, j = self._strip(h, i + 1)
                    if j < len(self.base) or not res.is_identity():
                        if j == len(self.base):
                            self.base.append(next(x for x in range(self.degree) if res[x] != x))
                            self._new_level()
                        for lvl in range(i + 1, j + 1):
                            self.strong[lvl].append(res)
                            self._orbit(lvl)
                        i = j
                        done = False
                        break
                if not done:
                    break
            if done:
                i -= 1

    def _strip(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        for j in range(start, len(self.base)):
            x = g[self.base[j]]
            tinv = self.trans_inv[j]
            if x not in tinv:
                return g, j
            g = g * tinv[x]
        return g, len(self.base)

    def order(self) -> int:
        return math.prod(len(t) for t in self.trans)

    def contains(self, g: Perm) -> bool:
        if len(g) != self.degree:
            return False
        res, j = self._strip(g)
        return j == len(self.base) and res.is_identity()


# ---------------------------------------------------------------------------
# Groups


@dataclass(frozen=True)
class PermGroup:
    """Subgroup of Sym(degree) given by generators."""

    degree: int
    generators: tuple[Perm, ...]
    element_cap: int = field(default_factory=default_element_cap, compare=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        for g in gens:
            if len(g) != self.degree:
                raise DegreeMismatch(f"generator of degree {len(g)} in group of degree {self.degree}")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def of(cls, gens: Sequence[Perm], degree: int | None = None, element_cap: int | None = None) -> PermGroup:
        if degree is None:
            if not gens:
                raise ValueError("degree required for an empty generating set")
            degree = len(gens[0])
        if element_cap is None:
            return cls(degree, tuple(gens))
        return cls(degree, tuple(gens), element_cap)

    @classmethod
    def from_elements(cls, elements: Iterable[Perm], degree: int, element_cap: int | None = None) -> PermGroup:
        """Group whose element set is known; a small generating set is extracted."""
        elements = set(elements)
        gens: list[Perm] = []
        chain = StabChain(degree, [])
        for g in sorted(elements):
            if not chain.contains(g):
                gens.append(g)
                chain = StabChain(degree, gens)
        grp = cls.of(gens, degree, element_cap)
        grp.__dict__["chain"] = chain
        grp.__dict__["elements"] = frozenset(elements) | {Perm.identity(degree)}
        return grp

    @cached_property
    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    @cached_property
    def chain(self) -> StabChain:
        return StabChain(self.degree, self.generators)

    @cached_property
    def elements(self) -> frozenset[Perm]:
        """Every element, by breadth-first closure; raises CapExceeded past the cap."""
        return frozenset(self._closure()[0])

    def _closure(self) -> tuple[list[Perm], dict[Perm, tuple[Perm, int] | None]]:
        gens = [g for g in dict.fromkeys(self.generators) if not g.is_identity()]
        ident = self.identity
        parent: dict[Perm, tuple[Perm, int] | None] = {ident: None}
        order = [ident]
        q = deque([ident])
        cap = self.element_cap
        gi = [(self.generators.index(g), g) for g in gens]
        while q:
            x = q.popleft()
            for idx, g in gi:
                y = x * g
                if y not in parent:
                    parent[y] = (x, idx)
                    order.append(y)
                    if len(order) > cap:
                        raise CapExceeded("group enumeration", cap)
                    q.append(y)
        return order, parent

    @cached_property
    def _words(self) -> dict[Perm, tuple[Perm, int] | None]:
        return self._closure()[1]

    def word_for(self, g: Perm) -> list[int]:
        """A shortest word (generator indices, left to right) evaluating to ``g``."""
        parent = self._words
        if g not in parent:
            raise KeyError(f"{g} is not in the group")
        word = []
        while parent[g] is not None:
            g, idx = parent[g]
            word.append(idx)
        return word[::-1]

    def order(self) -> int:
        if "elements" in self.__dict__:
            return len(self.__dict__["elements"])
        return self.chain.order()

    def __len__(self) -> int:
        return self.order()

    def contains(self, g: Perm) -> bool:
        if "elements" in self.__dict__:
            return g in self.__dict__["elements"]
        return self.chain.contains(g)

    __contains__ = contains

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self.generators)

    def orbits(self) -> list[list[int]]:
        """0-based orbits, each sorted, ordered by minimum."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            orb = [start]
            seen[start] = True
            i = 0
            while i < len(orb):
                x = orb[i]
                i += 1
                for g in self.generators:
                    y = g[x]
                    if not seen[y]:
                        seen[y] = True
                        orb.append(y)
            out.append(sorted(orb))
        return out

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def subgroup(self, gens: Sequence[Perm]) -> PermGroup:
        return PermGroup(self.degree, tuple(gens), self.element_cap)

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return all(other.contains(g) for g in self.generators)

    def same_group(self, other: PermGroup) -> bool:
        return self.order() == other.order() and self.is_subgroup_of(other)

    def random_element(self, rng) -> Perm:
        """Uniform random element via the stabilizer chain."""
        g = self.identity
        for t in self.chain.trans:
            g = t[rng.choice(sorted(t))] * g
        return g


def direct_sum(a: Perm, b: Perm) -> Perm:
    """``a`` on the first ``len(a)`` points, ``b`` shifted onto the rest."""
    shift = len(a)
    return Perm._raw(tuple(a) + tuple(x + shift for x in b))


def paired_group(xs: Sequence[Perm], ys: Sequence[Perm], element_cap: int | None = None) -> PermGroup:
    """Subgroup of the direct product generated by the pairs (x_i, y_i), acting on the disjoint union."""
    if len(xs) != len(ys):
        raise ValueError("xs and ys differ in length")
    degree = len(xs[0]) + len(ys[0]) if xs else 0
    return PermGroup.of([direct_sum(x, y) for x, y in zip(xs, ys)], degree, element_cap)


def enumerate_group(G: PermGroup) -> frozenset[Perm]:
    return G.elements


def _check_same_degree(*groups: PermGroup) -> int:
    degrees = {G.degree for G in groups}
    if len(degrees) != 1:
        raise DegreeMismatch(f"degrees {sorted(degrees)}")
    return degrees.pop()


# ---------------------------------------------------------------------------
# Subgroup intersection


def iter_intersection(A: PermGroup, B: PermGroup) -> Iterator[Perm]:
    """Yield the elements of A ∩ B by backtracking over a common base.

    Both stabilizer chains are built on the same base; a partial base image
    is extended only while some element of B shares it.
    """
    degree = _check_same_degree(A, B)
    cA = StabChain(degree, A.generators)
    cB = StabChain(degree, B.generators, cA.base)
    cA = StabChain(degree, A.generators, cB.base)
    base = cA.base
    m = len(base)
    ident = Perm.identity(degree)

    def dfs(level: int, s: Perm, t: Perm) -> Iterator[Perm]:
        if level == m:
            if s == t:
                yield s
            return
        t_inv = t.inverse()
        tB = cB.trans[level]
        for delta, u in sorted(cA.trans[level].items()):
            gamma = s[delta]
            pre = t_inv[gamma]
            v = tB.get(pre)
            if v is None:
                continue
            yield from dfs(level + 1, u * s, v * t)

    yield from dfs(0, ident, ident)


def subgroup_intersection(A: PermGroup, B: PermGroup, limit: int | None = None) -> PermGroup:
    """A ∩ B with its element set cached.

    ``limit`` stops early once more than ``limit`` elements have been found;
    the returned group is then a subgroup of the intersection of order > limit.
    """
    cap = min(A.element_cap, B.element_cap)
    found = []
    for g in iter_intersection(A, B):
        found.append(g)
        if limit is not None and len(found) > limit:
            break
        if len(found) > cap:
            raise CapExceeded("intersection enumeration", cap)
    return PermGroup.from_elements(found, A.degree, cap)


def subgroup_intersection_scan(A: PermGroup, B: PermGroup) -> frozenset[Perm]:
    """Oracle: literal set intersection of the two enumerations."""
    _check_same_degree(A, B)
    return A.elements & B.elements


# ---------------------------------------------------------------------------
# Conjugator search


def _sym_conjugators(degree: int, xs: Sequence[Perm], ys: Sequence[Perm],
                     blocks: list[list[int]]) -> Iterator[Perm]:
    """All c in Sym(degree) with c^-1 x_i c = y_i that map each block to itself.

    The condition is pointwise ``c[x[a]] == y[c[a]]``; fixing ``c`` on one
    point of an ⟨xs⟩-orbit determines it on the whole orbit.
    """
    block_of = {}
    for bi, blk in enumerate(blocks):
        for p in blk:
            block_of[p] = bi
    gx = PermGroup.of(list(xs), degree) if xs else PermGroup(degree, ())
    xorbits = gx.orbits()

    def extend(c: list[int | None], used: list[bool], start: int, target: int) -> list[tuple[int, int]] | None:
        assigned = []
        c[start] = target
        used[target] = True
        assigned.append((start, target))
        q = deque([start])
        ok = True
        while q and ok:
            a = q.popleft()
            ca = c[a]
            for x, y in zip(xs, ys):
                a2, t2 = x[a], y[ca]
                if c[a2] is None:
                    if used[t2] or block_of[t2] != block_of[a2]:
                        ok = False
                        break
                    c[a2] = t2
                    used[t2] = True
                    assigned.append((a2, t2))
                    q.append(a2)
                elif c[a2] != t2:
                    ok = False
                    break
        if ok:
            return assigned
        for a, t in assigned:
            c[a] = None
            used[t] = False
        return None

    c: list[int | None] = [None] * degree
    used = [False] * degree

    def rec(k: int) -> Iterator[Perm]:
        if k == len(xorbits):
            yield Perm._raw(c)
            return
        start = xorbits[k][0]
        size = len(xorbits[k])
        for target in blocks[block_of[start]]:
            if used[target]:
                continue
            assigned = extend(c, used, start, target)
            if assigned is None:
                continue
            if len(assigned) == size:
                yield from rec(k + 1)
            for a, t in assigned:
                c[a] = None
                used[t] = False

    yield from rec(0)


def conjugators(G: PermGroup, xs: Sequence[Perm], ys: Sequence[Perm]) -> list[Perm]:
    """Every g in G with g^-1 x_i g = y_i for all i, sorted by image sequence."""
    if len(xs) != len(ys):
        raise ValueError("xs and ys differ in length")
    _check_same_degree(G, PermGroup.of(list(xs) + list(ys), G.degree))
    blocks = G.orbits()
    found = [c for c in _sym_conjugators(G.degree, xs, ys, blocks) if G.contains(c)]
    return sorted(found)


def conjugators_scan(G: PermGroup, xs: Sequence[Perm], ys: Sequence[Perm]) -> list[Perm]:
    """Oracle: filter the full enumeration of G."""
    out = []
    for g in G.elements:
        if all(x * g == g * y for x, y in zip(xs, ys)):
            out.append(g)
    return sorted(out)


def conjugator_search(G: PermGroup, xs: Sequence[Perm], ys: Sequence[Perm],
                      strategy: str = "auto") -> Perm | None:
    """The lexicographically least g in G with g^-1 x_i g = y_i, or None.

    ``strategy`` is ``"scan"`` (exhaustive over the enumeration), ``"chain"``
    (candidates from the orbit structure, filtered by stabilizer-chain
    membership) or ``"auto"`` (chain).  Both return the same answer.
    """
    if strategy == "scan":
        found = conjugators_scan(G, xs, ys)
    elif strategy in ("chain", "auto"):
        found = conjugators(G, xs, ys)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return found[0] if found else None


# ---------------------------------------------------------------------------
# Center and derived subgroup


def center(G: PermGroup) -> PermGroup:
    gens = list(G.generators)
    return PermGroup.from_elements(conjugators(G, gens, gens), G.degree, G.element_cap)


def center_scan(G: PermGroup) -> frozenset[Perm]:
    return frozenset(g for g in G.elements if all(g * h == h * g for h in G.generators))


def commutator(a: Perm, b: Perm) -> Perm:
    return a.inverse() * b.inverse() * a * b


def derived_subgroup(G: PermGroup) -> PermGroup:
    """Normal closure of the generator commutators."""
    gens = list(dict.fromkeys(
        c for a in G.generators for b in G.generators
        if not (c := commutator(a, b)).is_identity()
    ))
    chain = StabChain(G.degree, gens)
    changed = True
    while changed:
        changed = False
        for x in list(gens):
            for g in G.generators:
                y = x.conjugate(g)
                if not chain.contains(y):
                    gens.append(y)
                    chain = StabChain(G.degree, gens)
                    changed = True
    D = PermGroup.of(gens, G.degree, G.element_cap)
    D.__dict__["chain"] = chain
    return D


def derived_subgroup_scan(G: PermGroup) -> frozenset[Perm]:
    """Oracle: closure of all commutators of all element pairs."""
    elems = list(G.elements)
    comms = {commutator(a, b) for a in elems for b in elems}
    return PermGroup.of(sorted(comms), G.degree, G.element_cap).elements


def in_derived_subgroup(G: PermGroup, g: Perm) -> bool:
    return derived_subgroup(G).contains(g)
