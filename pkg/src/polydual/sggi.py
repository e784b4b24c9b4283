"""String groups generated by involutions.

An ``Sggi`` is a list of involutory permutations ``rho_0 .. rho_{n-1}`` on a
shared point set in which non-adjacent generators commute.  Construction
validates this, so every ``Sggi`` value is well formed; the intersection
property is checked separately because it can be expensive.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .config import default_element_cap
from .errors import (
    IdentityGenerator,
    NotACovering,
    NotCommuting,
    NotInvolution,
    ParseError,
    RankMismatch,
)
from .permcore import (
    Perm,
    PermGroup,
    derived_subgroup,
    iter_intersection,
    paired_group,
)


@dataclass(frozen=True)
class Sggi:
    gens: tuple[Perm, ...]
    degree: int
    element_cap: int = field(default_factory=default_element_cap, compare=False, repr=False)

    def __post_init__(self):
        gens = tuple(self.gens)
        object.__setattr__(self, "gens", gens)
        if not gens:
            raise ValueError("an Sggi needs at least one generator")
        _validate(gens, self.degree)

    @classmethod
    def of(cls, gens: Sequence[Perm], element_cap: int | None = None) -> Sggi:
        degree = len(gens[0])
        if element_cap is None:
            return cls(tuple(gens), degree)
        return cls(tuple(gens), degree, element_cap)

    @classmethod
    def from_cycles(cls, texts: Sequence[str], degree: int) -> Sggi:
        return cls(tuple(Perm.from_cycles(t, degree) for t in texts), degree)

    @property
    def rank(self) -> int:
        return len(self.gens)

    @cached_property
    def group(self) -> PermGroup:
        return PermGroup(self.degree, self.gens, self.element_cap)

    def order(self) -> int:
        return self.group.order()

    def word(self, w: Iterable[int]) -> Perm:
        """Evaluate a word of generator indices, left to right."""
        g = Perm.identity(self.degree)
        for i in w:
            g = g * self.gens[i]
        return g

    def with_cap(self, cap: int) -> Sggi:
        return Sggi(self.gens, self.degree, cap)

    def relabel(self, c: Perm) -> Sggi:
        """Conjugate every generator by ``c`` (renames the points)."""
        return Sggi(tuple(g.conjugate(c) for g in self.gens), self.degree, self.element_cap)

    def __str__(self) -> str:
        return to_text(self)


def _validate(gens: Sequence[Perm], degree: int) -> None:
    for i, g in enumerate(gens):
        if len(g) != degree:
            raise ValueError(f"generator {i} has degree {len(g)}, expected {degree}")
    for i, g in enumerate(gens):
        if g.is_identity():
            raise IdentityGenerator(i)
        if not (g * g).is_identity():
            raise NotInvolution(i)
    for i, j in combinations(range(len(gens)), 2):
        if j - i >= 2 and gens[i] * gens[j] != gens[j] * gens[i]:
            raise NotCommuting(i, j)


def check_string(gens: Sequence[Perm], degree: int | None = None) -> Sggi:
    """Validate involutions and the string condition; raises on the first violation."""
    if degree is None:
        degree = len(gens[0])
    return Sggi(tuple(gens), degree)


def schlafli_type(P: Sggi) -> list[int]:
    return [(P.gens[i - 1] * P.gens[i]).order() for i in range(1, P.rank)]


def parabolic(P: Sggi, S: Iterable[int] = ()) -> PermGroup:
    """``Gamma_S``: the subgroup generated by the generators *not* indexed by ``S``."""
    S = set(S)
    return PermGroup(P.degree, tuple(g for i, g in enumerate(P.gens) if i not in S), P.element_cap)


def generated(P: Sggi, I: Iterable[int]) -> PermGroup:
    """The subgroup generated by the generators indexed by ``I``."""
    I = sorted(set(I))
    return PermGroup(P.degree, tuple(P.gens[i] for i in I), P.element_cap)


# ---------------------------------------------------------------------------
# Intersection property


@dataclass(frozen=True)
class IntersectionResult:
    ok: bool
    I: tuple[int, ...] | None = None
    J: tuple[int, ...] | None = None
    element: Perm | None = None

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        out: dict = {"ok": self.ok}
        if not self.ok:
            out["witness"] = {
                "I": list(self.I),
                "J": list(self.J),
                "element": str(self.element),
            }
        return out


def _gap_element(A: PermGroup, B: PermGroup, C: PermGroup) -> Perm | None:
    """An element of A ∩ B outside C (C ≤ A ∩ B assumed), or None.

    Counting stops as soon as the intersection outgrows C.
    """
    limit = C.order()
    count = 0
    for g in iter_intersection(A, B):
        count += 1
        if count > limit:
            # some element seen so far is outside C; find it
            break
    else:
        return None
    for g in iter_intersection(A, B):
        if not C.contains(g):
            return g
    raise AssertionError("intersection larger than C but contained in it")


def _pair_check(P: Sggi, I: Sequence[int], J: Sequence[int]) -> IntersectionResult:
    A, B = generated(P, I), generated(P, J)
    C = generated(P, set(I) & set(J))
    bad = _gap_element(A, B, C)
    if bad is None:
        return IntersectionResult(True)
    return IntersectionResult(False, tuple(I), tuple(J), bad)


def _check_range(P: Sggi, lo: int, hi: int, memo: dict) -> IntersectionResult:
    """Intersection property for the string subgroup on generators lo..hi-1."""
    key = (lo, hi)
    if key in memo:
        return memo[key]
    width = hi - lo
    if width <= 1:
        res = IntersectionResult(True)
    elif width == 2:
        if P.gens[lo] == P.gens[lo + 1]:
            res = IntersectionResult(False, (lo,), (lo + 1,), P.gens[lo])
        else:
            res = IntersectionResult(True)
    else:
        res = _check_range(P, lo, hi - 1, memo)
        if res:
            res = _check_range(P, lo + 1, hi, memo)
        if res:
            res = _pair_check(P, range(lo, hi - 1), range(lo + 1, hi))
    memo[key] = res
    return res


def check_intersection(P: Sggi, exhaustive: bool = False) -> IntersectionResult:
    """Intersection property.

    The default reduction checks that the facet and vertex-figure subgroups
    have the property and that they meet in the subgroup of their common
    generators; for rank 3 that is the single test
    ⟨ρ0,ρ1⟩ ∩ ⟨ρ1,ρ2⟩ = ⟨ρ1⟩.  ``exhaustive=True`` runs every pair (I, J).
    """
    if exhaustive:
        return check_intersection_exhaustive(P)
    return _check_range(P, 0, P.rank, {})


def check_intersection_exhaustive(P: Sggi) -> IntersectionResult:
    n = P.rank
    subsets = [tuple(c) for k in range(n + 1) for c in combinations(range(n), k)]
    for I in subsets:
        for J in subsets:
            if set(I) <= set(J) or set(J) <= set(I):
                continue
            res = _pair_check(P, I, J)
            if not res:
                return res
    return IntersectionResult(True)


def is_string_c_group(P: Sggi, exhaustive: bool = False) -> bool:
    return check_intersection(P, exhaustive).ok


# ---------------------------------------------------------------------------
# Covers and quotients


def covers(P: Sggi, Q: Sggi) -> bool:
    """Whether ρ_i ↦ ρ'_i extends to a surjection Γ(P) → Γ(Q)."""
    if P.rank != Q.rank:
        raise RankMismatch(f"ranks {P.rank} and {Q.rank}")
    pair = paired_group(P.gens, Q.gens, P.element_cap)
    return pair.order() == P.order()


def quotient_criterion(G: Sggi, L: Sggi) -> bool:
    """True when the covering G → L is one-to-one on the facet subgroup.

    With L a string C-group this certifies that G is one as well.
    """
    if not covers(G, L):
        raise NotACovering("G does not cover L")
    facet = list(range(G.rank - 1))
    return generated(G, facet).order() == generated(L, facet).order()


def abelianization_identifies(P: Sggi, i: int, j: int) -> bool:
    """Whether ρ_i and ρ_j have the same image in the abelianization."""
    if i == j:
        return True
    return derived_subgroup(P.group).contains(P.gens[i] * P.gens[j])


def restrict(P: Sggi, points: Sequence[int]) -> Sggi:
    """Action on an invariant set of 0-based points, renumbered in the given order."""
    index = {p: k for k, p in enumerate(points)}
    gens = tuple(Perm._raw(index[g[p]] for p in points) for g in P.gens)
    return Sggi(gens, len(points), P.element_cap)


def block_systems(P: Sggi, points: Sequence[int] | None = None) -> list[list[list[int]]]:
    """Minimal block systems of the action on one orbit, one per pair {a, x}.

    Each system is a list of 0-based blocks; trivial systems are dropped and
    duplicates removed.
    """
    if points is None:
        points = list(range(P.degree))
    points = list(points)
    a = points[0]
    seen = set()
    systems = []
    for x in points[1:]:
        parent = {p: p for p in points}

        def find(p):
            while parent[p] != p:
                parent[p] = parent[parent[p]]
                p = parent[p]
            return p

        def union(p, q):
            rp, rq = find(p), find(q)
            if rp == rq:
                return False
            if rq < rp:
                rp, rq = rq, rp
            parent[rq] = rp
            return True

        union(a, x)
        queue = [(a, x)]
        while queue:
            p, q = queue.pop()
            for g in P.gens:
                if union(g[p], g[q]):
                    queue.append((g[p], g[q]))
        classes: dict[int, list[int]] = {}
        for p in points:
            classes.setdefault(find(p), []).append(p)
        if len(classes) == 1:
            continue
        key = tuple(sorted(tuple(c) for c in classes.values()))
        if key not in seen:
            seen.add(key)
            systems.append([list(c) for c in key])
    return systems


def block_action(P: Sggi, blocks: Sequence[Sequence[int]]) -> list[Perm]:
    """Generator images acting on the blocks (may include identities)."""
    where = {}
    for b, blk in enumerate(blocks):
        for p in blk:
            where[p] = b
    return [Perm._raw(where[g[blk[0]]] for blk in blocks) for g in P.gens]


def quotients(P: Sggi, limit: int = 64) -> list[Sggi]:
    """Generator-respecting images of Γ(P) found from its action.

    Sources: restriction to each orbit (when the action is intransitive)
    and actions on block systems of each orbit.  Images in which a generator
    dies or the string condition fails are skipped.
    """
    out: list[Sggi] = []
    seen = set()

    def add(gens: Sequence[Perm]):
        try:
            Q = Sggi(tuple(gens), len(gens[0]), P.element_cap)
        except (IdentityGenerator, NotInvolution, NotCommuting):
            return
        if Q.gens not in seen:
            seen.add(Q.gens)
            out.append(Q)

    orbits = P.group.orbits()
    for orb in orbits:
        R = restrict(P, orb) if len(orbits) > 1 else P
        if len(orbits) > 1:
            add(R.gens)
        for blocks in block_systems(R):
            add(block_action(R, blocks))
            if len(out) >= limit:
                return out
    return out


# ---------------------------------------------------------------------------
# Text and JSON forms


def to_text(P: Sggi) -> str:
    lines = [f"rank {P.rank} degree {P.degree}"]
    lines += [str(g) for g in P.gens]
    return "\n".join(lines) + "\n"


def parse_text(text: str) -> Sggi:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise ParseError("empty Sggi text")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 4 or parts[0] != "rank" or parts[2] != "degree":
        raise ParseError(f"expected 'rank n degree k', got {header!r}", lineno)
    try:
        n, k = int(parts[1]), int(parts[3])
    except ValueError:
        raise ParseError(f"bad header {header!r}", lineno) from None
    if len(rows) - 1 != n:
        raise ParseError(f"header says rank {n} but {len(rows) - 1} generators follow", lineno)
    gens = []
    for lineno, line in rows[1:]:
        try:
            gens.append(Perm.from_cycles(line, k))
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    return Sggi(tuple(gens), k)


def check_report(P: Sggi, exhaustive: bool = False) -> dict:
    res = check_intersection(P, exhaustive)
    return {
        "valid": res.ok,
        "rank": P.rank,
        "degree": P.degree,
        "order": P.order(),
        "schlafli": schlafli_type(P),
        "intersection": res.to_json(),
    }


def check_report_json(P: Sggi) -> str:
    return json.dumps(check_report(P), sort_keys=True)
