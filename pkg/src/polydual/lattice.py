"""Face lattice of a string C-group.

The i-faces are the right cosets Γ_i φ of Γ_i = ⟨ρ_j | j ≠ i⟩, and two faces
are incident exactly when their cosets meet.  Elements are indexed in
sorted order (identity first) and faces of each rank are numbered by their
least element, so face 0 of every rank belongs to the base flag.
"""

from __future__ import annotations

import json
import random
from collections.abc import Sequence
from dataclasses import dataclass, field

from .errors import NotStringCGroup
from .permcore import Perm
from .sggi import Sggi, is_string_c_group, parabolic
from .duality import star_word

Flag = tuple[int, ...]


@dataclass
class FaceLattice:
    sggi: Sggi
    elements: list[Perm]
    index: dict[Perm, int]
    face_of: list[list[int]]          # face_of[i][element index] -> i-face id
    reps: list[list[int]]             # reps[i][face id] -> least element index
    _up: dict = field(default_factory=dict, repr=False)
    _flag_index: dict = field(default_factory=dict, repr=False)

    @property
    def rank(self) -> int:
        return self.sggi.rank

    @property
    def base_flag(self) -> Flag:
        return (0,) * self.rank

    def face_count(self, i: int) -> int:
        return len(self.reps[i])

    def counts(self) -> list[int]:
        return [self.face_count(i) for i in range(self.rank)]

    # -- incidence -------------------------------------------------------

    def _pairs(self, i: int, j: int) -> set[tuple[int, int]]:
        key = (i, j)
        if key not in self._up:
            fi, fj = self.face_of[i], self.face_of[j]
            self._up[key] = {(fi[e], fj[e]) for e in range(len(self.elements))}
        return self._up[key]

    def incident(self, i: int, a: int, j: int, b: int) -> bool:
        if i == j:
            return a == b
        if i > j:
            i, a, j, b = j, b, i, a
        return (a, b) in self._pairs(i, j)

    def faces_above(self, i: int, a: int, j: int) -> list[int]:
        return sorted(b for x, b in self._pairs(i, j) if x == a)

    def vertex_set(self, i: int, a: int) -> frozenset[int]:
        if i == 0:
            return frozenset({a})
        return frozenset(v for v, b in self._pairs(0, i) if b == a)

    # -- group action ------------------------------------------------------

    def act(self, i: int, a: int, g: Perm) -> int:
        """Image of the i-face ``a`` under ``g`` (right action)."""
        e = self.elements[self.reps[i][a]]
        return self.face_of[i][self.index[e * g]]

    def act_flag(self, f: Flag, g: Perm) -> Flag:
        return tuple(self.act(i, a, g) for i, a in enumerate(f))

    def element_flag(self, g: Perm) -> Flag:
        """The flag Φg for the base flag Φ."""
        e = self.index[g]
        return tuple(self.face_of[i][e] for i in range(self.rank))

    def element_of_flag(self, f: Flag) -> Perm:
        """The unique g with Φg = f."""
        if not self._flag_index:
            for e in range(len(self.elements)):
                self._flag_index[tuple(self.face_of[i][e] for i in range(self.rank))] = e
        return self.elements[self._flag_index[f]]

    # -- flags -------------------------------------------------------------

    def is_flag(self, f: Sequence[int]) -> bool:
        if len(f) != self.rank:
            return False
        return all(self.incident(i, f[i], j, f[j])
                   for i in range(self.rank) for j in range(i + 1, self.rank))

    def flags(self) -> list[Flag]:
        """Every maximal chain, found by walking up the ranks."""
        n = self.rank
        up = [dict() for _ in range(n)]
        for i in range(n - 1):
            for a, b in self._pairs(i, i + 1):
                up[i].setdefault(a, []).append(b)
        out: list[Flag] = []

        def walk(chain: list[int]):
            i = len(chain)
            if i == n:
                out.append(tuple(chain))
                return
            cands = range(self.face_count(0)) if i == 0 else sorted(up[i - 1].get(chain[-1], ()))
            for b in cands:
                if all(self.incident(j, chain[j], i, b) for j in range(i - 1)):
                    chain.append(b)
                    walk(chain)
                    chain.pop()

        walk([])
        return out

    def flag_adjacent(self, f: Flag, i: int) -> Flag:
        """The unique flag differing from ``f`` exactly in its i-face."""
        n = self.rank
        below = f[i - 1] if i > 0 else None
        above = f[i + 1] if i < n - 1 else None
        for b in range(self.face_count(i)):
            if b == f[i]:
                continue
            if below is not None and not self.incident(i - 1, below, i, b):
                continue
            if above is not None and not self.incident(i, b, i + 1, above):
                continue
            return f[:i] + (b,) + f[i + 1:]
        raise ValueError(f"no {i}-adjacent flag to {f}")

    def adjacent_word(self, f: Flag, word: Sequence[int]) -> Flag:
        for i in word:
            f = self.flag_adjacent(f, i)
        return f

    # -- structure ---------------------------------------------------------

    def check_diamond(self) -> bool:
        n = self.rank
        for i in range(n):
            lower = range(self.face_count(i - 1)) if i > 0 else [None]
            upper = range(self.face_count(i + 1)) if i < n - 1 else [None]
            for a in lower:
                for b in upper:
                    if a is not None and b is not None and not self.incident(i - 1, a, i + 1, b):
                        continue
                    between = [x for x in range(self.face_count(i))
                               if (a is None or self.incident(i - 1, a, i, x))
                               and (b is None or self.incident(i, x, i + 1, b))]
                    if len(between) != 2:
                        return False
        return True

    def is_flat(self) -> bool:
        n = self.rank
        return len(self._pairs(0, n - 1)) == self.face_count(0) * self.face_count(n - 1) if n > 1 else True

    def is_vertex_describable(self) -> bool:
        seen = set()
        for i in range(self.rank):
            for a in range(self.face_count(i)):
                vs = self.vertex_set(i, a)
                if vs in seen:
                    return False
                seen.add(vs)
        return True

    def point_of_vertex(self, v: int, base_point: int = 0) -> int:
        """0-based point reached from ``base_point`` by a representative of vertex ``v``."""
        return self.elements[self.reps[0][v]][base_point]

    def to_json(self, include_flags: bool = False) -> dict:
        out = {
            "rank": self.rank,
            "order": len(self.elements),
            "faces": [
                [sorted(self.vertex_set(i, a)) for a in range(self.face_count(i))]
                for i in range(self.rank)
            ],
        }
        if include_flags:
            out["flags"] = [list(f) for f in self.flags()]
        return out


def build_lattice(P: Sggi, require_c: bool = True) -> FaceLattice:
    if require_c and not is_string_c_group(P):
        raise NotStringCGroup("the generators fail the intersection property")
    elements = sorted(P.group.elements)
    index = {g: k for k, g in enumerate(elements)}
    face_of, reps = [], []
    for i in range(P.rank):
        H = sorted(parabolic(P, {i}).elements)
        fo = [-1] * len(elements)
        rp = []
        for e, g in enumerate(elements):
            if fo[e] >= 0:
                continue
            fid = len(rp)
            rp.append(e)
            for h in H:
                fo[index[h * g]] = fid
        face_of.append(fo)
        reps.append(rp)
    return FaceLattice(P, elements, index, face_of, reps)


# ---------------------------------------------------------------------------
# Dual flags


def _orbit(L: FaceLattice, i: int, a: int, gens: Sequence[Perm]) -> set[int]:
    seen = {a}
    stack = [a]
    while stack:
        x = stack.pop()
        for g in gens:
            y = L.act(i, x, g)
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def dual_flag_search(L: FaceLattice) -> Flag | None:
    """Build a flag dual to the base flag, backtracking over candidate faces.

    F0 must be fixed by ⟨ρ0..ρ_{n-2}⟩; F_{i+1} must be incident to every face
    in the orbit of F_i under ⟨ρ_{n-i-1}..ρ_{n-1}⟩.  The first completed
    flag in lexicographic order is returned.
    """
    n = L.rank
    gens = L.sggi.gens
    starts = [v for v in range(L.face_count(0))
              if all(L.act(0, v, g) == v for g in gens[: n - 1])]

    def extend(chain: list[int]) -> Flag | None:
        i = len(chain) - 1
        if i == n - 1:
            return tuple(chain)
        orbit = _orbit(L, i, chain[i], gens[n - i - 1:])
        cands = None
        for x in orbit:
            ups = set(L.faces_above(i, x, i + 1))
            cands = ups if cands is None else cands & ups
        for b in sorted(cands or ()):
            found = extend(chain + [b])
            if found is not None:
                return found
        return None

    for v in starts:
        found = extend([v])
        if found is not None:
            return found
    return None


def verify_dual_flag(L: FaceLattice, phi: Flag, psi: Flag,
                     words: Sequence[Sequence[int]] | None = None,
                     samples: int = 0, seed: int = 0) -> bool:
    """Whether ``psi`` is dual to ``phi``.

    Exact part: Ψρ_i = Ψ^{n-i-1} for every i, where Ψ is read against the
    base flag.  Optional part: for each word w (given or random), the
    automorphism φ with Φφ = Φ^w must satisfy Ψφ = Ψ^{w*}.
    """
    n = L.rank
    if not (L.is_flag(phi) and L.is_flag(psi)):
        return False
    a = L.element_of_flag(phi)
    for i, r in enumerate(L.sggi.gens):
        # ρ_i read relative to Φ is a^-1 ρ_i a
        g = a.inverse() * r * a
        if L.act_flag(psi, g) != L.flag_adjacent(psi, n - 1 - i):
            return False
    checks = [list(w) for w in (words or [])]
    rng = random.Random(seed)
    for _ in range(samples):
        checks.append([rng.randrange(n) for _ in range(rng.randrange(1, 12))])
    for w in checks:
        target = L.adjacent_word(phi, w)
        phi_g = a.inverse() * L.element_of_flag(target)
        if L.act_flag(psi, phi_g) != L.adjacent_word(psi, star_word(w, n)):
            return False
    return True


def lattice_json(L: FaceLattice, include_flags: bool = False) -> str:
    return json.dumps(L.to_json(include_flags), sort_keys=True)
