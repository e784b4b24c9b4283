"""Presentations of quotients of string Coxeter groups and coset enumeration.

Every generator is an involution, so the relators g² are implicit and the
coset table is symmetric: if coset c goes to d under g then d goes to c.
Enumeration is HLT style (scan every relator at every live coset, define
new cosets to complete the scan) with coincidence processing through a
union-find on coset numbers.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .config import default_coset_cap
from .errors import CapExceeded, InfiniteCoxeterGroup, ParseError, RankMismatch
from .permcore import Perm
from .sggi import Sggi

INF = math.inf
Word = tuple[int, ...]


@dataclass(frozen=True)
class Presentation:
    generator_count: int
    relators: tuple[Word, ...] = ()
    # Schläfli type when the relators are exactly the Coxeter ones
    coxeter_type: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        rels = tuple(tuple(int(x) for x in w) for w in self.relators)
        for w in rels:
            for x in w:
                if not 0 <= x < self.generator_count:
                    raise ValueError(f"relator letter {x} outside 0..{self.generator_count - 1}")
        object.__setattr__(self, "relators", rels)


def coxeter(schlafli: Sequence) -> Presentation:
    """String Coxeter group [p_1, ..., p_{n-1}]; ``inf`` entries add no relator."""
    n = len(schlafli) + 1
    rels: list[Word] = []
    for i, p in enumerate(schlafli, start=1):
        if p != INF:
            p = int(p)
            if p < 2:
                raise ValueError("Coxeter entries must be at least 2")
            rels.append((i - 1, i) * p)
    for i in range(n):
        for j in range(i + 2, n):
            rels.append((i, j) * 2)
    return Presentation(n, tuple(rels), tuple(schlafli))


def parse_type(text: str) -> list:
    out = []
    for tok in text.replace("{", "").replace("}", "").replace("[", "").replace("]", "").split(","):
        tok = tok.strip().lower()
        if tok in ("inf", "infinity", "oo", "∞"):
            out.append(INF)
        else:
            out.append(int(tok))
    return out


def add_relator(p: Presentation, w: Iterable[int]) -> Presentation:
    return Presentation(p.generator_count, p.relators + (tuple(w),))


def power(w: Sequence[int], k: int) -> Word:
    return tuple(w) * k


def inverse_word(w: Sequence[int]) -> Word:
    # letters are involutions
    return tuple(reversed(w))


def comix_presentation(p: Presentation, q: Presentation) -> Presentation:
    if p.generator_count != q.generator_count:
        raise RankMismatch("generator counts differ")
    rels = list(p.relators)
    rels += [w for w in q.relators if w not in rels]
    return Presentation(p.generator_count, tuple(rels))


def torus_relator(s: int) -> Word:
    """(ρ0ρ1ρ2ρ1)^s: translation by s steps along an edge direction."""
    return power((0, 1, 2, 1), s)


def torus_presentation(s: int) -> Presentation:
    return add_relator(coxeter([4, 4]), torus_relator(s))


def dualizing_quotient_presentation() -> Presentation:
    """[∞,∞] with w ρ_i w⁻¹ ρ_{2-i} for w = (ρ0ρ2ρ1)^6."""
    w = power((0, 2, 1), 6)
    p = coxeter([INF, INF])
    for i in range(3):
        p = add_relator(p, w + (i,) + inverse_word(w) + (2 - i,))
    return p


# ---------------------------------------------------------------------------
# Finite Coxeter types (guard)


def _component_finite(m: list) -> bool:
    """Whether a connected linear Coxeter diagram with labels m (all >= 3) is finite."""
    k = len(m)
    if k == 0:
        return True
    if any(x == INF for x in m):
        return False
    if k == 1:
        return True  # I2(p)
    if all(x == 3 for x in m):
        return True  # A
    if k >= 2 and sorted(m[:1] + m[-1:]) == [3, 4] and all(x == 3 for x in m[1:-1]) and (m[0] == 4 or m[-1] == 4):
        return True  # B
    if k == 3 and m == [3, 4, 3]:
        return True  # F4
    if k in (2, 3) and (m[0] == 5 or m[-1] == 5) and all(x == 3 for x in (m[1:] if m[0] == 5 else m[:-1])):
        return True  # H3, H4
    return False


def coxeter_is_finite(schlafli: Sequence) -> bool:
    comps: list[list] = [[]]
    for x in schlafli:
        if x == 2:
            comps.append([])
        else:
            comps[-1].append(x)
    return all(_component_finite(c) for c in comps)


def guard_infinite(p: Presentation) -> None:
    """Refuse to enumerate a pure string Coxeter group that is known to be infinite."""
    if p.coxeter_type is not None and not coxeter_is_finite(p.coxeter_type):
        raise InfiniteCoxeterGroup(f"[{','.join(map(str, p.coxeter_type))}] is infinite")


# ---------------------------------------------------------------------------
# Coset enumeration


@dataclass(frozen=True)
class CosetTable:
    size: int
    perms: tuple[Perm, ...]

    def to_sggi(self, element_cap: int | None = None) -> Sggi:
        if element_cap is None:
            return Sggi(self.perms, self.size)
        return Sggi(self.perms, self.size, element_cap)


class _Enumerator:
    def __init__(self, ngens: int, cap: int):
        self.ngens = ngens
        self.cap = cap
        self.table: list[list[int]] = [[-1] * ngens]
        self.parent: list[int] = [0]
        self.queue: list[int] = []
        self.deductions: list[tuple[int, int]] | None = None

    def rep(self, c: int) -> int:
        p = self.parent
        root = c
        while p[root] != root:
            root = p[root]
        while p[c] != root:
            p[c], c = root, p[c]
        return root

    def alive(self, c: int) -> bool:
        return self.parent[c] == c

    def define(self, c: int, x: int) -> None:
        d = len(self.table)
        if d >= self.cap:
            raise CapExceeded("coset enumeration", self.cap)
        self.table.append([-1] * self.ngens)
        self.parent.append(d)
        self.table[c][x] = d
        self.table[d][x] = c

    def deduce(self, c: int, x: int) -> None:
        if self.deductions is not None:
            self.deductions.append((c, x))

    def merge(self, a: int, b: int) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        if b < a:
            a, b = b, a
        self.parent[b] = a
        self.queue.append(b)

    def coincidence(self, a: int, b: int) -> None:
        self.merge(a, b)
        table = self.table
        while self.queue:
            g = self.queue.pop(0)
            row = table[g]
            for x in range(self.ngens):
                d = row[x]
                if d < 0:
                    continue
                row[x] = -1
                if table[d][x] == g:
                    table[d][x] = -1
                f1, f2 = self.rep(g), self.rep(d)
                if table[f1][x] >= 0:
                    self.merge(f2, table[f1][x])
                elif table[f2][x] >= 0:
                    self.merge(f1, table[f2][x])
                else:
                    table[f1][x] = f2
                    table[f2][x] = f1
                    self.deduce(f1, x)

    def scan_and_fill(self, c: int, w: Word) -> None:
        table = self.table
        f, b = c, c
        i, j = 0, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] >= 0:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][w[j]] >= 0:
                b = table[b][w[j]]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                table[f][w[i]] = b
                table[b][w[i]] = f
                self.deduce(f, w[i])
                return
            self.define(f, w[i])

    def scan(self, c: int, w: Word) -> None:
        """Scan without defining; record a deduction or a coincidence."""
        table = self.table
        f, b = c, c
        i, j = 0, len(w) - 1
        while i <= j and table[f][w[i]] >= 0:
            f = table[f][w[i]]
            i += 1
        if i > j:
            if f != b:
                self.coincidence(f, b)
            return
        while j >= i and table[b][w[j]] >= 0:
            b = table[b][w[j]]
            j -= 1
        if j < i:
            self.coincidence(f, b)
        elif j == i:
            table[f][w[i]] = b
            table[b][w[i]] = f
            self.deduce(f, w[i])

    def run_felsch(self, relators: Sequence[Word], subgroup: Sequence[Word]) -> None:
        # rotations of each relator and of its inverse, grouped by first letter
        starts: list[list[Word]] = [[] for _ in range(self.ngens)]
        for r in relators:
            for cand in (r, inverse_word(r)):
                for k in range(len(cand)):
                    rot = cand[k:] + cand[:k]
                    if rot not in starts[rot[0]]:
                        starts[rot[0]].append(rot)
        self.deductions = []
        for w in subgroup:
            if w:
                self.scan_and_fill(0, w)
        self._drain(starts)
        c = 0
        while c < len(self.table):
            if self.alive(c):
                for x in range(self.ngens):
                    if self.alive(c) and self.table[c][x] < 0:
                        self.define(c, x)
                        self.deduce(c, x)
                        self._drain(starts)
            c += 1

    def _drain(self, starts: list[list[Word]]) -> None:
        while self.deductions:
            c, x = self.deductions.pop()
            if not self.alive(c):
                continue
            d = self.table[c][x]
            if d < 0:
                continue
            for rot in starts[x]:
                if not self.alive(c):
                    break
                self.scan(c, rot)
            if self.alive(d):
                for rot in starts[x]:
                    if not self.alive(d):
                        break
                    self.scan(d, rot)

    def run(self, relators: Sequence[Word], subgroup: Sequence[Word]) -> None:
        for w in subgroup:
            if w:
                self.scan_and_fill(0, w)
        c = 0
        while c < len(self.table):
            if self.alive(c):
                for r in relators:
                    self.scan_and_fill(c, r)
                    if not self.alive(c):
                        break
                if self.alive(c):
                    for x in range(self.ngens):
                        if self.table[c][x] < 0:
                            self.define(c, x)
            c += 1

    def result(self) -> CosetTable:
        live = [c for c in range(len(self.table)) if self.alive(c)]
        number = {c: k for k, c in enumerate(live)}
        perms = []
        for x in range(self.ngens):
            perms.append(Perm(number[self.rep(self.table[c][x])] for c in live))
        return CosetTable(len(live), tuple(perms))


def todd_coxeter(p: Presentation, subgroup_gens: Sequence[Sequence[int]] = (),
                 coset_cap: int | None = None, guard: bool = True,
                 strategy: str = "hlt") -> CosetTable:
    """Enumerate the cosets of ⟨subgroup_gens⟩; the trivial subgroup gives the regular action.

    ``strategy`` is ``"hlt"`` (relator scanning) or ``"felsch"`` (define
    one coset at a time and chase every consequence before the next).
    """
    if guard:
        guard_infinite(p)
    cap = default_coset_cap() if coset_cap is None else coset_cap
    rels = [w for w in p.relators if w]
    enum = _Enumerator(p.generator_count, cap)
    if strategy == "hlt":
        enum.run(rels, [tuple(w) for w in subgroup_gens])
    elif strategy == "felsch":
        enum.run_felsch(rels, [tuple(w) for w in subgroup_gens])
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return enum.result()


def group_order(p: Presentation, coset_cap: int | None = None) -> int:
    return todd_coxeter(p, (), coset_cap).size


def to_sggi(p: Presentation, coset_cap: int | None = None) -> Sggi:
    """Regular permutation representation; raises if a generator collapses."""
    return todd_coxeter(p, (), coset_cap).to_sggi()


def check_fap(p: Presentation, m: int, facet_group_order: int, coset_cap: int | None = None) -> bool:
    """Killing ρ_m, …, ρ_{n-1} leaves a group of exactly ``facet_group_order``."""
    q = p
    for i in range(m, p.generator_count):
        q = add_relator(q, (i,))
    return group_order(q, coset_cap) == facet_group_order


def satisfies(perms: Sequence[Perm], w: Sequence[int]) -> bool:
    g = Perm.identity(len(perms[0]))
    for x in w:
        g = g * perms[x]
    return g.is_identity()


# ---------------------------------------------------------------------------
# Text form


def to_text(p: Presentation) -> str:
    lines = [f"gens {p.generator_count}"]
    lines += [" ".join(map(str, w)) for w in p.relators]
    return "\n".join(lines) + "\n"


def parse_text(text: str) -> Presentation:
    n = None
    rels = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "gens":
                raise ParseError(f"expected 'gens n', got {line!r}", lineno)
            n = int(parts[1])
            continue
        try:
            rels.append(tuple(int(x) for x in line.split()))
        except ValueError:
            raise ParseError(f"bad relator {line!r}", lineno) from None
    if n is None:
        raise ParseError("empty presentation")
    try:
        return Presentation(n, tuple(rels))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_word(text: str) -> Word:
    return tuple(int(x) for x in text.replace(",", " ").split())
