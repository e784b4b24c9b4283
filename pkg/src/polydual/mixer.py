"""Mixing string groups on the disjoint union of their point sets."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .duality import INTERNAL, classify, dual, dualizing_set, is_dualizing_word
from .errors import NotInternallySelfDual, NotPolytopal, RankMismatch
from .permcore import Perm, direct_sum
from .sggi import Sggi, is_string_c_group, restrict


@dataclass(frozen=True)
class MixedSggi(Sggi):
    parts: tuple[int, ...] = ()

    def component(self, k: int) -> Sggi:
        """Projection onto factor k (generator-respecting and onto)."""
        start = sum(self.parts[:k])
        return restrict(self, list(range(start, start + self.parts[k])))


def mix(P: Sggi, Q: Sggi) -> MixedSggi:
    if P.rank != Q.rank:
        raise RankMismatch(f"ranks {P.rank} and {Q.rank}")
    gens = tuple(direct_sum(a, b) for a, b in zip(P.gens, Q.gens))
    p_parts = P.parts if isinstance(P, MixedSggi) else (P.degree,)
    q_parts = Q.parts if isinstance(Q, MixedSggi) else (Q.degree,)
    return MixedSggi(gens, P.degree + Q.degree, P.element_cap, p_parts + q_parts)


def mix_edge(P: Sggi, position: int) -> Sggi:
    """P ⋄ e with the edge's involution attached to generator ``position`` (0 or n-1)."""
    n = P.rank
    if position not in (0, n - 1):
        raise ValueError("the edge attaches at rank 0 or n-1")
    swap = Perm.from_cycles("(1,2)", 2)
    ident = Perm.identity(2)
    gens = tuple(direct_sum(g, swap if i == position else ident) for i, g in enumerate(P.gens))
    parts = P.parts if isinstance(P, MixedSggi) else (P.degree,)
    return MixedSggi(gens, P.degree + 2, P.element_cap, parts + (2,))


def int_to_ext(P: Sggi, check: bool = True) -> Sggi:
    """(P ⋄ e)* ⋄ e: externally self-dual, group Γ(P) × C2 × C2."""
    if check and classify(P).kind != INTERNAL:
        raise NotInternallySelfDual("input must be internally self-dual")
    return mix_edge(dual(mix_edge(P, 0)), 0)


def mix_internally_self_dual(P: Sggi, Q: Sggi) -> bool:
    M = mix(P, Q)
    if not is_string_c_group(M):
        raise NotPolytopal("the mix fails the intersection property")
    return classify(M).kind == INTERNAL


def shared_dualizing_word(P: Sggi, Q: Sggi, word: Sequence[int]) -> bool:
    """Whether one word is dualizing in both factors (hence in their mix)."""
    return is_dualizing_word(P, word) and is_dualizing_word(Q, word)


def comix_image_criterion(P: Sggi, Q: Sggi, C: Sggi) -> bool:
    """Decide internal self-duality of P ⋄ Q through the comix.

    ``C`` must realize the comix of P and Q with matching generators.  The
    mix is internally self-dual exactly when some dualizing α of P and some
    dualizing β of Q have the same image in C.  Images are computed by
    spelling α and β as words.
    """
    def images(X: Sggi) -> set[Perm]:
        out = set()
        for a in dualizing_set(X):
            out.add(C.word(X.group.word_for(a)))
        return out

    return bool(images(P) & images(Q))
