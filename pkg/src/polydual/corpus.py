"""Named, parameterized instances and the default survey corpus.

An instance spec is ``family[:args]`` with comma-separated integer
arguments; each argument may be a range ``a-b``, expanded as a cartesian
product.  ``polygon:3-12`` is ten polygons, ``even-k:6,1-5`` five graphs
(the even ``k`` among them fail and are reported as such).
"""

from __future__ import annotations

import re
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from itertools import product

from . import constructions as C
from . import cpr
from .cpr import CprGraph
from .errors import BadParameter, ParseError
from .sggi import Sggi


@dataclass(frozen=True)
class Instance:
    name: str
    sggi: Sggi
    graph: CprGraph | None = None
    model: C.ToroidModel | None = None


def _graph(name: str, g: CprGraph) -> Instance:
    return Instance(name, cpr.to_sggi(g), graph=g)


def _toroid(name: str, m: C.ToroidModel) -> Instance:
    return Instance(name, m.sggi, model=m)


# family -> (parameter names, builder)
FAMILIES: dict[str, tuple[tuple[str, ...], Callable[..., Instance]]] = {
    "edge": ((), lambda: Instance("edge", C.edge())),
    "polygon": (("p",), lambda p: Instance(f"polygon:{p}", C.polygon(p))),
    "simplex": (("n",), lambda n: Instance(f"simplex:{n}", C.simplex(n))),
    "torus44": (("s",), lambda s: _toroid(f"torus44:{s}", C.torus44(s))),
    "cubic": (("n", "s"), lambda n, s: _toroid(f"cubic:{n},{s}", C.cubic_toroid(n, s))),
    "all-p": (("p",), lambda p: _graph(f"all-p:{p}", cpr.family_all_p(p))),
    "even-k": (("p", "k"), lambda p, k: _graph(f"even-k:{p},{k}", cpr.family_even_k(p, k))),
    "rank-n": (("n",), lambda n: _graph(f"rank-n:{n}", cpr.family_rank_n(n))),
    "n3plus": (("n",), lambda n: _graph(f"n3plus:{n}", cpr.family_n3plus(n))),
    "n4plus": (("n",), lambda n: _graph(f"n4plus:{n}", cpr.family_n4plus(n))),
    "petrie-simplex": (("n",), lambda n: _graph(f"petrie-simplex:{n}", cpr.family_petrie_simplex(n))),
}


def build(family: str, *args: int) -> Instance:
    try:
        names, fn = FAMILIES[family]
    except KeyError:
        raise BadParameter(f"unknown family {family!r}; choose from {', '.join(sorted(FAMILIES))}") from None
    if len(args) != len(names):
        raise BadParameter(f"{family} takes {len(names)} parameter(s): {', '.join(names) or 'none'}")
    return fn(*args)


_ARG_RE = re.compile(r"^\s*(\d+)\s*(?:-\s*(\d+)\s*)?$")


def _expand(tok: str) -> list[int]:
    m = _ARG_RE.match(tok)
    if not m:
        raise ParseError(f"bad argument {tok!r}")
    a = int(m.group(1))
    b = int(m.group(2)) if m.group(2) else a
    if b < a:
        raise ParseError(f"empty range {tok!r}")
    return list(range(a, b + 1))


def expand_spec(spec: str) -> list[tuple[str, tuple[int, ...]]]:
    """``"even-k:6,1-3"`` -> [("even-k", (6, 1)), ("even-k", (6, 2)), ("even-k", (6, 3))]."""
    family, _, rest = spec.partition(":")
    family = family.strip()
    if family not in FAMILIES:
        raise ParseError(f"unknown family {family!r}")
    if not rest.strip():
        return [(family, ())]
    ranges = [_expand(t) for t in rest.split(",")]
    return [(family, combo) for combo in product(*ranges)]


def iter_specs(specs: list[str]) -> Iterator[tuple[str, tuple[int, ...]]]:
    for spec in specs:
        yield from expand_spec(spec)


def label(family: str, args: tuple[int, ...]) -> str:
    return family if not args else f"{family}:{','.join(map(str, args))}"


# Small enough for the exhaustive corpus-wide property checks.
DEFAULT_CORPUS = [
    "edge",
    "polygon:2-12",
    "simplex:2-5",
    "torus44:2-6",
    "cubic:3,2-3",
    "all-p:7-10",
    "even-k:6,3",
    "even-k:8,1",
    "rank-n:5",
    "n3plus:4-6",
    "n4plus:6-7",
    "petrie-simplex:5-6",
]


def default_corpus() -> list[Instance]:
    return [build(f, *a) for f, a in iter_specs(DEFAULT_CORPUS)]
