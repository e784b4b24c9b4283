"""Time coset enumeration on finite Coxeter groups and toroid presentations.

Both strategies are run under the same cap; a capped run reports the
number of live cosets it reached instead of an order.
"""

import argparse
import time

from polydual import fpgroup
from polydual.errors import CapExceeded

CASES = [
    ("[3,3]", lambda: fpgroup.coxeter([3, 3])),
    ("[3,4,3]", lambda: fpgroup.coxeter([3, 4, 3])),
    ("[3,3,3]", lambda: fpgroup.coxeter([3, 3, 3])),
    ("[5,3,3]", lambda: fpgroup.coxeter([5, 3, 3])),
    ("torus s=6", lambda: fpgroup.torus_presentation(6)),
    ("torus s=10", lambda: fpgroup.torus_presentation(10)),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cap", type=int, default=200_000)
    ap.add_argument("--strategy", choices=["hlt", "felsch", "both"], default="both")
    args = ap.parse_args()
    strategies = ["hlt", "felsch"] if args.strategy == "both" else [args.strategy]

    print(f"{'presentation':<14}" + "".join(f"{s:>22}" for s in strategies))
    for name, make in CASES:
        cells = []
        for strat in strategies:
            t = time.perf_counter()
            try:
                n = fpgroup.todd_coxeter(make(), coset_cap=args.cap, strategy=strat).size
                cells.append(f"{n} in {time.perf_counter() - t:.2f}s")
            except CapExceeded:
                cells.append(f"capped at {time.perf_counter() - t:.1f}s")
        print(f"{name:<14}" + "".join(f"{c:>22}" for c in cells))


if __name__ == "__main__":
    main()
