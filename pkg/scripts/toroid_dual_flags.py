"""Print the dual flag of odd-size toroids in torus coordinates.

For {4,4}_(s,0) and the cubic toroids {4,3,...,3,4}_(s,0,...,0) with odd s,
the dualizing element sends the base flag to a flag whose vertex sits at
the centre of the fundamental region.
"""

import argparse

from polydual import constructions as C
from polydual.duality import classify
from polydual.lattice import build_lattice, dual_flag_search


def show(model, label):
    L = build_lattice(model.sggi)
    psi = dual_flag_search(L)
    print(f"{label}: {classify(model.sggi).kind}")
    if psi is None:
        return
    for i, name in enumerate(("vertex", "edge", "face", "cell")[: model.sggi.rank]):
        print(f"  {name:<6} {C.toroid_face(model, L, i, psi[i])}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-s", type=int, default=9)
    ap.add_argument("--cubic", type=int, default=3, help="rank of the cubic toroids (n)")
    args = ap.parse_args()
    for s in range(3, args.max_s + 1, 2):
        show(C.torus44(s), f"{{4,4}}_({s},0)")
    for s in (3, 5):
        show(C.cubic_toroid(args.cubic, s), f"cubic n={args.cubic} s={s}")


if __name__ == "__main__":
    main()
