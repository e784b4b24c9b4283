"""Classify every instance in a corpus and print per-family counts.

    python scripts/survey_corpus.py                      # default corpus
    python scripts/survey_corpus.py polygon:3-40 all-p:7-12 --jobs 4
"""

import argparse
import json
import time

from polydual.cli import survey
from polydual.corpus import DEFAULT_CORPUS


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("specs", nargs="*", default=DEFAULT_CORPUS)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--json", action="store_true", help="dump the full result")
    args = ap.parse_args()

    t = time.perf_counter()
    res = survey(args.specs, jobs=args.jobs)
    if args.json:
        print(json.dumps(res, indent=2))
        return
    for row in res["instances"]:
        print(f"{row['instance']:<22} {row.get('order', '-'):>10}  {row.get('duality', row.get('error', '?'))}")
    print()
    for fam, counts in res["counts"].items():
        print(f"{fam:<16} " + "  ".join(f"{k}={v}" for k, v in sorted(counts.items())))
    total = res["total"]
    summary = ", ".join(f"{v} {k}" for k, v in sorted(total.items()))
    print(f"\n{sum(total.values())} instances ({summary}) in {time.perf_counter() - t:.1f}s")


if __name__ == "__main__":
    main()
