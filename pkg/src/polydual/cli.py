"""Command-line front end.

Exit codes: 0 valid, 2 invalid input or not a string C-group, 3 cap exceeded.
JSON output uses sorted keys; timings appear only with ``--timings``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import cpr, fpgroup, sggi
from .corpus import FAMILIES, Instance, build, iter_specs, label
from .duality import EXTERNAL, NONE, classify
from .errors import CapExceeded, InfiniteCoxeterGroup, PolydualError
from .lattice import build_lattice, lattice_json
from .sggi import Sggi, check_intersection, schlafli_type

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_CAP = 3


@dataclass
class Report:
    instance: str
    valid: bool | None = None
    order: int | str | None = None
    rank: int | None = None
    degree: int | None = None
    schlafli: list | None = None
    duality: str | None = None
    witness: str | None = None
    error: str | None = None
    note: str | None = None
    timings: dict = field(default_factory=dict)

    def to_json(self, timings: bool = False) -> dict:
        out = {k: v for k, v in self.__dict__.items() if k != "timings" and v is not None}
        if timings:
            out["timings"] = {k: round(v, 4) for k, v in self.timings.items()}
        return out

    @property
    def exit_code(self) -> int:
        if self.error == "cap exceeded":
            return EXIT_CAP
        if self.error or self.valid is False:
            return EXIT_INVALID
        return EXIT_OK


# ---------------------------------------------------------------------------
# Sources


def _read_input(path: str) -> Sggi | fpgroup.Presentation:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    head = next((ln.split("#", 1)[0].strip() for ln in text.splitlines()
                 if ln.split("#", 1)[0].strip()), "")
    if head.startswith("cpr"):
        return cpr.to_sggi(cpr.parse(text))
    if head.startswith("gens"):
        return fpgroup.parse_text(text)
    return sggi.parse_text(text)


def _presentation(args) -> fpgroup.Presentation:
    p = fpgroup.coxeter(fpgroup.parse_type(args.coxeter))
    for r in args.relator or []:
        p = fpgroup.add_relator(p, fpgroup.parse_word(r))
    return p


def _family_args(args) -> tuple[int, ...]:
    if args.family not in FAMILIES:
        raise PolydualError(f"unknown family {args.family!r}")
    names, _ = FAMILIES[args.family]
    vals = []
    for nm in names:
        v = getattr(args, nm, None)
        if v is None:
            raise PolydualError(f"--family {args.family} needs --{nm}")
        vals.append(v)
    return tuple(vals)


def resolve(args) -> tuple[str, Sggi | fpgroup.Presentation]:
    """Turn the source flags into a descriptor and an Sggi or a presentation."""
    if args.input:
        return args.input, _read_input(args.input)
    if args.torus44 is not None:
        inst = build("torus44", args.torus44)
        return inst.name, inst.sggi
    if args.coxeter:
        desc = f"coxeter:{args.coxeter}"
        if args.relator:
            desc += "+" + "+".join(f"[{r}]" for r in args.relator)
        return desc, _presentation(args)
    if args.family:
        fam_args = _family_args(args)
        inst = build(args.family, *fam_args)
        return inst.name, inst.sggi
    raise PolydualError("give one of --family, --torus44, --coxeter or --input")


# ---------------------------------------------------------------------------
# Reports


def _classify_sggi(desc: str, P: Sggi, rep: Report | None = None) -> Report:
    rep = rep or Report(desc)
    t = time.perf_counter()
    rep.rank, rep.degree = P.rank, P.degree
    rep.order = P.order()
    rep.schlafli = schlafli_type(P)
    rep.timings["order"] = time.perf_counter() - t
    t = time.perf_counter()
    res = check_intersection(P)
    rep.timings["intersection"] = time.perf_counter() - t
    rep.valid = res.ok
    if not res.ok:
        rep.note = f"intersection fails for {list(res.I)} and {list(res.J)}"
        return rep
    t = time.perf_counter()
    cls = classify(P)
    rep.timings["classify"] = time.perf_counter() - t
    rep.duality = cls.kind
    if cls.witness is not None:
        rep.witness = str(cls.witness)
    return rep


def _classify_presentation(desc: str, p: fpgroup.Presentation, cap: int | None) -> Report:
    rep = Report(desc)
    t = time.perf_counter()
    try:
        table = fpgroup.todd_coxeter(p, coset_cap=cap)
    except InfiniteCoxeterGroup:
        ctype = list(p.coxeter_type)
        rep.valid = True
        rep.rank = p.generator_count
        rep.order = "infinite"
        rep.schlafli = [str(x) if x == fpgroup.INF else x for x in ctype]
        rep.duality = EXTERNAL if ctype == ctype[::-1] else NONE
        rep.note = "infinite string Coxeter group: no dualizing element is inner"
        return rep
    rep.timings["enumerate"] = time.perf_counter() - t
    return _classify_sggi(desc, table.to_sggi(), rep)


def classify_source(desc: str, src, cap: int | None = None) -> Report:
    try:
        if isinstance(src, fpgroup.Presentation):
            return _classify_presentation(desc, src, cap)
        if cap is not None:
            src = src.with_cap(cap)
        return _classify_sggi(desc, src)
    except CapExceeded as exc:
        return Report(desc, error="cap exceeded", note=str(exc))
    except PolydualError as exc:
        return Report(desc, valid=False, error=type(exc).__name__, note=str(exc))


def _emit_json(obj, out) -> None:
    out.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _print_report(rep: Report, fmt: str, timings: bool, out) -> None:
    if fmt == "json":
        _emit_json(rep.to_json(timings), out)
        return
    d = rep.to_json(timings)
    for k in ("instance", "valid", "order", "schlafli", "duality", "witness", "error", "note"):
        if k in d:
            out.write(f"{k}: {d[k]}\n")
    if timings:
        for k, v in d["timings"].items():
            out.write(f"time.{k}: {v}\n")


# ---------------------------------------------------------------------------
# Commands


def cmd_classify(args, out=None) -> int:
    out = out or sys.stdout
    try:
        desc, src = resolve(args)
    except CapExceeded as exc:
        rep = Report("?", error="cap exceeded", note=str(exc))
    except (PolydualError, ValueError, OSError) as exc:
        rep = Report(getattr(args, "input", None) or "?", valid=False,
                     error=type(exc).__name__, note=str(exc))
    else:
        rep = classify_source(desc, src, args.cap)
    _print_report(rep, args.format, args.timings, out)
    return rep.exit_code


def cmd_check(args, out=None) -> int:
    out = out or sys.stdout
    try:
        desc, src = resolve(args)
        if isinstance(src, fpgroup.Presentation):
            src = fpgroup.todd_coxeter(src, coset_cap=args.cap).to_sggi()
        elif args.cap is not None:
            src = src.with_cap(args.cap)
        data = {"instance": desc, **sggi.check_report(src, exhaustive=args.exhaustive)}
    except (CapExceeded, InfiniteCoxeterGroup) as exc:
        data = {"error": "cap exceeded", "note": str(exc)}
        code = EXIT_CAP
    except (PolydualError, ValueError, OSError) as exc:
        data = {"valid": False, "error": type(exc).__name__, "note": str(exc)}
        code = EXIT_INVALID
    else:
        code = EXIT_OK if data["valid"] else EXIT_INVALID
    if args.format == "json":
        _emit_json(data, out)
    else:
        for k in sorted(data):
            out.write(f"{k}: {data[k]}\n")
    return code


def _survey_one(item: tuple[str, tuple[int, ...], int | None]) -> dict:
    family, fam_args, cap = item
    name = label(family, fam_args)
    t = time.perf_counter()
    try:
        inst: Instance = build(family, *fam_args)
    except (PolydualError, ValueError) as exc:
        rep = Report(name, valid=False, error=type(exc).__name__, note=str(exc))
    else:
        rep = classify_source(name, inst.sggi, cap)
    rep.timings["total"] = time.perf_counter() - t
    return {"family": family, **rep.to_json(timings=True)}


def survey(specs: list[str], jobs: int = 1, cap: int | None = None) -> dict:
    items = [(f, a, cap) for f, a in iter_specs(specs)]
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_survey_one, items))
    else:
        rows = [_survey_one(it) for it in items]
    counts: dict[str, Counter] = {}
    for r in rows:
        c = counts.setdefault(r["family"], Counter())
        key = r.get("duality") or ("failed" if r.get("error") or not r.get("valid") else "none")
        c[key] += 1
    total = Counter()
    for c in counts.values():
        total.update(c)
    return {
        "instances": rows,
        "counts": {f: dict(sorted(c.items())) for f, c in counts.items()},
        "total": dict(sorted(total.items())),
    }


def cmd_survey(args, out=None) -> int:
    out = out or sys.stdout
    try:
        result = survey(args.specs, args.jobs, args.cap)
    except PolydualError as exc:
        out.write(f"error: {exc}\n")
        return EXIT_INVALID
    if not args.timings:
        for r in result["instances"]:
            r.pop("timings", None)
    if args.format == "json":
        _emit_json(result, out)
        return EXIT_OK
    out.write(f"{'instance':<22}{'order':>12}  {'class':<9} witness\n")
    for r in result["instances"]:
        cls = r.get("duality") or (r.get("error") or "invalid")
        line = f"{r['instance']:<22}{str(r.get('order', '-')):>12}  {cls:<9} {r.get('witness', '')}"
        if args.timings:
            line += f"  {r['timings']['total']:.3f}s"
        out.write(line.rstrip() + "\n")
    out.write("\n")
    for fam, c in result["counts"].items():
        out.write(f"{fam:<16}" + "  ".join(f"{k}={v}" for k, v in c.items()) + "\n")
    out.write(f"{'total':<16}" + "  ".join(f"{k}={v}" for k, v in result["total"].items()) + "\n")
    return EXIT_OK


def cmd_emit(args, out=None) -> int:
    out = out or sys.stdout
    try:
        desc, src = resolve(args)
        if isinstance(src, fpgroup.Presentation) and args.format != "text":
            src = fpgroup.todd_coxeter(src, coset_cap=args.cap).to_sggi()
        graph = None
        if args.family and not args.input:
            graph = build(args.family, *_family_args(args)).graph
        fmt = args.format
        if isinstance(src, fpgroup.Presentation):
            text = fpgroup.to_text(src)
        elif fmt == "sggi":
            text = sggi.to_text(src)
        elif fmt == "text":
            text = cpr.serialize(graph or cpr.from_sggi(src))
        elif fmt == "dot":
            text = cpr.to_dot(graph or cpr.from_sggi(src))
        elif fmt == "json":
            text = lattice_json(build_lattice(src)) + "\n"
        else:
            raise PolydualError(f"unknown format {fmt!r}")
    except (CapExceeded, InfiniteCoxeterGroup) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CAP
    except (PolydualError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser


def _source_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("source")
    g.add_argument("--family", help="named family (polygon, simplex, all-p, even-k, rank-n, ...)")
    g.add_argument("--p", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--n", type=int)
    g.add_argument("--s", type=int)
    g.add_argument("--torus44", type=int, metavar="S", help="the map {4,4}_(S,0)")
    g.add_argument("--coxeter", metavar="TYPE", help="string Coxeter type, e.g. 3,4,3 or inf,inf")
    g.add_argument("--relator", action="append", metavar="WORD",
                   help='extra relator as generator indices, e.g. "0 1 2 1"; repeatable')
    g.add_argument("--input", metavar="FILE", help="Sggi, CPR or presentation text ('-' for stdin)")
    p.add_argument("--cap", type=int, help="element / coset cap (default from POLYDUAL_CAP)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polydual", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify duality of one instance")
    _source_flags(p)
    p.add_argument("--format", choices=["text", "json"], default="json")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("check", help="check the string C-group axioms")
    _source_flags(p)
    p.add_argument("--format", choices=["text", "json"], default="json")
    p.add_argument("--exhaustive", action="store_true", help="test every pair of generator subsets")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("survey", help="classify a corpus and count classes")
    p.add_argument("specs", nargs="+", metavar="SPEC", help="family[:args], e.g. polygon:3-12")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap", type=int)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("emit", help="write an instance in one of the file formats")
    _source_flags(p)
    p.add_argument("--format", choices=["text", "dot", "json", "sggi"], default="text",
                   help="text: CPR graph; dot: Graphviz; json: face lattice; sggi: generator text")
    p.add_argument("--output", "-o", metavar="FILE")
    p.set_defaults(func=cmd_emit)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
