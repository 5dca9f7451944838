"""Command-line front end.

Exit codes: 0 success, 1 failed verification, 2 usage or parse error.
Machine-readable output (``--format record``) is canonical JSON with sorted
keys, one object per line.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import product as _cartesian

from tcsum import __version__
from tcsum.algebra import RingError, format_poincare, ring_new
from tcsum.presentation import PresentationError, format_presentation, load_ring
from tcsum.product import ProductRing
from tcsum.zcl import (
    DEFAULT_BUDGET,
    EXACT,
    FAILED,
    POOLS,
    STRATEGIES,
    FactorList,
    ParameterError,
    bounds_certificate,
    expand,
    family_product,
    first_failing_step,
    verify_steps_s3,
    verify_theorem,
    witness_factors,
    zcl_search,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def parse_range(text: str) -> range:
    """``"2..4"`` -> ``range(2, 5)``; a bare integer is a one-point range."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected N or A..B") from None
    if b < a:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(a, b + 1)


def parse_factor(pr: ProductRing, text: str):
    """Parse ``SUM[:MULT]`` where SUM is ``+``-separated products of atoms.

    An atom is ``label@slot`` (a factor basis element pulled back from that
    slot) or a full tuple label such as ``x1|1|t``.
    """
    body, _, mult = text.partition(":")
    k = int(mult) if mult else 1
    total = pr.zero()
    for summand in body.split("+"):
        acc = pr.one()
        for atom in summand.split("*"):
            atom = atom.strip()
            if "@" in atom:
                label, _, slot = atom.partition("@")
                acc = acc * pr.inject(int(slot), pr.factor.element(label))
            else:
                acc = acc * pr.element(atom)
        total = total + acc
    return total, k


def _ring_from_args(args):
    if args.presentation:
        try:
            with open(args.presentation, encoding="utf-8") as fh:
                return load_ring(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read {args.presentation}: {exc}") from None
    if len(args.params) < 2:
        raise UsageError("need G M or --presentation FILE")
    return ring_new(args.params[0], args.params[1])


def cmd_ring(args, out) -> int:
    r = _ring_from_args(args)
    if args.as_presentation:
        out.write(format_presentation(r))
        return EXIT_OK
    dims = r.poincare()
    if args.format == "record":
        out.write(_dump({
            "basis": [{"index": i, "label": lab, "degree": d}
                      for i, (lab, d) in enumerate(zip(r.labels, r.degrees))],
            "poincare": dims,
            "top_degree": r.top_degree,
        }) + "\n")
        return EXIT_OK
    out.write(f"basis ({len(r)} elements)\n")
    for i, (lab, d) in enumerate(zip(r.labels, r.degrees)):
        out.write(f"  {i:3d}  {lab:<8s} degree {d}\n")
    out.write(f"Poincare polynomial: {format_poincare(dims)}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    cert = verify_theorem(args.g, args.m, args.s)
    out.write((cert.to_json() if args.format == "record" else cert.render()) + "\n")
    return EXIT_OK if cert.conclusion == EXACT else EXIT_FAIL


def cmd_steps(args, out) -> int:
    steps = verify_steps_s3(args.g, args.m)
    if args.format == "record":
        out.write(_dump({
            "params": {"g": args.g, "m": args.m, "s": 3},
            "steps": [{"index": st.index, "name": st.name, "relation": st.relation,
                       "holds": st.holds, "lhs": st.lhs.labels(), "rhs": st.rhs.labels()}
                      for st in steps],
        }) + "\n")
    else:
        for st in steps:
            mark = "ok" if st.holds else "FAILED"
            out.write(f"{st.name:>4s}  {st.relation:<32s} {mark}\n")
    bad = first_failing_step(steps)
    if bad is not None:
        print(f"first failing step: {bad}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def _search_kwargs(args) -> dict:
    return {"pool": args.pool, "strategy": args.strategy,
            "max_len": args.max_len, "budget": args.budget}


def cmd_zcl(args, out) -> int:
    if args.presentation:
        if len(args.params) != 1:
            raise UsageError("with --presentation give exactly one parameter: S")
        pr = ProductRing(_ring_from_args(args), args.params[0])
        seed = None
    else:
        if len(args.params) != 3:
            raise UsageError("need G M S")
        g, m, s = args.params
        pr = family_product(g, m, s)
        seed = witness_factors(g, m, s, pr) if args.seed_witness else None
    cert = zcl_search(pr, seed=seed, **_search_kwargs(args))
    out.write((cert.to_json() if args.format == "record" else cert.render()) + "\n")
    return EXIT_OK if cert.check() else EXIT_FAIL


def cmd_bounds(args, out) -> int:
    cert = bounds_certificate(args.g, args.m, args.s, **_search_kwargs(args))
    if args.format == "record":
        out.write(_dump({"params": cert.params, "lower": cert.zcl_lower,
                         "upper": cert.dim_upper, "conclusion": cert.conclusion}) + "\n")
    else:
        out.write(f"{cert.zcl_lower} <= TC_{args.s} <= {cert.dim_upper}  ({cert.conclusion})\n")
    return EXIT_FAIL if cert.conclusion == FAILED else EXIT_OK


def cmd_expand(args, out) -> int:
    pr = family_product(args.g, args.m, args.s)
    if args.factors:
        try:
            items = tuple(parse_factor(pr, f) for f in args.factors)
        except (ValueError, RingError) as exc:
            raise UsageError(f"bad factor: {exc}") from None
        factors = FactorList(items)
    else:
        factors = witness_factors(args.g, args.m, args.s, pr)
    value = expand(pr, factors)
    if args.format == "record":
        out.write(_dump({
            "params": {"g": args.g, "m": args.m, "s": args.s},
            "factors": [{"terms": c.labels(), "multiplicity": k} for c, k in factors],
            "expanded": value.labels(),
            "is_top_class": value == pr.top_class(),
        }) + "\n")
    else:
        out.write((" + ".join(value.labels()) or "0") + "\n")
    return EXIT_OK


def _sweep_cell(gms):
    g, m, s = gms
    cert = verify_theorem(g, m, s)
    conclusion = cert.conclusion if cert.check() else FAILED
    return {"g": g, "m": m, "s": s, "zcl_lower": cert.zcl_lower,
            "dim_upper": cert.dim_upper, "conclusion": conclusion}


def cmd_sweep(args, out) -> int:
    cells = list(_cartesian(args.grange, args.mrange, args.srange))
    for g, m, s in cells:
        if g < 2 or m < 2 or s < 3:
            raise ParameterError(f"sweep needs g >= 2, m >= 2, s >= 3; got ({g}, {m}, {s})")
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_sweep_cell, cells))
    else:
        rows = [_sweep_cell(c) for c in cells]
    if args.format == "record":
        for row in rows:
            out.write(_dump(row) + "\n")
    else:
        out.write(f"{'g':>3} {'m':>3} {'s':>3} {'zcl_lower':>10} {'dim_upper':>10}  conclusion\n")
        for r in rows:
            out.write(f"{r['g']:>3} {r['m']:>3} {r['s']:>3} {r['zcl_lower']:>10} {r['dim_upper']:>10}  {r['conclusion']}\n")
    return EXIT_OK if all(r["conclusion"] == EXACT for r in rows) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tcsum",
        description="Cohomology of connected sums of RP^m and zero-divisor bounds for TC_s.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "record"), default="text")
    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--pool", choices=POOLS, default="std1")
    search.add_argument("--strategy", choices=STRATEGIES, default="exhaustive")
    search.add_argument("--max-len", type=int, default=None)
    search.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ring", parents=[fmt], help="basis, degrees and Poincare polynomial")
    p.add_argument("params", nargs="*", type=int, metavar="G M")
    p.add_argument("--presentation", metavar="FILE")
    p.add_argument("--as-presentation", action="store_true", help="print the ring in presentation format")
    p.set_defaults(func=cmd_ring)

    for name, func, helptext in (
        ("verify", cmd_verify, "certify TC_s = s m with the explicit witness"),
        ("expand", cmd_expand, "expand a product of classes (default: the witness)"),
    ):
        p = sub.add_parser(name, parents=[fmt], help=helptext)
        p.add_argument("g", type=int)
        p.add_argument("m", type=int)
        p.add_argument("s", type=int)
        if name == "expand":
            p.add_argument("factors", nargs="*", metavar="FACTOR",
                           help="e.g. 'x1@1+x1@2:3' for (x_{1,1}+x_{1,2})^3")
        p.set_defaults(func=func)

    p = sub.add_parser("steps", parents=[fmt], help="check the s = 3 rewriting chain")
    p.add_argument("g", type=int)
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_steps)

    p = sub.add_parser("zcl", parents=[fmt, search], help="search for long nonzero zero-divisor products")
    p.add_argument("params", nargs="+", type=int, metavar="G M S | S")
    p.add_argument("--presentation", metavar="FILE")
    p.add_argument("--seed-witness", action="store_true")
    p.set_defaults(func=cmd_zcl)

    p = sub.add_parser("bounds", parents=[fmt, search], help="zcl lower and dimensional upper bound")
    p.add_argument("g", type=int)
    p.add_argument("m", type=int)
    p.add_argument("s", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("sweep", parents=[fmt], help="verify over a parameter grid")
    p.add_argument("grange", type=parse_range, metavar="GMIN..GMAX")
    p.add_argument("mrange", type=parse_range, metavar="MMIN..MMAX")
    p.add_argument("srange", type=parse_range, metavar="SMIN..SMAX")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, ParameterError, PresentationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
