"""Command-line surface: bound tables, catalog construction, analysis and
verification of ideal files, the Gröbner-free Hilbert oracle, and the
parallel parameter sweep.

Exit codes: 0 extremal / 1 not extremal / 2 usage or file error /
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys

from .cohomology import (
    InternalCheckError,
    NotACurveError,
    verify_extremal,
)
from .construct import (
    ConstructionError,
    cubic_alternate_curve_ideal,
    extremal_curve_ideal,
    non_extremal_witness,
)
from .formulas import bound_profile, max_genus
from .idealfile import IdealFileError, emit_ideal, parse_ideal
from .oracle import oracle_quotient_dims
from .report import SCHEMA_VERSION


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="extremalcurves",
        description="construct and verify non-degenerate curves with maximal cohomology",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="print the cohomology bound tables")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--jmin", type=int, default=None)
    p.add_argument("--jmax", type=int, default=None)

    p = sub.add_parser("construct", help="write a catalog curve to an ideal file")
    p.add_argument("--catalog", choices=["ex45", "ex46", "rem64"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("analyze", help="full report for an ideal file")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("verify", help="exit 0 exactly when the curve is extremal")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser(
        "oracle-hf", help="Hilbert values by pure linear algebra (no Gröbner engine)"
    )
    p.add_argument("file")
    p.add_argument("--max-deg", type=int, required=True)

    p = sub.add_parser("sweep", help="run the verification grid")
    p.add_argument("--n", required=True, help="range A:B inclusive")
    p.add_argument("--d", required=True, help="range A:B inclusive")
    p.add_argument("--a", required=True, help="range A:B inclusive")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _span(text):
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except Exception:
        raise argparse.ArgumentTypeError(f"expected A:B, got {text!r}")


def _cmd_bounds(args):
    g_top = max_genus(args.n, args.d)
    if args.g > g_top:
        print(
            f"error: genus {args.g} exceeds the bound {g_top} for (n, d) = "
            f"({args.n}, {args.d})",
            file=sys.stderr,
        )
        return 2
    prof = bound_profile(args.n, args.d, args.g, jmin=args.jmin, jmax=args.jmax)
    print(f"g_max(n={args.n}, d={args.d}) = {g_top}   a = {g_top - args.g}")
    print(f"{'j':>5} {'h1_bound':>9} {'h2_bound':>9}")
    lo, hi = prof.window
    for j in range(lo, hi + 1):
        mu = prof.h2_at(j)
        print(f"{j:>5} {prof.h1_at(j):>9} {mu if mu is not None else '-':>9}")
    return 0


def _cmd_construct(args):
    a = max_genus(args.n, args.d) - args.g
    if args.catalog == "ex45":
        ideal = extremal_curve_ideal(args.n, args.d, args.g)
    elif args.catalog == "ex46":
        ideal = non_extremal_witness(args.n, a, args.d).ideal
    else:
        if args.d != 3:
            raise ConstructionError("the alternate catalog has degree 3")
        ideal = cubic_alternate_curve_ideal(args.n, a)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(emit_ideal(ideal))
    print(f"wrote {len(ideal.gens)} generators to {args.output}")
    return 0


def _cmd_analyze(args):
    ideal = parse_ideal(args.file)
    report = verify_extremal(ideal, seed=args.seed)
    if args.format == "json":
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    return 0


def _cmd_verify(args):
    ideal = parse_ideal(args.file)
    report = verify_extremal(
        ideal, seed=args.seed, betti_check=False, section_check=False,
        planar_check=False, gin_check=False,
    )
    return 0 if report.extremal else 1


def _cmd_oracle_hf(args):
    ideal = parse_ideal(args.file)
    dims = oracle_quotient_dims(list(ideal.gens), args.max_deg, ideal.ring)
    for j, v in enumerate(dims):
        print(f"{j} {v}")
    return 0


def sweep_point(task):
    """One grid point of the sweep; returns a plain dict for merging."""
    n, d, a, seed = task
    g = max_genus(n, d) - a
    if d == 2 and a < 1:
        return {"point": {"n": n, "d": d, "a": a}, "skipped": "degree 2 needs a >= 1"}
    try:
        ideal = extremal_curve_ideal(n, d, g)
        report = verify_extremal(ideal, seed=seed)
    except InternalCheckError as e:
        return {"point": {"n": n, "d": d, "a": a}, "internal_error": str(e)}
    return {"point": {"n": n, "d": d, "a": a}, "report": report.to_json_dict()}


def _cmd_sweep(args):
    n_lo, n_hi = _span(args.n)
    d_lo, d_hi = _span(args.d)
    a_lo, a_hi = _span(args.a)
    tasks = []
    for n in range(n_lo, n_hi + 1):
        for d in range(d_lo, d_hi + 1):
            for a in range(a_lo, a_hi + 1):
                tasks.append((n, d, a, args.seed))
    if args.jobs > 1:
        with multiprocessing.Pool(args.jobs) as pool:
            results = pool.map(sweep_point, tasks, chunksize=1)
    else:
        results = [sweep_point(t) for t in tasks]
    doc = {
        "schema": SCHEMA_VERSION,
        "seed": args.seed,
        "grid": {
            "n": [n_lo, n_hi],
            "d": [d_lo, d_hi],
            "a": [a_lo, a_hi],
        },
        "reports": results,
    }
    payload = json.dumps(doc, indent=2) + "\n"
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(payload)
    verdicts = [
        r.get("report", {}).get("verdict") for r in results if "report" in r
    ]
    print(
        f"{len(results)} grid points, {verdicts.count('extremal')} extremal, "
        f"{sum(1 for r in results if 'skipped' in r)} skipped"
    )
    if any("internal_error" in r for r in results):
        return 3
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0,) else 0
    handlers = {
        "bounds": _cmd_bounds,
        "construct": _cmd_construct,
        "analyze": _cmd_analyze,
        "verify": _cmd_verify,
        "oracle-hf": _cmd_oracle_hf,
        "sweep": _cmd_sweep,
    }
    try:
        return handlers[args.command](args)
    except InternalCheckError as e:
        print(f"internal invariant violation: {e}", file=sys.stderr)
        return 3
    except (IdealFileError, NotACurveError, ConstructionError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
