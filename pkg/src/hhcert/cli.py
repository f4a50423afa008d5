"""Command-line interface for bound verification, identities, and sweeps.

Exit status is 0 when every evaluated check with a satisfied hypothesis
holds, 1 when some bound with a satisfied hypothesis fails, and 2 for
configuration errors (unknown function, invalid parameters or exponents,
malformed intervals, evaluation outside a domain).

Machine formats emit every number with 17 significant digits and a '.'
decimal point regardless of locale.  Sweep output is byte-identical across
runs for a fixed configuration; the RNG algorithm identifier and seed are
recorded in the output header so sweeps can be reproduced elsewhere.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import IO

from . import sampling
from .bounds import (
    ORDER_SLACK,
    bound_kirmaci_ozdemir,
    bound_theorem2,
    bound_theorem3,
    hh_sandwich,
    midpoint_gap,
    verify_identity,
)
from .catalog import (
    NO_VIOLATION,
    ConvexityReport,
    FunctionDescriptor,
    Interval,
    check_convexity,
    parse_function_id,
)
from .errors import HHCertError
from .kernel import kernel_m, kernel_p_moment, kernel_p_norm
from .means import (
    MeanPair,
    check_proposition,
    mean_arithmetic,
    mean_identric,
    mean_logarithmic,
    mean_p_logarithmic,
)
from .quadrature import integrate_2d
from .sampling import SplitMix64, draw_interval

EXIT_OK = 0
EXIT_BOUND_FAILURE = 1
EXIT_CONFIG = 2

CSV_COLUMNS = ("case_id", "a", "b", "q", "theorem", "gap", "bound", "ratio", "hypothesis", "holds")

_TRIVIAL = ConvexityReport(NO_VIOLATION, 0.0, None, 0)


def _fmt(v) -> str:
    """Render one value for text/CSV output; floats get 17 significant digits."""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        if math.isnan(v):
            return "nan"
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return f"{v:.17g}"
    if v is None:
        return ""
    return str(v)


def _json_scalar(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        if math.isnan(v):
            return "null"
        if math.isinf(v):
            return '"inf"' if v > 0 else '"-inf"'
        return f"{v:.17g}"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_json_scalar(x) for x in v) + "]"
    return json.dumps(v)


def _write_json(out: IO[str], meta: dict, records: list[dict]) -> None:
    out.write("{\n")
    for key, val in meta.items():
        out.write(f'  "{key}": {_json_scalar(val)},\n')
    out.write('  "records": [\n')
    for i, rec in enumerate(records):
        body = ", ".join(f'"{k}": {_json_scalar(v)}' for k, v in rec.items())
        comma = "," if i + 1 < len(records) else ""
        out.write(f"    {{{body}}}{comma}\n")
    out.write("  ]\n}\n")


def _write_csv(out: IO[str], comment: str | None, records: list[dict]) -> None:
    if comment:
        out.write(f"# {comment}\n")
    out.write(",".join(CSV_COLUMNS) + "\n")
    for rec in records:
        out.write(",".join(_fmt(rec.get(col)) for col in CSV_COLUMNS) + "\n")


def _write_text(out: IO[str], headline: str, records: list[dict]) -> None:
    out.write(headline + "\n")
    for rec in records:
        parts = [f"{rec['theorem']:2s}"] if "theorem" in rec else []
        for key in ("case_id", "gap", "bound", "ratio", "holds"):
            if key in rec:
                parts.append(f"{key}={_fmt(rec[key])}")
        if "hypothesis_verdict" in rec:
            parts.append(f"hypothesis={rec['hypothesis_verdict']}")
        out.write("  " + "  ".join(parts) + "\n")


def _bound_record(case_id: int, fd: FunctionDescriptor, iv: Interval, q, report) -> dict:
    return {
        "case_id": case_id,
        "function": fd.label,
        "a": iv.a,
        "b": iv.b,
        "q": q,
        "theorem": report.theorem,
        "gap": report.gap,
        "bound": report.bound,
        "ratio": report.ratio,
        "hypothesis": report.hypothesis.verdict,
        "hypothesis_verdict": report.hypothesis.verdict,
        "holds": report.holds,
    }


def _sandwich_record(case_id: int, fd: FunctionDescriptor, iv: Interval, sandwich, convexity) -> dict:
    # The sandwich maps onto the bound schema as: gap = worst ordering
    # violation (clamped at 0), bound = the ordering slack, so that
    # holds == (gap <= bound) exactly reproduces `ordered`.
    gap = max(sandwich.lower - sandwich.middle, sandwich.middle - sandwich.upper, 0.0)
    return {
        "case_id": case_id,
        "function": fd.label,
        "a": iv.a,
        "b": iv.b,
        "q": None,
        "theorem": "HH",
        "gap": gap,
        "bound": ORDER_SLACK,
        "ratio": gap / ORDER_SLACK,
        "hypothesis": convexity.verdict,
        "hypothesis_verdict": convexity.verdict,
        "holds": sandwich.ordered,
    }


def _strip_internal(rec: dict) -> dict:
    """Project a record onto the JSON schema (drop the CSV alias column)."""
    keys = ("case_id", "function", "a", "b", "q", "theorem", "gap", "bound",
            "ratio", "hypothesis_verdict", "holds")
    return {k: rec[k] for k in keys}


def _exit_from_records(records: list[dict]) -> int:
    for rec in records:
        if rec["hypothesis_verdict"] == NO_VIOLATION and not rec["holds"]:
            return EXIT_BOUND_FAILURE
    return EXIT_OK


def _emit(args, meta: dict, records: list[dict], headline: str) -> None:
    out = sys.stdout
    if args.format == "json":
        _write_json(out, meta, [_strip_internal(r) for r in records])
    elif args.format == "csv":
        comment = " ".join(f"{k}={_fmt(v)}" for k, v in meta.items())
        _write_csv(out, comment, records)
    else:
        _write_text(out, headline, records)


def cmd_verify(args) -> int:
    fd = parse_function_id(args.fn)
    iv = Interval(args.interval[0], args.interval[1])
    q = args.q
    records = [
        _bound_record(0, fd, iv, 2.0, bound_theorem2(fd, iv, args.tol, args.grid_points)),
        _bound_record(0, fd, iv, q, bound_theorem3(fd, iv, q, args.tol, args.grid_points)),
        _bound_record(0, fd, iv, q, bound_kirmaci_ozdemir(fd, iv, q, args.tol, args.grid_points)),
    ]
    sandwich = hh_sandwich(fd, iv, args.tol)
    convexity = _TRIVIAL if iv.is_degenerate else check_convexity(fd.eval, iv, args.grid_points)
    records.append(_sandwich_record(0, fd, iv, sandwich, convexity))
    meta = {
        "command": "verify",
        "function": fd.label,
        "interval": [iv.a, iv.b],
        "q": q,
        "tol": args.tol,
    }
    headline = (
        f"verify {fd.label} on [{_fmt(iv.a)}, {_fmt(iv.b)}] q={_fmt(q)} "
        f"(sandwich: lower={_fmt(sandwich.lower)} middle={_fmt(sandwich.middle)} "
        f"upper={_fmt(sandwich.upper)} ordered={_fmt(sandwich.ordered)})"
    )
    _emit(args, meta, records, headline)
    return _exit_from_records(records)


def cmd_sweep(args) -> int:
    fd = parse_function_id(args.fn)
    lo, hi = args.interval_range
    rng = SplitMix64(args.seed)
    records: list[dict] = []
    for case_id in range(args.cases):
        iv = draw_interval(rng, lo, hi, fd.domain)
        t2 = bound_theorem2(fd, iv, args.tol, args.grid_points)
        t3 = bound_theorem3(fd, iv, args.q, args.tol, args.grid_points)
        ko = bound_kirmaci_ozdemir(fd, iv, args.q, args.tol, args.grid_points)
        records.append(_bound_record(case_id, fd, iv, 2.0, t2))
        records.append(_bound_record(case_id, fd, iv, args.q, t3))
        records.append(_bound_record(case_id, fd, iv, args.q, ko))
    meta = {
        "command": "sweep",
        "rng": sampling.ALGORITHM,
        "seed": args.seed,
        "function": fd.label,
        "cases": args.cases,
        "q": args.q,
        "interval_range": [lo, hi],
        "tol": args.tol,
    }
    headline = f"sweep {fd.label} cases={args.cases} seed={args.seed} rng={sampling.ALGORITHM}"
    _emit(args, meta, records, headline)
    return _exit_from_records(records)


def cmd_identity(args) -> int:
    fd = parse_function_id(args.fn)
    iv = Interval(args.interval[0], args.interval[1])
    lemma = f"L{args.lemma}"
    residual = verify_identity(lemma, fd, iv, args.tol)
    if args.format == "json":
        meta = {
            "command": "identity",
            "lemma": lemma,
            "function": fd.label,
            "a": iv.a,
            "b": iv.b,
            "tol": args.tol,
            "residual": residual,
        }
        sys.stdout.write("{\n")
        body = [f'  "{k}": {_json_scalar(v)}' for k, v in meta.items()]
        sys.stdout.write(",\n".join(body) + "\n}\n")
    elif args.format == "csv":
        sys.stdout.write("lemma,function,a,b,tol,residual\n")
        sys.stdout.write(
            f"{lemma},{fd.label},{_fmt(iv.a)},{_fmt(iv.b)},{_fmt(args.tol)},{_fmt(residual)}\n"
        )
    else:
        sys.stdout.write(
            f"identity {lemma} {fd.label} on [{_fmt(iv.a)}, {_fmt(iv.b)}]: "
            f"residual={_fmt(residual)}\n"
        )
    return EXIT_OK


def cmd_kernel(args) -> int:
    moment = kernel_p_moment(args.p)
    norm = kernel_p_norm(args.p)
    numeric = integrate_2d(
        lambda t, s: abs(kernel_m(t) - kernel_m(s)) ** args.p,
        args.tol,
        breakpoints_t=(0.5,),
        breakpoints_s=(0.5,),
    )
    discrepancy = abs(moment.closed_form - numeric.value)
    meta = {
        "command": "kernel",
        "p": moment.p,
        "closed_form": moment.closed_form,
        "J1": moment.pieces[0],
        "J2": moment.pieces[1],
        "J3": moment.pieces[2],
        "J4": moment.pieces[3],
        "p_norm": norm,
        "numeric": numeric.value,
        "numeric_error_estimate": numeric.error_estimate,
        "discrepancy": discrepancy,
    }
    if args.format == "json":
        sys.stdout.write("{\n")
        body = [f'  "{k}": {_json_scalar(v)}' for k, v in meta.items()]
        sys.stdout.write(",\n".join(body) + "\n}\n")
    elif args.format == "csv":
        keys = [k for k in meta if k != "command"]
        sys.stdout.write(",".join(keys) + "\n")
        sys.stdout.write(",".join(_fmt(meta[k]) for k in keys) + "\n")
    else:
        sys.stdout.write(
            f"kernel p={_fmt(moment.p)}: closed_form={_fmt(moment.closed_form)} "
            f"pieces=({_fmt(moment.pieces[0])}, {_fmt(moment.pieces[1])}, "
            f"{_fmt(moment.pieces[2])}, {_fmt(moment.pieces[3])}) p_norm={_fmt(norm)}\n"
            f"  numeric={_fmt(numeric.value)} discrepancy={_fmt(discrepancy)}\n"
        )
    return EXIT_OK


def cmd_means(args) -> int:
    mp = MeanPair(args.a, args.b)
    rows: list[tuple[str, dict]] = []
    rows.append(("mean", {"item": "A", "value": mean_arithmetic(mp)}))
    rows.append(("mean", {"item": "L", "value": mean_logarithmic(mp)}))
    rows.append(("mean", {"item": "I", "value": mean_identric(mp)}))
    if args.p is not None:
        rows.append(("mean", {"item": f"L_{_fmt(args.p)}", "value": mean_p_logarithmic(mp, args.p)}))
    props = [
        check_proposition("P1", mp, n=args.n, variant=args.variant),
        check_proposition("P2", mp, n=args.n, q=args.q, variant=args.variant),
        check_proposition("P3", mp, q=args.q, variant=args.variant),
        check_proposition("P4", mp, q=args.q, variant=args.variant),
    ]
    for rep in props:
        rows.append(("prop", {
            "item": rep.proposition,
            "lhs": rep.lhs,
            "rhs": rep.rhs,
            "variant": rep.variant,
            "holds": rep.holds,
        }))
    if args.format == "json":
        meta = {
            "command": "means",
            "a": mp.a,
            "b": mp.b,
            "n": args.n,
            "q": args.q,
            "variant": args.variant,
        }
        records = [payload for _, payload in rows]
        _write_json(sys.stdout, meta, records)
    elif args.format == "csv":
        sys.stdout.write("item,value,lhs,rhs,variant,holds\n")
        for kind, payload in rows:
            if kind == "mean":
                sys.stdout.write(f"{payload['item']},{_fmt(payload['value'])},,,,\n")
            else:
                sys.stdout.write(
                    f"{payload['item']},,{_fmt(payload['lhs'])},{_fmt(payload['rhs'])},"
                    f"{payload['variant']},{_fmt(payload['holds'])}\n"
                )
    else:
        sys.stdout.write(f"means a={_fmt(mp.a)} b={_fmt(mp.b)}\n")
        for kind, payload in rows:
            if kind == "mean":
                sys.stdout.write(f"  {payload['item']:<6s} {_fmt(payload['value'])}\n")
            else:
                sys.stdout.write(
                    f"  {payload['item']}  lhs={_fmt(payload['lhs'])}  rhs={_fmt(payload['rhs'])}  "
                    f"variant={payload['variant']}  holds={_fmt(payload['holds'])}\n"
                )
    if any(not rep.holds for rep in props):
        return EXIT_BOUND_FAILURE
    return EXIT_OK


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--tol", type=float, default=1e-10,
                     help="absolute quadrature tolerance (default 1e-10)")
    sub.add_argument("--format", choices=("text", "json", "csv"), default="text",
                     help="output format (default text)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hhcert",
        description="Certify midpoint-rule error bounds, integral identities, "
                    "kernel constants, and special-means inequalities.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    verify = subs.add_parser("verify", help="evaluate the three bounds and the sandwich")
    verify.add_argument("--fn", required=True, help="function id, e.g. exp, pow:3, abs_pow:2.5")
    verify.add_argument("--interval", nargs=2, type=float, metavar=("A", "B"), required=True)
    verify.add_argument("--q", type=float, default=2.0, help="hypothesis exponent q > 1 (default 2)")
    verify.add_argument("--grid-points", type=int, default=257,
                        help="convexity sampling density per axis (default 257)")
    _add_common(verify)
    verify.set_defaults(func=cmd_verify)

    sweep = subs.add_parser("sweep", help="seeded randomized bound sweep")
    sweep.add_argument("--fn", required=True)
    sweep.add_argument("--cases", type=int, default=10, help="number of intervals (default 10)")
    sweep.add_argument("--seed", type=int, default=0, help="64-bit sweep seed (default 0)")
    sweep.add_argument("--q", type=float, default=2.0)
    sweep.add_argument("--interval-range", nargs=2, type=float, metavar=("LO", "HI"),
                       default=(0.1, 10.0),
                       help="endpoint sampling range, intersected with the "
                            "function domain (default 0.1 10)")
    sweep.add_argument("--grid-points", type=int, default=257)
    _add_common(sweep)
    sweep.set_defaults(func=cmd_sweep)

    identity = subs.add_parser("identity", help="residual of an exact integral identity")
    identity.add_argument("--lemma", type=int, choices=(1, 2), required=True)
    identity.add_argument("--fn", required=True)
    identity.add_argument("--interval", nargs=2, type=float, metavar=("A", "B"), required=True)
    _add_common(identity)
    identity.set_defaults(func=cmd_identity)

    kernel = subs.add_parser("kernel", help="kernel moment constants and numeric cross-check")
    kernel.add_argument("--p", type=float, required=True, help="moment exponent p >= 1")
    _add_common(kernel)
    kernel.set_defaults(func=cmd_kernel)

    means = subs.add_parser("means", help="special means and proposition checks")
    means.add_argument("--a", type=float, required=True)
    means.add_argument("--b", type=float, required=True)
    means.add_argument("--p", type=float, default=None, help="p-logarithmic mean exponent")
    means.add_argument("--n", type=int, default=2, help="power-mean exponent for P1/P2 (default 2)")
    means.add_argument("--q", type=float, default=2.0, help="hypothesis exponent (default 2)")
    means.add_argument("--variant", choices=("as-printed", "as-derived"), default="as-derived",
                       help="formula variant where two exist (default as-derived)")
    _add_common(means)
    means.set_defaults(func=cmd_means)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (HHCertError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
