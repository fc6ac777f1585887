"""Command-line front end.

Verbs: transform, convolve, partitions, limit, selftest.  All rational I/O
is lossless: sequences travel as JSON arrays of integers or "p/q" strings,
never floats.  On failure a machine-readable error object is written to
stderr and the exit code is nonzero.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .convolution import convolve, monotone_convolve
from .cumulants import (
    CumulantSequence,
    MomentSequence,
    cumulants_from_moments,
    moments_from_monotone_cumulants,
    moments_from_partition_sum,
    monotone_cumulants_from_moments,
)
from .errors import (
    InputFormatError,
    InvalidKindError,
    PreconditionError,
    QCumulantsError,
    SizeBoundError,
    TruncationError,
)
from .limits import clt_convergence_table, poisson_convergence_table
from .partitions import (
    IndependenceKind,
    enumerate_monotone,
    enumerate_ordered_partitions,
    enumerate_partitions,
    is_interval,
    is_noncrossing,
    partition_text,
)
from .rationals import format_rational
from .selftest import run_selftest

_ERROR_CODES = {
    InputFormatError: "bad-input",
    InvalidKindError: "invalid-kind",
    PreconditionError: "precondition",
    SizeBoundError: "size-bound",
    TruncationError: "truncation",
}


def _fail(code: str, message: str) -> int:
    json.dump({"error": {"code": code, "message": message}}, sys.stderr)
    sys.stderr.write("\n")
    return 1


def _emit_json(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _parse_sequence(raw, what: str):
    if not isinstance(raw, list) or not raw:
        raise InputFormatError(f"{what} must be a non-empty JSON array")
    out = []
    for entry in raw:
        if isinstance(entry, bool) or isinstance(entry, float):
            raise InputFormatError(f"non-rational entry in {what}: {entry!r} (use integers or \"p/q\" strings)")
        try:
            out.append(Fraction(entry) if isinstance(entry, int) else Fraction(str(entry).strip()))
        except (ValueError, ZeroDivisionError, TypeError):
            raise InputFormatError(f"non-rational entry in {what}: {entry!r}") from None
    return out


def _load_payload(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from None
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"malformed JSON in {path}: {exc}") from None
    if not isinstance(payload, dict):
        raise InputFormatError(f"top-level JSON object expected in {path}")
    return payload


def _moments_from_payload(payload, order: int | None, what: str) -> MomentSequence:
    if "moments" not in payload:
        raise InputFormatError(f"{what} must carry a \"moments\" array")
    seq = _parse_sequence(payload["moments"], f"{what} moments")
    if seq[0] != 1:
        raise InputFormatError(f"{what} has M_0 = {format_rational(seq[0])}, expected 1")
    if order is not None:
        if len(seq) < order + 1:
            raise InputFormatError(f"{what} carries {len(seq) - 1} moments, order {order} requested")
        seq = seq[: order + 1]
    return MomentSequence(tuple(seq))


def _kind_from(args, payload=None) -> IndependenceKind:
    name = args.kind or (payload or {}).get("kind")
    if not name:
        raise InputFormatError("independence kind required (--kind or a \"kind\" field)")
    return IndependenceKind.from_name(str(name))


def _int_list(text: str, what: str):
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise InputFormatError(f"{what} must be a comma-separated integer list, got {text!r}") from None
    if not values:
        raise InputFormatError(f"{what} is empty")
    return values


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------

def _cmd_transform(args) -> int:
    payload = _load_payload(args.input)
    kind = _kind_from(args, payload)
    if args.direction == "moments-to-cumulants":
        ms = _moments_from_payload(payload, args.order, "input")
        if kind is IndependenceKind.MONOTONE:
            cs, route = monotone_cumulants_from_moments(ms), "monotone-triangular"
        else:
            cs, route = cumulants_from_moments(ms, kind), "partition-sum-triangular"
    else:
        if "cumulants" not in payload:
            raise InputFormatError("input must carry a \"cumulants\" array")
        seq = _parse_sequence(payload["cumulants"], "input cumulants")
        order = args.order if args.order is not None else len(seq)
        if len(seq) < order:
            raise InputFormatError(f"input carries {len(seq)} cumulants, order {order} requested")
        cs = CumulantSequence(kind, tuple(seq[:order]))
        if kind is IndependenceKind.MONOTONE:
            ms, route = moments_from_monotone_cumulants(cs), "monotone-recursion"
        else:
            ms, route = moments_from_partition_sum(cs), "partition-sum"
    result = {
        "kind": kind.value,
        "direction": args.direction,
        "order": cs.order,
        "route": route,
        "moments": [format_rational(m) for m in ms.moments],
        "cumulants": [format_rational(c) for c in cs.cumulants],
    }
    if args.output == "text":
        print("moments:  ", " ".join(result["moments"]))
        print("cumulants:", " ".join(result["cumulants"]))
    else:
        _emit_json(result)
    return 0


def _cmd_convolve(args) -> int:
    kind = _kind_from(args)
    x = _moments_from_payload(_load_payload(args.x), args.order, args.x)
    y = _moments_from_payload(_load_payload(args.y), args.order, args.y)
    result = convolve(x, y, kind)
    obj = {
        "kind": kind.value,
        "order": result.order,
        "commutative": kind is not IndependenceKind.MONOTONE,
        "moments": [format_rational(m) for m in result.moments],
        "warnings": list(result.notes),
    }
    if args.output == "text":
        print("moments:", " ".join(obj["moments"]))
        for note in result.notes:
            print("warning:", note)
    else:
        _emit_json(obj)
    return 0


_FAMILIES = {
    "all": lambda n: enumerate_partitions(n),
    "noncrossing": lambda n: (p for p in enumerate_partitions(n) if is_noncrossing(p)),
    "interval": lambda n: (p for p in enumerate_partitions(n) if is_interval(p)),
    "ordered": lambda n: enumerate_ordered_partitions(n),
    "monotone": lambda n: enumerate_monotone(n),
}


def _cmd_partitions(args) -> int:
    items = _FAMILIES[args.family](args.n)
    if args.mode == "count":
        count = sum(1 for _ in items)
        if args.output == "text":
            print(count)
        else:
            _emit_json({"n": args.n, "family": args.family, "count": count})
        return 0
    if args.output == "json":
        _emit_json({"n": args.n, "family": args.family,
                    "items": [partition_text(p) for p in items]})
    else:
        for p in items:  # streaming; memory stays flat near the bound
            print(partition_text(p))
    return 0


def _cmd_limit(args) -> int:
    decimals = args.decimals
    if args.limit_kind == "clt":
        if not args.input:
            raise InputFormatError("clt needs --input with a standardized moment file")
        x = _moments_from_payload(_load_payload(args.input), None, args.input)
        steps = _int_list(args.steps or "1,2,4,8", "--steps")
        orders = _int_list(args.orders or "2,3,4", "--orders")
        table = clt_convergence_table(x, steps, orders)
        meta = {"limit": "clt", "columns": list(table.columns)}
    else:
        if args.lam is None:
            raise InputFormatError("poisson needs --lambda")
        steps = _int_list(args.steps or "10,100,1000", "--steps")
        orders = _int_list(args.orders or "1,2,3,4", "--orders")
        bases = None
        if args.base:
            raw = _load_payload(args.base)
            bases = {}
            for key, value in raw.items():
                try:
                    n_copies = int(key)
                except ValueError:
                    raise InputFormatError(f"base keys must be N values, got {key!r}") from None
                seq = _parse_sequence(value, f"base for N={key}")
                if seq[0] != 1:
                    raise InputFormatError(f"base for N={key} has M_0 != 1")
                bases[n_copies] = MomentSequence(tuple(seq))
        try:
            lam = Fraction(args.lam)
        except (ValueError, ZeroDivisionError):
            raise InputFormatError(f"--lambda must be rational, got {args.lam!r}") from None
        table = poisson_convergence_table(lam, steps, orders, bases)
        meta = {"limit": "poisson", "lambda": format_rational(lam), "columns": list(table.columns)}
    if args.output == "csv":
        sys.stdout.write(table.csv_text(decimals))
    elif args.output == "text":
        print(table.text(decimals))
    else:
        meta["rows"] = table.records(decimals)
        _emit_json(meta)
    return 0


def _cmd_selftest(args) -> int:
    failures = run_selftest()
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcumulants",
        description="Exact moment-cumulant calculus for the four independences "
                    "(commutative, free, Boolean, monotone).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="convert between moments and cumulants")
    p.add_argument("--direction", required=True,
                   choices=("moments-to-cumulants", "cumulants-to-moments"))
    p.add_argument("--kind", choices=[k.value for k in IndependenceKind])
    p.add_argument("--order", type=int)
    p.add_argument("--input", default="-", help="JSON file, or - for stdin (default)")
    p.add_argument("--output", choices=("json", "text"), default="json")
    p.set_defaults(handler=_cmd_transform)

    p = sub.add_parser("convolve", help="convolve two moment sequences")
    p.add_argument("x", help="JSON file with the left sequence")
    p.add_argument("y", help="JSON file with the right sequence")
    p.add_argument("--kind", required=True, choices=[k.value for k in IndependenceKind])
    p.add_argument("--order", type=int)
    p.add_argument("--output", choices=("json", "text"), default="json")
    p.set_defaults(handler=_cmd_convolve)

    p = sub.add_parser("partitions", help="enumerate or count partition families")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--family", default="all", choices=sorted(_FAMILIES))
    p.add_argument("--mode", default="count", choices=("count", "list"))
    p.add_argument("--output", choices=("json", "text"), default="json")
    p.set_defaults(handler=_cmd_partitions)

    p = sub.add_parser("limit", help="convergence tables for the limit theorems")
    p.add_argument("--kind", dest="limit_kind", required=True, choices=("clt", "poisson"))
    p.add_argument("--input", help="standardized moment file (clt)")
    p.add_argument("--lambda", dest="lam", help="rate parameter (poisson)")
    p.add_argument("--steps", help="comma-separated s values (clt) or N values (poisson)")
    p.add_argument("--orders", help="comma-separated moment orders")
    p.add_argument("--base", help="JSON file mapping N to custom summand moments (poisson)")
    p.add_argument("--decimals", type=int,
                   help="add decimal approximations with this many digits (labelled approx)")
    p.add_argument("--output", choices=("json", "csv", "text"), default="json")
    p.set_defaults(handler=_cmd_limit)

    p = sub.add_parser("selftest", help="run the built-in exact invariant suite")
    p.set_defaults(handler=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except QCumulantsError as exc:
        code = _ERROR_CODES.get(type(exc), "error")
        return _fail(code, str(exc))
    except BrokenPipeError:
        return 0


def console_main() -> None:
    sys.exit(main())
