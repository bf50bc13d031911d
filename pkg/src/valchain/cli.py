"""``valchain`` command-line front end.

Exit codes: 0 success, 1 a validation reported failures, 2 usage or schema
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import jsonio
from .algebraic import (
    AlgebraicElement,
    minimal_pair_eval,
    mutual_valuations,
    optimal_value,
)
from .chains import (
    CompleteSet,
    ContinuousFamily,
    DistinguishedChain,
    MLVChain,
    OkutsuFrame,
    OptimalMacLaneChain,
    Report,
    complete_to_maclane,
    complete_to_mlv,
    completeness_check,
    convert_sdc_okutsu,
    family_check,
    maclane_to_complete,
    mlv_to_complete,
    monic_sweep,
    sdc_to_complete,
    validate_okutsu,
    validate_sdc,
)
from .groundfield import FieldMismatchError, Polynomial, format_polynomial, make_field
from .valuations import augment, epsilon, q_expansion, truncate
from .values import format_value, parse_value, value_to_json


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# helpers


def _field_from_args(args, default=None):
    kind = args.field or (default.kind if default is not None else "padic")
    if args.p is None:
        if default is None:
            raise UsageError("--p is required")
        field = default
    else:
        field = make_field(kind, args.p)
    if default is not None and field != default:
        raise FieldMismatchError(f"command line field {field} differs from input field {default}")
    return field


def _poly(text, field, flag):
    try:
        return Polynomial.parse(text, field)
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}") from exc


def _value(text, flag):
    try:
        return parse_value(text)
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}") from exc


def _load(path):
    try:
        return jsonio.load_json(path)
    except jsonio.SchemaError as exc:
        raise UsageError(str(exc)) from exc


def _decode(path, fn):
    obj = _load(path)
    try:
        return fn(obj, "$")
    except jsonio.SchemaError as exc:
        raise UsageError(f"{path}: {exc}") from exc


class Out:
    def __init__(self, as_json: bool):
        self.as_json = as_json

    def emit(self, text: str, doc):
        if self.as_json:
            sys.stdout.write(jsonio.dumps(doc))
        else:
            sys.stdout.write(text if text.endswith("\n") else text + "\n")

    def report(self, rep: Report) -> int:
        if self.as_json:
            sys.stdout.write(jsonio.dumps(rep.to_json()))
        else:
            for line in rep.text_lines():
                sys.stdout.write(line + "\n")
                sys.stdout.flush()
        return 0 if rep.ok else 1


# ---------------------------------------------------------------------------
# subcommands


def cmd_eval(args, out):
    w = _decode(args.valuation, jsonio.valuation_from)
    field = _field_from_args(args, w.field)
    val = w(_poly(args.poly, field, "--poly"))
    out.emit(format_value(val), {"value": value_to_json(val)})
    return 0


def cmd_expand(args, out):
    field = _field_from_args(args)
    f, Q = _poly(args.poly, field, "--poly"), _poly(args.Q, field, "--Q")
    try:
        coeffs = q_expansion(f, Q)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    text = "\n".join(f"f_{i} = {c}" for i, c in enumerate(coeffs))
    out.emit(text, {"coefficients": [jsonio.poly_to(c) for c in coeffs]})
    return 0


def cmd_augment(args, out):
    w = _decode(args.valuation, jsonio.valuation_from)
    field = _field_from_args(args, w.field)
    w2 = augment(w, _poly(args.phi, field, "--phi"), _value(args.gamma, "--gamma"))
    out.emit(str(w2), jsonio.valuation_to(w2))
    return 0


def cmd_truncate(args, out):
    w = _decode(args.valuation, jsonio.valuation_from)
    field = _field_from_args(args, w.field)
    t = truncate(w, _poly(args.Q, field, "--Q"), certified=args.certified)
    if args.poly is not None:
        val = t(_poly(args.poly, field, "--poly"))
        out.emit(format_value(val), {"value": value_to_json(val)})
    else:
        out.emit(str(t), jsonio.valuation_to(t))
    return 0


def cmd_epsilon(args, out):
    w = _decode(args.valuation, jsonio.valuation_from)
    field = _field_from_args(args, w.field)
    val = epsilon(w, _poly(args.poly, field, "--poly"))
    out.emit(format_value(val), {"epsilon": value_to_json(val)})
    return 0


def _multiset_text(vals):
    return "{" + ", ".join(format_value(v) for v in vals) + "}"


def cmd_mutual(args, out):
    field = _field_from_args(args)
    vals = mutual_valuations(_poly(args.F, field, "--F"), _poly(args.G, field, "--G"))
    out.emit(_multiset_text(vals), {"multiset": [value_to_json(v) for v in vals]})
    return 0


def cmd_optimal_value(args, out):
    field = _field_from_args(args)
    theta = AlgebraicElement.of(_poly(args.theta, field, "--theta"), args.certificate)
    delta = _value(args.delta, "--delta")
    f = _poly(args.poly, field, "--poly")
    if args.wbar:
        val = minimal_pair_eval(theta, delta, f)
        out.emit(format_value(val), {"wbar": value_to_json(val)})
    else:
        val = optimal_value(theta, delta, f)
        out.emit(format_value(val), {"optimal_value": value_to_json(val)})
    return 0


def describe(x) -> str:
    if isinstance(x, OkutsuFrame):
        return (f"Okutsu frame {x} for {x.target.minpoly}\n"
                f"m = ({', '.join(map(str, x.m))})\n"
                f"mu = ({', '.join(map(format_value, x.mu))})")
    if isinstance(x, DistinguishedChain):
        return (f"distinguished chain {x}\n"
                f"gaps (bottom first) = ({', '.join(map(format_value, x.gaps))})")
    if isinstance(x, CompleteSet):
        lines = [f"complete set for {x.target}"]
        for e in x.entries:
            tags = []
            if e.limit:
                tags.append("limit")
            if e.psi:
                tags.append("psi")
            tag = f"  [{', '.join(tags)}]" if tags else ""
            lines.append(f"  block {e.block}: {e.poly}  w = {format_value(e.value)}"
                         f"  eps = {format_value(e.eps)}{tag}")
        return "\n".join(lines)
    if isinstance(x, OptimalMacLaneChain):
        return f"optimal MacLane chain {x.valuation()}"
    if isinstance(x, MLVChain):
        parts = [f"depth zero ({format_value(x.center)}, {format_value(x.gamma0)})"
                 if x.field.kind == "padic" else f"depth zero ({x.phi0}, {format_value(x.gamma0)})"]
        for s in x.steps:
            name = "ordinary" if s.tag == "ordinary" else f"limit[{s.family.name or 'family'}]"
            parts.append(f"{name}({s.phi}, {format_value(s.gamma)})")
        return "MLV chain: " + "; ".join(parts)
    if isinstance(x, ContinuousFamily):
        return f"continuous family {x.name}"
    return str(x)


CONVERSIONS = {
    ("sdc", "okutsu"), ("okutsu", "sdc"), ("sdc", "complete-set"),
    ("maclane", "complete-set"), ("complete-set", "maclane"),
    ("complete-set", "mlv"), ("mlv", "complete-set"),
}


def _kind(x) -> str:
    return {
        DistinguishedChain: "sdc", OkutsuFrame: "okutsu", CompleteSet: "complete-set",
        OptimalMacLaneChain: "maclane", MLVChain: "mlv", ContinuousFamily: "family",
    }[type(x)]


def cmd_convert(args, out):
    x = _decode(args.source, jsonio.chain_from)
    src = _kind(x)
    if (src, args.to) not in CONVERSIONS:
        raise UsageError(f"no conversion from {src} to {args.to}")
    if args.to == "okutsu" or (src == "okutsu" and args.to == "sdc"):
        y = convert_sdc_okutsu(x)
    elif src == "sdc":
        delta = _value(args.delta, "--delta") if args.delta is not None else Fraction(1)
        y = sdc_to_complete(x, None, delta)
    elif src == "maclane":
        y = maclane_to_complete(x)
    elif src == "mlv":
        y = mlv_to_complete(x)
    elif args.to == "maclane":
        y = complete_to_maclane(x)
    else:
        y = complete_to_mlv(x)
    out.emit(describe(y), jsonio.chain_to(y))
    return 0


def _sweep_coeffs(text, field):
    try:
        return [field.parse_element(c) for c in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"--sweep-coeffs: {exc}") from exc


def cmd_validate(args, out):
    x = _decode(args.chain, jsonio.chain_from)
    cands = _decode(args.candidates, jsonio.candidates_from) if args.candidates else ()
    kind = _kind(x)
    if kind == "sdc":
        rep = validate_sdc(x, cands)
    elif kind == "okutsu":
        rep = validate_okutsu(x, None, cands)
    elif kind == "family":
        rep = family_check(x)
    else:
        L = x if kind == "complete-set" else (
            maclane_to_complete(x) if kind == "maclane" else mlv_to_complete(x))
        samples = monic_sweep(L.field, args.sweep_degree, _sweep_coeffs(args.sweep_coeffs, L.field))
        rep = completeness_check(L, L.target, samples)
    return out.report(rep)


def cmd_demo(args, out):
    from .demos import DEMOS
    if args.name not in DEMOS:
        raise UsageError(f"unknown fixture {args.name!r}; known: {', '.join(DEMOS)}")
    rep = DEMOS[args.name]()
    return out.report(rep)


def cmd_selftest(args, out):
    from .demos import selftest
    return out.report(selftest())


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, help="residue characteristic / prime of the ground field")
    common.add_argument("--field", choices=("padic", "ratfunc"), help="(Q, v_p) or (F_p(t), v_t)")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="as_json", action="store_true", help="emit one JSON document")
    fmt.add_argument("--text", dest="as_json", action="store_false", help="emit text (default)")

    parser = argparse.ArgumentParser(prog="valchain", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("eval", cmd_eval, "evaluate a valuation on a polynomial")
    sp.add_argument("--valuation", required=True)
    sp.add_argument("--poly", required=True)

    sp = add("expand", cmd_expand, "Q-expansion of a polynomial")
    sp.add_argument("--poly", required=True)
    sp.add_argument("--Q", required=True)

    sp = add("augment", cmd_augment, "ordinary augmentation [w; phi, gamma]")
    sp.add_argument("--valuation", required=True)
    sp.add_argument("--phi", required=True)
    sp.add_argument("--gamma", required=True)

    sp = add("truncate", cmd_truncate, "Q-truncation of a valuation")
    sp.add_argument("--valuation", required=True)
    sp.add_argument("--Q", required=True)
    sp.add_argument("--poly")
    sp.add_argument("--certified", action="store_true",
                    help="accept Q as an abstract key polynomial without a recorded route")

    sp = add("epsilon", cmd_epsilon, "eps(w, f) from Hasse derivatives")
    sp.add_argument("--valuation", required=True)
    sp.add_argument("--poly", required=True)

    sp = add("mutual", cmd_mutual, "multiset of vbar(theta - eta) over root pairs")
    sp.add_argument("--F", required=True)
    sp.add_argument("--G", required=True)

    sp = add("optimal-value", cmd_optimal_value, "optimal value delta(f) for wbar_{theta,delta}")
    sp.add_argument("--theta", required=True, help="minimal polynomial of theta")
    sp.add_argument("--delta", required=True)
    sp.add_argument("--poly", required=True)
    sp.add_argument("--certificate", choices=("degree-one", "eisenstein", "single-slope-coprime", "asserted"))
    sp.add_argument("--wbar", action="store_true", help="print wbar_{theta,delta}(f) instead")

    sp = add("convert", cmd_convert, "convert between chain structures")
    sp.add_argument("--from", dest="source", required=True)
    sp.add_argument("--to", required=True, choices=("okutsu", "sdc", "complete-set", "maclane", "mlv"))
    sp.add_argument("--delta", help="delta_top for sdc -> complete-set (default 1)")

    sp = add("validate", cmd_validate, "run validators on a chain file")
    sp.add_argument("--chain", required=True)
    sp.add_argument("--candidates")
    sp.add_argument("--sweep-degree", type=int, default=3)
    sp.add_argument("--sweep-coeffs", default="0,1,2,4")

    sp = add("demo", cmd_demo, "narrated walk-through on a bundled fixture")
    sp.add_argument("name")

    add("selftest", cmd_selftest, "validate every bundled fixture")
    return parser


def main(argv=None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Out(args.as_json)
    try:
        return args.fn(args, out)
    except (UsageError, FieldMismatchError) as exc:
        print(f"valchain: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"valchain: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
