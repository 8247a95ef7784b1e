"""Command-line interface.

Every command prints one JSON object per line ({"ok": ..., "result": ...})
or, with --format text, a plain rendering. Integers in JSON are decimal
strings. Exit codes: 0 success (including negative answers), 1 domain
error, 2 usage/parse error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Optional, Sequence

from . import bridge, equation, maps, seeds
from .continuants import continuant
from .errors import ContinuantError, InvalidInputError
from .polynomials import IntPolynomial, check_condition

DEFAULT_MAX_STEPS = 64


def max_steps() -> int:
    try:
        return int(os.environ.get("CONTINUANT_MAX_STEPS", DEFAULT_MAX_STEPS))
    except ValueError:
        return DEFAULT_MAX_STEPS


def _poly(text: str) -> IntPolynomial:
    try:
        return IntPolynomial.parse(text)
    except ContinuantError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _t(text: str) -> int:
    try:
        t = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid t {text!r}") from None
    if t == 0:
        raise argparse.ArgumentTypeError("t must be nonzero")
    return t


def _ints(xs: Sequence[Any]) -> list[str]:
    return [str(x) for x in xs]


def _instance(args) -> equation.EquationInstance:
    return equation.EquationInstance(args.poly, args.t, args.n)


def _clamp(k: int) -> int:
    return max(0, min(k, max_steps()))


# ---------------------------------------------------------------------------
# commands; each returns (result, extra fields)
# ---------------------------------------------------------------------------

def cmd_eval(args):
    return str(continuant(args.t, args.xs)), {}


def cmd_check(args):
    rep = check_condition(args.poly, args.t, args.n)
    result = {
        "holds": rep.holds,
        "C": None if rep.constant_C is None else str(rep.constant_C),
        "parity": sorted("even" if r == 0 else "odd" for r in rep.parity_class),
    }
    if args.xs:
        result["solution"] = equation.verify_solution(_instance(args), args.xs)
    return result, {}


def cmd_lift(args):
    res = equation.lift(_instance(args), args.xs)
    if res.kind is equation.LiftKind.NOT_LIFTABLE:
        raise InvalidInputError(f"K_n{tuple(args.xs)} does not divide P(K_(n-1)(x_1..x_(n-1)))")
    out = {"kind": res.kind.value}
    if res.value is not None:
        out["value"] = str(res.value)
        out["solution"] = _ints(tuple(args.xs) + (res.value,))
    return out, {}


def _end_state(chain: equation.Chain) -> dict:
    return {"left": chain.left_end.kind.value, "right": chain.right_end.kind.value}


def cmd_extend(args):
    sol = equation.Solution(_instance(args), args.xs)
    chain = equation.chain_window(sol, _clamp(args.left), _clamp(args.right))
    return {"elements": _ints(chain.elements), "base_offset": chain.base_offset}, \
        {"end_state": _end_state(chain)}


def cmd_chain(args):
    sol = equation.Solution(_instance(args), args.xs)
    chain = equation.chain_window(sol, _clamp(args.left), _clamp(args.right))
    return chain.to_json(), {"end_state": _end_state(chain)}


def cmd_units(args):
    tuples = seeds.enumerate_unit_tuples(args.t, args.n, args.bound, args.target)
    return [_ints(xs) for xs in tuples], {}


def cmd_families(args):
    return [_ints(xs) for xs in seeds.family_tuples(args.t, args.n, args.bound)], {}


def cmd_classify(args):
    if len(args.xs) != 3:
        raise SystemExit(_usage_error("classify takes exactly three integers"))
    c = seeds.classify_n2_solution(*args.xs)
    out = {"category": c.category.value}
    if c.witness is not None:
        out["witness"] = _ints(c.witness)
    if c.a is not None:
        out["a"] = str(c.a)
    return out, {}


def cmd_map(args):
    prefix = maps.DivisorPrefix(args.poly, args.t, args.xs)
    res = maps.apply_expression(args.expr, prefix)
    out: dict = {}
    if isinstance(res, equation.Solution):
        out["solution"] = _ints(res.xs)
        out["n"] = res.instance.n
        return out, {}
    out["prefix"] = _ints(res.xs)
    if args.complete:
        done = maps.complete(res)
        if isinstance(done, maps.FreeCompletion):
            out["completion"] = "free"
        else:
            out["solution"] = _ints(done.xs)
            out["n"] = done.instance.n
    return out, {}


def cmd_compositions(args):
    return [{"expr": c.expr, "requires": c.requires} for c in maps.valid_compositions(args.t)], {}


def cmd_bridge_to(args):
    parity = args.parity or bridge.default_parity(args.poly)
    d2, r = divmod(args.poly(args.m), args.d1) if args.d1 else (0, 1)
    if r:
        raise InvalidInputError(f"{args.d1} does not divide P({args.m})")
    sol = bridge.factorization_to_solution(
        args.poly, parity, bridge.FactorizationTriple(args.m, args.d1, d2))
    return {"m": str(args.m), "d1": str(args.d1), "d2": str(d2),
            "n": sol.instance.n, "solution": _ints(sol.xs)}, {}


def cmd_bridge_from(args):
    sol = equation.Solution(equation.EquationInstance(args.poly, 1, len(args.xs) - 1), args.xs)
    f = bridge.solution_to_factorization(sol)
    return {"m": str(f.m), "d1": str(f.d1), "d2": str(f.d2)}, {}


def cmd_bridge_factorize(args):
    return [[str(a), str(b)] for a, b in bridge.enumerate_factorizations(args.poly, args.m)], {}


def cmd_bridge_table(args):
    rows = bridge.factorization_table(args.poly, args.m_max, _clamp(args.radius), args.parity,
                                      with_provenance=not args.no_provenance)
    return [r.to_json() for r in rows], {"rows": True}


# ---------------------------------------------------------------------------

def _usage_error(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("xs", nargs="*", type=int, help="integers (put them after --)")

    def poly_args(p, n=True, t=True):
        p.add_argument("--poly", type=_poly, required=True, help='coefficients "c_0,...,c_d"')
        if t:
            p.add_argument("--t", type=_t, default=1)
        if n:
            p.add_argument("--n", type=int, required=True)

    parser = argparse.ArgumentParser(prog="continuant-eq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a continuant")
    p.add_argument("--t", type=_t, default=1)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", parents=[common], help="admissibility of (P, t, n); verify a tuple")
    poly_args(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("lift", parents=[common], help="complete an n-prefix to a solution")
    poly_args(p)
    p.set_defaults(func=cmd_lift)

    for name, func in (("extend", cmd_extend), ("chain", cmd_chain)):
        p = sub.add_parser(name, parents=[common], help="walk the chain of a solution")
        poly_args(p)
        p.add_argument("--left", type=int, default=0)
        p.add_argument("--right", type=int, default=0)
        p.set_defaults(func=func)

    p = sub.add_parser("units", parents=[common], help="brute-force K_n = target tuples")
    p.add_argument("--t", type=_t, default=1)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--target", type=int, default=1)
    p.set_defaults(func=cmd_units)

    p = sub.add_parser("families", parents=[common], help="known K_n = 1 families in a box")
    p.add_argument("--t", type=_t, default=1)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("classify", parents=[common], help="category of an n=2 solution for x^4+1")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("map", parents=[common], help="apply a map expression to a divisor prefix")
    poly_args(p, n=False)
    p.add_argument("--expr", help='e.g. "g.h", "f:3", "fstar:0,7"')
    p.add_argument("--complete", action="store_true", help="lift the result to a solution")
    p.add_argument("--list", action="store_true", help="list the valid compositions for t")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("bridge", help="factorizations of P(m) <-> solutions (t = 1)")
    bsub = p.add_subparsers(dest="bridge_command", required=True)
    q = bsub.add_parser("to-solution", parents=[common])
    poly_args(q, n=False, t=False)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--d1", type=int, required=True)
    q.add_argument("--parity", choices=("even", "odd"))
    q.set_defaults(func=cmd_bridge_to)
    q = bsub.add_parser("from-solution", parents=[common])
    poly_args(q, n=False, t=False)
    q.set_defaults(func=cmd_bridge_from)
    q = bsub.add_parser("factorize", parents=[common])
    poly_args(q, n=False, t=False)
    q.add_argument("--m", type=int, required=True)
    q.set_defaults(func=cmd_bridge_factorize)
    q = bsub.add_parser("table", parents=[common])
    poly_args(q, n=False, t=False)
    q.add_argument("--m-max", type=int, required=True)
    q.add_argument("--radius", type=int, default=2)
    q.add_argument("--parity", choices=("even", "odd"))
    q.add_argument("--no-provenance", action="store_true")
    q.set_defaults(func=cmd_bridge_table)
    return parser


def _text(value: Any) -> str:
    if isinstance(value, list):
        return " ".join(_text(v) for v in value) if all(
            not isinstance(v, (list, dict)) for v in value) else "\n".join(_text(v) for v in value)
    if isinstance(value, dict):
        return "  ".join(f"{k}={_text(v)}" for k, v in value.items())
    return str(value)


def _emit(obj: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")
    elif obj.get("ok"):
        sys.stdout.write(_text(obj["result"]) + "\n")
    else:
        sys.stdout.write(f"error: {obj['error']}\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.func is cmd_map:
        if args.list:
            args.func = cmd_compositions
        elif not args.expr:
            parser.error("map needs --expr or --list")
    try:
        result, extra = args.func(args)
    except ContinuantError as exc:
        _emit({"ok": False, "error": str(exc)}, args.format)
        return 1
    if extra.pop("rows", False):
        for row in result:
            _emit({"ok": True, "result": row}, args.format)
        return 0
    _emit({"ok": True, "result": result, **extra}, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
