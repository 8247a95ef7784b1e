"""Maps that build new solutions, possibly for a different n.

The maps act on divisor prefixes (x_0..x_n) with
K_{n+1}(x_0..x_n) | P(K_n(x_1..x_n)); a prefix of length n completes
to a solution of the length-n equation by lifting. Divisibility is
re-checked after every map, never assumed.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .continuants import IntTuple, continuant
from .equation import EquationInstance, LiftKind, Solution, lift
from .errors import InadmissibleInstanceError, InvalidInputError, InvalidParameterError
from .polynomials import IntPolynomial, check_condition


@dataclass(frozen=True)
class DivisorPrefix:
    P: IntPolynomial
    t: int
    xs: IntTuple

    def __post_init__(self):
        object.__setattr__(self, "xs", tuple(int(x) for x in self.xs))
        if self.t not in (1, -1):
            raise InvalidParameterError("t must be 1 or -1")
        if len(self.xs) < 2:
            raise InvalidInputError("a divisor prefix needs at least two entries")
        if not divides(self.P, self.t, self.xs):
            raise InvalidInputError(
                f"K({self.xs}) does not divide P(K({self.xs[1:]}))")

    @property
    def outer(self) -> int:
        return continuant(self.t, self.xs)

    @property
    def inner(self) -> int:
        return continuant(self.t, self.xs[1:])


def divides(P: IntPolynomial, t: int, xs: Sequence[int]) -> bool:
    outer = continuant(t, xs)
    value = P(continuant(t, xs[1:]))
    if outer == 0:
        return value == 0
    return value % outer == 0


@dataclass(frozen=True)
class FreeCompletion:
    """Every integer completes this prefix."""

    instance: EquationInstance
    prefix: IntTuple

    def complete(self, value: int) -> Solution:
        return Solution(self.instance, self.prefix + (value,))


def prefix_of(sol: Solution) -> DivisorPrefix:
    inst = sol.instance
    return DivisorPrefix(inst.P, inst.t, sol.xs[:-1])


def instance_for(prefix: DivisorPrefix) -> EquationInstance:
    n = len(prefix.xs)
    report = check_condition(prefix.P, prefix.t, n)
    if not report.holds:
        raise InadmissibleInstanceError(
            f"a prefix of length {n} needs n={n}, which is inadmissible for "
            f"P=[{prefix.P}], t={prefix.t}")
    return EquationInstance(prefix.P, prefix.t, n)


def complete(prefix: DivisorPrefix) -> Union[Solution, FreeCompletion]:
    inst = instance_for(prefix)
    res = lift(inst, prefix.xs)
    if res.kind is LiftKind.UNIQUE:
        return Solution(inst, prefix.xs + (res.value,))
    if res.kind is LiftKind.FREE:
        return FreeCompletion(inst, prefix.xs)
    raise AssertionError(f"divisor prefix {prefix.xs} did not lift")  # pragma: no cover


def map_f(a: int, prefix: DivisorPrefix) -> DivisorPrefix:
    """(x_0..x_n) -> (0, a, x_0..x_n). The outer continuant is unchanged."""
    if prefix.inner == 0:
        raise InvalidInputError("inner continuant is zero; use map_f_star")
    return DivisorPrefix(prefix.P, prefix.t, (0, a) + prefix.xs)


def map_f_star(a: int, b: int, prefix: DivisorPrefix) -> Solution:
    """(x_0..x_n) -> (0, a, x_0..x_n, b), for prefixes with zero inner continuant.

    The result is verified. The inner continuant of (0, a, x_0..x_n) is
    a * K(x_0..x_n) = +-a here, so the last entry is free only for a = 0;
    other choices of a raise unless b happens to be the forced value.
    """
    if prefix.inner != 0:
        raise InvalidInputError("inner continuant is nonzero; use map_f")
    xs = (0, a) + prefix.xs + (b,)
    inst = instance_for(DivisorPrefix(prefix.P, prefix.t, xs[:-1]))
    return Solution(inst, xs)


def map_g(prefix: DivisorPrefix) -> DivisorPrefix:
    """(x_0, x_1..x_n) -> (1, x_0 - t, x_1..x_n)."""
    xs, t = prefix.xs, prefix.t
    return DivisorPrefix(prefix.P, t, (1, xs[0] - t) + xs[1:])


def map_h(prefix: DivisorPrefix) -> DivisorPrefix:
    """(x_0..x_{n-1}, x_n) -> (x_0..x_{n-1}, x_n - t, 1)."""
    xs, t = prefix.xs, prefix.t
    return DivisorPrefix(prefix.P, t, xs[:-1] + (xs[-1] - t, 1))


def map_g_inv(prefix: DivisorPrefix) -> DivisorPrefix:
    xs, t = prefix.xs, prefix.t
    if xs[0] != 1:
        raise InvalidInputError("g^-1 needs x_0 = 1")
    if len(xs) < 3:
        raise InvalidInputError("g^-1 would leave fewer than two entries")
    return DivisorPrefix(prefix.P, t, (xs[1] + t,) + xs[2:])


def map_h_inv(prefix: DivisorPrefix) -> DivisorPrefix:
    xs, t = prefix.xs, prefix.t
    if xs[-1] != 1:
        raise InvalidInputError("h^-1 needs x_n = 1")
    if len(xs) < 3:
        raise InvalidInputError("h^-1 would leave fewer than two entries")
    return DivisorPrefix(prefix.P, t, xs[:-2] + (xs[-2] + t,))


_SIMPLE = {"g": map_g, "h": map_h, "ginv": map_g_inv, "hinv": map_h_inv}


@dataclass(frozen=True)
class MapStep:
    name: str
    args: tuple[int, ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.name
        return f"{self.name}:{','.join(map(str, self.args))}"


def parse_expression(text: str) -> list[MapStep]:
    """Parse "g.h", "f:3", "fstar:2,7", ... into steps in application order.

    Composition reads like function composition: "g.h" applies h first.
    """
    steps = []
    for token in text.strip().split("."):
        name, _, rest = token.partition(":")
        name = name.strip()
        try:
            args = tuple(int(a) for a in rest.split(",")) if rest else ()
        except ValueError:
            raise InvalidInputError(f"bad map arguments in {token!r}") from None
        arity = {"f": 1, "fstar": 2}.get(name, 0)
        if name not in _SIMPLE and name not in ("f", "fstar"):
            raise InvalidInputError(f"unknown map {name!r}")
        if len(args) != arity:
            raise InvalidInputError(f"map {name!r} takes {arity} argument(s)")
        steps.append(MapStep(name, args))
    steps.reverse()
    for step in steps[:-1]:
        if step.name == "fstar":
            raise InvalidInputError("fstar yields a solution and must be applied last")
    return steps


def apply_expression(expr: Union[str, Sequence[MapStep]],
                     prefix: DivisorPrefix) -> Union[DivisorPrefix, Solution]:
    steps = parse_expression(expr) if isinstance(expr, str) else list(expr)
    cur: Union[DivisorPrefix, Solution] = prefix
    for step in steps:
        assert isinstance(cur, DivisorPrefix)
        if step.name == "f":
            cur = map_f(step.args[0], cur)
        elif step.name == "fstar":
            cur = map_f_star(step.args[0], step.args[1], cur)
        else:
            cur = _SIMPLE[step.name](cur)
    return cur


@dataclass(frozen=True)
class Composition:
    expr: str
    requires: str  # human-readable domain restriction, "" if none


def valid_compositions(t: int) -> list[Composition]:
    """The maps that send admissible solutions to admissible solutions."""
    if t == 1:
        return [
            Composition("f:a", "K_n(x_1..x_n) != 0"),
            Composition("fstar:a,b", "K_n(x_1..x_n) = 0"),
            Composition("g.h", ""),
            Composition("g.hinv", "x_n = 1"),
            Composition("ginv.h", "x_0 = 1"),
            Composition("ginv.hinv", "x_0 = x_n = 1"),
        ]
    if t == -1:
        return [
            Composition("f:a", "K_n(x_1..x_n) != 0; P even or odd"),
            Composition("fstar:a,b", "K_n(x_1..x_n) = 0; P even or odd"),
            Composition("g", ""),
            Composition("h", ""),
            Composition("ginv", "x_0 = 1"),
            Composition("hinv", "x_n = 1"),
        ]
    raise InvalidParameterError("t must be 1 or -1")
