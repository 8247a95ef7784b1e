"""Starting solutions built from tuples with unit continuant.

A tuple xs of length n with K_n(xs) = +-1 always lifts to a solution, so
complete classifications of K_n = 1 (small n) give families of seeds.
The families are stored as data: each is a template whose entries are
either integers or affine expressions in the free parameters a, b.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .continuants import IntTuple, continuant, reverse
from .equation import (
    EquationInstance,
    LiftKind,
    Solution,
    lift,
    next_right,
    verify_solution,
)
from .errors import InvalidInputError, InvalidParameterError, UnsupportedCaseError
from .polynomials import IntPolynomial

# An entry is an int constant or (const, coef_a, coef_b) meaning const + coef_a*a + coef_b*b.
Entry = Union[int, tuple[int, int, int]]

A = (0, 1, 0)
B = (0, 0, 1)


def _aff(const: int, ca: int = 0, cb: int = 0) -> tuple[int, int, int]:
    return (const, ca, cb)


@dataclass(frozen=True)
class UnitFamily:
    t: int
    n: int
    template: tuple[Entry, ...]

    @property
    def params(self) -> int:
        used = set()
        for e in self.template:
            if isinstance(e, tuple):
                if e[1]:
                    used.add("a")
                if e[2]:
                    used.add("b")
        return len(used)

    def instantiate(self, a: int = 0, b: int = 0) -> IntTuple:
        return tuple(e if isinstance(e, int) else e[0] + e[1] * a + e[2] * b
                     for e in self.template)

    def generate(self, bound: int) -> set[IntTuple]:
        """Members (and reversals) with every entry in [-bound, bound]."""
        rng = range(-bound, bound + 1)
        # |coef| <= 1 and |const| <= 1 in every template, so a, b within
        # bound+1 of zero cover every member inside the box
        prng = range(-bound - 1, bound + 2)
        pa = prng if self.params >= 1 else (0,)
        pb = prng if self.params >= 2 else (0,)
        out = set()
        for a, b in itertools.product(pa, pb):
            xs = self.instantiate(a, b)
            if all(x in rng for x in xs):
                out.add(xs)
                out.add(reverse(xs))
        return out

    def contains(self, xs: Sequence[int]) -> bool:
        """Membership of xs or its reversal, solved from the template."""
        xs = tuple(xs)
        return self._matches(xs) or self._matches(reverse(xs))

    def _matches(self, xs: IntTuple) -> bool:
        if len(xs) != self.n:
            return False
        # each parameter appears alone (coefficient +-1, other coef 0) somewhere
        a = b = None
        for e, x in zip(self.template, xs):
            if isinstance(e, tuple):
                c, ca, cb = e
                if ca and not cb and a is None:
                    a = (x - c) * ca
                elif cb and not ca and b is None:
                    b = (x - c) * cb
        return self.instantiate(a or 0, b or 0) == xs


_FAMILIES: dict[tuple[int, int], list[tuple[Entry, ...]]] = {
    (1, 2): [(0, A)],
    (1, 3): [
        (0, A, 1), (A, 0, _aff(1, -1)), (1, -1, A),
        (-3, 1, -2), (-1, 3, -1), (-2, 2, -1),
    ],
    # (-1, -1, -1, 1) is sometimes listed among the isolated K_4 = 1
    # solutions, but K_4(-1, -1, -1, 1) = -1; it is left out.
    (1, 4): [
        (0, A, B, 0), (0, A, 0, B), (A, 0, _aff(0, -1), B),
        (1, A, -1, 1), (-1, A, 1, -1), (A, -1, 1, A),
        (-4, 1, -2, 2), (-3, 1, -3, 1), (-3, 1, -2, 3), (-3, 2, -1, 3),
        (-2, 1, -4, 1), (-2, 1, -3, 2), (-2, 2, -2, 1), (-2, 2, -1, 4),
        (-2, 3, -1, 2), (-1, 2, -3, 1), (-1, 2, -2, 2),
        (-1, 3, -2, 1), (-1, 3, -1, 3), (-1, 4, -1, 2),
    ],
    (-1, 2): [(1, 2), (-2, -1)],
    (-1, 3): [
        (0, A, -1), (A, 0, _aff(-1, -1)), (-1, -1, A),
        (1, 2, 2), (1, 3, 1), (2, 1, 3),
    ],
}


def unit_families(t: int, n: int) -> list[UnitFamily]:
    try:
        templates = _FAMILIES[(t, n)]
    except KeyError:
        raise UnsupportedCaseError(f"no classification stored for t={t}, n={n}") from None
    return [UnitFamily(t, n, tpl) for tpl in templates]


def enumerate_unit_tuples(t: int, n: int, bound: int, target: int = 1) -> list[IntTuple]:
    """Brute force: every xs in [-bound, bound]^n with K_n^(t)(xs) = target."""
    if t == 0:
        raise InvalidParameterError("t must be nonzero")
    if n < 1 or bound < 0:
        raise InvalidInputError("need n >= 1 and bound >= 0")
    vals = range(-bound, bound + 1)
    out: list[IntTuple] = []

    # running pair (K_{k-1}, K_k) extended one coordinate at a time
    def walk(prefix: list[int], prev: int, cur: int) -> None:
        if len(prefix) == n:
            if cur == target:
                out.append(tuple(prefix))
            return
        for x in vals:
            prefix.append(x)
            walk(prefix, cur, x * cur + t * prev)
            prefix.pop()

    walk([], 0, 1)
    return out  # lexicographic by construction


def family_tuples(t: int, n: int, bound: int) -> list[IntTuple]:
    """All members of the stored K_n^(t) = 1 families inside the box."""
    out: set[IntTuple] = set()
    for fam in unit_families(t, n):
        out |= fam.generate(bound)
    return sorted(out)


def pad_unit_tuple(t: int, xs: Sequence[int], a: int) -> IntTuple:
    """xs ++ (a, 0); its continuant is t times that of xs."""
    return tuple(xs) + (a, 0)


@dataclass(frozen=True)
class FreeSeed:
    """A unit prefix whose completion is any integer."""

    instance: EquationInstance
    prefix: IntTuple

    def complete(self, value: int) -> Solution:
        return Solution(self.instance, self.prefix + (value,))


def seed_solution(inst: EquationInstance, xs: Sequence[int],
                  value: Optional[int] = None) -> Union[Solution, FreeSeed]:
    """Complete a unit-continuant n-tuple to a solution.

    When the completion is free, returns a FreeSeed unless `value` is given.
    """
    xs = tuple(xs)
    if len(xs) != inst.n:
        raise InvalidInputError(f"expected {inst.n} entries, got {len(xs)}")
    if abs(continuant(inst.t, xs)) != 1:
        raise InvalidInputError(f"K_{inst.n}{xs} is not +-1")
    res = lift(inst, xs)
    if res.kind is LiftKind.UNIQUE:
        return Solution(inst, xs + (res.value,))
    if res.kind is LiftKind.FREE:
        free = FreeSeed(inst, xs)
        return free if value is None else free.complete(value)
    raise AssertionError(f"unit prefix {xs} failed to lift")  # pragma: no cover


# ---------------------------------------------------------------------------
# n = 2, P = x^4 + 1
# ---------------------------------------------------------------------------

QUARTIC = IntPolynomial((1, 0, 0, 0, 1))


class Category(enum.Enum):
    CHAIN_OF_ZERO_A = "ChainOfZeroA"
    REVERSED_CHAIN_OF_ZERO_A = "ReversedChainOfZeroA"
    MIDDLE_ZERO = "MiddleZero"
    ALTERNATING_SPECIAL = "AlternatingSpecial"
    NOT_A_SOLUTION = "NotASolution"


@dataclass(frozen=True)
class Classification:
    category: Category
    witness: Optional[IntTuple] = None  # the window that identifies the chain
    a: Optional[int] = None


# The bottom windows of the sign-alternating chains: |x_1| = 1 and
# (|x_0| - 1)(|x_2| - 1) = 2.
ALTERNATING_VALLEYS = ((3, -1, 2), (2, -1, 3), (-3, 1, -2), (-2, 1, -3))


def _n2_instance() -> EquationInstance:
    return EquationInstance(QUARTIC, 1, 2)


def _identify(w: IntTuple) -> Optional[Classification]:
    x0, x1, x2 = w
    if x0 == 0 and x1 != 0:
        return Classification(Category.CHAIN_OF_ZERO_A, w, x1)
    if x2 == 0 and x1 != 0:
        return Classification(Category.REVERSED_CHAIN_OF_ZERO_A, w, x1)
    if w in ALTERNATING_VALLEYS:
        return Classification(Category.ALTERNATING_SPECIAL, w)
    return None


def classify_n2_solution(x0: int, x1: int, x2: int, max_steps: int = 64) -> Classification:
    """Place a solution of x1^4 + 1 = (x0 x1 + 1)(x1 x2 + 1) in its family.

    Walks the chain toward smaller entries until a (0, a, .), (., a, 0)
    or alternating valley window appears.
    """
    inst = _n2_instance()
    w = (x0, x1, x2)
    if not verify_solution(inst, w):
        return Classification(Category.NOT_A_SOLUTION)
    if x1 == 0:
        return Classification(Category.MIDDLE_ZERO, w)
    for _ in range(max_steps):
        found = _identify(w)
        if found is not None:
            return found
        # step toward the smaller end; the chains here are valleys
        if abs(w[0]) <= abs(w[2]):
            kind, x = next_right(inst, reverse(w))
            nxt = None if x is None else (x, w[0], w[1])
        else:
            kind, x = next_right(inst, w)
            nxt = None if x is None else (w[1], w[2], x)
        if nxt is None or max(map(abs, nxt)) > max(map(abs, w)):
            break
        w = nxt
    raise AssertionError(f"solution {(x0, x1, x2)} escaped classification")
