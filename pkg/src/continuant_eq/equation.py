"""The central equation P(K_{n-1}(x_1..x_{n-1})) = K_n(x_0..x_{n-1}) K_n(x_1..x_n).

Covers verification of solutions, completing an n-prefix to a solution
(lifting), one-step extension in either direction, and chains: the
two-sided sequences whose every (n+1)-window is a solution.

Only t = 1 and t = -1 are supported here; for these the coprimality
hypotheses on the entries are vacuous.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .continuants import IntTuple, continuant, reverse
from .errors import InadmissibleInstanceError, InternalError, InvalidInputError, InvalidParameterError
from .polynomials import IntPolynomial, check_condition


@dataclass(frozen=True)
class EquationInstance:
    P: IntPolynomial
    t: int
    n: int

    def __post_init__(self):
        if self.t not in (1, -1):
            raise InvalidParameterError("t must be 1 or -1")
        if self.n < 2:
            raise InvalidParameterError("n must be >= 2")
        if not check_condition(self.P, self.t, self.n).holds:
            raise InadmissibleInstanceError(
                f"P = [{self.P}] is not admissible for t={self.t}, n={self.n}")

    def with_n(self, n: int) -> "EquationInstance":
        return EquationInstance(self.P, self.t, n)


def residual(inst: EquationInstance, xs: Sequence[int]) -> int:
    """Left-hand side minus right-hand side of the equation on xs."""
    n, t = inst.n, inst.t
    if len(xs) != n + 1:
        raise InvalidInputError(f"expected {n + 1} entries, got {len(xs)}")
    return (inst.P(continuant(t, xs[1:n]))
            - continuant(t, xs[0:n]) * continuant(t, xs[1:n + 1]))


def verify_solution(inst: EquationInstance, xs: Sequence[int]) -> bool:
    return residual(inst, xs) == 0


@dataclass(frozen=True)
class Solution:
    """A verified (n+1)-tuple. Construction fails on non-solutions."""

    instance: EquationInstance
    xs: IntTuple

    def __post_init__(self):
        object.__setattr__(self, "xs", tuple(int(x) for x in self.xs))
        if not verify_solution(self.instance, self.xs):
            raise InvalidInputError(f"{self.xs} is not a solution")

    def reversed(self) -> "Solution":
        return Solution(self.instance, reverse(self.xs))


class LiftKind(enum.Enum):
    UNIQUE = "unique"
    FREE = "free"
    NOT_LIFTABLE = "not_liftable"


@dataclass(frozen=True)
class LiftResult:
    kind: LiftKind
    value: Optional[int] = None


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise InternalError(f"inexact division in {what}: {num} / {den}")
    return q


def lift(inst: EquationInstance, prefix: Sequence[int]) -> LiftResult:
    """Find x_n completing (x_0..x_{n-1}) to a solution.

    Requires K_n(prefix) | P(K_{n-1}(x_1..x_{n-1})). The completion is
    unique unless K_{n-1}(x_1..x_{n-1}) = 0, in which case any integer
    works.
    """
    n, t, P = inst.n, inst.t, inst.P
    prefix = tuple(prefix)
    if len(prefix) != n:
        raise InvalidInputError(f"expected a prefix of length {n}, got {len(prefix)}")
    outer = continuant(t, prefix)
    inner = continuant(t, prefix[1:])
    value = P(inner)
    if outer == 0:
        # 0 divides only 0, and then the equation reads 0 = 0 * K_n(x_1..x_n)
        return LiftResult(LiftKind.FREE if value == 0 else LiftKind.NOT_LIFTABLE)
    quotient, r = divmod(value, outer)
    if r:
        return LiftResult(LiftKind.NOT_LIFTABLE)
    if inner == 0:
        if not verify_solution(inst, prefix + (0,)):
            raise InternalError(f"free completion of {prefix} does not verify")
        return LiftResult(LiftKind.FREE)
    # quotient = K_n(x_1..x_n) = x_n K_{n-1}(x_1..x_{n-1}) + t K_{n-2}(x_1..x_{n-2})
    x = _exact_div(quotient - t * continuant(t, prefix[1:n - 1]), inner, "lift")
    return LiftResult(LiftKind.UNIQUE, x)


class ExtendKind(enum.Enum):
    UNIQUE = "unique"
    BRANCH = "branch"
    FORCED = "forced"
    DEAD = "dead"


@dataclass(frozen=True)
class ExtendResult:
    kind: ExtendKind
    solution: Optional[Solution] = None


def next_right(inst: EquationInstance, xs: Sequence[int]) -> tuple[ExtendKind, Optional[int]]:
    """The element following the solution window xs, without re-verifying xs."""
    n, t = inst.n, inst.t
    inner = continuant(t, xs[2:n + 1])
    if inner == 0:
        return ExtendKind.BRANCH, None
    outer = continuant(t, xs[1:n + 1])
    before = continuant(t, xs[2:n])
    if outer == 0:
        q, r = divmod(-t * before, inner)
        return (ExtendKind.DEAD, None) if r else (ExtendKind.FORCED, q)
    num = inst.P(inner) - t * before * outer
    return ExtendKind.UNIQUE, _exact_div(num, inner * outer, "extend")


def extend_right(sol: Solution) -> ExtendResult:
    kind, x = next_right(sol.instance, sol.xs)
    if x is None:
        return ExtendResult(kind)
    return ExtendResult(kind, Solution(sol.instance, sol.xs[1:] + (x,)))


def extend_left(sol: Solution) -> ExtendResult:
    res = extend_right(sol.reversed())
    if res.solution is None:
        return res
    return ExtendResult(res.kind, res.solution.reversed())


# ---------------------------------------------------------------------------
# Chains
# ---------------------------------------------------------------------------

class EndKind(enum.Enum):
    OPEN = "open"
    BRANCH = "branch"
    DEAD = "dead"


@dataclass(frozen=True)
class EndState:
    kind: EndKind = EndKind.OPEN
    position: Optional[int] = None  # index x_k, relative to the seed's x_0


class Chain:
    """Memoized two-sided sequence grown outward from a seed solution.

    Single writer: do not extend one chain from two threads at once.
    """

    def __init__(self, seed: Solution):
        self.instance = seed.instance
        self._elements = list(seed.xs)
        self.base_offset = 0  # list index of the seed's x_0
        self.left_end = EndState()
        self.right_end = EndState()
        self._probe()

    @property
    def n(self) -> int:
        return self.instance.n

    @property
    def elements(self) -> IntTuple:
        return tuple(self._elements)

    @property
    def first_index(self) -> int:
        return -self.base_offset

    @property
    def last_index(self) -> int:
        return len(self._elements) - 1 - self.base_offset

    def __getitem__(self, k: int) -> int:
        """Element x_k, with k relative to the seed's x_0."""
        i = k + self.base_offset
        if not 0 <= i < len(self._elements):
            raise IndexError(k)
        return self._elements[i]

    def windows(self, size: Optional[int] = None) -> Iterator[IntTuple]:
        size = self.n + 1 if size is None else size
        el = self._elements
        for i in range(len(el) - size + 1):
            yield tuple(el[i:i + size])

    def solutions(self) -> Iterator[Solution]:
        for w in self.windows():
            yield Solution(self.instance, w)

    def __contains__(self, xs) -> bool:
        xs = tuple(xs)
        return any(w == xs for w in self.windows(len(xs)))

    def _probe(self) -> None:
        # cheap end-state detection: only the vanishing tests, no division
        n, t = self.n, self.instance.t
        right = self._elements[-(n + 1):]
        if self.right_end.kind is EndKind.OPEN and continuant(t, right[2:]) == 0:
            self.right_end = EndState(EndKind.BRANCH, self.last_index)
        left = self._elements[:n + 1]
        if self.left_end.kind is EndKind.OPEN and continuant(t, left[:n - 1]) == 0:
            self.left_end = EndState(EndKind.BRANCH, self.first_index)

    def extend_right(self, steps: int = 1) -> int:
        """Grow up to `steps` elements to the right; returns how many were added."""
        done = 0
        while done < steps and self.right_end.kind is EndKind.OPEN:
            kind, x = next_right(self.instance, self._elements[-(self.n + 1):])
            if x is None:
                self.right_end = EndState(EndKind(kind.value), self.last_index)
                break
            self._elements.append(x)
            done += 1
            self._probe()
        return done

    def extend_left(self, steps: int = 1) -> int:
        done = 0
        while done < steps and self.left_end.kind is EndKind.OPEN:
            window = self._elements[:self.n + 1][::-1]
            kind, x = next_right(self.instance, window)
            if x is None:
                self.left_end = EndState(EndKind(kind.value), self.first_index)
                break
            self._elements.insert(0, x)
            self.base_offset += 1
            done += 1
            self._probe()
        return done

    def continue_branch(self, side: str, value: int) -> None:
        """Step past a branch point with a caller-chosen element."""
        if side not in ("left", "right"):
            raise InvalidInputError("side must be 'left' or 'right'")
        end = self.right_end if side == "right" else self.left_end
        if end.kind is not EndKind.BRANCH:
            raise InvalidInputError(f"{side} end is not a branch point")
        if side == "right":
            window = tuple(self._elements[-self.n:]) + (value,)
        else:
            window = (value,) + tuple(self._elements[:self.n])
        Solution(self.instance, window)
        if side == "right":
            self._elements.append(value)
            self.right_end = EndState()
        else:
            self._elements.insert(0, value)
            self.base_offset += 1
            self.left_end = EndState()
        self._probe()

    def to_json(self) -> dict:
        def end(e: EndState) -> str:
            return e.kind.value

        return {
            "t": self.instance.t,
            "poly": str(self.instance.P),
            "n": self.n,
            "elements": [str(x) for x in self._elements],
            "base_offset": self.base_offset,
            "left_end": end(self.left_end),
            "right_end": end(self.right_end),
            "left_end_at": self.left_end.position,
            "right_end_at": self.right_end.position,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj: dict) -> "Chain":
        inst = EquationInstance(IntPolynomial.parse(obj["poly"]), int(obj["t"]), int(obj["n"]))
        elements = [int(x) for x in obj["elements"]]
        off = int(obj["base_offset"])
        chain = cls(Solution(inst, elements[off:off + inst.n + 1]))
        chain._elements = elements
        chain.base_offset = off
        for w in chain.windows():
            if not verify_solution(inst, w):
                raise InvalidInputError(f"window {w} of serialized chain is not a solution")
        chain.left_end = EndState(EndKind(obj.get("left_end", "open")), obj.get("left_end_at"))
        chain.right_end = EndState(EndKind(obj.get("right_end", "open")), obj.get("right_end_at"))
        chain._probe()
        return chain


def chain_window(seed: Solution, left_steps: int, right_steps: int) -> Chain:
    if left_steps < 0 or right_steps < 0:
        raise InvalidInputError("step counts must be >= 0")
    chain = Chain(seed)
    chain.extend_left(left_steps)
    chain.extend_right(right_steps)
    return chain


def chains_equivalent(a: Solution, b: Solution, max_shift: int) -> bool:
    """Bounded test for L(a) = L(b).

    False only means b was not found within max_shift steps of a (nor a
    within max_shift steps of b).
    """
    if a.instance != b.instance:
        raise InvalidInputError("solutions belong to different equations")
    if a.xs == b.xs:
        return True
    return (b.xs in chain_window(a, max_shift, max_shift)
            or a.xs in chain_window(b, max_shift, max_shift))


def is_nonstandard_window(seed: Solution, radius: int) -> bool:
    """Bounded certificate that no n-window near the seed has K_n = +-1."""
    chain = chain_window(seed, radius, radius)
    t = seed.instance.t
    return all(abs(continuant(t, w)) != 1 for w in chain.windows(chain.n))
