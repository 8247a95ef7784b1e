"""Factorizations P(m) = d1 d2 <-> solutions with t = 1.

Expanding d1/m as a continued fraction [a_0; a_1, ..., a_{n-1}] gives
m = K_{n-1}(a_1..a_{n-1}) and d1 = K_n(a_0..a_{n-1}); lifting then
supplies a_n with K_n(a_1..a_n) = d2. Conversely any solution with
a_1..a_{n-1} >= 1 reads back as a factorization of P(m).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .continuants import IntTuple, continuant
from .equation import EquationInstance, LiftKind, Solution, chain_window, lift
from .errors import InadmissibleInstanceError, InvalidInputError, UnsupportedCaseError
from .maps import DivisorPrefix, map_g_inv, map_h_inv
from .polynomials import IntPolynomial, check_condition

EVEN, ODD = "even", "odd"


@dataclass(frozen=True)
class FactorizationTriple:
    m: int
    d1: int
    d2: int


def _parity_bit(parity: str) -> int:
    if parity not in (EVEN, ODD):
        raise InvalidInputError(f"parity must be 'even' or 'odd', not {parity!r}")
    return 0 if parity == EVEN else 1


def euclid_quotients(p: int, q: int) -> list[int]:
    out = []
    while q:
        a, r = divmod(p, q)
        out.append(a)
        p, q = q, r
    return out


def cf_expand(p: int, q: int, parity: str) -> IntTuple:
    """Partial quotients of p/q, with the number of terms of the given parity.

    a_0 = floor(p/q) and a_i >= 1 afterwards. If plain Euclid gives the
    wrong parity the tail is rewritten: [.., a] -> [.., a-1, 1] for
    a >= 2, [.., b, 1] -> [.., b+1], and [p] -> [p-1; 1].
    """
    want = _parity_bit(parity)
    if q < 1:
        raise InvalidInputError("denominator must be >= 1")
    if math.gcd(p, q) != 1:
        raise InvalidInputError(f"{p}/{q} is not in lowest terms")
    a = euclid_quotients(p, q)
    if len(a) % 2 != want:
        if len(a) == 1:
            a = [a[0] - 1, 1]
        elif a[-1] >= 2:
            a[-1] -= 1
            a.append(1)
        else:
            a.pop()
            a[-1] += 1
    return tuple(a)


def _instance(P: IntPolynomial, n: int) -> EquationInstance:
    if not check_condition(P, 1, n).holds:
        raise InadmissibleInstanceError(f"P=[{P}] is not admissible for t=1, n={n}")
    return EquationInstance(P, 1, n)


def factorization_to_solution(P: IntPolynomial, parity: str, f: FactorizationTriple) -> Solution:
    m, d1, d2 = f.m, f.d1, f.d2
    if m < 1 or d1 <= 0:
        raise UnsupportedCaseError("only m >= 1 and positive factors are bridged")
    if d1 * d2 != P(m):
        raise InvalidInputError(f"{d1} * {d2} != P({m})")
    a = cf_expand(d1, m, parity)
    if len(a) < 2:
        # odd parity at m = 1: K_{n-1} of n-1 >= 2 positive quotients exceeds 1
        raise UnsupportedCaseError(f"no expansion of {d1}/{m} with n >= 2 and {parity} n")
    inst = _instance(P, len(a))
    res = lift(inst, a)
    if res.kind is not LiftKind.UNIQUE:
        raise AssertionError(f"prefix {a} of {d1}/{m} did not lift uniquely")  # pragma: no cover
    sol = Solution(inst, a + (res.value,))
    assert continuant(1, sol.xs[1:]) == d2
    return sol


def solution_to_factorization(sol: Solution) -> FactorizationTriple:
    inst = sol.instance
    if inst.t != 1:
        raise UnsupportedCaseError("the factorization bridge is defined for t = 1 only")
    n, xs = inst.n, sol.xs
    if any(x < 1 for x in xs[1:n]):
        raise InvalidInputError("interior entries a_1..a_{n-1} must be positive")
    m = continuant(1, xs[1:n])
    d1 = continuant(1, xs[:n])
    d2 = continuant(1, xs[1:])
    if d1 * d2 != inst.P(m):  # pragma: no cover - Solution is verified
        raise AssertionError("factorization does not multiply out")
    return FactorizationTriple(m, d1, d2)


def enumerate_factorizations(P: IntPolynomial, m: int) -> list[tuple[int, int]]:
    """All (d1, d2) with 1 <= d1 <= d2 and d1 d2 = P(m), by trial division."""
    value = P(m)
    if value < 1:
        raise UnsupportedCaseError(f"P({m}) = {value} is not positive")
    out = []
    for d in range(1, math.isqrt(value) + 1):
        if value % d == 0:
            out.append((d, value // d))
    return out


def default_parity(P: IntPolynomial) -> str:
    parities = check_condition(P, 1, 2).parity_class
    if not parities:
        raise InadmissibleInstanceError(f"P=[{P}] is not admissible for t=1 and any n")
    return EVEN if 0 in parities else ODD


def _unit_window(sol: Solution, radius: int) -> Optional[IntTuple]:
    chain = chain_window(sol, radius, radius)
    for w in chain.windows(chain.n):
        if abs(continuant(1, w)) == 1:
            return w
    return None


def provenance(sol: Solution, radius: int = 3) -> Optional[str]:
    """Bounded search for how the known constructions reach sol.

    Tries, in order: a unit-continuant window on the nearby chain, an f_a
    preimage, and a g.h preimage. None means nothing was found.
    """
    xs = sol.xs
    w = _unit_window(sol, radius)
    if w is not None:
        return f"chain of unit seed {list(w)}"
    P = sol.instance.P
    prefix = xs[:-1]
    if len(prefix) >= 4 and prefix[0] == 0:
        inner = prefix[2:]
        try:
            DivisorPrefix(P, 1, inner)
            return f"f:{prefix[1]} of prefix {list(inner)}"
        except InvalidInputError:
            pass
    if len(prefix) >= 4 and prefix[0] == 1 and prefix[-1] == 1:
        pre = map_h_inv(map_g_inv(DivisorPrefix(P, 1, prefix)))
        if _unit_window(_complete_or_none(pre) or sol, radius) is not None:
            return f"g.h of prefix {list(pre.xs)}"
    return None


def _complete_or_none(prefix: DivisorPrefix) -> Optional[Solution]:
    n = len(prefix.xs)
    if not check_condition(prefix.P, prefix.t, n).holds:
        return None
    inst = EquationInstance(prefix.P, prefix.t, n)
    res = lift(inst, prefix.xs)
    return Solution(inst, prefix.xs + (res.value,)) if res.kind is LiftKind.UNIQUE else None


@dataclass(frozen=True)
class TableRow:
    m: int
    d1: int
    d2: int
    solution: Solution
    left: IntTuple   # chain elements before the solution window, nearest last
    right: IntTuple  # chain elements after it
    provenance: Optional[str]

    def to_json(self) -> dict:
        return {
            "m": str(self.m),
            "d1": str(self.d1),
            "d2": str(self.d2),
            "n": self.solution.instance.n,
            "solution": [str(x) for x in self.solution.xs],
            "left": [str(x) for x in self.left],
            "right": [str(x) for x in self.right],
            "provenance": self.provenance,
        }


def factorization_table(P: IntPolynomial, m_max: int, radius: int = 2,
                        parity: Optional[str] = None,
                        with_provenance: bool = True) -> list[TableRow]:
    """One row per positive factorization of P(m), 1 <= m <= m_max, ordered by (m, d1)."""
    parity = parity or default_parity(P)
    rows = []
    for m in range(1, m_max + 1):
        for d1, d2 in enumerate_factorizations(P, m):
            sol = factorization_to_solution(P, parity, FactorizationTriple(m, d1, d2))
            chain = chain_window(sol, radius, radius)
            k = chain.base_offset
            rows.append(TableRow(
                m, d1, d2, sol,
                chain.elements[:k], chain.elements[k + sol.instance.n + 1:],
                provenance(sol) if with_provenance else None,
            ))
    return rows
