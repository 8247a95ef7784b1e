"""Integer polynomials and the admissibility condition binding (P, t, n)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import InvalidInputError, InvalidParameterError


@dataclass(frozen=True)
class IntPolynomial:
    """c_0 + c_1 x + ... + c_d x^d, constant term first."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        cs = tuple(int(c) for c in coeffs)
        if len(cs) < 2:
            raise InvalidInputError("polynomial must have degree >= 1")
        if cs[-1] == 0:
            raise InvalidInputError("leading coefficient must be nonzero")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        """Parse "c_0,c_1,...,c_d"."""
        try:
            cs = [int(part) for part in text.split(",")]
        except ValueError as exc:
            raise InvalidInputError(f"bad polynomial {text!r}: {exc}") from None
        return cls(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        return eval_poly(self, x)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def is_even_or_odd(self) -> bool:
        """True if P(-x) = P(x) or P(-x) = -P(x)."""
        odd = any(c for i, c in enumerate(self.coeffs) if i % 2)
        even = any(c for i, c in enumerate(self.coeffs) if i % 2 == 0)
        return not (odd and even)


def eval_poly(p: IntPolynomial, x: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class ConditionReport:
    holds: bool
    constant_C: Optional[int]
    parity_class: frozenset[int]  # residues of n mod 2 admissible for (P, t)


def _condition_constant(p: IntPolynomial, t: int, n: int) -> Optional[int]:
    cs = p.coeffs
    d = p.degree
    if cs[0] != (-t) ** n:
        return None
    s = (-t) ** (n - 1)
    # c_0 = +-1 and s = +-1, so C = c_d s^d / c_0 is an exact integer
    C = cs[d] * s ** d // cs[0]
    if C == 0:
        return None
    for i in range(d + 1):
        if cs[i] * s ** i != C * cs[d - i]:
            return None
    return C


def check_condition(p: IntPolynomial, t: int, n: int) -> ConditionReport:
    """Test c_0 = (-t)^n and x^d P((-t)^(n-1)/x) = C P(x) for some nonzero C."""
    if t not in (1, -1):
        raise InvalidParameterError("t must be 1 or -1")
    if n < 2:
        raise InvalidParameterError("n must be >= 2")
    C = _condition_constant(p, t, n)
    parity = frozenset(r for r in (0, 1) if _condition_constant(p, t, 2 + r) is not None)
    return ConditionReport(C is not None, C, parity)
