"""Generalized continuants K_n^(t) and their 2x2 matrix form.

The recurrence is

    K_0() = 1,  K_1(x1) = x1,  K_{n+1} = x_{n+1} K_n + t K_{n-1}

and everything is exact Python integer arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidParameterError

IntTuple = tuple[int, ...]


def _check_t(t: int) -> None:
    if t == 0:
        raise InvalidParameterError("t must be a nonzero integer")


def continuant(t: int, xs: Sequence[int]) -> int:
    """Evaluate K_len(xs)^(t). The empty tuple gives 1."""
    _check_t(t)
    prev, cur = 0, 1  # K_{-1} never contributes: K_1 = x1*1 + t*0
    for x in xs:
        prev, cur = cur, x * cur + t * prev
    return cur


def window(xs: Sequence[int], start: int, end: int) -> IntTuple:
    """Inclusive slice xs[start..end]; end < start gives the empty tuple."""
    if end < start:
        return ()
    return tuple(xs[start:end + 1])


def reverse(xs: Sequence[int]) -> IntTuple:
    return tuple(reversed(xs))


@dataclass(frozen=True)
class Matrix2:
    a: int
    b: int
    c: int
    d: int

    def __matmul__(self, other: "Matrix2") -> "Matrix2":
        return Matrix2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]


IDENTITY = Matrix2(1, 0, 0, 1)


def continuant_matrix(t: int, xs: Sequence[int]) -> Matrix2:
    """Product of the matrices [[0, t], [1, x_i]] over xs.

    For n = len(xs) the result is
    [[t K_{n-2}(x_2..x_{n-1}), t K_{n-1}(x_2..x_n)],
     [K_{n-1}(x_1..x_{n-1}),   K_n(x_1..x_n)]].
    """
    _check_t(t)
    m = IDENTITY
    for x in xs:
        m = m @ Matrix2(0, t, 1, x)
    return m
