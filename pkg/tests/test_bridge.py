from fractions import Fraction
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from continuant_eq import (
    EquationInstance,
    IntPolynomial,
    InvalidInputError,
    Solution,
    UnsupportedCaseError,
    continuant,
    verify_solution,
)
from continuant_eq.bridge import (
    FactorizationTriple,
    cf_expand,
    default_parity,
    enumerate_factorizations,
    factorization_table,
    factorization_to_solution,
    provenance,
    solution_to_factorization,
)

QUARTIC = IntPolynomial((1, 0, 0, 0, 1))

# m, d1, d2, bracketed solution, left neighbours (nearest last), right neighbours
PAPER_TABLE = [
    (1, 1, 2, (0, 1, 1), (), (0,)),
    (2, 1, 17, (0, 2, 8), (), (30, 112)),
    (3, 1, 82, (0, 3, 27), (), (240, 2133)),
    (3, 2, 41, (0, 1, 1, 1, 13), (-1,), (480, 23422307)),
    (4, 1, 257, (0, 4, 64), (), (1020,)),
    (5, 1, 626, (0, 5, 125), (), (3120,)),
    (5, 2, 313, (0, 2, 1, 1, 62), (-2,), (6240,)),
    (6, 1, 1297, (0, 6, 216), (), (7770,)),
    (7, 1, 2402, (0, 7, 343), (), (16800,)),
    (7, 2, 1201, (0, 3, 1, 1, 171), (-3,), (33600,)),
    (8, 1, 4097, (0, 8, 512), (), (32760,)),
    (8, 17, 241, (2, 8, 30), (0,), (112,)),
    (9, 1, 6562, (0, 9, 729), (), (59040,)),
    (9, 2, 3281, (0, 4, 1, 1, 364), (-4,), (118080,)),
    (9, 17, 386, (1, 1, 7, 1, 42), (21011, 198), (104543,)),
    (9, 34, 193, (3, 1, 3, 2, 21), (42022, 99), (17487,)),
    (10, 1, 10001, (0, 10, 1000), (), (99990,)),
    (10, 73, 137, (7, 3, 2, 1, 13), (1817,), (503,)),
]


def cf_value(a):
    """Oracle: evaluate [a_0; a_1, ..., a_k] with Fractions, back to front."""
    x = Fraction(a[-1])
    for q in reversed(a[:-1]):
        x = q + 1 / x
    return x


@pytest.mark.parametrize("p, q, expected", [
    (17, 8, (2, 8)),
    (2, 3, (0, 1, 1, 1)),
    (34, 9, (3, 1, 3, 2)),
    (1, 1, (0, 1)),
])
def test_cf_examples(p, q, expected):
    assert cf_expand(p, q, "even") == expected


def test_cf_errors():
    with pytest.raises(InvalidInputError):
        cf_expand(4, 6, "even")
    with pytest.raises(InvalidInputError):
        cf_expand(4, 0, "even")
    with pytest.raises(InvalidInputError):
        cf_expand(4, 3, "sideways")


@given(st.integers(-10 ** 6, 10 ** 6), st.integers(1, 10 ** 6), st.sampled_from(["even", "odd"]))
def test_cf_properties(p, q, parity):
    g = math.gcd(p, q)
    p, q = p // g, q // g
    a = cf_expand(p, q, parity)
    assert len(a) % 2 == (0 if parity == "even" else 1)
    assert all(x >= 1 for x in a[1:])
    assert cf_value(a) == Fraction(p, q)
    assert continuant(1, a[1:]) == q
    assert continuant(1, a) == p


def test_enumerate_factorizations_examples():
    assert enumerate_factorizations(QUARTIC, 9) == [(1, 6562), (2, 3281), (17, 386), (34, 193)]
    assert enumerate_factorizations(QUARTIC, 1) == [(1, 2)]
    assert enumerate_factorizations(QUARTIC, 10) == [(1, 10001), (73, 137)]
    with pytest.raises(UnsupportedCaseError):
        enumerate_factorizations(IntPolynomial((-5, 1)), 2)


def test_enumerate_factorizations_oracle():
    for m in range(1, 40):
        v = QUARTIC(m)
        naive = [(d, v // d) for d in range(1, v + 1) if v % d == 0 and d * d <= v]
        assert enumerate_factorizations(QUARTIC, m) == naive


@pytest.mark.parametrize("m, d1, d2, sol, left, right", PAPER_TABLE)
def test_paper_table_rows(m, d1, d2, sol, left, right):
    got = factorization_to_solution(QUARTIC, "even", FactorizationTriple(m, d1, d2))
    assert got.xs == sol
    assert solution_to_factorization(got) == FactorizationTriple(m, d1, d2)


def test_table_matches_paper():
    rows = factorization_table(QUARTIC, 10, radius=2)
    assert [(r.m, r.d1, r.d2, r.solution.xs) for r in rows] == [row[:4] for row in PAPER_TABLE]
    for r, (_, _, _, _, left, right) in zip(rows, PAPER_TABLE):
        assert r.left[len(r.left) - len(left):] == left
        assert r.right[:len(right)] == right


def test_twelve():
    sol = factorization_to_solution(QUARTIC, "even", FactorizationTriple(12, 89, 233))
    assert sol.xs == (7, 2, 2, 2, 19)


@pytest.mark.parametrize("xs, f", [
    ((2, 8, 30), (8, 17, 241)),
    ((1, 1, 7, 1, 42), (9, 17, 386)),
    ((0, 5, 125), (5, 1, 626)),
])
def test_solution_to_factorization(xs, f):
    sol = Solution(EquationInstance(QUARTIC, 1, len(xs) - 1), xs)
    assert solution_to_factorization(sol) == FactorizationTriple(*f)


def test_solution_to_factorization_rejects():
    inst = EquationInstance(QUARTIC, 1, 4)
    with pytest.raises(InvalidInputError):
        solution_to_factorization(Solution(inst, (-1, 0, 1, 1, 1)))


def test_factorization_to_solution_rejects():
    with pytest.raises(UnsupportedCaseError):
        factorization_to_solution(QUARTIC, "even", FactorizationTriple(9, -34, -193))
    with pytest.raises(InvalidInputError):
        factorization_to_solution(QUARTIC, "even", FactorizationTriple(9, 34, 190))


def test_round_trip_to_fifty():
    for m in range(1, 51):
        for d1, d2 in enumerate_factorizations(QUARTIC, m):
            for a, b in ((d1, d2), (d2, d1)):
                f = FactorizationTriple(m, a, b)
                sol = factorization_to_solution(QUARTIC, "even", f)
                assert verify_solution(sol.instance, sol.xs)
                assert continuant(1, sol.xs[1:]) == b
                assert solution_to_factorization(sol) == f


def test_odd_parity_polynomial():
    p = IntPolynomial((-1, 0, 1))  # x^2 - 1 with t = 1 needs odd n
    assert default_parity(p) == "odd"
    for m in range(2, 12):
        for d1, d2 in enumerate_factorizations(p, m):
            sol = factorization_to_solution(p, "odd", FactorizationTriple(m, d1, d2))
            assert sol.instance.n % 2 == 1
            assert solution_to_factorization(sol) == FactorizationTriple(m, d1, d2)


def test_odd_parity_at_m_one():
    p = IntPolynomial((-1, 3, -1))  # admissible for t = 1, odd n; P(1) = 1
    assert default_parity(p) == "odd"
    assert cf_expand(1, 1, "odd") == (1,)
    with pytest.raises(UnsupportedCaseError):
        factorization_to_solution(p, "odd", FactorizationTriple(1, 1, 1))


def test_provenance():
    inst4 = EquationInstance(QUARTIC, 1, 4)
    assert provenance(Solution(inst4, (1, 1, 7, 1, 42))) == "g.h of prefix [2, 8]"
    assert provenance(Solution(inst4, (3, 1, 3, 2, 21))) is None
    assert provenance(Solution(inst4, (7, 3, 2, 1, 13))) is None
    assert provenance(Solution(inst4, (0, 1, 1, 1, 13))).startswith("chain of unit seed")
