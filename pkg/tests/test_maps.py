import random

import pytest

from continuant_eq import (
    EquationInstance,
    InadmissibleInstanceError,
    IntPolynomial,
    InvalidInputError,
    Solution,
    chain_window,
    continuant,
    verify_solution,
)
from continuant_eq.maps import (
    DivisorPrefix,
    FreeCompletion,
    MapStep,
    apply_expression,
    complete,
    map_f,
    map_f_star,
    map_g,
    map_g_inv,
    map_h,
    map_h_inv,
    parse_expression,
    prefix_of,
    valid_compositions,
)

QUARTIC = IntPolynomial((1, 0, 0, 0, 1))
I2 = EquationInstance(QUARTIC, 1, 2)
I4 = EquationInstance(QUARTIC, 1, 4)


def pre(*xs, t=1, p=QUARTIC):
    return DivisorPrefix(p, t, xs)


def test_prefix_of():
    assert prefix_of(Solution(I2, (0, 2, 8))).xs == (0, 2)
    p = prefix_of(Solution(I2, (2, 8, 30)))
    assert p.outer == 17 and QUARTIC(p.inner) == 4097 == 17 * 241
    p = prefix_of(Solution(I4, (3, 1, 3, 2, 21)))
    assert p.outer == 34 and QUARTIC(p.inner) == 6562


def test_divisor_prefix_invariant():
    with pytest.raises(InvalidInputError):
        pre(1, 2)


@pytest.mark.parametrize("xs, done", [
    ((0, 1, 1, 1), (0, 1, 1, 1, 13)),
    ((1, 1, 7, 1), (1, 1, 7, 1, 42)),
    ((0, 1, 0, 1), (0, 1, 0, 1, 8)),
])
def test_complete_examples(xs, done):
    sol = complete(pre(*xs))
    assert sol.xs == done and verify_solution(I4, done)


def test_complete_free_and_inadmissible():
    free = complete(pre(0, 0))
    assert isinstance(free, FreeCompletion)
    assert free.complete(4).xs == (0, 0, 4)
    with pytest.raises(InadmissibleInstanceError):
        complete(pre(0, 1, 1))  # n = 3 is odd; x^4 + 1 needs even n for t = 1


def test_map_f_examples():
    q = map_f(1, pre(1, 1))
    assert q.xs == (0, 1, 1, 1)
    assert complete(q).xs == (0, 1, 1, 1, 13)
    q = map_f(2, pre(0, 1))
    assert q.xs == (0, 2, 0, 1) and q.outer == 1
    assert complete(q).xs == (0, 2, 0, 1, 27)
    q = map_f(0, pre(2, 8))
    assert q.xs == (0, 0, 2, 8) and q.inner == 8 and q.outer == 17
    # the literal image of (0, 1) -- prefix of (0, 1, 1) -- differs from the chain representative
    assert complete(map_f(1, pre(0, 1))).xs == (0, 1, 0, 1, 8)


def test_map_f_outer_and_inner_rule():
    rng = random.Random(3)
    for _ in range(200):
        a = rng.randint(-20, 20)
        x = rng.randint(-30, 30)
        p = pre(0, x)
        if p.inner == 0:
            continue
        q = map_f(a, p)
        assert q.outer == p.outer
        assert q.inner == p.inner + a * p.outer


def test_map_f_precondition():
    with pytest.raises(InvalidInputError):
        map_f(1, pre(1, 0))


def test_map_f_star():
    sol = map_f_star(0, 7, pre(3, 0, 5, 0))
    assert sol.xs == (0, 0, 3, 0, 5, 0, 7) and sol.instance.n == 6
    # a != 0 makes the new inner continuant +-a, so b is no longer free
    with pytest.raises(InvalidInputError):
        map_f_star(2, 7, pre(3, 0, 5, 0))
    assert map_f_star(0, 0, pre(0, 0)).xs == (0, 0, 0, 0, 0)
    with pytest.raises(InvalidInputError):
        map_f_star(1, 1, pre(1, 1))


def test_g_h_examples():
    assert map_h(pre(2, 8)).xs == (2, 7, 1)
    assert map_g(map_h(pre(2, 8))).xs == (1, 1, 7, 1)
    # x_0 - t with t = -1; (2, 8) itself is not a t = -1 divisor prefix for x^4 + 1
    assert map_g(pre(1, 2, t=-1)).xs == (1, 2, 2)
    assert map_h(pre(1, 2, t=-1)).xs == (1, 3, 1)
    assert continuant(1, (1, 1, 7, 1)) == continuant(1, (2, 8)) == 17
    assert complete(map_g(map_h(pre(2, 8)))).xs == (1, 1, 7, 1, 42)


def test_inverses():
    assert map_g_inv(pre(1, 1, 7, 1)).xs == (2, 7, 1)
    assert map_h_inv(pre(2, 7, 1)).xs == (2, 8)
    with pytest.raises(InvalidInputError):
        map_g_inv(pre(3, 1, 3, 2))
    with pytest.raises(InvalidInputError):
        map_h_inv(pre(3, 1, 3, 2))


def random_prefixes(rng, count, t=1):
    """Divisor prefixes drawn from chains of unit seeds and bridged solutions."""
    out = []
    inst = EquationInstance(QUARTIC, t, 2) if t == 1 else EquationInstance(IntPolynomial((1, 0, 1)), -1, 2)
    while len(out) < count:
        a = rng.randint(-30, 30)
        seed = (0, a) if t == 1 else rng.choice([(1, 2), (2, 1), (-1, -2), (-2, -1)])
        from continuant_eq import lift
        res = lift(inst, seed)
        sol = Solution(inst, seed + ((res.value if res.value is not None else 0),))
        for s in chain_window(sol, 0, rng.randint(0, 3)).solutions():
            out.append(prefix_of(s))
    return out[:count]


def test_outer_preserved_and_inverses_random():
    rng = random.Random(11)
    for t in (1, -1):
        for p in random_prefixes(rng, 250, t):
            g, h = map_g(p), map_h(p)
            assert g.outer == p.outer and h.outer == p.outer
            assert map_g_inv(g) == p and map_h_inv(h) == p


def test_f_then_complete_verifies():
    rng = random.Random(5)
    for p in random_prefixes(rng, 100):
        if p.inner == 0:
            continue
        a = rng.randint(-5, 5)
        done = complete(map_f(a, p))
        if isinstance(done, FreeCompletion):
            done = done.complete(rng.randint(-9, 9))
        assert verify_solution(done.instance, done.xs)


def test_compositions_table():
    t1 = {c.expr: c.requires for c in valid_compositions(1)}
    assert "g.h" in t1 and "g" not in t1
    assert t1["ginv.hinv"] == "x_0 = x_n = 1"
    tm = {c.expr for c in valid_compositions(-1)}
    assert {"g", "h", "ginv", "hinv"} <= tm


def test_compositions_preserve_divisibility():
    rng = random.Random(17)
    for t in (1, -1):
        for p in random_prefixes(rng, 60, t):
            for comp in valid_compositions(t):
                expr = comp.expr.replace("a,b", "0,3").replace(":a", ":2")
                try:
                    out = apply_expression(expr, p)
                except InvalidInputError:
                    continue  # outside the map's domain
                if isinstance(out, DivisorPrefix):
                    assert DivisorPrefix(out.P, out.t, out.xs) == out
                    if t == 1:
                        assert len(out.xs) % 2 == len(p.xs) % 2
                        assert not isinstance(complete(out), type(None))
                else:
                    assert verify_solution(out.instance, out.xs)


def test_parse_expression():
    assert parse_expression("g.h") == [MapStep("h"), MapStep("g")]
    assert parse_expression("f:3") == [MapStep("f", (3,))]
    assert parse_expression("fstar:2,7") == [MapStep("fstar", (2, 7))]
    assert parse_expression("ginv.hinv") == [MapStep("hinv"), MapStep("ginv")]
    for bad in ("q", "f", "f:1,2", "g.fstar:1,2", "f:x"):
        with pytest.raises(InvalidInputError):
            parse_expression(bad)
    assert apply_expression("g.h", pre(2, 8)).xs == (1, 1, 7, 1)
    assert apply_expression("ginv.hinv", pre(1, 1, 7, 1)).xs == (2, 8)
