import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from dedekind_padic.approximate import (
    ROUTES,
    Target,
    Witness,
    approx_fractional,
    approx_large_p,
    approx_p2,
    approx_p3,
    approximate,
    route_for,
    verify_witness,
)
from dedekind_padic.arith import INFINITY
from dedekind_padic.errors import InvalidTarget, NotApproximable
from targets import ROUTE_SHAPES, random_unit_target, targets

F = Fraction

# (p, a, k) -> (route, m, n, S, achieved); S values checked against the
# definitional sum where n is small enough
REFERENCE = [
    ((5, F(1), 2), ("T2-large-p", 9, 164, F(27, 2), 2)),
    ((7, F(0), 1), ("T2-large-p", 7, 100, F(21, 2), 1)),
    ((5, F(3, 2), 1), ("T2-large-p", 1, 4, F(3, 2), INFINITY)),
    ((3, F(3), 2), ("T2-p3", 5, 52, F(15, 2), 2)),
    ((3, F(3), 1), ("T2-p3", 1, 4, F(3, 2), 1)),
    ((3, F(0), 3), ("T2-p3", 9, 164, F(27, 2), 3)),
    ((2, F(2), 3), ("T2-p2-v1", 2, 15, F(14, 3), 3)),
    ((2, F(4), 4), ("T2-p2-v2", 1, 10, F(36, 5), 4)),
    ((2, F(8), 4), ("T2-p2-v3", 7, 250, F(168, 5), 7)),
    ((5, F(1, 5), 1), ("T3-fractional", 11, 610, F(276, 5), 1)),
    ((3, F(1, 3), 1), ("T3-fractional", 1, 6, F(10, 3), 1)),
    ((2, F(1, 2), 1), ("T3-fractional", 3, 20, F(9, 2), 2)),
]


@pytest.mark.parametrize("target, expected", REFERENCE)
def test_reference_witnesses(target, expected):
    route, m, n, s, achieved = expected
    w = approximate(Target(*target))
    assert (w.route, w.m, w.n, w.s, w.achieved) == expected
    assert oracles.dedekind_by_definition(m, n) == s
    assert verify_witness(w)


def test_route_functions_directly():
    assert approx_large_p(Target(5, F(1), 2)).m == 9
    assert approx_p3(Target(3, F(3), 2)).m == 5
    assert approx_p2(Target(2, F(2), 3)).m == 2
    assert approx_fractional(Target(5, F(1, 5), 1)).m == 11


@pytest.mark.parametrize(
    "fn, target",
    [
        (approx_large_p, Target(3, F(3), 1)),
        (approx_p3, Target(3, F(1), 1)),
        (approx_p2, Target(2, F(1, 2), 1)),
        (approx_fractional, Target(5, F(5), 1)),
    ],
)
def test_route_preconditions(fn, target):
    with pytest.raises(InvalidTarget):
        fn(target)


def test_p2_v1_tie_break_at_low_precision():
    # below k = 3 the mod-4 class of l is free; the l = 1 mod 4 branch is taken
    for k in (1, 2):
        w = approximate(Target(2, F(2), k))
        assert (w.m, w.n, w.s) == (1, 6, F(10, 3))


def test_p2_v2_low_precision_uses_l_equal_3():
    w = approximate(Target(2, F(4), 2))
    assert (w.m, w.n, w.s) == (1, 10, F(36, 5))


@pytest.mark.parametrize("p, a", [(2, F(1)), (2, F(-3, 5)), (3, F(2)), (3, F(7, 4))])
def test_units_are_not_approximable(p, a):
    with pytest.raises(NotApproximable):
        approximate(Target(p, a, 2))


@pytest.mark.parametrize(
    "p, a, k",
    [(4, F(1), 1), (1, F(1), 1), (5, F(1), 0), (5, F(1), -2), (2**31 + 11, F(1), 1), (5, 1.5, 1), (5, F(1), 1.0)],
)
def test_invalid_targets(p, a, k):
    with pytest.raises(InvalidTarget):
        Target(p, a, k)


def test_target_accepts_int():
    assert Target(5, 3, 1).a == F(3)


def test_verify_witness_examples():
    good = approximate(Target(5, F(1), 2))
    assert verify_witness(good)
    other = Witness(Target(5, F(2), 2), good.m, good.n, good.s, 0, good.route)
    assert not verify_witness(other)
    assert oracles.valuation(F(27, 2) - 2, 5) == 0


def test_verify_witness_rejects_tampering():
    w = approximate(Target(7, F(3), 3))
    assert not verify_witness(Witness(w.target, w.m, w.n, w.s + 7**5, w.achieved, w.route))
    assert not verify_witness(Witness(w.target, w.m, 2 * w.m, w.s, w.achieved, w.route))
    assert not verify_witness(Witness(w.target, w.m, 0, w.s, w.achieved, w.route))


def test_witness_json():
    record = json.loads(json.dumps(approximate(Target(5, F(1), 2)).as_dict()))
    assert record == {
        "p": 5, "k": 2, "target": "1", "route": "T2-large-p",
        "m": "9", "n": "164", "S": "27/2", "achieved": 2,
    }
    exact = approximate(Target(5, F(3, 2), 1)).as_dict()
    assert exact["achieved"] == "inf"


def test_route_totality():
    rng = random.Random(7)
    for _ in range(2000):
        p = rng.choice((2, 3, 5, 7, 11, 13))
        a = F(rng.randint(-10**4, 10**4), rng.randint(1, 10**4))
        t = Target(p, a, rng.randint(1, 6))
        v = t.valuation
        if p in (2, 3) and v == 0:
            with pytest.raises(NotApproximable):
                route_for(t)
        else:
            assert route_for(t) in ROUTES


def test_determinism():
    t = Target(13, F(-17, 4), 6)
    assert approximate(t) == approximate(Target(13, F(-34, 8), 6))


@pytest.mark.parametrize("route", sorted(ROUTE_SHAPES))
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_random_targets_are_sound(route, data):
    p, a, k = data.draw(targets(route))
    t = Target(p, a, k)
    w = approximate(t)
    assert w.route == route
    assert verify_witness(w)
    assert w.achieved >= k
    assert oracles.valuation(w.s - a, p) is None or oracles.valuation(w.s - a, p) >= k


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_fractional_witness_lies_in_its_family(data):
    p, a, k = data.draw(targets("T3-fractional"))
    w = approximate(Target(p, a, k))
    q = p ** -oracles.valuation(a, p)
    l = w.s * q
    assert l.denominator == 1 and l > 0
    rstar = l.numerator % q
    r = pow(rstar, -1, q)
    assert (w.m - r) % q == 0 and w.n == q * (w.m**2 + 1)
    assert (l.numerator - q * oracles.dedekind_by_descent(r, q)) % (q * q - 1) == 0


def test_unit_targets_sampled():
    rng = random.Random(11)
    for _ in range(50):
        p, a, k = random_unit_target(rng)
        with pytest.raises(NotApproximable):
            approximate(Target(p, a, k))
