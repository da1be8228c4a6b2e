import json
from fractions import Fraction

import pytest

import oracles
from dedekind_padic.congruences import eq216_check, lemma1_check, lemma1_predict, lemma1_scan
from dedekind_padic.errors import InvalidArgument


def _describe(constraints):
    return [(c.label, c.modulus, c.residue, c.negated) for c in constraints]


@pytest.mark.parametrize(
    "pair, expected",
    [
        ((1, 4), [("L1c", 4, 2, False), ("L1d", 3, 0, False)]),
        ((1, 6), [("L1b", 4, 0, False), ("L1e", 3, 0, True)]),
        ((5, 7), [("L1a", 2, 0, False), ("L1d", 3, 0, False)]),
    ],
)
def test_predict_examples(pair, expected):
    assert _describe(lemma1_predict(pair)) == expected


def test_predictor_partitions_every_n():
    for n in range(1, 500):
        two, three = lemma1_predict((1, n))
        assert [n % 2 == 1, n % 4 == 2, n % 4 == 0].count(True) == 1
        assert two.label == {1: "L1a", 3: "L1a", 2: "L1b", 0: "L1c"}[n % 4]
        assert three.label == ("L1e" if n % 3 == 0 else "L1d")


@pytest.mark.parametrize("pair, ns", [((1, 4), 6), ((1, 6), 20), ((5, 7), -6)])
def test_check_examples(pair, ns):
    report = lemma1_check(pair)
    assert report.nS == ns
    assert report.nS == pair[1] * oracles.dedekind_by_definition(*pair)
    assert report.holds


def test_report_json():
    record = json.loads(json.dumps(lemma1_check((1, 6)).as_dict()))
    assert record == {"m": "1", "n": "6", "nS": "20", "cases": ["L1b", "L1e"], "holds": True}


def test_negative_constraint_distinct_from_positive():
    _, e = lemma1_predict((1, 3))
    assert e.negated and e.holds(1) and e.holds(2) and not e.holds(0) and not e.holds(-3)


def test_scan_up_to_400():
    reports = list(lemma1_scan(400))
    assert len(reports) == sum(1 for _ in oracles.coprime_pairs(400))
    assert all(r.holds for r in reports)


def test_predict_flags_wrong_value():
    # an off-by-one n*S always breaks the mod-2/mod-4 constraint
    for m, n in oracles.coprime_pairs(60):
        report = lemma1_check((m, n))
        assert not all(c.holds(report.nS + 1) for c in report.predicted)


@pytest.mark.parametrize("r, q", [(2, 5), (1, 3), (1, 2), (3, 8), (7, 9)])
def test_eq216_examples(r, q):
    assert eq216_check(r, q)
    rstar = oracles.inverse_by_search(r, q)
    qs = q * oracles.dedekind_by_definition(r, q)
    assert qs.denominator == 1 and (qs.numerator - r - rstar) % q == 0


def test_eq216_values():
    assert 5 * oracles.dedekind_by_definition(2, 5) == 0
    assert 3 * oracles.dedekind_by_definition(1, 3) == 2


@pytest.mark.parametrize("r, q", [(5, 25), (2, 4), (1, 6), (3, 1)])
def test_eq216_rejects(r, q):
    with pytest.raises(InvalidArgument):
        eq216_check(r, q)


def test_eq216_prime_power_list():
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81):
        p = next(d for d in range(2, q + 1) if q % d == 0)
        assert all(eq216_check(r, q) for r in range(1, q) if r % p)
