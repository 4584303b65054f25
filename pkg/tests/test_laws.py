import json
from math import prod

import pytest

from ratquartic import laws
from ratquartic.arith import four_one_moduli, primes_up_to
from ratquartic.errors import DomainError
from ratquartic.laws import (
    LawReport,
    is_admissible,
    oracle_sides,
    sweep,
    unit_splits,
    verify,
    verify_burde,
    verify_ec,
    verify_ec_triple,
    verify_furuta,
    verify_gauss2,
    verify_scholz,
    verify_scholz_mutual,
)
from ratquartic.alpha import alpha_from_rep
from ratquartic.twosquares import all_two_squares


@pytest.mark.parametrize("m,n,expected", [(5, 29, True), (5, 13, False), (65, 61, True), (5, 5, False), (65, 5, False)])
def test_is_admissible(m, n, expected):
    assert is_admissible(m, n) is expected


def test_is_admissible_rejects_bad_moduli():
    with pytest.raises(DomainError):
        is_admissible(21, 5)


def test_report_match_semantics():
    assert LawReport("ec", {}, [1, 1]).match
    assert not LawReport("ec", {}, [1, -1]).match
    skipped = LawReport("ec", {}, [], "x")
    assert skipped.skipped and not skipped.match
    assert json.dumps(skipped.to_json()) == '{"law": "ec", "inputs": {}, "sides": [], "match": false, "skipped": "x"}'


@pytest.mark.parametrize(
    "call,sides",
    [
        (lambda: verify_ec(5, 29), [-1, -1]),
        (lambda: verify_ec(65, 61), [1, 1]),
        (lambda: verify_burde(5, 29), [1, 1, 1]),
        (lambda: verify_burde(13, 17), [-1, -1, -1]),
        (lambda: verify_gauss2(17), [-1, -1, -1]),
        (lambda: verify_gauss2(73), [1, 1, 1]),
        (lambda: verify_gauss2(89), [1, 1, 1]),
        (lambda: verify_scholz(5, 29), [1, 1]),
        (lambda: verify_scholz(13, 61), [1, 1]),
        (lambda: verify_scholz(5, 61), [-1, -1]),
        (lambda: verify_scholz_mutual(5, 29), [1, 1]),
        (lambda: verify_furuta(65, 61), [-1, -1]),
        (lambda: verify_furuta(5, 29), [1, 1]),
    ],
)
def test_examples(call, sides):
    report = call()
    assert report.sides == sides and report.match
    assert oracle_sides(report) == sides


def test_gauss2_inputs():
    assert verify_gauss2(73).inputs == {"p": 73, "a": -3, "b": 2}
    assert verify_gauss2(89).inputs == {"p": 89, "a": 5, "b": 2}
    assert pow(2, 22, 89) == 1 and pow(2, 9, 73) == 1 and pow(2, 4, 17) == 16


def test_gauss2_skips_5_mod_8():
    assert verify_gauss2(13).skipped


def test_scholz_mutual_and_furuta_agree_where_defined():
    r = verify_scholz_mutual(13, 61)
    assert r.match
    r = verify_furuta(65, 29)
    assert r.match


@pytest.mark.parametrize(
    "call",
    [
        lambda: verify_ec(5, 13),
        lambda: verify_burde(5, 13),
        lambda: verify_scholz_mutual(5, 13),
        lambda: verify_scholz(205, 61),
        lambda: verify_ec(8 * 5, 29),
    ],
)
def test_skipped_instances(call):
    report = call()
    assert report.skipped and not report.match and report.sides == []


def test_scholz_skips_without_unit():
    # 205 = 5 * 41 has no unit of norm -1; pick any admissible n.
    n = next(n for n in four_one_moduli(2000) if is_admissible(205, n))
    report = verify_scholz(205, n)
    assert report.skipped_reason.startswith("no unit")


@pytest.mark.parametrize("call", [lambda: verify_ec(21, 29), lambda: verify_ec(5, 31), lambda: verify_burde(5, 21)])
def test_malformed_inputs_raise(call):
    with pytest.raises(DomainError):
        call()


def test_verify_dispatch():
    assert verify("scholz-mutual", m=5, n=29).law == "scholz_mutual"
    with pytest.raises(DomainError):
        verify("nope", m=5, n=29)


def test_ec_even_modulus():
    r = verify_ec(40, 41)
    assert not r.skipped and r.match
    assert oracle_sides(r) == r.sides


def test_ec_each_representation():
    for m in four_one_moduli(1500, min_factors=2):
        for rep in all_two_squares(m):
            for sa in (1, -1):
                for sb in (1, -1):
                    t = alpha_from_rep(m, sa * rep.a, sb * rep.b)
                    for p in [p for p in primes_up_to(1500) if p % 4 == 1]:
                        r = verify_ec_triple(t, p)
                        assert r.skipped or r.match


def test_furuta_splits():
    m = 5 * 13 * 17
    splits = unit_splits(m)
    assert splits
    for n in four_one_moduli(2000):
        if is_admissible(m, n):
            r = verify_furuta(m, n, tuple(splits))
            assert r.skipped or (r.match and len(r.sides) == 2 + len(splits))


def test_furuta_bad_split():
    with pytest.raises(DomainError):
        verify_furuta(65, 61, (7,))


def test_scholz_composite_n_is_product_of_prime_reports():
    for m in (5, 13, 29, 65):
        for n in four_one_moduli(1000, min_factors=2):
            whole = verify_scholz(m, n)
            if whole.skipped:
                continue
            parts = [verify_scholz(m, q) for q in laws._parts(n)]
            assert whole.sides[0] == prod(r.sides[0] for r in parts)


def test_sweep_ec_m5():
    result = sweep("ec", [5], [p for p in primes_up_to(100) if p % 4 == 1])
    # p = 1 mod 4, p < 100 with (p/5) = 1: 29, 41, 61, 89
    assert [r.inputs["p"] for r in result.reports if not r.skipped] == [29, 41, 61, 89]
    assert result.checked == result.matched == 4


def test_sweep_gauss2():
    result = sweep("gauss2", [], [p for p in primes_up_to(10**4) if p % 8 == 1])
    assert result.checked == result.matched > 0 and result.skipped == 0


def test_sweep_burde_counts_gcd_skips():
    ms = four_one_moduli(100)
    result = sweep("burde", ms, ms)
    gcd_skips = sum(1 for r in result.reports if r.skipped and r.skipped_reason.startswith("gcd"))
    assert gcd_skips >= len(ms)
    assert result.checked == result.matched
    assert result.checked + result.skipped == len(ms) ** 2


def test_sweep_parallel_matches_serial():
    ms = four_one_moduli(300)
    a = sweep("scholz", ms, ms, jobs=1)
    b = sweep("scholz", ms, ms, jobs=3)
    assert [r.to_json() for r in a.reports] == [r.to_json() for r in b.reports]


def test_sweep_unknown_law():
    with pytest.raises(DomainError):
        sweep("bogus", [5], [29])
