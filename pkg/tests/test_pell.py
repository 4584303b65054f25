import pytest

from ratquartic.alpha import AlphaTriple
from ratquartic.arith import four_one_moduli, four_one_primes, jacobi, primes_up_to, sqrt_mod_prime
from ratquartic.errors import DomainError, InvariantError, NoNegativeNormUnit
from ratquartic.oracles import pell_bruteforce
from ratquartic.pell import (
    PellUnit,
    eval_unit_symbol,
    eval_unit_symbol_composite,
    fundamental_negative_unit,
    sqrt_cf_period,
    unit_times_sqrt_as_alpha,
)

P1MOD4 = [p for p in primes_up_to(10**4) if p % 4 == 1]


def units_below(limit):
    out = []
    for m in four_one_moduli(limit):
        try:
            out.append(fundamental_negative_unit(m))
        except NoNegativeNormUnit:
            pass
    return out


@pytest.mark.parametrize(
    "m,t,u", [(5, 2, 1), (13, 18, 5), (65, 8, 1), (29, 70, 13), (61, 29718, 3805)]
)
def test_fundamental_negative_unit_examples(m, t, u):
    assert fundamental_negative_unit(m) == PellUnit(m, t, u)


def test_sqrt_cf_period():
    assert sqrt_cf_period(13) == [3, 1, 1, 1, 1, 6]
    assert sqrt_cf_period(5) == [2, 4]
    with pytest.raises(DomainError):
        sqrt_cf_period(25)


@pytest.mark.parametrize("m", [205, 221, 305, 377])
def test_no_negative_unit(m):
    with pytest.raises(NoNegativeNormUnit) as info:
        fundamental_negative_unit(m)
    assert info.value.period % 2 == 0


def test_205_has_no_small_solution():
    assert pell_bruteforce(205, 10**4) is None


@pytest.mark.parametrize("m", [1, 21, 10])
def test_fundamental_negative_unit_rejects(m):
    with pytest.raises(DomainError):
        fundamental_negative_unit(m)


def test_pell_unit_validated():
    with pytest.raises(InvariantError):
        PellUnit(5, 2, 2)


def test_unit_times_sqrt_examples():
    assert unit_times_sqrt_as_alpha(PellUnit(5, 2, 1)) == AlphaTriple(5, -5, -2, 1)
    assert unit_times_sqrt_as_alpha(PellUnit(65, 8, 1)) == AlphaTriple(65, 65, 8, 1)
    t = unit_times_sqrt_as_alpha(PellUnit(13, 18, 5))
    assert t == AlphaTriple(13, -65, -18, 1)
    assert 65**2 == 13 * 325


def test_unit_times_sqrt_valid_for_all_units():
    for e in units_below(3000):
        t = unit_times_sqrt_as_alpha(e)
        assert t.A**2 == e.m * (t.B**2 + 1)


@pytest.mark.parametrize("e,p,expected", [(PellUnit(5, 2, 1), 29, 1), (PellUnit(5, 2, 1), 61, -1), (PellUnit(13, 18, 5), 61, 1)])
def test_eval_unit_symbol_examples(e, p, expected):
    assert eval_unit_symbol(e, p) == expected


def test_eval_unit_symbol_examples_by_hand():
    assert (2 + 11) % 29 == 13 and jacobi(13, 29) == 1
    assert (2 + 26) % 61 == 28 and jacobi(28, 61) == -1
    assert (18 + 5 * 14) % 61 == 27 and jacobi(27, 61) == 1


def test_eval_unit_symbol_composite_examples():
    e = PellUnit(5, 2, 1)
    assert eval_unit_symbol_composite(e, 29) == 1
    assert eval_unit_symbol_composite(e, 1) == 1
    assert eval_unit_symbol_composite(e, 29 * 61) == -1
    with pytest.raises(DomainError):
        eval_unit_symbol_composite(e, 65)
    with pytest.raises(DomainError):
        eval_unit_symbol_composite(e, 13)


def test_eval_unit_symbol_domain():
    e = PellUnit(5, 2, 1)
    for p in (5, 13, 7):
        with pytest.raises(DomainError):
            eval_unit_symbol(e, p)


def admissible(m, limit=10**4):
    qs = four_one_primes(m)
    return [p for p in P1MOD4 if p <= limit and m % p and all(jacobi(p, q) == 1 for q in qs)]


def test_root_independence():
    for e in units_below(500):
        for p in admissible(e.m):
            r = sqrt_mod_prime(e.m, p)
            assert jacobi(e.t + e.u * r, p) == jacobi(e.t + e.u * (p - r), p)


def test_odd_powers_give_same_symbol():
    for e in units_below(200):
        cube = e**3
        assert cube.t**2 - e.m * cube.u**2 == -1
        for p in admissible(e.m, 3000):
            assert eval_unit_symbol(cube, p) == eval_unit_symbol(e, p)


def test_even_power_rejected():
    with pytest.raises(DomainError):
        PellUnit(5, 2, 1) ** 2
