import pytest

from ratquartic.arith import four_one_moduli
from ratquartic.errors import DomainError
from ratquartic.genus import (
    DiscSplit,
    enumerate_splits,
    explore,
    is_c4_split,
    prime_discriminants,
    scholz_real_criterion,
)
from ratquartic.laws import is_admissible
from ratquartic.quartic import quartic_symbol_composite


@pytest.mark.parametrize("d,parts", [(65, [5, 13]), (145, [5, 29]), (40, [8, 5]), (8 * 1105, [8, 5, 13, 17])])
def test_prime_discriminants(d, parts):
    assert prime_discriminants(d) == parts


@pytest.mark.parametrize("d", [21, 25, 4, 16, 20, 80, 1])
def test_prime_discriminants_rejects(d):
    with pytest.raises(DomainError):
        prime_discriminants(d)


def test_enumerate_splits_examples():
    assert enumerate_splits(65) == [DiscSplit(65, 5, 13, False)]
    assert enumerate_splits(145) == [DiscSplit(145, 5, 29, True)]
    splits = enumerate_splits(1105)
    assert [(s.d1, s.d2) for s in splits] == [(5, 221), (13, 85), (17, 65)]
    assert not any(s.is_c4 for s in splits)


def test_enumerate_splits_needs_two_parts():
    with pytest.raises(DomainError):
        enumerate_splits(13)


def test_scholz_criterion_examples():
    (s,) = enumerate_splits(145)
    assert scholz_real_criterion(s) is True and s.scholz_equal is True
    assert quartic_symbol_composite(5, 29) == quartic_symbol_composite(29, 5) == -1
    (s,) = enumerate_splits(793)
    assert s.is_c4 and scholz_real_criterion(s) is True
    with pytest.raises(DomainError):
        scholz_real_criterion(DiscSplit(65, 5, 13, False))


def test_explore_examples():
    r = explore(65)
    assert (r.c4_count, r.real_count) == (0, 0)
    r = explore(145)
    assert (r.c4_count, r.real_count) == (1, 1)
    r = explore(40)
    assert [(s.d1, s.d2, s.is_c4) for s in r.splits] == [(5, 8, False)]
    assert r.to_json() == {
        "d": 40,
        "splits": [{"d1": 5, "d2": 8, "is_c4": False, "scholz_equal": None}],
        "c4_count": 0,
        "real_count": 0,
    }


def test_even_c4_split():
    # 8 * 17: 17 = 1 mod 8 and (8/17) = (2/17) = +1; (17/8)_4 = +1 but 8^4 = -1 mod 17.
    (s,) = explore(8 * 17).splits
    assert s.is_c4 and s.scholz_equal is False


def test_split_count_and_symmetry():
    odd = four_one_moduli(20000, min_factors=2)
    for d in odd[::5] + [8 * m for m in four_one_moduli(2000)]:
        report = explore(d)
        r = len(prime_discriminants(d))
        assert len(report.splits) == 2 ** (r - 1) - 1
        for s in report.splits:
            assert s.d1 * s.d2 == d and s.d1 < s.d2
            assert is_c4_split(s.d2, s.d1) == s.is_c4
            if s.is_c4:
                swapped = quartic_symbol_composite(s.d2, s.d1) == quartic_symbol_composite(s.d1, s.d2)
                assert swapped == s.scholz_equal
            else:
                assert s.scholz_equal is None


def test_two_prime_c4_iff_admissible():
    for d in four_one_moduli(30000, min_factors=2):
        report = explore(d)
        if len(report.splits) == 1:
            s = report.splits[0]
            assert s.is_c4 == is_admissible(s.d1, s.d2)
