"""C4-splittings d = d1*d2 of discriminants that are sums of two squares.

Only positive prime discriminants (8 and primes = 1 mod 4) occur.  For each
coprime split we test the C4 condition and, for C4 splits, compare the two
quartic symbols (d1/d2)_4 and (d2/d1)_4 of Scholz's totally-real criterion.
"""

from dataclasses import dataclass, field
from itertools import combinations
from math import prod

from .arith import four_one_primes, jacobi
from .errors import DomainError, InvariantError
from .quartic import quartic_symbol_composite


@dataclass
class DiscSplit:
    d: int
    d1: int
    d2: int
    is_c4: bool
    scholz_equal: bool | None = None

    def to_json(self):
        return {
            "d1": self.d1,
            "d2": self.d2,
            "is_c4": self.is_c4,
            "scholz_equal": self.scholz_equal,
        }


@dataclass
class GenusReport:
    d: int
    splits: list = field(default_factory=list)

    @property
    def c4_count(self):
        return sum(s.is_c4 for s in self.splits)

    @property
    def real_count(self):
        return sum(bool(s.scholz_equal) for s in self.splits)

    def to_json(self):
        return {
            "d": self.d,
            "splits": [s.to_json() for s in self.splits],
            "c4_count": self.c4_count,
            "real_count": self.real_count,
        }


def prime_discriminants(d):
    """Prime discriminants of d: 8 (if 8 || d) followed by the odd primes."""
    if d < 5:
        raise DomainError(f"{d} is not a discriminant of the supported shape")
    return four_one_primes(d, allow_eight=True)


def _residue_at(x, q):
    # (x/q) for a prime discriminant q; at 8 this is the 2-adic condition x = +-1 mod 8.
    if q == 8:
        return x % 8 in (1, 7)
    return jacobi(x, q) == 1


def is_c4_split(d1, d2):
    """(d1/q) = +1 for every prime discriminant q | d2, and vice versa."""
    p1 = four_one_primes(d1, allow_eight=True)
    p2 = four_one_primes(d2, allow_eight=True)
    return all(_residue_at(d1, q) for q in p2) and all(_residue_at(d2, q) for q in p1)


def enumerate_splits(d):
    """All 2^(r-1) - 1 unordered coprime splits d = d1*d2 (d1 < d2), by d1."""
    parts = prime_discriminants(d)
    if len(parts) < 2:
        raise DomainError(f"{d} has fewer than two prime discriminants")
    splits = []
    for k in range(1, len(parts)):
        for combo in combinations(parts, k):
            d1 = prod(combo)
            d2 = d // d1
            if d1 < d2:
                splits.append(DiscSplit(d, d1, d2, is_c4_split(d1, d2)))
    splits.sort(key=lambda s: s.d1)
    return splits


def scholz_real_criterion(s):
    """True iff (d1/d2)_4 = (d2/d1)_4; records the answer on the split."""
    if not s.is_c4:
        raise DomainError(f"split {s.d1} * {s.d2} is not a C4 split")
    try:
        equal = quartic_symbol_composite(s.d1, s.d2) == quartic_symbol_composite(s.d2, s.d1)
    except DomainError as exc:
        raise InvariantError(f"quartic symbol undefined on C4 split {s.d1} * {s.d2}: {exc}")
    s.scholz_equal = equal
    return equal


def explore(d):
    """Splits of d with C4 flags and Scholz verdicts."""
    report = GenusReport(d, enumerate_splits(d))
    for s in report.splits:
        if s.is_c4:
            scholz_real_criterion(s)
    return report
