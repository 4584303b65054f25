"""Representations m = a^2 + b^2 with a odd and b even."""

from dataclasses import dataclass
from math import gcd, isqrt

from .arith import _is_prime, four_one_primes, sqrt_mod_prime
from .errors import DomainError, InvariantError


@dataclass(frozen=True)
class TwoSquaresRep:
    m: int
    a: int
    b: int

    def __post_init__(self):
        if self.a * self.a + self.b * self.b != self.m:
            raise InvariantError(f"{self.a}^2 + {self.b}^2 != {self.m}")
        if self.a % 2 == 0 or self.b % 2:
            raise InvariantError(f"bad parity in {self}")


def cornacchia_prime(p):
    """The unique p = a^2 + b^2 with a odd > 0, b even > 0, for prime p = 1 mod 4."""
    if p % 4 != 1 or not _is_prime(p):
        raise DomainError(f"{p} is not a prime = 1 mod 4")
    x = sqrt_mod_prime(p - 1, p)
    r0, r1 = p, x
    limit = isqrt(p)
    while r1 > limit:
        r0, r1 = r1, r0 % r1
    u = r1
    v = isqrt(p - u * u)
    if u * u + v * v != p:
        raise InvariantError(f"Cornacchia descent failed for {p}")
    return _normalize(p, u, v)


def _normalize(m, x, y):
    x, y = abs(x), abs(y)
    if x % 2 == 0:
        x, y = y, x
    return TwoSquaresRep(m, x, y)


def two_squares_composite(m):
    """Canonical primitive m = a^2 + b^2 for squarefree odd m with primes = 1 mod 4.

    The prime representations are multiplied as Gaussian integers in
    ascending prime order, then normalized to a odd > 0, b even > 0.
    """
    primes = four_one_primes(m)
    if not primes:
        raise DomainError("m must exceed 1")
    x, y = 1, 0
    for q in primes:
        rep = cornacchia_prime(q)
        x, y = x * rep.a - y * rep.b, x * rep.b + y * rep.a
    return _normalize(m, x, y)


def all_two_squares(m):
    """Every primitive m = a^2 + b^2 with a odd > 0, b even > 0, sorted by a.

    Exhaustive scan, used as an oracle; m <= 10**6.
    """
    if m > 10**6:
        raise DomainError(f"exhaustive scan limited to m <= 10**6, got {m}")
    reps = []
    for a in range(1, isqrt(m) + 1, 2):
        rest = m - a * a
        b = isqrt(rest)
        if b > 0 and b * b == rest and b % 2 == 0 and gcd(a, b) == 1:
            reps.append(TwoSquaresRep(m, a, b))
    return reps
