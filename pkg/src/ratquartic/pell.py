"""Units of norm -1 in Z[sqrt(m)] and the symbol (eps_m / p)."""

from dataclasses import dataclass
from math import isqrt

from .alpha import normalize_sign
from .arith import _is_prime, _tonelli_shanks, four_one_primes, jacobi
from .errors import DomainError, InvariantError, NoNegativeNormUnit


@dataclass(frozen=True)
class PellUnit:
    """eps = t + u*sqrt(m) with t^2 - m*u^2 = -1."""

    m: int
    t: int
    u: int

    def __post_init__(self):
        if self.t * self.t - self.m * self.u * self.u != -1:
            raise InvariantError(f"{self.t}^2 - {self.m}*{self.u}^2 != -1")

    def __pow__(self, k):
        # Only odd powers keep norm -1.
        if k < 1 or k % 2 == 0:
            raise DomainError(f"power {k} of a norm -1 unit is not a norm -1 unit")
        t, u = 1, 0
        for _ in range(k):
            t, u = t * self.t + self.m * u * self.u, t * self.u + u * self.t
        return PellUnit(self.m, t, u)


def sqrt_cf_period(m):
    """Partial quotients [a0; a1, ..., ak] of sqrt(m) through one full period."""
    a0 = isqrt(m)
    if a0 * a0 == m:
        raise DomainError(f"{m} is a perfect square")
    quotients = [a0]
    P, Q, a = 0, 1, a0
    while a != 2 * a0:
        P = a * Q - P
        Q = (m - P * P) // Q
        a = (a0 + P) // Q
        quotients.append(a)
    return quotients


def fundamental_negative_unit(m):
    """Smallest t + u*sqrt(m) (t, u > 0) with t^2 - m*u^2 = -1.

    Read off the convergent ending the first period of the continued
    fraction of sqrt(m); raises NoNegativeNormUnit if that period is even.
    """
    if not four_one_primes(m):
        raise DomainError("m must exceed 1")
    quotients = sqrt_cf_period(m)
    period = len(quotients) - 1
    if period % 2 == 0:
        raise NoNegativeNormUnit(m, period)
    h0, h1, k0, k1 = 1, quotients[0], 0, 1
    for a in quotients[1:-1]:
        h0, h1 = h1, a * h1 + h0
        k0, k1 = k1, a * k1 + k0
    return PellUnit(m, h1, k1)


def unit_times_sqrt_as_alpha(e):
    """The triple of eps*sqrt(m) = m*u + t*sqrt(m), sign-normalized."""
    if (e.m * e.u) % 2 == 0 or e.t % 2:
        raise InvariantError(f"eps*sqrt(m) for {e} violates A odd, B even")
    return normalize_sign(e.m, e.m * e.u, e.t, 1)


def eval_unit_symbol(e, p):
    """(eps/p): Legendre symbol of t + u*s mod p, s a square root of m mod p."""
    if p % 4 != 1 or not _is_prime(p):
        raise DomainError(f"{p} is not a prime = 1 mod 4")
    if e.m % p == 0 or jacobi(e.m, p) != 1:
        raise DomainError(f"({e.m}/{p}) != +1")
    s = _tonelli_shanks(e.m, p)
    v = jacobi(e.t + e.u * s, p)
    if v == 0:
        raise InvariantError(f"t + u*s vanishes mod {p} for {e}")
    return v


def eval_unit_symbol_composite(e, n):
    """(eps/n) as the product of (eps/q) over the prime factors q of n."""
    qs = four_one_primes(n)
    if n > 1 and any(e.m % q == 0 for q in qs):
        raise DomainError(f"gcd({e.m}, {n}) > 1")
    sign = 1
    for q in qs:
        sign *= eval_unit_symbol(e, q)
    return sign
