"""Brute-force reference implementations.

These deliberately avoid the fast code paths (no Euler criterion, no
Tonelli-Shanks, no continued fractions) so they can cross-check them.
They are slow by design and refuse inputs beyond their scale limits.
"""

from functools import lru_cache
from math import isqrt

from .errors import DomainError

QUARTIC_LIMIT = 10**5
SQRT_LIMIT = 10**4
PELL_LIMIT = 10**6


@lru_cache(maxsize=256)
def fourth_powers_bruteforce(p):
    """The set {x^4 mod p : 1 <= x < p} by direct enumeration."""
    if p >= QUARTIC_LIMIT:
        raise DomainError(f"oracle scale exceeded: p = {p} >= {QUARTIC_LIMIT}")
    return frozenset(pow(x, 4, p) for x in range(1, p))


@lru_cache(maxsize=256)
def squares_bruteforce(p):
    """Map residue -> sorted tuple of all its square roots mod p."""
    if p >= SQRT_LIMIT:
        raise DomainError(f"oracle scale exceeded: p = {p} >= {SQRT_LIMIT}")
    roots = {}
    for x in range(p):
        roots.setdefault(x * x % p, []).append(x)
    return {r: tuple(xs) for r, xs in roots.items()}


def quartic_residue_bruteforce(a, p):
    """True iff x^4 = a (mod p) for some 1 <= x < p."""
    if a % p == 0:
        raise DomainError(f"{p} divides {a}")
    return a % p in fourth_powers_bruteforce(p)


def sqrt_bruteforce(a, p):
    """Set of all s in [0, p) with s^2 = a (mod p)."""
    return set(squares_bruteforce(p).get(a % p, ()))


def pell_bruteforce(m, u_max):
    """Smallest (t, u) with u <= u_max and t^2 = m*u^2 - 1, or None."""
    if u_max > PELL_LIMIT:
        raise DomainError(f"oracle scale exceeded: u_max = {u_max} > {PELL_LIMIT}")
    for u in range(1, u_max + 1):
        x = m * u * u - 1
        t = isqrt(x)
        if t * t == x:
            return t, u
    return None


def legendre_bruteforce(a, p):
    """Legendre symbol from the explicit set of squares mod p (p < 10**4)."""
    if a % p == 0:
        return 0
    return 1 if a % p in squares_bruteforce(p) else -1


def quartic_symbol_bruteforce(a, parts):
    """(a/m)_4 over the prime parts of m, via fourth-power enumeration.

    ``parts`` lists odd primes and optionally 8; the 2-part uses the
    defining formula (-1)^((a-1)/8), which has nothing to enumerate.
    """
    sign = 1
    for q in parts:
        if q == 8:
            if a % 8 != 1:
                raise DomainError(f"(a/2)_4 needs a = 1 mod 8, got {a}")
            sign *= -1 if (a - 1) // 8 % 2 else 1
        else:
            if a % q == 0 or (a % q) not in _squares_set(q):
                raise DomainError(f"({a}/{q}) != +1")
            sign *= 1 if quartic_residue_bruteforce(a, q) else -1
    return sign


@lru_cache(maxsize=256)
def _squares_set(q):
    if q >= QUARTIC_LIMIT:
        raise DomainError(f"oracle scale exceeded: p = {q} >= {QUARTIC_LIMIT}")
    return frozenset(x * x % q for x in range(1, q))


def quadratic_symbol_bruteforce(a, parts):
    """Jacobi symbol (a/prod(parts)) as a product of brute-force Legendre symbols."""
    sign = 1
    for q in parts:
        sign *= legendre_bruteforce(a, q)
    return sign


def algebraic_symbol_bruteforce(x, y, m, p):
    """Symbol of x + y*sqrt(m) at a prime above p, by explicit root enumeration.

    Takes the first square root of m mod p at which x + y*r is nonzero.
    """
    for r in sorted(sqrt_bruteforce(m, p)):
        v = legendre_bruteforce(x + y * r, p)
        if v:
            return v
    raise DomainError(f"no usable root of {m} mod {p}")
