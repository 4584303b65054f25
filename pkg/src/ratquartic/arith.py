"""Exact elementary number theory on Python integers.

Everything here is a pure function of its arguments.  Python integers are
arbitrary precision, so products of in-range values never overflow.
"""

from functools import lru_cache
from math import gcd, isqrt

from .errors import DomainError

MAX_INPUT = 2**63 - 1

# Deterministic for every n < 3.3 * 10**24, which covers the supported range.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_TRIAL_LIMIT = 10**6


def _check_range(n):
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"expected int, got {type(n).__name__}")
    if n < 1 or n > MAX_INPUT:
        raise DomainError(f"{n} outside supported range [1, 2**63 - 1]")


def is_prime(n):
    """Deterministic Miller-Rabin test for 1 <= n <= 2**63 - 1."""
    _check_range(n)
    return _is_prime(n)


def _is_prime(n):
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=None)
def _small_primes():
    return tuple(primes_up_to(isqrt(_TRIAL_LIMIT)))


def primes_up_to(limit):
    """All primes p <= limit (sieve of Eratosthenes)."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def _pollard_brent(n):
    # Fixed (c, y0) schedule keeps the factorization reproducible.
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise RuntimeError(f"Pollard rho failed on {n}")


def _split(n, out):
    if n == 1:
        return
    if _is_prime(n):
        out.append(n)
        return
    r = isqrt(n)
    if r * r == n:
        _split(r, out)
        _split(r, out)
        return
    d = _pollard_brent(n)
    _split(d, out)
    _split(n // d, out)


def factorize(n):
    """Prime factorization of n as a list of (prime, exponent), primes ascending.

    Trial division by primes below 1000 clears everything up to 10**6;
    Pollard-Brent handles any larger cofactor.
    """
    _check_range(n)
    counts = {}
    for q in _small_primes():
        if q * q > n:
            break
        while n % q == 0:
            counts[q] = counts.get(q, 0) + 1
            n //= q
    if n > 1:
        big = []
        _split(n, big)
        for q in big:
            counts[q] = counts.get(q, 0) + 1
    return sorted(counts.items())


def jacobi(a, n):
    """Jacobi symbol (a/n) for odd n >= 1; returns -1, 0 or +1."""
    if n < 1 or n % 2 == 0:
        raise DomainError(f"Jacobi symbol needs odd positive n, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def mod_pow(a, e, n):
    """a**e mod n, reduced into [0, n)."""
    if n < 1:
        raise DomainError(f"modulus must be positive, got {n}")
    if e < 0:
        raise DomainError(f"exponent must be nonnegative, got {e}")
    return pow(a, e, n)


@lru_cache(maxsize=4096)
def least_nonresidue(p):
    """Smallest quadratic nonresidue modulo the odd prime p."""
    z = 2
    while jacobi(z, p) != -1:
        z += 1
    return z


def _tonelli_shanks(a, p):
    a %= p
    if p % 4 == 3:
        s = pow(a, (p + 1) // 4, p)
    else:
        q, e = p - 1, 0
        while q % 2 == 0:
            q //= 2
            e += 1
        c = pow(least_nonresidue(p), q, p)
        s = pow(a, (q + 1) // 2, p)
        t = pow(a, q, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (e - i - 1), p)
            s = s * b % p
            c = b * b % p
            t = t * c % p
            e = i
    return min(s, p - s)


def sqrt_mod_prime(a, p):
    """The smaller square root of a modulo the odd prime p.

    Raises DomainError unless a is a nonzero quadratic residue mod p.
    """
    if p < 3 or p % 2 == 0 or not _is_prime(p):
        raise DomainError(f"{p} is not an odd prime")
    j = jacobi(a, p)
    if j != 1:
        what = "divisible by" if j == 0 else "a nonresidue modulo"
        raise DomainError(f"{a} is {what} {p}")
    return _tonelli_shanks(a, p)


# -- moduli built from primes = 1 mod 4 ---------------------------------------


def four_one_primes(m, allow_eight=False):
    """Prime factors of a squarefree product of primes = 1 mod 4.

    With allow_eight, m may also carry a 2-part of exactly 8; the returned
    list then starts with 8.  Raises DomainError for any other shape.
    """
    if not isinstance(m, int) or m < 1:
        raise DomainError(f"modulus must be a positive integer, got {m!r}")
    parts = []
    if m % 2 == 0:
        if not allow_eight:
            raise DomainError(f"{m} is even")
        if m % 8 != 0 or m % 16 == 0:
            raise DomainError(f"2-part of {m} is not exactly 8")
        parts.append(8)
        m //= 8
    for q, e in factorize(m):
        if e > 1:
            raise DomainError(f"{m} is not squarefree ({q}^{e})")
        if q % 4 != 1:
            raise DomainError(f"prime factor {q} of {m} is not 1 mod 4")
        parts.append(q)
    return parts


def is_four_one_modulus(m, allow_eight=False):
    try:
        four_one_primes(m, allow_eight)
    except DomainError:
        return False
    return True


def four_one_moduli(limit, min_factors=1):
    """Ascending list of squarefree m <= limit whose primes are all 1 mod 4."""
    primes = [p for p in primes_up_to(limit) if p % 4 == 1]
    found = []

    def extend(prod, start, count):
        if count >= min_factors and prod > 1:
            found.append(prod)
        for i in range(start, len(primes)):
            nxt = prod * primes[i]
            if nxt > limit:
                break
            extend(nxt, i + 1, count + 1)

    extend(1, 0, 0)
    return sorted(found)
