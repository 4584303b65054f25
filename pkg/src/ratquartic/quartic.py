"""Rational quartic residue symbols (a/p)_4, (p/2)_4 and (a/m)_4."""

from .arith import _is_prime, four_one_primes, jacobi
from .errors import DomainError


def _quartic_prime(a, p):
    r = pow(a, (p - 1) // 4, p)
    if r == 1:
        return 1
    if r == p - 1:
        return -1
    raise DomainError(f"({a}/{p})_4 undefined: {a} is not a quadratic residue mod {p}")


def quartic_symbol_prime(a, p):
    """(a/p)_4 for a prime p = 1 mod 4 and a quadratic residue a mod p.

    Returns +1 if a is a fourth power modulo p and -1 otherwise.
    """
    if p % 4 != 1 or not _is_prime(p):
        raise DomainError(f"{p} is not a prime = 1 mod 4")
    if jacobi(a, p) != 1:
        raise DomainError(f"({a}/{p})_4 undefined: ({a}/{p}) = {jacobi(a, p)}")
    return _quartic_prime(a, p)


def quartic_symbol_two(p):
    """(p/2)_4 = (-1)^((p-1)/8); defined for p = 1 mod 8.

    Only the congruence class matters, so composite p = 1 mod 8 is accepted
    as well (this is the 2-part of a composite quartic symbol).
    """
    if p % 8 != 1:
        raise DomainError(f"(p/2)_4 needs p = 1 mod 8, got {p}")
    return -1 if (p - 1) // 8 % 2 else 1


def quartic_symbol_composite(a, m):
    """(a/m)_4 for m a squarefree product of primes = 1 mod 4, or 8 times one.

    Multiplicative in m; the factor 8 contributes (a/2)_4 and needs a = 1 mod 8.
    """
    sign = 1
    for q in four_one_primes(m, allow_eight=True):
        if q == 8:
            sign *= quartic_symbol_two(a)
            continue
        if jacobi(a, q) != 1:
            raise DomainError(f"({a}/{m})_4 undefined: ({a}/{q}) = {jacobi(a, q)}")
        sign *= _quartic_prime(a, q)
    return sign
