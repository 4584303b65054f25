"""Triples (A, B, C) with A^2 = m(B^2 + C^2) and the symbol ((A + B*sqrt(m))/p).

For odd m the triple is normalized by A odd, B even, A + B = 1 mod 4.
Even conductors 8m' are handled through the radicand 2m' (the quadratic
subfield of a conductor-8m' cyclic quartic field is Q(sqrt(2m'))).
"""

from dataclasses import dataclass
from math import gcd

from .arith import _is_prime, _tonelli_shanks, four_one_primes, jacobi
from .errors import DomainError, InvariantError
from .twosquares import two_squares_composite


@dataclass(frozen=True)
class AlphaTriple:
    """alpha = A + B*sqrt(m) with A^2 = m(B^2 + C^2).

    ``m`` is the squarefree radicand: odd, or twice an odd modulus.
    """

    m: int
    A: int
    B: int
    C: int

    def __post_init__(self):
        if self.A * self.A != self.m * (self.B * self.B + self.C * self.C):
            raise InvariantError(f"A^2 != m(B^2 + C^2) for {self}")
        if self.C <= 0:
            raise InvariantError(f"C must be positive in {self}")
        if self.m % 2 and (self.A % 2 == 0 or self.B % 2 or (self.A + self.B) % 4 != 1):
            raise InvariantError(f"normalization A odd, B even, A+B = 1 mod 4 fails for {self}")

    @property
    def conductor(self):
        return self.m if self.m % 2 else 4 * self.m


def normalize_sign(m, A, B, C):
    """Flip the common sign of (A, B) so that A + B = 1 mod 4 (odd m)."""
    if m % 2 and (A + B) % 4 != 1:
        A, B = -A, -B
    return AlphaTriple(m, A, B, C)


def alpha_triple(m):
    """Canonical triple for the cyclic quartic field of conductor m.

    For odd m with canonical m = a^2 + b^2 this is (+-m, +-b, a).  For
    m = 8m' it is (2m', a' + b', |a' - b'|) built on radicand 2m'.
    """
    parts = four_one_primes(m, allow_eight=True)
    if m % 2 == 0:
        if len(parts) < 2:
            raise DomainError("conductor 8 alone has no odd part; need m = 8m' with m' > 1")
        rep = two_squares_composite(m // 8)
        radicand = m // 4
        return AlphaTriple(radicand, radicand, rep.a + rep.b, abs(rep.a - rep.b))
    if not parts:
        raise DomainError("m must exceed 1")
    rep = two_squares_composite(m)
    return normalize_sign(m, m, rep.b, rep.a)


def alpha_from_rep(m, a, b):
    """Triple built from an arbitrary primitive m = a^2 + b^2 (a odd, b even, any signs)."""
    if a * a + b * b != m or a % 2 == 0 or b % 2:
        raise DomainError(f"({a}, {b}) is not a valid representation of {m}")
    return normalize_sign(m, m, b, abs(a))


def eval_alpha_symbol(t, p):
    """Quadratic residue symbol of alpha = A + B*sqrt(m) at a prime above p.

    sqrt(m) is replaced by a root r of m mod p; the common factor
    g = gcd(A, B) is split off so that primes dividing g do not produce a
    spurious zero, and the root with a nonvanishing value is used.
    """
    if p % 4 != 1 or not _is_prime(p):
        raise DomainError(f"{p} is not a prime = 1 mod 4")
    if t.m % p == 0:
        raise DomainError(f"{p} divides {t.m}")
    if jacobi(t.m, p) != 1:
        raise DomainError(f"({t.m}/{p}) != +1")
    g = gcd(t.A, t.B)
    if g % p == 0:
        raise DomainError(f"{p} divides gcd(A, B) = {g}")
    a1, b1 = t.A // g, t.B // g
    s = _tonelli_shanks(t.m, p)
    for r in (s, p - s):
        v = jacobi(a1 + b1 * r, p)
        if v:
            return jacobi(g, p) * v
    raise InvariantError(f"alpha vanishes at both primes above {p} for {t}")
