"""
The composite quartic law
=========================

For m a squarefree product of primes = 1 mod 4, a triple A^2 = m(B^2 + C^2)
with A odd, B even and A + B = 1 mod 4 gives alpha = A + B*sqrt(m).  The
quadratic symbol of alpha at an admissible prime p equals (p/m)_4.
"""

from ratquartic import alpha_triple, eval_alpha_symbol, quartic_symbol_composite, two_squares_composite
from ratquartic.laws import verify_ec
from ratquartic.oracles import algebraic_symbol_bruteforce

m = 65
rep = two_squares_composite(m)
t = alpha_triple(m)
print(f"{m} = {rep.a}^2 + {rep.b}^2  ->  A, B, C = {t.A}, {t.B}, {t.C}")
print("A^2 == m(B^2 + C^2):", t.A**2 == m * (t.B**2 + t.C**2))

# p = 61 splits in Q(sqrt(5)) and Q(sqrt(13)), so it is admissible.
p = 61
print("alpha symbol at 61:", eval_alpha_symbol(t, p))
print("(61/65)_4:", quartic_symbol_composite(p, m))
print("by root enumeration:", algebraic_symbol_bruteforce(t.A, t.B, m, p))

# The law as a report; inadmissible primes are skipped, not counted.
print(verify_ec(65, 61).to_json())
print(verify_ec(5, 13).to_json())

# Conductor 8m': the triple lives over the radicand 2m'.
t8 = alpha_triple(8 * 5)
print("alpha for conductor 40:", t8)
print(verify_ec(40, 41).to_json())
