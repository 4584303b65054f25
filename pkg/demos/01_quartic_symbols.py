"""
Quartic residue symbols
=======================

The rational quartic symbol (a/p)_4 is defined for a prime p = 1 mod 4 and
a quadratic residue a: it is +1 exactly when a is a fourth power mod p.
"""

from ratquartic import jacobi, quartic_symbol_composite, quartic_symbol_prime, quartic_symbol_two
from ratquartic.oracles import fourth_powers_bruteforce

# 5 is a square mod 29 (11^2 = 121 = 4*29 + 5) but not a fourth power.
print("(5/29) =", jacobi(5, 29))
print("(5/29)_4 =", quartic_symbol_prime(5, 29))
print("5 among fourth powers mod 29?", 5 in fourth_powers_bruteforce(29))

# Asking for the quartic symbol of a nonresidue is an error, not a silent 0.
try:
    quartic_symbol_prime(2, 29)
except ValueError as exc:
    print("error:", exc)

# Composite denominators multiply over prime factors.
print("(61/65)_4 =", quartic_symbol_composite(61, 65))
print("(61/5)_4 * (61/13)_4 =", quartic_symbol_prime(61, 5) * quartic_symbol_prime(61, 13))

# At 2 the symbol is (p/2)_4 = (-1)^((p-1)/8) for p = 1 mod 8.
for p in (17, 41, 73, 89, 97):
    print(f"({p}/2)_4 = {quartic_symbol_two(p):+d}")

# A modulus 8m' carries that 2-part as an extra factor.
print("(41/40)_4 =", quartic_symbol_composite(41, 40))
