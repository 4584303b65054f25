"""
C4-splittings of discriminants
==============================

A discriminant d that is a sum of two squares factors into the prime
discriminants 8 and p = 1 mod 4.  A coprime split d = d1*d2 is C4 when each
part is a square modulo the primes of the other; for C4 splits we compare
(d1/d2)_4 with (d2/d1)_4.
"""

from ratquartic import explore

for d in (65, 145, 793, 1105, 8 * 17, 5 * 29 * 101):
    report = explore(d)
    print(f"d = {d}: c4 = {report.c4_count}, equal symbols = {report.real_count}")
    for s in report.splits:
        print(f"    {s.d1:>5} * {s.d2:<6} C4={s.is_c4!s:5}  scholz_equal={s.scholz_equal}")
