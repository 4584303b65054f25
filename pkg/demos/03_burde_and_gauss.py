"""
Burde's law and the biquadratic character of 2
===============================================

With m = a^2 + b^2 and n = c^2 + d^2 (ac odd) the product
(m/n)_4 (n/m)_4 equals the quadratic symbols ((ac - bd)/m) and ((ac - bd)/n).
"""

from ratquartic.laws import gauss_coordinates, verify_burde, verify_gauss2
from ratquartic.twosquares import all_two_squares

print(verify_burde(13, 17).to_json())

# The identity does not depend on which representation is used.
m, n = 5 * 29, 109 * 149
for a, b in [(r.a, r.b) for r in all_two_squares(m)]:
    for c, d in [(r.a, r.b) for r in all_two_squares(n)]:
        r = verify_burde(m, n, (a, -b), (c, d))
        print((a, -b), (c, d), r.sides if not r.skipped else r.skipped_reason)

# Gauss: p = a^2 + 16 b^2 with a = 1 mod 4 gives (2/p)_4 = (-1)^b.
for p in (17, 73, 89, 113, 137):
    a, b = gauss_coordinates(p)
    print(f"{p} = ({a})^2 + 16*{b}^2  sides {verify_gauss2(p).sides}")
