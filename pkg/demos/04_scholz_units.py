"""
Scholz's law with units of norm -1
==================================

For eps_m = t + u*sqrt(m) of norm -1 and admissible n,
(eps_m/n) = (m/n)_4 (n/m)_4, and the symbol is symmetric in m and n.
"""

from ratquartic import NoNegativeNormUnit, eval_unit_symbol, fundamental_negative_unit
from ratquartic.laws import unit_splits, verify_furuta, verify_scholz, verify_scholz_mutual
from ratquartic.pell import sqrt_cf_period

for m in (5, 13, 29, 61, 65):
    e = fundamental_negative_unit(m)
    print(f"eps_{m} = {e.t} + {e.u}*sqrt({m})")

# 205 = 5 * 41 has an even continued fraction period and no such unit.
print("period of sqrt(205):", len(sqrt_cf_period(205)) - 1)
try:
    fundamental_negative_unit(205)
except NoNegativeNormUnit as exc:
    print("error:", exc)

print("(eps_5/61) =", eval_unit_symbol(fundamental_negative_unit(5), 61))
print(verify_scholz(5, 61).to_json())
print(verify_scholz_mutual(5, 29).to_json())

# Furuta: eps_65 behaves like eps_5 * eps_13; the split 65 = 5 * 13 adds a side.
print(verify_furuta(65, 61, tuple(unit_splits(65))).to_json())
