"""
KLR algebras and cyclotomic quotients
=====================================

Multiply strand diagrams in normal form, act on polynomials and count
graded dimensions of small cyclotomic quotients.
"""

from skewhowe import KLRElement, PolyRepVector, poly_rep_apply, cyclotomic_graded_dim, weight_multiplicity
from skewhowe.klr import klr_algebra

R = klr_algebra(2)
t = KLRElement.crossing(R, 1, (1, 1))
x1, x2 = KLRElement.dot(R, 1, (1, 1)), KLRElement.dot(R, 2, (1, 1))
print("tau x2 - x1 tau =", t * x2 - x1 * t)
print("tau^2 (equal colors) =", t * t)

# crossing of different adjacent colors squares to a linear polynomial
u = KLRElement.crossing(R, 1, (1, 2))
v = KLRElement.crossing(R, 1, (2, 1))
print("tau^2 e(1,2) =", v * u)

# divided difference in the polynomial representation
f = PolyRepVector({(1, 1): {(2, 0): 1}})
print("tau acting on x1^2:", dict(poly_rep_apply(t, f)))

for lam, beta in (((1,), {1: 1}), ((2,), {1: 1}), ((2,), {1: 2}), ((1,), {1: 1, 2: 1})):
    res = cyclotomic_graded_dim(lam, beta)
    dims = {d: v for d, v in res["dims"].items() if v}
    print("lambda=%s beta=%s  total %d  graded %s" % (lam, beta, res["total"], dims))

print("weight multiplicity of (2,0) in the module for 2 omega_1:", weight_multiplicity((2, 0), {1: 2}))
