"""Exact arithmetic in the quantum torus.

Coefficients are integer Laurent polynomials in v; elements are sparse
maps from exponent vectors to coefficients. The twisted product picks
up a power of v from the skew form, so variables v-commute.
"""
from qcluster import NotDivisible, QTElem, VCoeff, exact_divide, twisted_mul

LAM = ((0, -1), (1, 0))

x1 = QTElem.monomial((1, 0))
x2 = QTElem.monomial((0, 1))

print("commutative product:  x1 . x2 =", x1 * x2)
print("twisted product:      x1 * x2 =", twisted_mul(x1, x2, LAM))
print("reversed order:       x2 * x1 =", twisted_mul(x2, x1, LAM))
print()

# a three-term element and its bar image (v -> 1/v on coefficients)
z = QTElem(2, {(0, 0): VCoeff({1: 1}), (-1, 0): VCoeff({-1: 2}), (0, -1): VCoeff.one()})
print("z        =", z)
print("bar(z)   =", z.bar())
print()

# exact division inverts the twisted product when a quotient exists
num = twisted_mul(z, x1, LAM)
print("z * x1   =", num)
print("back     =", exact_divide(num, x1, LAM))

try:
    exact_divide(x1 + QTElem.one(2), x1 - QTElem.one(2), LAM)
except NotDivisible as exc:
    print("x1 + 1 over x1 - 1:", exc)
