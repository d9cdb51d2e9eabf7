"""Exact scalars and sparse polynomials.

Run with ``python demos/01_exact_arithmetic.py``.
"""

from fractions import Fraction

from orbitclosure import GF, QQ, MultiPoly, VarTable

# Prime fields reduce on construction; rationals stay exact.
F5 = GF(5)
print("3 + 4 in F_5 =", F5(3) + F5(4))
print("2^-1 in F_5  =", F5(2).inverse())
print("1/2 * 2/3    =", QQ(Fraction(1, 2)) * QQ(Fraction(2, 3)))

# Polynomials are dicts from exponent tuples to nonzero coefficients,
# so two polynomials are equal exactly when their term maps agree.
vt = VarTable(["X", "Y"])
X, Y = MultiPoly.var(vt, "X"), MultiPoly.var(vt, "Y")
print("(X+Y)(X-Y)   =", (X + Y) * (X - Y))
print("(X+Y)^2 - X^2 - 2XY - Y^2 is zero:", ((X + Y) ** 2 - X**2 - 2 * X * Y - Y**2).is_zero())

# Over F_2 the cross term of (X+Y)^2 disappears.
X2, Y2 = MultiPoly.var(vt, "X", GF(2)), MultiPoly.var(vt, "Y", GF(2))
print("over F_2, (X+Y)^2 =", (X2 + Y2) ** 2)

# X^2 + X vanishes at every point of F_2 but is not the zero polynomial.
f = X2**2 + X2
print("X^2 + X over F_2: values", [str(f.eval({"X": a, "Y": 0})) for a in range(2)], "| zero polynomial?", f.is_zero())
