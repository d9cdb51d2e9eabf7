"""Structure vectors of 3-dimensional Lie algebras and the change-of-basis action."""

from orbitclosure import SquareMatrix, StructureVector, act, is_lie
from orbitclosure.paperdata import base_vector, family_eval
from orbitclosure.structconst import index_of, mat_det, minors, reduce3

# Coordinate r of a structure vector holds the coefficient of b_k in [b_i, b_j].
print("index of (2,3,1) for n=3:", index_of(2, 3, 1, 3))

eta = base_vector("eta")   # Heisenberg algebra: [b2, b3] = b1
rho = base_vector("rho")   # [b1, b2] = b1, b3 central
print("eta support:", {k: str(v) for k, v in eta.support().items()})
print("rho support:", {k: str(v) for k, v in rho.support().items()})
print("both are Lie:", is_lie(eta), is_lie(rho))

# An antisymmetric bracket that breaks the Jacobi identity.
bad = StructureVector.from_brackets({(1, 2): {3: 1}, (1, 3): {1: 1}, (2, 3): {1: 1}})
print("non-Lie example is Lie?", is_lie(bad))

# Move eta to a new basis.  The columns of g are the new basis vectors.
g = SquareMatrix([[2, 1, 0], [0, 1, 3], [1, 0, 1]])
moved = act(eta, g)
print("eta . g, reduced coordinates:", [str(c) for c in reduce3(moved)])

# The same vector comes out of the four-parameter family eta' built from
# the first-row minors of g and the inverse determinant.
M = minors(g)
via_minors = family_eval("eta_prime", M[0][0], M[0][1], M[0][2], mat_det(g).inverse())
print("matches the minor parametrization:", moved == via_minors)

# Right action: acting by g then h equals acting by gh.
h = SquareMatrix([[1, 0, 1], [1, 1, 0], [0, 0, 1]])
print("(eta.g).h == eta.(gh):", act(act(eta, g), h) == act(eta, g @ h))
