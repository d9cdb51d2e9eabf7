"""Orbits over small prime fields, enumerated by brute force over GL(3, p)."""

import numpy as np

from orbitclosure import GF, orbit
from orbitclosure.paperdata import base_vector
from orbitclosure.structconst import gl_array, gl_order, vectors_to_csv

for p in (2, 3):
    mats, invs = gl_array(3, p)
    print(f"GL(3, {p}) has {len(mats)} elements (formula: {gl_order(3, p)})")
    # every stored inverse really is one
    assert (np.einsum("nij,njk->nik", mats, invs) % p == np.eye(3, dtype=np.int64)).all()

    for name in ("zero", "eta", "rho"):
        size = len(orbit(base_vector(name, GF(p))))
        print(f"  |O({name})| over F_{p} = {size}")

print("GL(3, 5) would have", gl_order(3, 5), "elements")

# The orbit of eta over F_2 in the 9 free coordinates, as CSV.
print(vectors_to_csv(orbit(base_vector("eta", GF(2)))))
