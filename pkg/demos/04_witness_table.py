"""Check the transition matrices that move eta and rho onto their families."""

import random

from orbitclosure import QQ
from orbitclosure.paperdata import base_vector, default_data, table_rows
from orbitclosure.structconst import act, mat_det

data = default_data()
rng = random.Random(7)


def sample(w):
    # retry until the row's condition holds; the solve map forces equalities
    while True:
        P = {k: QQ(rng.randint(-9, 9)) for k in w.params}
        try:
            P = w.predicate.apply_solve(P)
        except ZeroDivisionError:
            continue
        if w.predicate.holds(P):
            return P


for w in data.all_witnesses():
    P = sample(w)
    g = w.matrix(P)
    image = act(base_vector(w.base), g)
    ok = image == data.family(w.target).at(P) and mat_det(g) == w.expected_det(P, g)
    det = w.det_text or "computed"
    print(f"{w.name:7} [{w.predicate}]  det = {det:22}  {'ok' if ok else 'MISMATCH'}")

print()
for row in table_rows():
    if row.is_closure:
        print(f"{row.id}: {row.condition} -> lies in the closure of O(eta), no matrix")
