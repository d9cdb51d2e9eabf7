"""Point counts and set equalities over F_2 and F_3."""

from orbitclosure import GF
from orbitclosure.paperdata import base_vector, family, system
from orbitclosure.verifier import enumerate_variety, family_image, orbit_points

for p in (2, 3):
    F = GF(p)
    VS = set(enumerate_variety(system("S"), p).points)
    VT = set(enumerate_variety(system("T"), p).points)
    O_eta = set(orbit_points(base_vector("eta", F), p).points)
    O_rho = set(orbit_points(base_vector("rho", F), p).points)
    zero = {(0,) * 9}
    image = set(family_image(family("eta_prime"), p).points)

    print(f"F_{p}: |V(S)| = {len(VS)}, |V(T)| = {len(VT)}, |O(eta)| = {len(O_eta)}, |O(rho)| = {len(O_rho)}")
    print("   V(S) == O(eta) u {0}          ", VS == O_eta | zero)
    print("   V(S) == image of eta'         ", VS == image)
    print("   V(T) == O(rho) u O(eta) u {0} ", VT == O_rho | O_eta | zero)

# Over a finite field every finite set is closed, so these equalities say
# nothing topological on their own; they are consistency checks.
