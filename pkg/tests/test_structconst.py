import io
import itertools
import random
from fractions import Fraction

import numpy as np
import pytest
import sympy

from orbitclosure.exactfield import FieldMismatchError, PrimeField
from orbitclosure.paperdata import base_vector, family
from orbitclosure.structconst import (
    BudgetExceededError,
    SingularMatrixError,
    SquareMatrix,
    StructureVector,
    act,
    act_array,
    gl_array,
    gl_enumerate,
    gl_order,
    index_of,
    is_lie,
    jacobi_generators,
    lift3,
    mat_det,
    mat_inv,
    minors,
    orbit,
    reduce3,
    triple_of,
    vectors_to_csv,
)

F2, F3 = PrimeField(2), PrimeField(3)


def test_index_examples():
    assert index_of(1, 1, 1, 3) == 1
    assert triple_of(4, 2) == (1, 2, 2)
    assert triple_of(5, 2) == (2, 1, 1)
    assert index_of(2, 3, 1, 3) == 16
    assert index_of(3, 2, 1, 3) == 22


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_index_round_trip_exhaustive(n):
    rng = range(1, n + 1)
    seen = set()
    for i, j, k in itertools.product(rng, repeat=3):
        r = index_of(i, j, k, n)
        assert 1 <= r <= n**3
        assert triple_of(r, n) == (i, j, k)
        seen.add(r)
    assert len(seen) == n**3


@pytest.mark.parametrize("args", [(0, 1, 1, 3), (1, 4, 1, 3), (1, 1, 1, 0)])
def test_index_out_of_range(args):
    with pytest.raises(IndexError):
        index_of(*args)


@pytest.mark.parametrize("r", [0, 28, -1])
def test_triple_out_of_range(r):
    with pytest.raises(IndexError):
        triple_of(r, 3)


def test_jacobi_family_sizes():
    assert jacobi_generators(2).families == (4, 8, 16)
    assert jacobi_generators(3).families == (9, 27, 81)
    with pytest.raises(ValueError):
        jacobi_generators(1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_zero_vanishes_on_jacobi_generators(n):
    assert jacobi_generators(n).vanishes_at(StructureVector.zero(n))
    assert is_lie(StructureVector.zero(n))


def test_is_lie_examples():
    assert is_lie(base_vector("eta"))
    assert is_lie(base_vector("rho"))
    assert jacobi_generators(3).vanishes_at(base_vector("eta"))
    v = [0] * 27
    v[0] = 1
    assert not is_lie(StructureVector.from_values(v))


def test_is_lie_rejects_a_non_jacobi_bracket():
    # antisymmetric but [b1,b2]=b3, [b1,b3]=b1, [b2,b3]=b1 fails Jacobi
    v = StructureVector.from_brackets({(1, 2): {3: 1}, (1, 3): {1: 1}, (2, 3): {1: 1}})
    assert not is_lie(v)


# -- matrices, with sympy as the oracle ----------------------------------------

def _sym(g):
    return sympy.Matrix([[sympy.Rational(c.value.numerator, c.value.denominator) for c in row] for row in g.rows])


def _random_matrix(rng, n=3, lo=-5, hi=5):
    return SquareMatrix([[Fraction(rng.randint(lo, hi), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)])


def test_matrix_examples():
    I = SquareMatrix.identity(3)
    assert mat_det(I) == 1
    M = minors(I)
    for i in range(3):
        for j in range(3):
            assert M[i][j] == (1 if i == j else 0)
    kappa = Fraction(2, 7)
    g3 = SquareMatrix([[0, 0, 1 / kappa], [1, 0, 0], [0, 1, 0]])
    assert mat_det(g3) == 1 / kappa
    theta, k = Fraction(3), Fraction(5)
    row = SquareMatrix([[-theta / k, 0, 1], [0, -k, 0], [1, 0, 0]])
    assert mat_det(row) == k


def test_singular_matrix():
    g = SquareMatrix([[1, 2, 3], [2, 4, 6], [0, 0, 1]])
    assert mat_det(g) == 0
    with pytest.raises(SingularMatrixError):
        mat_inv(g)
    with pytest.raises(SingularMatrixError):
        act(base_vector("eta"), g)


def test_det_inverse_minors_against_sympy():
    rng = random.Random(1)
    for _ in range(200):
        g = _random_matrix(rng)
        S = _sym(g)
        assert mat_det(g) == S.det()
        M = minors(g)
        for i in range(3):
            for j in range(3):
                assert M[i][j] == S.minor(i, j)
        if S.det() != 0:
            inv = mat_inv(g)
            assert _sym(inv) == S.inv()
            assert g @ inv == SquareMatrix.identity(3)


def test_det_mod_p_against_leibniz():
    rng = random.Random(2)
    F = PrimeField(7)
    for _ in range(300):
        rows = [[rng.randrange(7) for _ in range(3)] for _ in range(3)]
        g = SquareMatrix(rows, F)
        want = sympy.Matrix(rows).det() % 7
        assert mat_det(g) == want


# -- the action --------------------------------------------------------------

def _act_by_definition(v, g):
    """Rewrite the brackets of the new basis b'_j = sum_i g_ij b_i in that basis."""
    n = v.n
    G = _sym(g)
    Ginv = G.inv()
    lam = lambda p, q, r: sympy.Rational(v[p + 1, q + 1, r + 1].value)  # noqa: E731
    out = []
    for i, j in itertools.product(range(n), repeat=2):
        old = sympy.zeros(n, 1)
        for p, q, r in itertools.product(range(n), repeat=3):
            old[r] += G[p, i] * G[q, j] * lam(p, q, r)
        new = Ginv * old
        out.append(list(new))
    coords = [out[i * n + j][k] for i in range(n) for j in range(n) for k in range(n)]
    return tuple(Fraction(int(c.p), int(c.q)) for c in coords)


def _random_lie_vector(rng):
    f = rng.choice(["eta_prime", "rho_prime", "rho1", "rho2"])
    fam = family(f)
    return fam(*(Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(fam.arity)))


def test_act_matches_change_of_basis_definition():
    rng = random.Random(4)
    done = 0
    while done < 60:
        g = _random_matrix(rng)
        if mat_det(g) == 0:
            continue
        v = _random_lie_vector(rng) if done % 2 else StructureVector.from_values(
            [rng.randint(-2, 2) for _ in range(27)])
        assert tuple(c.value for c in act(v, g).coords) == _act_by_definition(v, g)
        done += 1


def test_act_examples():
    eta = base_vector("eta")
    assert act(eta, SquareMatrix.identity(3)) == eta
    g3 = SquareMatrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    image = act(eta, g3)
    assert image.support() == {(1, 2, 3): 1, (2, 1, 3): -1}
    assert image == family("eta3")(1)
    row = SquareMatrix([[0, 0, 1], [0, -1, 0], [1, 0, 0]])
    assert act(base_vector("rho"), row) == family("rho3")(0, 0, 1)


def test_act_field_mismatch():
    with pytest.raises(FieldMismatchError):
        act(base_vector("eta"), SquareMatrix.identity(3, F3))


def test_right_action_law_and_lie_invariance():
    rng = random.Random(6)
    done = 0
    while done < 40:
        g, h = _random_matrix(rng), _random_matrix(rng)
        if mat_det(g) == 0 or mat_det(h) == 0:
            continue
        v = _random_lie_vector(rng)
        assert act(act(v, g), h) == act(v, g @ h)
        assert is_lie(act(v, g))
        w = StructureVector.from_brackets({(1, 2): {3: 1}, (1, 3): {1: 1}, (2, 3): {1: 1}})
        assert not is_lie(act(w, g))
        done += 1


# -- reduced chart -----------------------------------------------------------

def test_reduce_examples():
    eta, rho = base_vector("eta"), base_vector("rho")
    assert reduce3(eta) == (0, 0, 0, 0, 0, 0, 1, 0, 0)
    assert reduce3(rho) == (1, 0, 0, 0, 0, 0, 0, 0, 0)
    assert lift3(reduce3(eta)) == eta
    v = [0] * 27
    v[0] = 1
    with pytest.raises(ValueError):
        reduce3(StructureVector.from_values(v))


def test_reduce_lift_round_trip_over_F2():
    for rv in itertools.product(range(2), repeat=9):
        v = lift3([F2(x) for x in rv])
        assert tuple(c.value for c in reduce3(v)) == rv
        assert lift3(reduce3(v)) == v


# -- enumeration -------------------------------------------------------------

def _gl_count_bruteforce(n, p):
    count = 0
    for entries in itertools.product(range(p), repeat=n * n):
        if sympy.Matrix(n, n, entries).det() % p:
            count += 1
    return count


@pytest.mark.parametrize("n,p,expected", [(3, 2, 168), (3, 3, 11232), (2, 2, 6)])
def test_gl_counts(n, p, expected):
    mats = list(gl_enumerate(n, p))
    assert len(mats) == expected == gl_order(n, p)
    assert len(set(mats)) == expected
    assert all(mat_det(m) != 0 for m in mats)


@pytest.mark.parametrize("n,p", [(2, 2), (2, 3), (3, 2)])
def test_gl_counts_against_bruteforce(n, p):
    assert gl_order(n, p) == _gl_count_bruteforce(n, p)


def test_gl_inverse_arrays():
    mats, invs = gl_array(3, 3)
    prod = np.einsum("nij,njk->nik", mats, invs) % 3
    assert (prod == np.eye(3, dtype=np.int64)).all()


def test_budget_exceeded():
    with pytest.raises(BudgetExceededError):
        next(gl_enumerate(3, 5, budget=1000))
    with pytest.raises(BudgetExceededError):
        orbit(base_vector("eta", F3), budget=10)


def test_orbit_of_zero_is_a_point():
    for p in (2, 3):
        z = StructureVector.zero(3, PrimeField(p))
        assert orbit(z) == {z}


@pytest.mark.parametrize("name,p", [("eta", 2), ("rho", 2), ("eta", 3)])
def test_orbit_matches_scalar_action(name, p):
    F = PrimeField(p)
    v = base_vector(name, F)
    want = {act(v, g) for g in gl_enumerate(3, p)}
    got = orbit(v)
    assert got == want
    assert v in got
    assert all(is_lie(w) for w in got)


def test_orbit_sizes():
    assert len(orbit(base_vector("eta", F2))) == 7
    assert len(orbit(base_vector("eta", F3))) == 26
    assert len(orbit(base_vector("rho", F3))) == 312


def test_orbit_needs_prime_field():
    with pytest.raises(ValueError):
        orbit(base_vector("eta"))


def test_act_array_matches_scalar_action():
    mats, invs = gl_array(3, 2)
    v = base_vector("rho", F2)
    rows = act_array(np.array(v.to_ints()), mats, invs, 2)
    for m, row in zip(gl_enumerate(3, 2), rows):
        assert act(v, m).to_ints() == tuple(row.tolist())


def test_csv_export():
    vs = orbit(base_vector("eta", F2))
    buf = io.StringIO()
    text = vectors_to_csv(vs, out=buf)
    assert buf.getvalue() == text
    lines = text.strip().split("\n")
    assert lines[0] == "g121,g122,g123,g131,g132,g133,g231,g232,g233"
    assert len(lines) == 8
    assert lines[1:] == sorted(lines[1:])
    full = vectors_to_csv(vs, reduced=False).split("\n")[0].split(",")
    assert len(full) == 27 and full[15] == "g231"
