"""Structure vectors, the change-of-basis action and orbits over F_p.

A structure vector of an n-dimensional algebra is the n^3-tuple of
structure constants ``lam[i,j,k]`` with ``[b_i, b_j] = sum_k lam[i,j,k] b_k``,
stored in lexicographic (i, j, k) order with 1-based indices.

The transition matrix convention is ``b'_j = sum_i g[i,j] b_i`` (columns of
``g`` are the new basis vectors in old coordinates).  With it the action is
the right action

    lam'[i,j,s] = sum_{p,q,r} g[p,i] g[q,j] lam[p,q,r] ginv[s,r]

so ``act(act(v, g), h) == act(v, g @ h)``.
"""

from __future__ import annotations

import csv
import io
import itertools
import math
import os
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from .exactfield import QQ, Field, FieldMismatchError, PrimeField, Scalar
from .polyring import MultiPoly, VarTable

DEFAULT_BUDGET = 5**9
BUDGET_ENV = "ORBITCLOSURE_BUDGET"


class SingularMatrixError(ZeroDivisionError):
    pass


class BudgetExceededError(RuntimeError):
    pass


def enumeration_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{BUDGET_ENV} must be positive")
    return value


def check_budget(size: int, budget: int | None = None, what: str = "enumeration"):
    budget = enumeration_budget() if budget is None else budget
    if size > budget:
        raise BudgetExceededError(f"{what} needs {size} steps, budget is {budget}")


# -- index relabeling --------------------------------------------------------


def index_of(i: int, j: int, k: int, n: int) -> int:
    """1-based position r of (i, j, k): r - 1 = (i-1) n^2 + (j-1) n + (k-1)."""
    for x in (i, j, k):
        if not 1 <= x <= n:
            raise IndexError(f"index {x} out of range 1..{n}")
    return (i - 1) * n * n + (j - 1) * n + (k - 1) + 1


def triple_of(r: int, n: int) -> tuple[int, int, int]:
    if not 1 <= r <= n**3:
        raise IndexError(f"position {r} out of range 1..{n**3}")
    q, k = divmod(r - 1, n)
    i, j = divmod(q, n)
    return i + 1, j + 1, k + 1


def xname(i: int, j: int, k: int) -> str:
    return f"X{i}{j}{k}"


def structure_table(n: int = 3) -> VarTable:
    return VarTable(xname(*triple_of(r, n)) for r in range(1, n**3 + 1))


# -- structure vectors -------------------------------------------------------


@dataclass(frozen=True)
class StructureVector:
    n: int
    coords: tuple
    field: Field = QQ

    def __post_init__(self):
        if len(self.coords) != self.n**3:
            raise ValueError(f"need {self.n**3} coordinates, got {len(self.coords)}")

    @classmethod
    def from_values(cls, values: Sequence, n: int = 3, field: Field = QQ) -> "StructureVector":
        return cls(n, tuple(field(v) if not isinstance(v, Scalar) else v for v in values), field)

    @classmethod
    def zero(cls, n: int = 3, field: Field = QQ) -> "StructureVector":
        return cls(n, (field.zero,) * n**3, field)

    @classmethod
    def from_brackets(cls, brackets: dict, n: int = 3, field: Field = QQ) -> "StructureVector":
        """Build from ``{(i, j): {k: c}}`` for i < j, extended antisymmetrically."""
        vals = [field.zero] * n**3
        for (i, j), comb in brackets.items():
            if not i < j:
                raise ValueError("give brackets with i < j only")
            for k, c in comb.items():
                c = c if isinstance(c, Scalar) else field(c)
                vals[index_of(i, j, k, n) - 1] = c
                vals[index_of(j, i, k, n) - 1] = -c
        return cls(n, tuple(vals), field)

    def __getitem__(self, ijk: tuple[int, int, int]) -> Scalar:
        return self.coords[index_of(*ijk, self.n) - 1]

    def is_zero(self) -> bool:
        return all(c.value == 0 for c in self.coords)

    def support(self) -> dict[tuple[int, int, int], Scalar]:
        return {triple_of(r + 1, self.n): c for r, c in enumerate(self.coords) if c.value != 0}

    def assignment(self) -> dict[str, Scalar]:
        return {xname(*triple_of(r + 1, self.n)): c for r, c in enumerate(self.coords)}

    def to_ints(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self.coords)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def to_field(v: StructureVector, field: Field) -> StructureVector:
    return StructureVector(v.n, tuple(field(c.value) for c in v.coords), field)


# -- Lie generators ----------------------------------------------------------


def jacobi_generators(n: int, field: Field = QQ):
    """The generators cutting out L_n(F): X_iik, X_ijk + X_jik and the Jacobi quadratics."""
    from .paperdata import PolySystem

    if n < 2:
        raise ValueError("dimension must be at least 2")
    vt = structure_table(n)

    def X(i, j, k):
        return MultiPoly.var(vt, xname(i, j, k), field)

    rng = range(1, n + 1)
    diag = [X(i, i, k) for i in rng for k in rng]
    anti = [X(i, j, k) + X(j, i, k) for i in rng for j in rng for k in rng]
    quad = []
    for i, j, l, r in itertools.product(rng, repeat=4):
        f = MultiPoly.zero(vt, field)
        for k in rng:
            f = f + X(i, j, k) * X(k, l, r) + X(j, l, k) * X(k, i, r) + X(l, i, k) * X(k, j, r)
        quad.append(f)
    return PolySystem(f"jacobi{n}", vt, tuple(diag + anti + quad), families=(len(diag), len(anti), len(quad)))


_JACOBI_CACHE: dict = {}


def is_lie(v: StructureVector) -> bool:
    key = (v.n, v.field)
    if key not in _JACOBI_CACHE:
        _JACOBI_CACHE[key] = jacobi_generators(v.n, v.field)
    vals = v.coords
    return all(f.eval_seq(vals).value == 0 for f in _JACOBI_CACHE[key].generators)


# -- matrices ----------------------------------------------------------------


class SquareMatrix:
    __slots__ = ("n", "rows", "field")

    def __init__(self, rows: Sequence[Sequence], field: Field = QQ):
        rows = [list(r) for r in rows]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and nonempty")
        self.n = n
        self.field = field
        self.rows = tuple(
            tuple(x if isinstance(x, Scalar) else field(x) for x in r) for r in rows
        )
        for r in self.rows:
            for x in r:
                if x.field != field:
                    raise FieldMismatchError(f"entry over {x.field}, matrix over {field}")

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> "SquareMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], field)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, SquareMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __matmul__(self, other: "SquareMatrix") -> "SquareMatrix":
        if other.n != self.n:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                s = self.field.zero
                for a, b in zip(r, c):
                    s = s + a * b
                row.append(s)
            out.append(row)
        return SquareMatrix(out, self.field)

    def transpose(self) -> "SquareMatrix":
        return SquareMatrix(list(zip(*self.rows)), self.field)

    def to_ints(self) -> list[list[int]]:
        return [[int(x) for x in r] for r in self.rows]

    def __repr__(self):
        return "SquareMatrix([" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "])"


def mat_det(g: SquareMatrix) -> Scalar:
    """Determinant by Gaussian elimination (exact)."""
    a = [list(r) for r in g.rows]
    n = g.n
    det = g.field.one
    for c in range(n):
        pivot = next((r for r in range(c, n) if a[r][c].value != 0), None)
        if pivot is None:
            return g.field.zero
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            det = -det
        det = det * a[c][c]
        inv = a[c][c].inverse()
        for r in range(c + 1, n):
            if a[r][c].value != 0:
                f = a[r][c] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def _delete(g: SquareMatrix, i: int, j: int) -> SquareMatrix:
    return SquareMatrix(
        [[x for cj, x in enumerate(r) if cj != j] for ri, r in enumerate(g.rows) if ri != i], g.field
    )


def minors(g: SquareMatrix) -> list[list[Scalar]]:
    """``minors(g)[i-1][j-1]`` is M_ij, the determinant with row i and column j deleted."""
    if g.n == 1:
        return [[g.field.one]]
    return [[mat_det(_delete(g, i, j)) for j in range(g.n)] for i in range(g.n)]


def mat_inv(g: SquareMatrix) -> SquareMatrix:
    n = g.n
    a = [list(r) + [g.field.one if i == j else g.field.zero for j in range(n)] for i, r in enumerate(g.rows)]
    for c in range(n):
        pivot = next((r for r in range(c, n) if a[r][c].value != 0), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        a[c], a[pivot] = a[pivot], a[c]
        inv = a[c][c].inverse()
        a[c] = [x * inv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c].value != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return SquareMatrix([r[n:] for r in a], g.field)


# -- the action --------------------------------------------------------------


def act(v: StructureVector, g: SquareMatrix, ginv: SquareMatrix | None = None) -> StructureVector:
    """Structure vector of the same algebra relative to the basis b'_j = sum_i g[i,j] b_i."""
    if v.field != g.field:
        raise FieldMismatchError(f"vector over {v.field}, matrix over {g.field}")
    n = v.n
    if g.n != n:
        raise ValueError("matrix and vector dimensions differ")
    if ginv is None:
        ginv = mat_inv(g)
    zero = v.field.zero
    G = g.rows
    H = ginv.rows
    lam = {}
    for r, c in enumerate(v.coords):
        if c.value != 0:
            lam[triple_of(r + 1, n)] = c
    rng = range(1, n + 1)
    # contract one index at a time; each stage is a dict over the nonzero support
    t1: dict = {}
    for (p, q, r), c in lam.items():
        for i in rng:
            x = G[p - 1][i - 1]
            if x.value:
                key = (i, q, r)
                t1[key] = t1.get(key, zero) + x * c
    t2: dict = {}
    for (i, q, r), c in t1.items():
        if not c.value:
            continue
        for j in rng:
            x = G[q - 1][j - 1]
            if x.value:
                key = (i, j, r)
                t2[key] = t2.get(key, zero) + x * c
    out = [zero] * n**3
    for (i, j, r), c in t2.items():
        if not c.value:
            continue
        for s in rng:
            x = H[s - 1][r - 1]
            if x.value:
                pos = index_of(i, j, s, n) - 1
                out[pos] = out[pos] + x * c
    return StructureVector(n, tuple(out), v.field)


# -- reduced chart for n = 3 -------------------------------------------------

REDUCED_TRIPLES = ((1, 2, 1), (1, 2, 2), (1, 2, 3), (1, 3, 1), (1, 3, 2), (1, 3, 3), (2, 3, 1), (2, 3, 2), (2, 3, 3))
REDUCED_HEADER = tuple(f"g{i}{j}{k}" for i, j, k in REDUCED_TRIPLES)


def satisfies_linear_constraints(v: StructureVector) -> bool:
    """v vanishes on X_iik and on X_ijk + X_jik."""
    n = v.n
    rng = range(1, n + 1)
    for i, j, k in itertools.product(rng, repeat=3):
        if (v[i, j, k] + v[j, i, k]).value != 0:
            return False
    return all(v[i, i, k].value == 0 for i in rng for k in rng)


def reduce3(v: StructureVector) -> tuple[Scalar, ...]:
    if v.n != 3:
        raise ValueError("the reduced chart is defined for n = 3")
    if not satisfies_linear_constraints(v):
        raise ValueError("vector is not antisymmetric with vanishing X_iik")
    return tuple(v[t] for t in REDUCED_TRIPLES)


def lift3(rv: Sequence, field: Field = QQ) -> StructureVector:
    if len(rv) != 9:
        raise ValueError("reduced vectors have 9 coordinates")
    brackets: dict = {}
    for (i, j, k), c in zip(REDUCED_TRIPLES, rv):
        brackets.setdefault((i, j), {})[k] = c
    if rv and isinstance(rv[0], Scalar):
        field = rv[0].field
    return StructureVector.from_brackets(brackets, 3, field)


# positions of the reduced chart inside the full vector, with signs of the lift
_LIFT_INDEX = np.zeros(27, dtype=np.int64)
_LIFT_SIGN = np.zeros(27, dtype=np.int64)
for _c, (_i, _j, _k) in enumerate(REDUCED_TRIPLES):
    _LIFT_INDEX[index_of(_i, _j, _k, 3) - 1] = _c
    _LIFT_SIGN[index_of(_i, _j, _k, 3) - 1] = 1
    _LIFT_INDEX[index_of(_j, _i, _k, 3) - 1] = _c
    _LIFT_SIGN[index_of(_j, _i, _k, 3) - 1] = -1
_REDUCED_POS = np.array([index_of(i, j, k, 3) - 1 for i, j, k in REDUCED_TRIPLES], dtype=np.int64)


def lift3_array(rows: np.ndarray, p: int) -> np.ndarray:
    rows = np.asarray(rows, dtype=np.int64)
    return (rows[:, _LIFT_INDEX] * _LIFT_SIGN) % p


def reduce3_array(full: np.ndarray) -> np.ndarray:
    return np.asarray(full)[:, _REDUCED_POS]


# -- enumeration over F_p ----------------------------------------------------


def all_points(m: int, p: int) -> np.ndarray:
    """Every point of F_p^m as rows, in lexicographic order."""
    codes = np.arange(p**m, dtype=np.int64)
    powers = p ** np.arange(m - 1, -1, -1, dtype=np.int64)
    return codes[:, None] // powers % p


def gl_order(n: int, p: int) -> int:
    return math.prod(p**n - p**k for k in range(n))


def _batched_det(G: np.ndarray, p: int) -> np.ndarray:
    n = G.shape[1]
    det = np.zeros(G.shape[0], dtype=np.int64)
    for perm in itertools.permutations(range(n)):
        sign = _perm_sign(perm)
        t = np.ones(G.shape[0], dtype=np.int64)
        for i, j in enumerate(perm):
            t = t * G[:, i, j] % p
        det = (det + sign * t) % p
    return det


def _perm_sign(perm) -> int:
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


def _batched_inverse(G: np.ndarray, det: np.ndarray, p: int) -> np.ndarray:
    N, n, _ = G.shape
    inv_det = np.array([pow(int(d), p - 2, p) for d in range(p)], dtype=np.int64)[det]
    adj = np.zeros_like(G)
    if n == 1:
        adj[:, 0, 0] = 1
    else:
        for i in range(n):
            for j in range(n):
                sub = np.delete(np.delete(G, i, axis=1), j, axis=2)
                cof = _batched_det(sub, p)
                if (i + j) % 2:
                    cof = -cof % p
                adj[:, j, i] = cof
    return adj * inv_det[:, None, None] % p


def gl_array(n: int, p: int, budget: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """All invertible n x n matrices over F_p and their inverses, as int arrays."""
    PrimeField(p)
    check_budget(p ** (n * n), budget, f"GL({n}, {p}) enumeration")
    key = (n, p)
    if key in _GL_CACHE:
        return _GL_CACHE[key]
    mats = all_points(n * n, p).reshape(-1, n, n)
    det = _batched_det(mats, p)
    keep = det != 0
    mats, det = mats[keep], det[keep]
    inv = _batched_inverse(mats, det, p)
    mats.setflags(write=False)
    inv.setflags(write=False)
    _GL_CACHE[key] = (mats, inv)
    return mats, inv


_GL_CACHE: dict = {}


def gl_enumerate(n: int, p: int, budget: int | None = None) -> Iterator[SquareMatrix]:
    F = PrimeField(p)
    mats, _ = gl_array(n, p, budget)
    for m in mats:
        yield SquareMatrix(m.tolist(), F)


def act_array(v: np.ndarray, mats: np.ndarray, invs: np.ndarray, p: int, chunk: int = 20000) -> np.ndarray:
    """Vectorized action of many matrices on one structure vector mod p."""
    n = mats.shape[1]
    lam = np.asarray(v, dtype=np.int64).reshape(n, n, n) % p
    out = np.empty((mats.shape[0], n**3), dtype=np.int64)
    for start in range(0, mats.shape[0], chunk):
        G = mats[start:start + chunk]
        H = invs[start:start + chunk]
        t = np.einsum("npi,pqr->niqr", G, lam) % p
        t = np.einsum("nqj,niqr->nijr", G, t) % p
        t = np.einsum("nsr,nijr->nijs", H, t) % p
        out[start:start + chunk] = t.reshape(-1, n**3)
    return out


def orbit_array(v: np.ndarray, n: int, p: int, budget: int | None = None) -> np.ndarray:
    """Distinct images of v under GL(n, p), lexicographically sorted rows."""
    mats, invs = gl_array(n, p, budget)
    images = act_array(v, mats, invs, p)
    return np.unique(images, axis=0)


def orbit(v: StructureVector, p: int | None = None, budget: int | None = None) -> set[StructureVector]:
    if not isinstance(v.field, PrimeField):
        raise ValueError("orbits are enumerated over prime fields only")
    if p is not None and p != v.field.modulus:
        raise FieldMismatchError(f"vector over {v.field}, asked for p = {p}")
    p = v.field.modulus
    rows = orbit_array(np.array(v.to_ints()), v.n, p, budget)
    return {StructureVector.from_values(r.tolist(), v.n, v.field) for r in rows}


# -- CSV export --------------------------------------------------------------


def vectors_to_csv(vectors: Iterable, reduced: bool = True, out=None) -> str:
    """Write vectors as CSV rows of integer representatives, sorted.

    ``vectors`` may hold StructureVectors or plain integer tuples (already in
    the chosen coordinates).
    """
    rows = []
    for v in vectors:
        if isinstance(v, StructureVector):
            rows.append(tuple(int(c) for c in (reduce3(v) if reduced else v.coords)))
        else:
            rows.append(tuple(int(c) for c in v))
    rows.sort()
    if reduced:
        header = list(REDUCED_HEADER)
    else:
        header = [f"g{i}{j}{k}" for i, j, k in (triple_of(r, 3) for r in range(1, 28))]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    text = buf.getvalue()
    if out is not None:
        out.write(text)
    return text


def act_many(vectors: np.ndarray, g: np.ndarray, ginv: np.ndarray, p: int) -> np.ndarray:
    """Vectorized action of one matrix on many structure vectors mod p."""
    vectors = np.asarray(vectors, dtype=np.int64)
    n = g.shape[0]
    lam = vectors.reshape(-1, n, n, n) % p
    t = np.einsum("pi,npqr->niqr", g, lam) % p
    t = np.einsum("qj,niqr->nijr", g, t) % p
    t = np.einsum("sr,nijr->nijs", ginv, t) % p
    return t.reshape(-1, n**3)


def gl_generators(n: int, p: int) -> list[np.ndarray]:
    """Elementary transvections I + E_ij and diag(a, 1, ..., 1): a generating set of GL(n, p)."""
    gens = []
    for i in range(n):
        for j in range(n):
            if i != j:
                g = np.eye(n, dtype=np.int64)
                g[i, j] = 1
                gens.append(g)
    for a in range(2, p):
        g = np.eye(n, dtype=np.int64)
        g[0, 0] = a
        gens.append(g)
    return gens


def inverse_mod_p(g: np.ndarray, p: int) -> np.ndarray:
    det = _batched_det(g[None], p)
    if det[0] == 0:
        raise SingularMatrixError("matrix is singular mod p")
    return _batched_inverse(g[None], det, p)[0]
