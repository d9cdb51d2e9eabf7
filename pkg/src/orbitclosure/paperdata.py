"""Concrete data for the Heisenberg algebra h3 and for g2 + a1.

Everything here is a transcription: the base structure vectors ``eta``
(h3: [e2, e3] = e1) and ``rho`` (g2 + a1: [b1, b2] = b1), the parametrized
families of structure vectors, the polynomial systems cutting out their
orbit closures, and the transition matrices that move the base vectors onto
each family instance.

Family coordinate lists are written positionally, 27 entries in
lexicographic (i, j, k) order, exactly as displayed in the source; the test
suite cross-checks them against bracket descriptions.
"""

from __future__ import annotations

import copy
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, replace

from .exactfield import QQ, Field, Scalar
from .polyring import MultiPoly, VarTable, polyvars
from .structconst import (
    SquareMatrix,
    StructureVector,
    index_of,
    mat_det,
    structure_table,
    xname,
)

X_TABLE = structure_table(3)


@dataclass(frozen=True)
class PolySystem:
    name: str
    vt: VarTable
    generators: tuple[MultiPoly, ...]
    families: tuple[int, ...] = ()

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def vanishes_at(self, v: StructureVector) -> bool:
        return self.first_nonvanishing(v) is None

    def first_nonvanishing(self, v: StructureVector):
        """Index and value of the first generator not vanishing at v, else None."""
        vals = v.coords
        for idx, f in enumerate(self.generators):
            f = f if f.field == v.field else f.to_field(v.field)
            val = f.eval_seq(vals)
            if val.value != 0:
                return idx, val
        return None

    def union(self, other: "PolySystem", name: str) -> "PolySystem":
        return PolySystem(name, self.vt, self.generators + other.generators)


# -- families ----------------------------------------------------------------


@dataclass(frozen=True)
class ParamFamily:
    name: str
    params: tuple[str, ...]
    components: tuple[MultiPoly, ...]

    @property
    def arity(self) -> int:
        return len(self.params)

    @property
    def vt(self) -> VarTable:
        return self.components[0].vt

    def __call__(self, *values, field: Field | None = None) -> StructureVector:
        if len(values) != self.arity:
            raise ValueError(f"{self.name} takes {self.arity} parameters, got {len(values)}")
        if field is None:
            field = next((v.field for v in values if isinstance(v, Scalar)), QQ)
        vals = [v if isinstance(v, Scalar) else field(v) for v in values]
        comps = []
        for c in self.components:
            c = c if c.field == field else c.to_field(field)
            comps.append(c.eval_seq(vals))
        return StructureVector(3, tuple(comps), field)

    def at(self, params: Mapping[str, Scalar]) -> StructureVector:
        return self(*(params[name] for name in self.params))

    def substitute(self, images: Sequence, target: VarTable) -> tuple[MultiPoly, ...]:
        """Components with each parameter replaced by a polynomial over ``target``."""
        mapping = dict(zip(self.params, images))
        return tuple(c.subs(mapping, target) for c in self.components)


def _family(name: str, params: Sequence[str], body: Callable) -> ParamFamily:
    vt = VarTable(params)
    v = polyvars(vt)
    comps = body(*(v[p] for p in params))
    comps = [c if isinstance(c, MultiPoly) else MultiPoly.const(vt, c) for c in comps]
    if len(comps) != 27:
        raise AssertionError(f"{name}: {len(comps)} coordinates transcribed")
    return ParamFamily(name, tuple(params), tuple(comps))


def _eta_prime(a, b, c, d):
    return [
        0, 0, 0, a*c*d, -b*c*d, c**2*d, a*b*d, -b**2*d, b*c*d,
        -a*c*d, b*c*d, -c**2*d, 0, 0, 0, a**2*d, -a*b*d, a*c*d,
        -a*b*d, b**2*d, -b*c*d, -a**2*d, a*b*d, -a*c*d, 0, 0, 0,
    ]


def _eta1(mu, nu, lam):
    return [
        0, 0, 0, nu*lam, -mu*nu*lam, nu**2*lam, mu*lam, -mu**2*lam, mu*nu*lam,
        -nu*lam, mu*nu*lam, -nu**2*lam, 0, 0, 0, lam, -mu*lam, nu*lam,
        -mu*lam, mu**2*lam, -mu*nu*lam, -lam, mu*lam, -nu*lam, 0, 0, 0,
    ]


def _eta2(tau, sigma):
    return [
        0, 0, 0, 0, sigma*tau, -sigma*tau**2, 0, sigma, -sigma*tau,
        0, -sigma*tau, sigma*tau**2, 0, 0, 0, 0, 0, 0,
        0, -sigma, sigma*tau, 0, 0, 0, 0, 0, 0,
    ]


def _eta3(kappa):
    return [
        0, 0, 0, 0, 0, kappa, 0, 0, 0,
        0, 0, -kappa, 0, 0, 0, 0, 0, 0,
        0, 0, 0, 0, 0, 0, 0, 0, 0,
    ]


def _rho_prime(x1, y1, w1, x2, y2, w2, d):
    return [
        0, 0, 0, x1*x2*d, -y1*x2*d, w1*x2*d, x1*y2*d, -y1*y2*d, w1*y2*d,
        -x1*x2*d, y1*x2*d, -w1*x2*d, 0, 0, 0, x1*w2*d, -y1*w2*d, w1*w2*d,
        -x1*y2*d, y1*y2*d, -w1*y2*d, -x1*w2*d, y1*w2*d, -w1*w2*d, 0, 0, 0,
    ]


def _rho1(a, b, c, mu, nu, phi):
    return [
        0, 0, 0, mu*a, -mu*b, mu*c, nu*a, -nu*b, nu*c,
        -mu*a, mu*b, -mu*c, 0, 0, 0, phi*a, -phi*b, phi*c,
        -nu*a, nu*b, -nu*c, -phi*a, phi*b, -phi*c, 0, 0, 0,
    ]


def _rho2(sigma, tau, rho, zeta):
    return [
        0, 0, 0, 0, sigma, -sigma*zeta, 0, tau, -tau*zeta,
        0, -sigma, sigma*zeta, 0, 0, 0, 0, rho, -rho*zeta,
        0, -tau, tau*zeta, 0, -rho, rho*zeta, 0, 0, 0,
    ]


def _rho3(theta, xi, kappa):
    return [
        0, 0, 0, 0, 0, theta, 0, 0, xi,
        0, 0, -theta, 0, 0, 0, 0, 0, kappa,
        0, 0, -xi, 0, 0, -kappa, 0, 0, 0,
    ]


def _build_families() -> dict[str, ParamFamily]:
    specs = [
        ("eta_prime", ("alpha", "beta", "gamma", "delta"), _eta_prime),
        ("eta1", ("mu", "nu", "lambda"), _eta1),
        ("eta2", ("tau", "sigma"), _eta2),
        ("eta3", ("kappa",), _eta3),
        ("rho_prime", ("chi1", "psi1", "omega1", "chi2", "psi2", "omega2", "delta"), _rho_prime),
        ("rho1", ("alpha", "beta", "gamma", "mu", "nu", "phi"), _rho1),
        ("rho2", ("sigma", "tau", "rho", "zeta"), _rho2),
        ("rho3", ("theta", "xi", "kappa"), _rho3),
    ]
    return {name: _family(name, params, body) for name, params, body in specs}


# -- polynomial systems ------------------------------------------------------


def _X():
    v = polyvars(X_TABLE)
    return lambda ijk: v[f"X{ijk}"]


def _s1() -> list[MultiPoly]:
    X = _X()
    return [X(f"{i}{i}{k}") for i in (1, 2, 3) for k in (1, 2, 3)]


def _s2() -> list[MultiPoly]:
    X = _X()
    return [X(f"{i}{j}{k}") + X(f"{j}{i}{k}") for i in (1, 2, 3) for j in (1, 2, 3) for k in (1, 2, 3)]


def _s3() -> list[MultiPoly]:
    X = _X()
    return [
        X(121) - X(233),
        X(131) + X(232),
        X(122) + X(133),
        X(122)**2 + X(123) * X(132),
        X(121)**2 - X(123) * X(231),
        X(131)**2 + X(132) * X(231),
        X(121) * X(131) + X(122) * X(231),
    ]


def _t3() -> list[MultiPoly]:
    X = _X()
    return [
        X(121) * X(132) - X(122) * X(131),
        X(121) * X(232) - X(122) * X(231),
        X(131) * X(232) - X(132) * X(231),
        X(121) * X(133) - X(123) * X(131),
        X(121) * X(233) - X(123) * X(231),
        X(232) * X(123) - X(122) * X(233),
        X(122) * X(133) - X(123) * X(132),
        X(132) * X(233) - X(133) * X(232),
        X(233) * X(131) - X(133) * X(231),
    ]


def _w_polys() -> list[MultiPoly]:
    X = _X()
    return [X(121) - X(233), X(131) + X(232), X(122) + X(133)]


# -- predicates, witness matrices and the table ------------------------------


@dataclass(frozen=True)
class Atom:
    """``poly == 0`` or ``poly != 0`` over a family's parameters."""

    poly: MultiPoly
    zero: bool

    def holds(self, params: Mapping[str, Scalar]) -> bool:
        f = self.poly
        field = next(iter(params.values())).field
        if f.field != field:
            f = f.to_field(field)
        return f.eval(params).is_zero() == self.zero

    def __str__(self):
        return f"{self.poly} {'=' if self.zero else '!='} 0"


@dataclass(frozen=True)
class Predicate:
    atoms: tuple[Atom, ...] = ()
    # ordered (parameter, value-function) pairs that make the equality atoms hold
    solve: tuple[tuple[str, Callable], ...] = ()
    text: str = ""

    def holds(self, params: Mapping[str, Scalar]) -> bool:
        return all(a.holds(params) for a in self.atoms)

    def apply_solve(self, params: dict) -> dict:
        params = dict(params)
        for name, fn in self.solve:
            params[name] = fn(params)
        return params

    def __str__(self):
        return self.text or " and ".join(str(a) for a in self.atoms) or "true"


@dataclass(frozen=True)
class WitnessMatrix:
    """A transition matrix moving a base vector onto a family instance."""

    name: str
    base: str
    target: str
    params: tuple[str, ...]
    predicate: Predicate
    entries: Callable
    det: Callable | None = None
    det_text: str = ""
    flips: frozenset = frozenset()

    def matrix(self, params: Mapping[str, Scalar]) -> SquareMatrix:
        field = next(iter(params.values())).field
        rows = [list(r) for r in self.entries(params)]
        for i, j in self.flips:
            rows[i][j] = -rows[i][j]
        return SquareMatrix(rows, field)

    def expected_det(self, params: Mapping[str, Scalar], matrix: SquareMatrix | None = None) -> Scalar:
        if self.det is not None:
            field = next(iter(params.values())).field
            d = self.det(params)
            return d if isinstance(d, Scalar) else field(d)
        return mat_det(matrix if matrix is not None else self.matrix(params))

    def flipped(self, i: int, j: int) -> "WitnessMatrix":
        return replace(self, flips=self.flips ^ {(i, j)})


@dataclass(frozen=True)
class TableRow:
    id: str
    family: str
    predicate: Predicate
    witness: WitnessMatrix | None

    @property
    def is_closure(self) -> bool:
        return self.witness is None

    @property
    def condition(self) -> str:
        return str(self.predicate)


def _atoms(vt: VarTable, *specs) -> tuple[Atom, ...]:
    """specs are ``(builder, zero)`` with builder taking the dict of variables."""
    v = polyvars(vt)
    return tuple(Atom(build(v), zero) for build, zero in specs)


def _inv(x: Scalar) -> Scalar:
    return x.inverse()


def _build_witnesses() -> dict[str, WitnessMatrix]:
    eta1_vt = VarTable(("mu", "nu", "lambda"))
    eta2_vt = VarTable(("tau", "sigma"))
    eta3_vt = VarTable(("kappa",))
    return {
        "g1": WitnessMatrix(
            "g1", "eta", "eta1", eta1_vt.names,
            Predicate(_atoms(eta1_vt, (lambda v: v["lambda"], False)), text="lambda != 0"),
            lambda P: [[_inv(P["lambda"]), 0, 0], [P["mu"], 1, 0], [-P["nu"], 0, 1]],
        ),
        "g2": WitnessMatrix(
            "g2", "eta", "eta2", eta2_vt.names,
            Predicate(_atoms(eta2_vt, (lambda v: v["sigma"], False)), text="sigma != 0"),
            lambda P: [[0, _inv(P["sigma"]), 0], [1, 0, 0], [0, P["tau"], 1]],
        ),
        "g3": WitnessMatrix(
            "g3", "eta", "eta3", eta3_vt.names,
            Predicate(_atoms(eta3_vt, (lambda v: v["kappa"], False)), text="kappa != 0"),
            lambda P: [[0, 0, _inv(P["kappa"])], [1, 0, 0], [0, 1, 0]],
        ),
    }


def _A1(P):
    return P["mu"] * P["alpha"] - P["phi"] * P["gamma"]


def _A2(P):
    return P["nu"] * P["alpha"] - P["phi"] * P["beta"]


def _build_table() -> list[TableRow]:
    r1 = VarTable(("alpha", "beta", "gamma", "mu", "nu", "phi"))
    r2 = VarTable(("sigma", "tau", "rho", "zeta"))
    r3 = VarTable(("theta", "xi", "kappa"))

    A1 = lambda v: v["mu"] * v["alpha"] - v["phi"] * v["gamma"]  # noqa: E731
    A2 = lambda v: v["nu"] * v["alpha"] - v["phi"] * v["beta"]  # noqa: E731
    alpha_nz = (lambda v: v["alpha"], False)
    var = lambda name: (lambda v: v[name])  # noqa: E731

    solve_A1 = ("mu", lambda P: P["phi"] * P["gamma"] / P["alpha"])
    solve_A2 = ("nu", lambda P: P["phi"] * P["beta"] / P["alpha"])
    zero = lambda name: (name, lambda P: P[name].field.zero)  # noqa: E731

    def rho1_row(idx, text, specs, solve, entries, det, det_text):
        pred = Predicate(_atoms(r1, alpha_nz, *specs), tuple(solve), text)
        w = None
        if entries is not None:
            w = WitnessMatrix(f"rho1-{idx}", "rho", "rho1", r1.names, pred, entries, det, det_text)
        return TableRow(f"rho1-{idx}", "rho1", pred, w)

    rows = [
        rho1_row(
            1, "A1 != 0, A2 != 0", [(A1, False), (A2, False)], [],
            lambda P: [
                [P["nu"], P["phi"], 0],
                [P["mu"] * P["beta"] - P["nu"] * P["gamma"], _A1(P), _A2(P)],
                [-P["gamma"], 0, P["alpha"]],
            ],
            lambda P: _A1(P) * _A2(P), "A1*A2",
        ),
        rho1_row(
            2, "A1 = 0, A2 != 0, phi*gamma != 0",
            [(A1, True), (A2, False), (lambda v: v["phi"] * v["gamma"], False)], [solve_A1],
            lambda P: [
                [P["beta"], P["alpha"], P["alpha"] * _inv(P["phi"]) * _inv(P["gamma"]) * _A2(P)],
                [-P["gamma"] / P["alpha"] * _A2(P), 0, _A2(P)],
                [P["phi"] * P["beta"] / P["alpha"], P["phi"], 0],
            ],
            lambda P: -_A2(P) ** 2, "-A2^2",
        ),
        rho1_row(
            3, "A1 = 0, A2 != 0, phi = 0",
            [(A1, True), (A2, False), (var("phi"), True)], [zero("phi"), solve_A1],
            lambda P: [
                [1, 0, 0],
                [-P["gamma"] * P["nu"], 0, P["alpha"] * P["nu"]],
                [-P["gamma"] + P["beta"], P["alpha"], P["alpha"]],
            ],
            lambda P: -P["alpha"] ** 2 * P["nu"], "-alpha^2*nu",
        ),
        rho1_row(
            4, "A1 = 0, A2 != 0, phi != 0, gamma = 0",
            [(A1, True), (A2, False), (var("phi"), False), (var("gamma"), True)], [zero("gamma"), solve_A1],
            lambda P: [
                [P["nu"], P["phi"], 0],
                [0, 0, _A2(P)],
                [P["beta"], P["alpha"], 0],
            ],
            lambda P: -_A2(P) ** 2, "-A2^2",
        ),
        rho1_row(
            5, "A1 != 0, A2 = 0, beta != 0, gamma != 0",
            [(A1, False), (A2, True), (var("beta"), False), (var("gamma"), False)], [solve_A2],
            lambda P: [
                [0, P["alpha"] ** 2 * P["mu"] * P["gamma"], P["alpha"] * P["gamma"] * P["phi"] * P["beta"]],
                [P["beta"] / P["alpha"] * _A1(P), _A1(P), 0],
                [-_A1(P) / P["alpha"], 0, _A1(P) / P["gamma"]],
            ],
            lambda P: -P["beta"] * _A1(P) ** 3, "-beta*A1^3",
        ),
        rho1_row(
            6, "A1 != 0, A2 = 0, gamma = 0",
            [(A1, False), (A2, True), (var("gamma"), True)], [zero("gamma"), solve_A2],
            lambda P: [
                [-P["mu"], 0, P["phi"]],
                [P["beta"] * P["mu"], P["mu"] * P["alpha"], 0],
                [P["beta"], P["alpha"], 1],
            ],
            lambda P: -P["mu"] ** 2 * P["alpha"], "-mu^2*alpha",
        ),
        rho1_row(
            7, "A1 != 0, A2 = 0, beta = 0",
            [(A1, False), (A2, True), (var("beta"), True)], [zero("beta"), solve_A2],
            lambda P: [
                [P["mu"], 0, -P["phi"]],
                [0, _A1(P), 0],
                [-P["gamma"], 0, P["alpha"]],
            ],
            lambda P: _A1(P) ** 2, "A1^2",
        ),
        rho1_row(8, "A1 = 0, A2 = 0", [(A1, True), (A2, True)], [solve_A1, solve_A2], None, None, ""),
    ]

    D = lambda v: v["tau"] * v["zeta"] - v["sigma"]  # noqa: E731
    solve_D = ("sigma", lambda P: P["tau"] * P["zeta"])

    def _D(P):
        return P["tau"] * P["zeta"] - P["sigma"]

    def rho2_row(idx, text, specs, solve, entries, det, det_text):
        pred = Predicate(_atoms(r2, *specs), tuple(solve), text)
        w = None
        if entries is not None:
            w = WitnessMatrix(f"rho2-{idx}", "rho", "rho2", r2.names, pred, entries, det, det_text)
        return TableRow(f"rho2-{idx}", "rho2", pred, w)

    rows += [
        rho2_row(
            1, "rho != 0, tau*zeta - sigma != 0", [(var("rho"), False), (D, False)], [],
            lambda P: [[0, -P["sigma"], -P["tau"]], [_D(P), P["rho"] * P["zeta"], P["rho"]], [1, 0, 0]],
            lambda P: P["rho"] * _D(P), "rho*(tau*zeta - sigma)",
        ),
        rho2_row(
            2, "rho != 0, tau*zeta - sigma = 0", [(var("rho"), False), (D, True)], [solve_D],
            lambda P: [[P["tau"], P["rho"], 0], [0, P["rho"] * P["zeta"], P["rho"]], [1, 0, 0]],
            lambda P: P["rho"] ** 2, "rho^2",
        ),
        rho2_row(
            3, "rho = 0, tau*zeta - sigma != 0", [(var("rho"), True), (D, False)], [zero("rho")],
            lambda P: [[0, P["sigma"], P["tau"]], [_D(P), 0, 0], [0, P["zeta"], 1]],
            lambda P: _D(P) ** 2, "(tau*zeta - sigma)^2",
        ),
        rho2_row(4, "rho = 0, tau*zeta - sigma = 0", [(var("rho"), True), (D, True)], [zero("rho"), solve_D], None, None, ""),
    ]

    def rho3_row(idx, text, specs, solve, entries, det, det_text):
        pred = Predicate(_atoms(r3, *specs), tuple(solve), text)
        w = None
        if entries is not None:
            w = WitnessMatrix(f"rho3-{idx}", "rho", "rho3", r3.names, pred, entries, det, det_text)
        return TableRow(f"rho3-{idx}", "rho3", pred, w)

    rows += [
        rho3_row(
            1, "kappa != 0, xi != 0", [(var("kappa"), False), (var("xi"), False)], [],
            lambda P: [[1, (P["kappa"] + P["theta"]) / P["xi"], 1], [-P["xi"], -P["kappa"], 0], [1, 0, 0]],
            lambda P: P["kappa"], "kappa",
        ),
        rho3_row(
            2, "kappa != 0, xi = 0", [(var("kappa"), False), (var("xi"), True)], [zero("xi")],
            lambda P: [[-P["theta"] / P["kappa"], 0, 1], [0, -P["kappa"], 0], [1, 0, 0]],
            lambda P: P["kappa"], "kappa",
        ),
        rho3_row(
            3, "kappa = 0, xi != 0", [(var("kappa"), True), (var("xi"), False)], [zero("kappa")],
            lambda P: [[0, P["theta"] / P["xi"], 1], [-P["xi"], 0, 0], [0, 1, 0]],
            lambda P: -P["xi"], "-xi",
        ),
        rho3_row(4, "kappa = 0, xi = 0", [(var("kappa"), True), (var("xi"), True)], [zero("kappa"), zero("xi")], None, None, ""),
    ]
    return rows


# -- the bundle --------------------------------------------------------------


class PaperData:
    """All transcribed objects, as one replaceable bundle.

    The verifier reads everything through an instance of this class, so a
    mutated copy (see :meth:`with_flipped_s3_sign`, :meth:`with_flipped_entry`)
    can be fed to the suites to confirm they notice the change.
    """

    def __init__(self):
        self.families = _build_families()
        self.witnesses = _build_witnesses()
        self.rows = _build_table()
        self._s3 = _s3()
        self.mutations: list[str] = []

    @classmethod
    def default(cls) -> "PaperData":
        return cls()

    # systems are rebuilt from the (possibly mutated) pieces on each access
    def system(self, name: str) -> PolySystem:
        s1, s2, s3, t3, w = _s1(), _s2(), list(self._s3), _t3(), _w_polys()
        table = {
            "S1": s1,
            "S2": s2,
            "S3": s3,
            "S": s1 + s2 + s3,
            "T3": t3,
            "T": s1 + s2 + t3,
            "TS3": s1 + s2 + t3 + s3,
            "Sprime": s1 + s2 + t3 + w,
            "W_polys": w,
        }
        if name == "jacobi3":
            from .structconst import jacobi_generators

            return jacobi_generators(3)
        if name not in table:
            raise KeyError(f"unknown system {name!r}; choose from {sorted(table) + ['jacobi3']}")
        return PolySystem(name, X_TABLE, tuple(table[name]))

    def base_vector(self, name: str, field: Field = QQ) -> StructureVector:
        if name == "eta":
            return StructureVector.from_brackets({(2, 3): {1: 1}}, 3, field)
        if name == "rho":
            return StructureVector.from_brackets({(1, 2): {1: 1}}, 3, field)
        if name == "zero":
            return StructureVector.zero(3, field)
        raise KeyError(f"unknown base vector {name!r}")

    def family(self, name: str) -> ParamFamily:
        return self.families[name]

    def witness(self, name: str) -> WitnessMatrix:
        if name in self.witnesses:
            return self.witnesses[name]
        for row in self.rows:
            if row.id == name:
                if row.witness is None:
                    raise KeyError(f"table row {name} carries no matrix")
                return row.witness
        raise KeyError(f"unknown witness {name!r}")

    def all_witnesses(self) -> list[WitnessMatrix]:
        return list(self.witnesses.values()) + [r.witness for r in self.rows if r.witness is not None]

    # -- mutations for negative testing --

    def with_flipped_s3_sign(self, gen: int, term: int) -> "PaperData":
        out = copy.copy(self)
        f = self._s3[gen]
        mono = f.sorted_monomials()[term]
        terms = dict(f.terms)
        terms[mono] = -terms[mono]
        out._s3 = list(self._s3)
        out._s3[gen] = MultiPoly(f.vt, f.field, terms)
        out.mutations = self.mutations + [f"S3[{gen}] term {term} sign flipped"]
        return out

    def with_flipped_entry(self, witness: str, i: int, j: int) -> "PaperData":
        out = copy.copy(self)
        out.witnesses = dict(self.witnesses)
        out.rows = list(self.rows)
        if witness in self.witnesses:
            out.witnesses[witness] = self.witnesses[witness].flipped(i, j)
        else:
            k = next(k for k, r in enumerate(self.rows) if r.id == witness and r.witness is not None)
            out.rows[k] = replace(self.rows[k], witness=self.rows[k].witness.flipped(i, j))
        out.mutations = self.mutations + [f"{witness} entry ({i + 1},{j + 1}) sign flipped"]
        return out


_DEFAULT: PaperData | None = None


def default_data() -> PaperData:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = PaperData()
    return _DEFAULT


# module-level accessors on the unmutated data


def base_vector(name: str, field: Field = QQ) -> StructureVector:
    return default_data().base_vector(name, field)


def family(name: str) -> ParamFamily:
    return default_data().family(name)


def family_eval(name: str, *params, field: Field | None = None) -> StructureVector:
    return default_data().family(name)(*params, field=field)


def system(name: str) -> PolySystem:
    return default_data().system(name)


def witness(name: str, params: Mapping[str, object], field: Field = QQ) -> tuple[SquareMatrix, Scalar]:
    """Instantiate a witness matrix; returns the matrix and its expected determinant."""
    w = default_data().witness(name)
    P = {k: v if isinstance(v, Scalar) else field(v) for k, v in params.items()}
    missing = set(w.params) - set(P)
    if missing:
        raise KeyError(f"missing parameters {sorted(missing)}")
    if not w.predicate.holds(P):
        raise ValueError(f"{name}: condition {w.predicate} fails at {params}")
    g = w.matrix(P)
    return g, w.expected_det(P, g)


def table_rows() -> list[TableRow]:
    return list(default_data().rows)


__all__ = [
    "Atom",
    "PaperData",
    "ParamFamily",
    "PolySystem",
    "Predicate",
    "TableRow",
    "WitnessMatrix",
    "X_TABLE",
    "base_vector",
    "default_data",
    "family",
    "family_eval",
    "index_of",
    "system",
    "table_rows",
    "witness",
    "xname",
]
