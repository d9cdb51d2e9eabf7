"""Sparse multivariate polynomials over an exact field.

A :class:`MultiPoly` is a map from exponent tuples to nonzero scalars over a
fixed :class:`VarTable`.  Zero coefficients are never stored, so two
polynomials are equal as ring elements exactly when their term maps are
equal; :meth:`MultiPoly.is_zero` is therefore a coefficient-level identity
test, valid over every field, not a pointwise check.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from numbers import Integral, Rational

import numpy as np

from .exactfield import QQ, Field, FieldMismatchError, Scalar


class VarTable:
    """An ordered, duplicate-free tuple of indeterminate names."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        self.names = tuple(names)
        self._index = {name: k for k, name in enumerate(self.names)}
        if len(self._index) != len(self.names):
            raise ValueError("duplicate indeterminate names")

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"{name!r} is not an indeterminate of this table") from None

    def __eq__(self, other):
        return isinstance(other, VarTable) and other.names == self.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VarTable({list(self.names)})"


class MultiPoly:
    __slots__ = ("vt", "field", "terms", "_compiled")

    def __init__(self, vt: VarTable, field: Field, terms: Mapping[tuple, Scalar] | None = None):
        self.vt = vt
        self.field = field
        self.terms = dict(terms) if terms else {}
        self._compiled = None

    # -- construction -------------------------------------------------

    @classmethod
    def build(cls, vt: VarTable, field: Field, terms: Iterable[tuple[Sequence[int], object]]) -> "MultiPoly":
        """Canonicalize a list of ``(exponents, coefficient)`` pairs.

        Exponents may be a full tuple or a ``{name: power}`` mapping.
        """
        acc: dict[tuple, Scalar] = {}
        for exps, coeff in terms:
            key = _exponent_key(vt, exps)
            c = _as_scalar(field, coeff)
            if key in acc:
                acc[key] = acc[key] + c
            else:
                acc[key] = c
        return cls(vt, field, {k: c for k, c in acc.items() if c.value != 0})

    @classmethod
    def zero(cls, vt: VarTable, field: Field = QQ) -> "MultiPoly":
        return cls(vt, field)

    @classmethod
    def const(cls, vt: VarTable, c, field: Field = QQ) -> "MultiPoly":
        c = _as_scalar(field, c)
        if c.value == 0:
            return cls(vt, field)
        return cls(vt, field, {(0,) * len(vt): c})

    @classmethod
    def var(cls, vt: VarTable, name: str, field: Field = QQ) -> "MultiPoly":
        exps = [0] * len(vt)
        exps[vt.index(name)] = 1
        return cls(vt, field, {tuple(exps): field.one})

    # -- arithmetic ---------------------------------------------------

    def _promote(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.vt != self.vt:
                raise ValueError("polynomials over different variable tables")
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (Scalar, Integral, Rational)):
            return MultiPoly.const(self.vt, other, self.field)
        return NotImplemented

    def __add__(self, other):
        other = self._promote(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms[k] + c if k in terms else c
            if s.value == 0:
                terms.pop(k, None)
            else:
                terms[k] = s
        return MultiPoly(self.vt, self.field, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vt, self.field, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._promote(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._promote(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._promote(other)
        if other is NotImplemented:
            return other
        acc: dict[tuple, Scalar] = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                k = tuple(x + y for x, y in zip(ka, kb))
                c = ca * cb
                acc[k] = acc[k] + c if k in acc else c
        return MultiPoly(self.vt, self.field, {k: c for k, c in acc.items() if c.value != 0})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, Integral) or e < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = MultiPoly.const(self.vt, 1, self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- predicates and inspection ------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        other = self._promote(other) if not isinstance(other, MultiPoly) else other
        if other is NotImplemented:
            return other
        return self.vt == other.vt and self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.vt, frozenset(self.terms.items())))

    def __len__(self):
        return len(self.terms)

    def degree(self) -> int:
        return max((sum(k) for k in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.vt.index(name)
        return max((k[i] for k in self.terms), default=-1)

    def variables(self) -> set[str]:
        used = set()
        for k in self.terms:
            used.update(self.vt.names[i] for i, e in enumerate(k) if e)
        return used

    def coefficients(self) -> list[Scalar]:
        return [self.terms[k] for k in self.sorted_monomials()]

    def sorted_monomials(self) -> list[tuple]:
        return sorted(self.terms, reverse=True)

    # -- evaluation and substitution ----------------------------------

    def eval(self, assignment: Mapping[str, object]) -> Scalar:
        """The evaluation homomorphism at a point given as ``{name: value}``."""
        values = []
        for name in self.vt.names:
            if name not in assignment:
                raise KeyError(f"assignment is missing {name!r}")
            values.append(_as_scalar(self.field, assignment[name]))
        return self.eval_seq(values)

    def eval_seq(self, values: Sequence[Scalar]) -> Scalar:
        if len(values) != len(self.vt):
            raise ValueError("point has the wrong number of coordinates")
        field = self.field
        raw = []
        for v in values:
            if v.field != field:
                raise FieldMismatchError(f"{v.field} vs {field}")
            raw.append(v.value)
        if self._compiled is None:
            self._compiled = [
                (c.value, [(i, e) for i, e in enumerate(k) if e]) for k, c in self.terms.items()
            ]
        total = 0
        if field.kind == "prime":
            p = field.modulus
            for cv, factors in self._compiled:
                t = cv
                for i, e in factors:
                    t = t * pow(raw[i], e, p) % p
                total += t
            return Scalar(field, total % p)
        for cv, factors in self._compiled:
            t = cv
            for i, e in factors:
                t = t * raw[i] ** e
            total += t
        return field(total)

    def subs(self, mapping: Mapping[str, object], target: VarTable | None = None) -> "MultiPoly":
        """Substitute polynomials (or constants) for indeterminates.

        Every indeterminate of ``self`` that occurs in a term must be mapped;
        the images live over ``target`` (default: the same table).
        Unmapped indeterminates are kept only when ``target`` contains them.
        """
        target = target or self.vt
        images = []
        for name in self.vt.names:
            if name in mapping:
                img = mapping[name]
                if not isinstance(img, MultiPoly):
                    img = MultiPoly.const(target, img, self.field)
                images.append(img)
            elif name in target:
                images.append(MultiPoly.var(target, name, self.field))
            else:
                images.append(None)
        result = MultiPoly.zero(target, self.field)
        powers: dict[tuple[int, int], MultiPoly] = {}
        for k, c in self.terms.items():
            t = MultiPoly.const(target, c, self.field)
            for i, e in enumerate(k):
                if not e:
                    continue
                if images[i] is None:
                    raise KeyError(f"no image given for {self.vt.names[i]!r}")
                if (i, e) not in powers:
                    powers[(i, e)] = images[i] ** e
                t = t * powers[(i, e)]
            result = result + t
        return result

    def cancel_inverse(self, name: str, inv_name: str) -> "MultiPoly":
        """Reduce modulo ``name * inv_name - 1``.

        Each monomial ends with at most one of the two indeterminates, which
        is the canonical form in the Laurent ring.
        """
        i, j = self.vt.index(name), self.vt.index(inv_name)
        terms = []
        for k, c in self.terms.items():
            m = min(k[i], k[j])
            if m:
                k = list(k)
                k[i] -= m
                k[j] -= m
            terms.append((tuple(k), c))
        return MultiPoly.build(self.vt, self.field, terms)

    def to_field(self, field: Field) -> "MultiPoly":
        """Map the coefficients into another field (integer or rational images)."""
        return MultiPoly.build(self.vt, field, ((k, field(c.value)) for k, c in self.terms.items()))

    def retable(self, target: VarTable) -> "MultiPoly":
        """Re-express over a table containing every indeterminate in use."""
        used = self.variables()
        missing = used - set(target.names)
        if missing:
            raise KeyError(f"target table lacks {sorted(missing)}")
        terms = []
        for k, c in self.terms.items():
            exps = [0] * len(target)
            for i, e in enumerate(k):
                if e:
                    exps[target.index(self.vt.names[i])] = e
            terms.append((tuple(exps), c))
        return MultiPoly.build(target, self.field, terms)

    # -- rendering ----------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for k in self.sorted_monomials():
            c = self.terms[k]
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.vt.names, k)
                if e
            )
            cv = c.value
            negative = self.field.kind == "rational" and cv < 0
            mag = -cv if negative else cv
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not out:
                out.append(f"-{body}" if negative else body)
            else:
                out.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(out)

    def __repr__(self):
        return f"MultiPoly({self})"


def _exponent_key(vt: VarTable, exps) -> tuple:
    if isinstance(exps, Mapping):
        key = [0] * len(vt)
        for name, e in exps.items():
            key[vt.index(name)] += int(e)
    else:
        key = [int(e) for e in exps]
        if len(key) != len(vt):
            raise ValueError(f"exponent vector of length {len(key)}, table has {len(vt)}")
    if any(e < 0 for e in key):
        raise ValueError("negative exponent")
    return tuple(key)


def _as_scalar(field: Field, c) -> Scalar:
    if isinstance(c, Scalar):
        if c.field != field:
            raise FieldMismatchError(f"{c.field} vs {field}")
        return c
    return field(c)


def polyvars(vt: VarTable, field: Field = QQ) -> dict[str, MultiPoly]:
    return {name: MultiPoly.var(vt, name, field) for name in vt.names}


# functional spellings


def poly_build(vt: VarTable, terms, field: Field = QQ) -> MultiPoly:
    return MultiPoly.build(vt, field, terms)


def poly_arith(f: MultiPoly, g: MultiPoly, op: str) -> MultiPoly:
    if f.vt != g.vt:
        raise ValueError("polynomials over different variable tables")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown op {op!r}")


def poly_eval(f: MultiPoly, assignment: Mapping[str, object]) -> Scalar:
    return f.eval(assignment)


def poly_is_zero(f: MultiPoly) -> bool:
    return f.is_zero()


# vectorized evaluation over F_p


class ModPEvaluator:
    """Evaluate a list of integer-coefficient polynomials on many points mod p.

    Points are rows of an integer array whose columns follow ``vt``.  Returns
    an array of shape ``(npoints, npolys)`` with entries in ``range(p)``.
    """

    def __init__(self, polys: Sequence[MultiPoly], p: int):
        self.p = p
        self.nvars = len(polys[0].vt) if polys else 0
        self.compiled = []
        for f in polys:
            terms = []
            for k, c in f.terms.items():
                v = c.value
                if f.field.kind == "rational":
                    if v.denominator % p == 0:
                        raise ZeroDivisionError(f"coefficient {v} not defined mod {p}")
                    cv = v.numerator * pow(v.denominator, -1, p) % p
                else:
                    cv = v % p
                if cv:
                    terms.append((cv, [(i, e) for i, e in enumerate(k) if e]))
            self.compiled.append(terms)

    def __call__(self, points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype=np.int64) % self.p
        n = points.shape[0]
        out = np.zeros((n, len(self.compiled)), dtype=np.int64)
        p = self.p
        for col, terms in enumerate(self.compiled):
            acc = np.zeros(n, dtype=np.int64)
            for cv, factors in terms:
                t = np.full(n, cv, dtype=np.int64)
                for i, e in factors:
                    for _ in range(e):
                        t = t * points[:, i] % p
                acc = (acc + t) % p
            out[:, col] = acc
        return out
