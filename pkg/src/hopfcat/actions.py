"""Module Hopf algebra actions and the smash (semi-direct) product."""

from __future__ import annotations

from functools import cached_property
from typing import NamedTuple

from .errors import AxiomFailure, MalformedInputError
from .hopf import AxiomReport, HopfAlgebra, HopfMorphism, _first, check_hopf_axioms
from .linalg import Matrix, axpy, check_same_field, clean, scale, tensor


class ModuleAction:
    """Linear map ``xi: B (x) X -> X``, written ``b . x``.

    ``table[b*dim(X) + x]`` is the sparse vector ``e_b . e_x``.
    """

    def __init__(self, acting: HopfAlgebra, carrier: HopfAlgebra, table):
        check_same_field(acting.field, carrier.field)
        if len(table) != acting.dim * carrier.dim:
            raise MalformedInputError("action table must have dim(B)*dim(X) columns")
        self.acting = acting
        self.carrier = carrier
        self.table = [clean(carrier.field, v) for v in table]
        if any(k >= carrier.dim or k < 0 for v in self.table for k in v):
            raise MalformedInputError("action image index out of range")

    @classmethod
    def from_matrix(cls, acting: HopfAlgebra, carrier: HopfAlgebra, xi: Matrix) -> ModuleAction:
        if (xi.rows, xi.cols) != (carrier.dim, acting.dim * carrier.dim):
            raise MalformedInputError(f"xi must be {carrier.dim}x{acting.dim * carrier.dim}")
        return cls(acting, carrier, xi.columns())

    @classmethod
    def trivial(cls, acting: HopfAlgebra, carrier: HopfAlgebra) -> ModuleAction:
        """``b . x = eps(b) x``."""
        F = carrier.field
        return cls(acting, carrier, [scale(F, {x: 1}, acting.counit_row[b])
                                     for b in range(acting.dim) for x in range(carrier.dim)])

    @classmethod
    def from_function(cls, acting: HopfAlgebra, carrier: HopfAlgebra, fn) -> ModuleAction:
        return cls(acting, carrier, [fn({b: 1}, {x: 1}) for b in range(acting.dim) for x in range(carrier.dim)])

    @cached_property
    def xi(self) -> Matrix:
        return Matrix.from_columns(self.carrier.field, self.carrier.dim, self.table)

    def act(self, b: dict, x: dict) -> dict:
        F, dx = self.carrier.field, self.carrier.dim
        out: dict = {}
        for i, c in b.items():
            base = i * dx
            for j, c2 in x.items():
                axpy(F, out, self.table[base + j], c * c2)
        return out

    def same_action(self, other: ModuleAction) -> bool:
        return self.table == other.table


def check_action_axioms(a: ModuleAction) -> AxiomReport:
    B, X = a.acting, a.carrier
    F = X.field
    rep = AxiomReport()
    eb = [{i: 1} for i in range(B.dim)]
    ex = [{i: 1} for i in range(X.dim)]
    rep.add("act-composition", _first(
        ((b, b2, x), a.act(B.mul(eb[b], eb[b2]), ex[x]) == a.act(eb[b], a.act(eb[b2], ex[x])))
        for b in range(B.dim) for b2 in range(B.dim) for x in range(X.dim)))
    rep.add("act-unit", _first(((x,), a.act(B.one(), ex[x]) == ex[x]) for x in range(X.dim)))

    def multiplicative(b, x, y):
        rhs: dict = {}
        for b1, b2, c in B.coproduct_terms[b]:
            axpy(F, rhs, X.mul(a.act(eb[b1], ex[x]), a.act(eb[b2], ex[y])), c)
        return a.act(eb[b], X.mul(ex[x], ex[y])) == rhs

    rep.add("act-multiplicative", _first(
        ((b, x, y), multiplicative(b, x, y))
        for b in range(B.dim) for x in range(X.dim) for y in range(X.dim)))
    rep.add("act-unital", _first(
        ((b,), a.act(eb[b], X.one()) == scale(F, X.one(), B.counit_row[b])) for b in range(B.dim)))

    def comultiplicative(b, x):
        rhs: dict = {}
        for b1, b2, c in B.coproduct_terms[b]:
            for x1, x2, c2 in X.coproduct_terms[x]:
                axpy(F, rhs, tensor(F, a.act(eb[b1], ex[x1]), a.act(eb[b2], ex[x2]), X.dim), c * c2)
        return X.delta(a.act(eb[b], ex[x])) == rhs

    rep.add("act-comultiplicative", _first(
        ((b, x), comultiplicative(b, x)) for b in range(B.dim) for x in range(X.dim)))
    rep.add("act-counital", _first(
        ((b, x), X.eps(a.act(eb[b], ex[x])) == F.norm(B.counit_row[b] * X.counit_row[x]))
        for b in range(B.dim) for x in range(X.dim)))
    return rep


class SmashProduct(NamedTuple):
    algebra: HopfAlgebra
    inj_x: HopfMorphism
    inj_b: HopfMorphism
    proj_b: HopfMorphism


def smash_algebra(action: ModuleAction, name: str | None = None) -> HopfAlgebra:
    X, B = action.carrier, action.acting
    F = X.field
    dx, db = X.dim, B.dim
    d = dx * db
    eb = [{i: 1} for i in range(db)]
    # twisted[(b, x')] = sum b_1 . x' (x) b_2  in X (x) B
    twisted = {}
    for b in range(db):
        for x2 in range(dx):
            out: dict = {}
            for b1, b2, c in B.coproduct_terms[b]:
                axpy(F, out, tensor(F, action.table[b1 * dx + x2], eb[b2], db), c)
            twisted[b, x2] = out
    mult = []
    for i in range(d):
        xa, ba = divmod(i, db)
        for j in range(d):
            xb, bb = divmod(j, db)
            out = {}
            for k, c in twisted[ba, xb].items():
                u, v = divmod(k, db)
                axpy(F, out, tensor(F, X.mult_table[xa * dx + u], B.mult_table[v * db + bb], db), c)
            mult.append(out)
    comult = []
    for i in range(d):
        xa, ba = divmod(i, db)
        out = {}
        for x1, x2, c in X.coproduct_terms[xa]:
            for b1, b2, c2 in B.coproduct_terms[ba]:
                k = (x1 * db + b1) * d + (x2 * db + b2)
                out[k] = F.norm(out.get(k, 0) + c * c2)
        comult.append(out)
    counit = [F.norm(X.counit_row[i // db] * B.counit_row[i % db]) for i in range(d)]
    antipode = []
    for i in range(d):
        xa, ba = divmod(i, db)
        out = {}
        sx = X.antipode_table[xa]
        for b1, b2, c in B.coproduct_terms[ba]:
            axpy(F, out, tensor(F, action.act(B.antipode_table[b1], sx), B.antipode_table[b2], db), c)
        antipode.append(out)
    unit = tensor(F, X.unit_vec, B.unit_vec, db)
    return HopfAlgebra(F, d, mult, unit, comult, counit, antipode,
                       name or f"({X.name or 'X'})x|({B.name or 'B'})")


def smash_product(x: HopfAlgebra, b: HopfAlgebra, action: ModuleAction, verify: bool = True) -> SmashProduct:
    """``X x| B`` on the carrier ``X (x) B`` (X index major)."""
    if action.carrier is not x and action.carrier.dim != x.dim or action.acting is not b and action.acting.dim != b.dim:
        raise MalformedInputError("action does not match the given algebras")
    if verify:
        check_action_axioms(action).raise_if_failed()
    A = smash_algebra(action)
    if verify:
        rep = check_hopf_axioms(A)
        if not rep.ok:
            raise AxiomFailure(rep)
    F = x.field
    db = b.dim
    inj_x = HopfMorphism(x, A, [tensor(F, {i: 1}, b.unit_vec, db) for i in range(x.dim)], "inj_x")
    inj_b = HopfMorphism(b, A, [tensor(F, x.unit_vec, {j: 1}, db) for j in range(db)], "inj_b")
    proj_b = HopfMorphism(A, b, [scale(F, {i % db: 1}, x.counit_row[i // db]) for i in range(A.dim)], "proj_b")
    return SmashProduct(A, inj_x, inj_b, proj_b)
