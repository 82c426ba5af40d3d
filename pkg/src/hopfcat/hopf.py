"""Finite-dimensional Hopf algebras given by structure constants.

Basis elements are indexed ``0..dim-1``.  Tensor powers use row-major flat
indices: ``e_i (x) e_j`` is index ``i*dim + j``.  Elements are sparse dicts.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from itertools import chain
from typing import Iterable, NamedTuple

from .errors import (AxiomFailure, DimensionMismatchError, FieldMismatchError, InternalError,
                     MalformedInputError)
from .linalg import (FieldSpec, Matrix, Quotient, Subspace, axpy, check_same_field, clean,
                     kernel_of_columns, scale, tensor)


# ---------------------------------------------------------------- reports


@dataclass
class AxiomResult:
    name: str
    passed: bool
    witness: tuple | None = None


@dataclass
class AxiomReport:
    results: list[AxiomResult] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def add(self, name: str, witness=None):
        self.results.append(AxiomResult(name, witness is None, witness))

    def extend(self, other: AxiomReport, prefix: str = ""):
        for r in other.results:
            self.results.append(AxiomResult(prefix + r.name, r.passed, r.witness))

    def first_failure(self) -> AxiomResult | None:
        return next((r for r in self.results if not r.passed), None)

    def __getitem__(self, name: str) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def failed(self) -> list[str]:
        return [r.name for r in self.results if not r.passed]

    def raise_if_failed(self):
        if not self.ok:
            raise AxiomFailure(self)

    def format(self) -> str:
        lines = []
        for r in self.results:
            line = f"{'PASS' if r.passed else 'FAIL'} {r.name}"
            if r.witness is not None:
                line += f" witness={list(r.witness)}"
            lines.append(line)
        return "\n".join(lines)


def _first(pairs: Iterable[tuple]):
    """First witness tuple from an iterable of (witness, holds) pairs, else None."""
    for wit, holds in pairs:
        if not holds:
            return wit
    return None


# ---------------------------------------------------------------- Hopf algebras


class HopfAlgebra:
    """Hopf algebra over ``field`` with structure constants in a fixed basis.

    The constructor takes the sparse tables directly:

    * ``mult``: list of ``dim*dim`` sparse vectors, entry ``i*dim+j`` is ``e_i e_j``
    * ``unit``: sparse vector ``1_A``
    * ``comult``: list of ``dim`` sparse vectors on the flat ``dim*dim`` basis
    * ``counit``: list of ``dim`` scalars
    * ``antipode``: list of ``dim`` sparse vectors

    Use :meth:`from_matrices` to build one from the dense matrix form.
    """

    def __init__(self, field: FieldSpec, dim: int, mult, unit, comult, counit, antipode,
                 name: str | None = None):
        self.field = field
        self.dim = dim
        self.mult_table = mult if isinstance(mult, _ProductTable) else [clean(field, v) for v in mult]
        self.unit_vec = clean(field, unit)
        self.comult_table = [clean(field, v) for v in comult]
        self.counit_row = [field.norm(x) for x in counit]
        self.antipode_table = [clean(field, v) for v in antipode]
        self.name = name
        self._check_shapes()

    def _check_shapes(self):
        d = self.dim
        if d < 1:
            raise MalformedInputError("a Hopf algebra has dimension at least 1")
        if len(self.mult_table) != d * d:
            raise MalformedInputError(f"mult has {len(self.mult_table)} columns, expected {d * d}")
        if len(self.comult_table) != d or len(self.counit_row) != d or len(self.antipode_table) != d:
            raise MalformedInputError("comult/counit/antipode lengths must equal dim")
        mults = [] if isinstance(self.mult_table, _ProductTable) else self.mult_table
        for v in chain(mults, [self.unit_vec], self.antipode_table):
            if any(not 0 <= k < d for k in v):
                raise MalformedInputError("basis index out of range")
        for v in self.comult_table:
            if any(not 0 <= k < d * d for k in v):
                raise MalformedInputError("tensor index out of range")

    @classmethod
    def from_matrices(cls, field: FieldSpec, mult: Matrix, unit: Matrix, comult: Matrix,
                      counit: Matrix, antipode: Matrix, name: str | None = None) -> HopfAlgebra:
        d = antipode.rows
        shapes = {
            "mult": (mult, (d, d * d)), "unit": (unit, (d, 1)), "comult": (comult, (d * d, d)),
            "counit": (counit, (1, d)), "antipode": (antipode, (d, d)),
        }
        for key, (m, shape) in shapes.items():
            if m.field != field:
                raise FieldMismatchError(f"{key} is over {m.field}, expected {field}")
            if (m.rows, m.cols) != shape:
                raise MalformedInputError(f"{key} has shape {m.rows}x{m.cols}, expected {shape[0]}x{shape[1]}")
        return cls(field, d, mult.columns(), unit.column(0), comult.columns(),
                   list(counit.entries[0]), antipode.columns(), name)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<HopfAlgebra{label} dim={self.dim} over {self.field}>"

    # dense views

    @cached_property
    def mult(self) -> Matrix:
        return Matrix.from_columns(self.field, self.dim, self.mult_table)

    @cached_property
    def unit(self) -> Matrix:
        return Matrix.from_columns(self.field, self.dim, [self.unit_vec])

    @cached_property
    def comult(self) -> Matrix:
        return Matrix.from_columns(self.field, self.dim * self.dim, self.comult_table)

    @cached_property
    def counit(self) -> Matrix:
        return Matrix(self.field, 1, self.dim, (tuple(self.counit_row),))

    @cached_property
    def antipode(self) -> Matrix:
        return Matrix.from_columns(self.field, self.dim, self.antipode_table)

    def same_structure(self, other: HopfAlgebra) -> bool:
        """Bit-exact equality of all structure constants in the fixed basis."""
        return (self.field == other.field and self.dim == other.dim
                and list(self.mult_table) == list(other.mult_table) and self.unit_vec == other.unit_vec
                and self.comult_table == other.comult_table
                and self.counit_row == other.counit_row
                and self.antipode_table == other.antipode_table)

    # element arithmetic

    @cached_property
    def coproduct_terms(self) -> list[list[tuple[int, int, object]]]:
        d = self.dim
        return [[(k // d, k % d, c) for k, c in sorted(v.items())] for v in self.comult_table]

    def one(self) -> dict:
        return dict(self.unit_vec)

    def basis_vec(self, i: int) -> dict:
        return {i: 1}

    def mul(self, u: dict, v: dict) -> dict:
        F, d, table = self.field, self.dim, self.mult_table
        out: dict = {}
        for i, a in u.items():
            row = i * d
            for j, b in v.items():
                axpy(F, out, table[row + j], a * b)
        return out

    def mul_all(self, *vs: dict) -> dict:
        out = vs[0]
        for v in vs[1:]:
            out = self.mul(out, v)
        return out

    def delta(self, u: dict) -> dict:
        out: dict = {}
        for i, a in u.items():
            axpy(self.field, out, self.comult_table[i], a)
        return out

    def eps(self, u: dict):
        return self.field.norm(sum(a * self.counit_row[i] for i, a in u.items()))

    def S(self, u: dict) -> dict:
        out: dict = {}
        for i, a in u.items():
            axpy(self.field, out, self.antipode_table[i], a)
        return out

    def split(self, t: dict, d2: int | None = None):
        """Iterate a flat tensor as ``(i, j, coefficient)`` triples."""
        d2 = self.dim if d2 is None else d2
        for k, c in t.items():
            yield k // d2, k % d2, c

    def sweedler(self, u: dict, n: int = 2):
        """Iterate ``u_1 (x) ... (x) u_n`` as ``(indices, coefficient)`` over basis tensors."""
        F = self.field
        terms = [((i,), a) for i, a in u.items()]
        for _ in range(n - 1):
            nxt = []
            for idx, a in terms:
                for i1, i2, c in self.coproduct_terms[idx[-1]]:
                    nxt.append((idx[:-1] + (i1, i2), F.norm(a * c)))
            terms = nxt
        return terms

    def adjoint(self, a: dict, x: dict) -> dict:
        """``a_1 x S(a_2)``."""
        out: dict = {}
        for (i, j), c in self.sweedler(a):
            axpy(self.field, out, self.mul(self.mul({i: 1}, x), self.antipode_table[j]), c)
        return out

    # properties

    @cached_property
    def is_cocommutative(self) -> bool:
        d = self.dim
        for v in self.comult_table:
            for k, c in v.items():
                i, j = divmod(k, d)
                if v.get(j * d + i) != c:
                    return False
        return True

    @cached_property
    def is_commutative(self) -> bool:
        d = self.dim
        return all(self.mult_table[i * d + j] == self.mult_table[j * d + i]
                   for i in range(d) for j in range(i + 1, d))

    def require_cocommutative(self):
        if not self.is_cocommutative:
            report = AxiomReport()
            report.add("cocommutativity", _cocommutativity_witness(self))
            raise AxiomFailure(report)

    def matches(self, other: HopfAlgebra):
        check_same_field(self.field, other.field)


def _cocommutativity_witness(h: HopfAlgebra):
    d = h.dim
    for i, v in enumerate(h.comult_table):
        for k, c in v.items():
            a, b = divmod(k, d)
            if v.get(b * d + a) != c:
                return (i,)
    return None


def trivial_algebra(field: FieldSpec) -> HopfAlgebra:
    """The ground field K as a one-dimensional Hopf algebra."""
    return HopfAlgebra(field, 1, [{0: 1}], {0: 1}, [{0: 1}], [1], [{0: 1}], name="K")


def check_hopf_axioms(h: HopfAlgebra) -> AxiomReport:
    """Evaluate every Hopf algebra axiom on all basis tuples.

    Each failing axiom carries the first basis tuple witnessing the failure.
    """
    F, d = h.field, h.dim
    rep = AxiomReport()
    e = [{i: 1} for i in range(d)]
    one = h.one()
    dd = d * d
    mt = h.mult_table

    def assoc():
        for i in range(d):
            for j in range(d):
                ij = mt[i * d + j]
                for k in range(d):
                    yield (i, j, k), h.mul(ij, e[k]) == h.mul(e[i], mt[j * d + k])

    rep.add("associativity", _first(assoc()))
    rep.add("unit-left", _first(((i,), h.mul(one, e[i]) == e[i]) for i in range(d)))
    rep.add("unit-right", _first(((i,), h.mul(e[i], one) == e[i]) for i in range(d)))

    def coassoc(i):
        left: dict = {}
        right: dict = {}
        for a, b, c in h.coproduct_terms[i]:
            axpy(F, left, tensor(F, h.comult_table[a], e[b], d), c)
            axpy(F, right, tensor(F, e[a], h.comult_table[b], dd), c)
        return left == right

    rep.add("coassociativity", _first(((i,), coassoc(i)) for i in range(d)))

    def counit_side(i, left):
        out: dict = {}
        for a, b, c in h.coproduct_terms[i]:
            if left:
                axpy(F, out, e[b], c * h.counit_row[a])
            else:
                axpy(F, out, e[a], c * h.counit_row[b])
        return out == e[i]

    rep.add("counit-left", _first(((i,), counit_side(i, True)) for i in range(d)))
    rep.add("counit-right", _first(((i,), counit_side(i, False)) for i in range(d)))

    def delta_product(u: dict, v: dict) -> dict:
        # product in A (x) A of two tensors
        out: dict = {}
        for a1, a2, c in h.split(u):
            for b1, b2, c2 in h.split(v):
                axpy(F, out, tensor(F, mt[a1 * d + b1], mt[a2 * d + b2], d), c * c2)
        return out

    rep.add("bialgebra-mult", _first(
        ((i, j), h.delta(mt[i * d + j]) == delta_product(h.comult_table[i], h.comult_table[j]))
        for i in range(d) for j in range(d)))
    rep.add("bialgebra-counit", _first(
        ((i, j), h.eps(mt[i * d + j]) == F.norm(h.counit_row[i] * h.counit_row[j]))
        for i in range(d) for j in range(d)))
    rep.add("comult-unit", None if h.delta(one) == tensor(F, one, one, d) else ())
    rep.add("counit-unit", None if h.eps(one) == 1 else ())

    def antipode_side(i, left):
        out: dict = {}
        for a, b, c in h.coproduct_terms[i]:
            if left:
                axpy(F, out, h.mul(e[a], h.antipode_table[b]), c)
            else:
                axpy(F, out, h.mul(h.antipode_table[a], e[b]), c)
        return out == scale(F, one, h.counit_row[i])

    rep.add("antipode-left", _first(((i,), antipode_side(i, True)) for i in range(d)))
    rep.add("antipode-right", _first(((i,), antipode_side(i, False)) for i in range(d)))
    rep.add("cocommutativity", _cocommutativity_witness(h))
    return rep


# ---------------------------------------------------------------- morphisms


class HopfMorphism:
    """Linear map ``source -> target`` given by a ``target.dim x source.dim`` matrix."""

    def __init__(self, source: HopfAlgebra, target: HopfAlgebra, columns: Sequence[dict],
                 name: str | None = None):
        check_same_field(source.field, target.field)
        if len(columns) != source.dim:
            raise MalformedInputError("morphism needs one column per source basis vector")
        F = source.field
        self.source = source
        self.target = target
        self.cols = [clean(F, c) for c in columns]
        for c in self.cols:
            if any(not 0 <= k < target.dim for k in c):
                raise MalformedInputError("morphism image index out of range")
        self.name = name

    @classmethod
    def from_matrix(cls, source: HopfAlgebra, target: HopfAlgebra, m: Matrix, name=None) -> HopfMorphism:
        if (m.rows, m.cols) != (target.dim, source.dim):
            raise MalformedInputError(f"map must be {target.dim}x{source.dim}, got {m.rows}x{m.cols}")
        return cls(source, target, m.columns(), name)

    @classmethod
    def from_function(cls, source: HopfAlgebra, target: HopfAlgebra, fn, name=None) -> HopfMorphism:
        return cls(source, target, [fn({i: 1}) for i in range(source.dim)], name)

    @classmethod
    def identity(cls, a: HopfAlgebra) -> HopfMorphism:
        return cls(a, a, [{i: 1} for i in range(a.dim)], "id")

    @classmethod
    def zero(cls, a: HopfAlgebra, b: HopfAlgebra) -> HopfMorphism:
        """The morphism ``u_B . eps_A`` factoring through K."""
        return cls(a, b, [scale(a.field, b.unit_vec, a.counit_row[i]) for i in range(a.dim)], "zero")

    @cached_property
    def map(self) -> Matrix:
        return Matrix.from_columns(self.source.field, self.target.dim, self.cols)

    def __repr__(self):
        return f"<HopfMorphism {self.source!r} -> {self.target!r}>"

    def __call__(self, vec: dict) -> dict:
        out: dict = {}
        F = self.source.field
        for i, c in vec.items():
            axpy(F, out, self.cols[i], c)
        return out

    def __matmul__(self, other: HopfMorphism) -> HopfMorphism:
        """Composition ``self . other``."""
        if other.target is not self.source and other.target.dim != self.source.dim:
            raise DimensionMismatchError("morphisms are not composable")
        return HopfMorphism(other.source, self.target, [self(c) for c in other.cols])

    def same_map(self, other: HopfMorphism) -> bool:
        return self.cols == other.cols

    @cached_property
    def rank(self) -> int:
        return Subspace.span(self.source.field, self.target.dim, self.cols).dim

    @property
    def is_surjective(self) -> bool:
        return self.rank == self.target.dim

    @property
    def is_injective(self) -> bool:
        return self.rank == self.source.dim

    @property
    def is_iso(self) -> bool:
        return self.source.dim == self.target.dim and self.is_surjective

    def image(self) -> Subspace:
        return Subspace.span(self.source.field, self.target.dim, self.cols)

    def linear_kernel(self) -> Subspace:
        return kernel_of_columns(self.source.field, self.cols, self.source.dim)

    def tensor_apply(self, t: dict, other: HopfMorphism | None = None) -> dict:
        """``(self (x) other)(t)`` for a flat tensor ``t`` in source (x) other.source."""
        other = self if other is None else other
        F = self.source.field
        out: dict = {}
        for i, j, c in self.source.split(t, other.source.dim):
            axpy(F, out, tensor(F, self.cols[i], other.cols[j], other.target.dim), c)
        return out


def check_morphism(f: HopfMorphism) -> AxiomReport:
    A, B = f.source, f.target
    F, d = A.field, A.dim
    rep = AxiomReport()
    e = [{i: 1} for i in range(d)]
    rep.add("algebra-mult", _first(
        ((i, j), f(A.mult_table[i * d + j]) == B.mul(f.cols[i], f.cols[j]))
        for i in range(d) for j in range(d)))
    rep.add("algebra-unit", None if f(A.unit_vec) == B.unit_vec else ())
    rep.add("coalgebra-comult", _first(
        ((i,), f.tensor_apply(A.comult_table[i]) == B.delta(f.cols[i])) for i in range(d)))
    rep.add("coalgebra-counit", _first(
        ((i,), B.eps(f.cols[i]) == A.counit_row[i]) for i in range(d)))
    rep.add("antipode-commutes", _first(
        ((i,), f(A.antipode_table[i]) == B.S(f.cols[i])) for i in range(d)))
    return rep


def require_morphism(f: HopfMorphism) -> HopfMorphism:
    check_morphism(f).raise_if_failed()
    return f


# ---------------------------------------------------------------- tensor products


class TensorProduct(NamedTuple):
    product: HopfAlgebra
    p1: HopfMorphism
    p2: HopfMorphism


class _ProductTable(Sequence):
    """Multiplication table of ``A (x) B``, filled in on first access.

    Pullbacks live inside tensor products whose full table has ``dim^2``
    entries, most of which are never needed.
    """

    def __init__(self, a: HopfAlgebra, b: HopfAlgebra):
        self.a, self.b = a, b
        self.d = a.dim * b.dim
        self._cache: dict[int, dict] = {}

    def __len__(self):
        return self.d * self.d

    def __getitem__(self, k):
        if isinstance(k, slice):
            return [self[i] for i in range(*k.indices(len(self)))]
        if k < 0:
            k += len(self)
        if not 0 <= k < len(self):
            raise IndexError(k)
        v = self._cache.get(k)
        if v is None:
            a, b = self.a, self.b
            da, db = a.dim, b.dim
            i, j = divmod(k, self.d)
            ia, ib = divmod(i, db)
            ja, jb = divmod(j, db)
            v = tensor(a.field, a.mult_table[ia * da + ja], b.mult_table[ib * db + jb], db)
            self._cache[k] = v
        return v


def tensor_algebra(a: HopfAlgebra, b: HopfAlgebra, name: str | None = None) -> HopfAlgebra:
    F = check_same_field(a.field, b.field)
    da, db = a.dim, b.dim
    d = da * db
    mult = _ProductTable(a, b)
    comult = []
    for i in range(d):
        ia, ib = divmod(i, db)
        out: dict = {}
        for a1, a2, c in a.coproduct_terms[ia]:
            for b1, b2, c2 in b.coproduct_terms[ib]:
                k = (a1 * db + b1) * d + (a2 * db + b2)
                out[k] = F.norm(out.get(k, 0) + c * c2)
        comult.append(out)
    counit = [F.norm(a.counit_row[i // db] * b.counit_row[i % db]) for i in range(d)]
    antipode = [tensor(F, a.antipode_table[i // db], b.antipode_table[i % db], db) for i in range(d)]
    unit = tensor(F, a.unit_vec, b.unit_vec, db)
    return HopfAlgebra(F, d, mult, unit, comult, counit, antipode,
                       name or f"({a.name or 'A'})(x)({b.name or 'B'})")


def tensor_product(a: HopfAlgebra, b: HopfAlgebra) -> TensorProduct:
    """Categorical product ``A (x) B`` with projections ``a(x)b -> a eps(b)`` and ``eps(a) b``."""
    prod = tensor_algebra(a, b)
    db = b.dim
    p1 = HopfMorphism(prod, a, [scale(a.field, {i // db: 1}, b.counit_row[i % db]) for i in range(prod.dim)], "p1")
    p2 = HopfMorphism(prod, b, [scale(a.field, {i % db: 1}, a.counit_row[i // db]) for i in range(prod.dim)], "p2")
    return TensorProduct(prod, p1, p2)


def pairing(f: HopfMorphism, g: HopfMorphism, product: HopfAlgebra | None = None) -> HopfMorphism:
    """The map ``t -> f(t_1) (x) g(t_2)`` into ``f.target (x) g.target``."""
    if f.source is not g.source and f.source.dim != g.source.dim:
        raise DimensionMismatchError("pairing needs a common source")
    T = f.source
    if product is None:
        product = tensor_algebra(f.target, g.target)
    cols = [f.tensor_apply(T.comult_table[i], g) for i in range(T.dim)]
    return HopfMorphism(T, product, cols, "pairing")


# ---------------------------------------------------------------- subobjects


def tensor_coords(W1: Subspace, W2: Subspace, vec: dict) -> dict | None:
    """Coordinates of ``vec`` in the basis ``w1_a (x) w2_b`` of ``W1 (x) W2``, or None."""
    F = W1.field
    d2 = W2.ambient_dim
    n2 = W2.dim
    coords: dict = {}
    p1, p2 = W1._pivot_rows, W2._pivot_rows
    for k, c in vec.items():
        i, j = divmod(k, d2)
        if i in p1 and j in p2 and c:
            coords[p1[i][0] * n2 + p2[j][0]] = c
    rebuilt: dict = {}
    for k, c in coords.items():
        a, b = divmod(k, n2)
        axpy(F, rebuilt, tensor(F, dict(W1.rows[a]), dict(W2.rows[b]), d2), c)
    return coords if rebuilt == clean(F, vec) else None


def plus_part(h) -> Subspace:
    """The augmentation subspace ``{x : eps(x) = 0}`` of an algebra or subalgebra."""
    if isinstance(h, HopfSubalgebra):
        A = h.ambient
        return h.space.kernel_of([{0: A.eps(v)} for v in h.space.vectors()])
    return kernel_of_columns(h.field, [{0: x} if x else {} for x in h.counit_row], h.dim)


def subspace_plus(A: HopfAlgebra, w: Subspace) -> Subspace:
    return w.kernel_of([{0: A.eps(v)} for v in w.vectors()])


def restrict_algebra(A: HopfAlgebra, W: Subspace, name: str | None = None) -> HopfAlgebra:
    """The Hopf algebra structure induced on a Hopf subalgebra ``W``, in its RREF basis."""
    F = A.field
    vecs = W.vectors()
    n = W.dim
    mult = []
    for u in vecs:
        for v in vecs:
            c = W.sparse_coords(A.mul(u, v))
            if c is None:
                raise InternalError("subspace is not closed under multiplication")
            mult.append(c)
    comult = []
    for u in vecs:
        c = tensor_coords(W, W, A.delta(u))
        if c is None:
            raise InternalError("subspace is not a subcoalgebra")
        comult.append(c)
    anti = [W.coord_vec(A.S(u)) for u in vecs]
    return HopfAlgebra(F, n, mult, W.coord_vec(A.one()), comult, [A.eps(u) for u in vecs], anti, name)


class HopfSubalgebra:
    """A Hopf subalgebra of ``ambient`` carried by a canonical subspace."""

    def __init__(self, ambient: HopfAlgebra, space: Subspace, validate: bool = True, name: str | None = None):
        if space.ambient_dim != ambient.dim:
            raise DimensionMismatchError("subspace is not inside the ambient carrier")
        check_same_field(ambient.field, space.field)
        self.ambient = ambient
        self.space = space
        self.name = name
        if validate:
            self.check().raise_if_failed()

    @classmethod
    def whole(cls, A: HopfAlgebra) -> HopfSubalgebra:
        return cls(A, Subspace.full(A.field, A.dim), validate=False, name=A.name)

    @classmethod
    def trivial(cls, A: HopfAlgebra) -> HopfSubalgebra:
        return cls(A, Subspace.span(A.field, A.dim, [A.unit_vec]), validate=False, name="K")

    def check(self) -> AxiomReport:
        A, W = self.ambient, self.space
        vecs = W.vectors()
        rep = AxiomReport()
        rep.add("contains-unit", None if W.contains_vec(A.unit_vec) else ())
        rep.add("mult-closed", _first(((a, b), W.contains_vec(A.mul(u, v)))
                                      for a, u in enumerate(vecs) for b, v in enumerate(vecs)))
        rep.add("subcoalgebra", _first(((a,), tensor_coords(W, W, A.delta(u)) is not None)
                                       for a, u in enumerate(vecs)))
        rep.add("antipode-stable", _first(((a,), W.contains_vec(A.S(u))) for a, u in enumerate(vecs)))
        return rep

    @property
    def dim(self) -> int:
        return self.space.dim

    def __eq__(self, other):
        if not isinstance(other, HopfSubalgebra):
            return NotImplemented
        return self.space == other.space and self.ambient.dim == other.ambient.dim

    def __hash__(self):
        return hash(self.space)

    def __le__(self, other: HopfSubalgebra) -> bool:
        return other.space.contains(self.space)

    def __repr__(self):
        return f"<HopfSubalgebra dim={self.dim} of {self.ambient!r}>"

    @cached_property
    def algebra(self) -> HopfAlgebra:
        return restrict_algebra(self.ambient, self.space, self.name)

    @cached_property
    def inclusion(self) -> HopfMorphism:
        return HopfMorphism(self.algebra, self.ambient, self.space.vectors(), "incl")

    def plus(self) -> Subspace:
        return plus_part(self)


class LeftIdealCoideal:
    """A left ideal and two-sided coideal with ``eps = 0``."""

    def __init__(self, ambient: HopfAlgebra, space: Subspace, validate: bool = True):
        if space.ambient_dim != ambient.dim:
            raise DimensionMismatchError("subspace is not inside the ambient carrier")
        self.ambient = ambient
        self.space = space
        if validate:
            self.check().raise_if_failed()

    def check(self) -> AxiomReport:
        A, I = self.ambient, self.space
        vecs = I.vectors()
        q = Quotient(I)
        F = A.field
        rep = AxiomReport()
        rep.add("left-ideal", _first(((i, k), I.contains_vec(A.mul({i: 1}, v)))
                                     for i in range(A.dim) for k, v in enumerate(vecs)))
        rep.add("counit-vanishes", _first(((k,), A.eps(v) == 0) for k, v in enumerate(vecs)))

        def coideal(v):
            # (pi (x) pi) Delta(v) == 0 iff Delta(v) in I(x)A + A(x)I
            img: dict = {}
            cache: dict = {}
            for a, b, c in A.split(A.delta(v)):
                pa = cache.get(a) or cache.setdefault(a, q({a: 1}))
                pb = cache.get(b) or cache.setdefault(b, q({b: 1}))
                axpy(F, img, tensor(F, pa, pb, q.dim), c)
            return not img

        rep.add("two-sided-coideal", _first(((k,), coideal(v)) for k, v in enumerate(vecs)))
        return rep

    def __eq__(self, other):
        if not isinstance(other, LeftIdealCoideal):
            return NotImplemented
        return self.space == other.space

    def __hash__(self):
        return hash(self.space)

    @property
    def dim(self) -> int:
        return self.space.dim

    def __repr__(self):
        return f"<LeftIdealCoideal dim={self.dim} of {self.ambient!r}>"


# ---------------------------------------------------------------- quotients


def ideal_closure(A: HopfAlgebra, w: Subspace) -> Subspace:
    """Smallest two-sided ideal containing ``w``: alternate left and right passes to a fixpoint."""
    J = w
    for _ in range(A.dim + 1):
        vecs = J.vectors()
        left = [A.mul({i: 1}, v) for i in range(A.dim) for v in vecs]
        nxt = Subspace.span(A.field, A.dim, vecs + left)
        vecs = nxt.vectors()
        right = [A.mul(v, {i: 1}) for i in range(A.dim) for v in vecs]
        nxt = Subspace.span(A.field, A.dim, vecs + right)
        if nxt.dim == J.dim:
            return nxt
        J = nxt
    raise InternalError("ideal closure did not stabilize")


def check_hopf_ideal(A: HopfAlgebra, J: Subspace) -> AxiomReport:
    rep = AxiomReport()
    vecs = J.vectors()
    rep.add("two-sided-ideal", _first(
        ((i, k), J.contains_vec(A.mul({i: 1}, v)) and J.contains_vec(A.mul(v, {i: 1})))
        for i in range(A.dim) for k, v in enumerate(vecs)))
    coideal = LeftIdealCoideal(A, J, validate=False).check()
    rep.results.append(coideal["two-sided-coideal"])
    rep.results.append(coideal["counit-vanishes"])
    rep.add("antipode-stable", _first(((k,), J.contains_vec(A.S(v))) for k, v in enumerate(vecs)))
    return rep


class QuotientResult(NamedTuple):
    quotient: HopfAlgebra
    proj: HopfMorphism
    reps: list  # ambient basis index representing each quotient basis vector


def quotient_algebra(A: HopfAlgebra, J: Subspace, name: str | None = None, verify: bool = True) -> QuotientResult:
    """``A / J`` for a Hopf ideal ``J``; the basis is the coset representatives."""
    if verify:
        rep = check_hopf_ideal(A, J)
        if not rep.ok:
            raise InternalError(f"not a Hopf ideal: {rep.failed()}")
    F = A.field
    q = Quotient(J)
    reps = q.reps
    n = q.dim
    cols = [q({i: 1}) for i in range(A.dim)]

    def pi2(t: dict) -> dict:
        out: dict = {}
        for a, b, c in A.split(t):
            axpy(F, out, tensor(F, cols[a], cols[b], n), c)
        return out

    mult = [q(A.mult_table[i * A.dim + j]) for i in reps for j in reps]
    comult = [pi2(A.comult_table[i]) for i in reps]
    Q = HopfAlgebra(F, n, mult, q(A.unit_vec), comult, [A.counit_row[i] for i in reps],
                    [q(A.antipode_table[i]) for i in reps], name)
    return QuotientResult(Q, HopfMorphism(A, Q, cols, "proj"), list(reps))


# ---------------------------------------------------------------- duals and subcoalgebras


def dual_fd(h: HopfAlgebra) -> HopfAlgebra:
    """Linear dual: transpose every structure map, swapping the algebra and coalgebra halves."""
    F, d = h.field, h.dim
    mult = [dict() for _ in range(d * d)]
    for k, v in enumerate(h.comult_table):
        for ij, c in v.items():
            mult[ij][k] = c
    comult = [dict() for _ in range(d)]
    for ij, v in enumerate(h.mult_table):
        for k, c in v.items():
            comult[k][ij] = c
    antipode = [dict() for _ in range(d)]
    for j, v in enumerate(h.antipode_table):
        for i, c in v.items():
            antipode[i][j] = c
    unit = {i: x for i, x in enumerate(h.counit_row) if x}
    counit = [h.unit_vec.get(i, 0) for i in range(d)]
    return HopfAlgebra(F, d, mult, unit, comult, counit, antipode, f"dual({h.name or 'A'})")


def largest_subcoalgebra_in(h: HopfAlgebra, w: Subspace) -> Subspace:
    """Greatest ``D`` inside ``w`` with ``Delta(D)`` in ``D (x) D``."""
    F, d = h.field, h.dim
    W = w
    for _ in range(d + 1):
        q = Quotient(W)
        cols = [q({i: 1}) for i in range(d)]
        images = []
        for v in W.vectors():
            left: dict = {}
            right: dict = {}
            for a, b, c in h.split(h.delta(v)):
                axpy(F, left, {k * d + b: x for k, x in cols[a].items()}, c)
                axpy(F, right, {a * q.dim + k: x for k, x in cols[b].items()}, c)
            # stack both conditions in one target space
            off = q.dim * d
            images.append({**left, **{off + k: x for k, x in right.items()}})
        nxt = W.kernel_of(images)
        if nxt.dim == W.dim:
            return nxt
        W = nxt
    raise InternalError("subcoalgebra iteration did not stabilize")
