"""Exact scalar fields, dense matrices and canonical subspaces.

Scalars are plain Python numbers: residues ``0 <= x < p`` for prime fields,
``int`` or :class:`fractions.Fraction` for the rationals.  Internally most
computations use sparse vectors, i.e. ``dict[int, scalar]`` without zero
entries.  The dense :class:`Matrix` is the public carrier for linear maps.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import DimensionMismatchError, FieldMismatchError, InvalidPrimeError, MalformedInputError

SparseVec = dict  # int -> scalar, zeros never stored


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.p is not None:
                raise ValueError("the rationals carry no modulus")
        elif self.kind == "Fp":
            if self.p is None or not (2 <= self.p < 2**31) or not _is_prime(self.p):
                raise InvalidPrimeError(f"invalid prime modulus {self.p!r}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls("Q")

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls("Fp", p)

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Parse ``Q`` or ``Fp:<p>`` (``F<p>`` is accepted too)."""
        t = text.strip()
        if t in ("Q", "QQ"):
            return cls.rationals()
        if t.startswith("Fp:"):
            return cls.prime(int(t[3:]))
        if t.startswith("F") and t[1:].isdigit():
            return cls.prime(int(t[1:]))
        raise ValueError(f"cannot parse field {text!r}")

    def __str__(self):
        return "Q" if self.kind == "Q" else f"Fp:{self.p}"

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __call__(self, x):
        """Coerce an int, Fraction or ``"n/d"`` string into this field."""
        if isinstance(x, str):
            x = Fraction(x)
        if self.p is None:
            if isinstance(x, Fraction):
                return x.numerator if x.denominator == 1 else x
            return int(x)
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def norm(self, x):
        return x if self.p is None else x % self.p

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return Fraction(1, x) if isinstance(x, int) else 1 / x
        return pow(x, -1, self.p)

    def neg(self, x):
        return -x if self.p is None else (-x) % self.p


def check_same_field(*fields: FieldSpec) -> FieldSpec:
    first = fields[0]
    for f in fields[1:]:
        if f != first:
            raise FieldMismatchError(f"field mismatch: {first} vs {f}")
    return first


# ---------------------------------------------------------------- sparse vectors


def axpy(F: FieldSpec, acc: dict, vec: dict, c=1) -> dict:
    """In place ``acc += c * vec``; returns ``acc``."""
    p = F.p
    get = acc.get
    if p is None:
        for k, x in vec.items():
            y = get(k, 0) + c * x
            if y:
                acc[k] = y
            else:
                acc.pop(k, None)
    else:
        for k, x in vec.items():
            y = (get(k, 0) + c * x) % p
            if y:
                acc[k] = y
            else:
                acc.pop(k, None)
    return acc


def scale(F: FieldSpec, vec: dict, c) -> dict:
    if not c:
        return {}
    if F.p is None:
        return {k: c * x for k, x in vec.items()}
    p = F.p
    return {k: y for k, x in vec.items() if (y := c * x % p)}


def vsub(F: FieldSpec, u: dict, v: dict) -> dict:
    return axpy(F, dict(u), v, -1)


def tensor(F: FieldSpec, u: dict, v: dict, dim_v: int) -> dict:
    """Sparse Kronecker product with row-major flat indices ``i*dim_v + j``."""
    p = F.p
    out = {}
    for i, a in u.items():
        base = i * dim_v
        for j, b in v.items():
            out[base + j] = a * b if p is None else a * b % p
    return out


def unit_vec(i: int) -> dict:
    return {i: 1}


def clean(F: FieldSpec, vec: dict) -> dict:
    return {k: y for k, x in vec.items() if (y := F.norm(x))}


# ---------------------------------------------------------------- dense matrices


@dataclass(frozen=True)
class Matrix:
    """Dense immutable matrix over an exact field (row-major)."""

    field: FieldSpec
    rows: int
    cols: int
    entries: tuple = dc_field(repr=False)

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise MalformedInputError(f"entry count does not match shape {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, F: FieldSpec, rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
        rows = [tuple(F(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(F, len(rows), cols, tuple(rows))

    @classmethod
    def zeros(cls, F: FieldSpec, rows: int, cols: int) -> Matrix:
        return cls(F, rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, F: FieldSpec, n: int) -> Matrix:
        return cls(F, n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, F: FieldSpec, rows: int, columns: Sequence[dict]) -> Matrix:
        data = [[0] * len(columns) for _ in range(rows)]
        for j, col in enumerate(columns):
            for i, x in col.items():
                if not 0 <= i < rows:
                    raise MalformedInputError(f"row index {i} out of range")
                data[i][j] = x
        return cls(F, rows, len(columns), tuple(tuple(r) for r in data))

    @classmethod
    def from_sparse_rows(cls, F: FieldSpec, rows: Sequence[dict], cols: int) -> Matrix:
        data = []
        for r in rows:
            line = [0] * cols
            for j, x in r.items():
                line[j] = x
            data.append(tuple(line))
        return cls(F, len(rows), cols, tuple(data))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> dict:
        return {i: r[j] for i, r in enumerate(self.entries) if r[j]}

    def columns(self) -> list[dict]:
        cols = [dict() for _ in range(self.cols)]
        for i, r in enumerate(self.entries):
            for j, x in enumerate(r):
                if x:
                    cols[j][i] = x
        return cols

    def row(self, i: int) -> dict:
        return {j: x for j, x in enumerate(self.entries[i]) if x}

    def sparse_rows(self) -> list[dict]:
        return [self.row(i) for i in range(self.rows)]

    def apply(self, vec: dict) -> dict:
        out: dict = {}
        F = self.field
        for j, c in vec.items():
            for i, r in enumerate(self.entries):
                if r[j]:
                    out[i] = out.get(i, 0) + c * r[j]
        return clean(F, out)

    def __matmul__(self, other: Matrix) -> Matrix:
        check_same_field(self.field, other.field)
        if self.cols != other.rows:
            raise DimensionMismatchError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        F = self.field
        ocols = other.columns()
        data = []
        for r in self.entries:
            nz = [(k, x) for k, x in enumerate(r) if x]
            line = []
            for col in ocols:
                s = 0
                for k, x in nz:
                    y = col.get(k)
                    if y:
                        s += x * y
                line.append(F.norm(s))
            data.append(tuple(line))
        return Matrix(F, self.rows, other.cols, tuple(data))

    def _zip(self, other: Matrix, sign: int) -> Matrix:
        check_same_field(self.field, other.field)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatchError("shape mismatch")
        F = self.field
        return Matrix(F, self.rows, self.cols, tuple(
            tuple(F.norm(a + sign * b) for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __add__(self, other: Matrix) -> Matrix:
        return self._zip(other, 1)

    def __sub__(self, other: Matrix) -> Matrix:
        return self._zip(other, -1)

    def scaled(self, c) -> Matrix:
        F = self.field
        c = F(c)
        return Matrix(F, self.rows, self.cols, tuple(tuple(F.norm(c * x) for x in r) for r in self.entries))

    def transpose(self) -> Matrix:
        return Matrix(self.field, self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else
                      tuple(() for _ in range(self.cols)))

    def kron(self, other: Matrix) -> Matrix:
        F = check_same_field(self.field, other.field)
        data = []
        for r in self.entries:
            for s in other.entries:
                data.append(tuple(F.norm(a * b) for a in r for b in s))
        return Matrix(F, self.rows * other.rows, self.cols * other.cols, tuple(data))

    def rank(self) -> int:
        return rref_basis(self).dim

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            x == (1 if i == j else 0) for i, r in enumerate(self.entries) for j, x in enumerate(r))

    def is_zero(self) -> bool:
        return not any(x for r in self.entries for x in r)

    def tolist(self) -> list[list]:
        return [list(r) for r in self.entries]


# ---------------------------------------------------------------- elimination


def _echelon_rows(F: FieldSpec, vectors: Iterable[dict]) -> tuple[list[dict], list[int]]:
    """Canonical reduced row echelon form of the span of ``vectors``.

    Pivot of a row is its first nonzero coordinate.
    """
    basis: dict[int, dict] = {}
    for vec in vectors:
        v = clean(F, vec)
        while v:
            c = min(v)
            row = basis.get(c)
            if row is None:
                a = v[c]
                if a != 1:
                    v = scale(F, v, F.inv(a))
                basis[c] = v
                break
            axpy(F, v, row, F.neg(v[c]))
    pivots = sorted(basis)
    for idx in range(len(pivots) - 1, -1, -1):
        c = pivots[idx]
        row = basis[c]
        for c2 in pivots[:idx]:
            r2 = basis[c2]
            a = r2.get(c)
            if a:
                axpy(F, r2, row, F.neg(a))
    return [basis[c] for c in pivots], pivots


def kernel_of_columns(F: FieldSpec, columns: Sequence[dict], n: int | None = None) -> Subspace:
    """Null space of the linear map whose ``j``-th column is ``columns[j]``."""
    if n is None:
        n = len(columns)
    basis: dict[int, tuple[dict, dict]] = {}
    relations = []
    for j, col in enumerate(columns):
        v = clean(F, col)
        combo = {j: 1}
        while v:
            c = min(v)
            hit = basis.get(c)
            if hit is None:
                a = v[c]
                if a != 1:
                    ai = F.inv(a)
                    v = scale(F, v, ai)
                    combo = scale(F, combo, ai)
                basis[c] = (v, combo)
                break
            a = F.neg(v[c])
            axpy(F, v, hit[0], a)
            axpy(F, combo, hit[1], a)
        else:
            relations.append(combo)
    return Subspace.span(F, n, relations)


# ---------------------------------------------------------------- subspaces


def _freeze(row: dict) -> tuple:
    return tuple(sorted(row.items()))


@dataclass(frozen=True, eq=False)
class Subspace:
    """Subspace of ``F^ambient_dim`` held by its canonical RREF basis.

    Equality is syntactic equality of the RREF rows.
    """

    field: FieldSpec
    ambient_dim: int
    rows: tuple  # tuple of sorted (col, value) tuples, RREF order
    pivots: tuple

    @classmethod
    def span(cls, F: FieldSpec, ambient_dim: int, vectors: Iterable[dict]) -> Subspace:
        vectors = list(vectors)
        for v in vectors:
            for k in v:
                if not 0 <= k < ambient_dim:
                    raise DimensionMismatchError(f"coordinate {k} outside ambient dimension {ambient_dim}")
        rows, pivots = _echelon_rows(F, vectors)
        return cls(F, ambient_dim, tuple(_freeze(r) for r in rows), tuple(pivots))

    @classmethod
    def zero(cls, F: FieldSpec, ambient_dim: int) -> Subspace:
        return cls(F, ambient_dim, (), ())

    @classmethod
    def full(cls, F: FieldSpec, ambient_dim: int) -> Subspace:
        return cls(F, ambient_dim, tuple(((i, 1),) for i in range(ambient_dim)), tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field, self.ambient_dim, self.rows) == (other.field, other.ambient_dim, other.rows)

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, field={self.field})"

    @property
    def basis(self) -> Matrix:
        return Matrix.from_sparse_rows(self.field, self.vectors(), self.ambient_dim)

    def vectors(self) -> list[dict]:
        return [dict(r) for r in self.rows]

    def _compatible(self, other: Subspace):
        check_same_field(self.field, other.field)
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError(f"ambient mismatch: {self.ambient_dim} vs {other.ambient_dim}")

    @cached_property
    def _pivot_rows(self) -> dict:
        return {piv: (i, row) for i, (piv, row) in enumerate(zip(self.pivots, self.rows))}

    def residual(self, vec: dict) -> dict:
        """Reduce ``vec`` modulo the subspace; zero iff ``vec`` lies in it.

        RREF rows vanish at every other pivot, so one pass over the pivots
        present in ``vec`` suffices.
        """
        F = self.field
        out = dict(vec)
        prow = self._pivot_rows
        for piv, a in vec.items():
            hit = prow.get(piv)
            if hit is not None and a:
                for k, x in hit[1]:
                    v = F.norm(out.get(k, 0) - a * x)
                    if v:
                        out[k] = v
                    else:
                        out.pop(k, None)
        return out

    def coords(self, vec: dict) -> list | None:
        """Coordinates of ``vec`` in the RREF basis, or None if not a member."""
        if self.residual(vec):
            return None
        return [vec.get(piv, 0) for piv in self.pivots]

    def sparse_coords(self, vec: dict) -> dict | None:
        if self.residual(vec):
            return None
        prow = self._pivot_rows
        return {prow[k][0]: x for k, x in vec.items() if k in prow and x}

    def coord_vec(self, vec: dict) -> dict:
        c = self.coords(vec)
        if c is None:
            raise DimensionMismatchError("vector does not lie in the subspace")
        return {i: x for i, x in enumerate(c) if x}

    def embed(self, coords: dict) -> dict:
        out: dict = {}
        for i, c in coords.items():
            axpy(self.field, out, dict(self.rows[i]), c)
        return out

    def contains_vec(self, vec: dict) -> bool:
        return not self.residual(vec)

    def contains(self, other: Subspace) -> bool:
        self._compatible(other)
        return all(not self.residual(dict(r)) for r in other.rows)

    def __le__(self, other: Subspace) -> bool:
        return other.contains(self)

    def __add__(self, other: Subspace) -> Subspace:
        self._compatible(other)
        return Subspace.span(self.field, self.ambient_dim, self.vectors() + other.vectors())

    def __and__(self, other: Subspace) -> Subspace:
        self._compatible(other)
        return self.kernel_of([other.residual(dict(r)) for r in self.rows])

    def kernel_of(self, images: Sequence[dict]) -> Subspace:
        """Elements ``sum x_i b_i`` (``b_i`` the basis rows) with ``sum x_i images[i] = 0``."""
        F = self.field
        rel = kernel_of_columns(F, images, self.dim)
        vecs = []
        for r in rel.rows:
            v: dict = {}
            for i, c in r:
                axpy(F, v, dict(self.rows[i]), c)
            vecs.append(v)
        return Subspace.span(F, self.ambient_dim, vecs)


# ---------------------------------------------------------------- public operations


def rref_basis(vectors: Matrix) -> Subspace:
    """Canonical subspace spanned by the rows of ``vectors``."""
    return Subspace.span(vectors.field, vectors.cols, vectors.sparse_rows())


def kernel_space(f: Matrix) -> Subspace:
    return kernel_of_columns(f.field, f.columns(), f.cols)


def image_space(f: Matrix) -> Subspace:
    return Subspace.span(f.field, f.rows, f.columns())


class SubspaceOps(NamedTuple):
    sum: Subspace
    intersection: Subspace
    contains: bool  # a contains b
    equals: bool


def subspace_ops(a: Subspace, b: Subspace) -> SubspaceOps:
    a._compatible(b)
    return SubspaceOps(a + b, a & b, a.contains(b), a == b)


class QuotientSplit(NamedTuple):
    proj: Matrix
    section: Matrix
    coset_basis: list


def quotient_split(ambient_dim: int, w: Subspace) -> QuotientSplit:
    """Projection onto ``F^n / w`` with coset representatives the non-pivot coordinates."""
    if w.ambient_dim != ambient_dim:
        raise DimensionMismatchError("subspace lives in a different ambient space")
    F = w.field
    reps = [j for j in range(ambient_dim) if j not in set(w.pivots)]
    pos = {j: k for k, j in enumerate(reps)}
    cols = []
    for i in range(ambient_dim):
        r = w.residual({i: 1})
        cols.append({pos[j]: x for j, x in r.items()})
    proj = Matrix.from_columns(F, len(reps), cols)
    section = Matrix.from_columns(F, ambient_dim, [{j: 1} for j in reps])
    return QuotientSplit(proj, section, reps)


class Quotient:
    """Sparse helper for ``F^n -> F^n / w`` used by the algebra layers."""

    def __init__(self, w: Subspace):
        self.space = w
        self.reps = [j for j in range(w.ambient_dim) if j not in set(w.pivots)]
        self._pos = {j: k for k, j in enumerate(self.reps)}
        self.dim = len(self.reps)

    def __call__(self, vec: dict) -> dict:
        pos = self._pos
        return {pos[j]: x for j, x in self.space.residual(vec).items()}

    def lift(self, k: int) -> int:
        return self.reps[k]


class Solver:
    """Solve ``sum x_j columns[j] = v`` repeatedly for one fixed family of columns."""

    def __init__(self, F: FieldSpec, columns: Sequence[dict]):
        self.field = F
        self.basis: dict[int, tuple[dict, dict]] = {}
        for j, col in enumerate(columns):
            v = clean(F, col)
            combo = {j: 1}
            while v:
                c = min(v)
                hit = self.basis.get(c)
                if hit is None:
                    ai = F.inv(v[c])
                    self.basis[c] = (scale(F, v, ai), scale(F, combo, ai))
                    break
                a = F.neg(v[c])
                axpy(F, v, hit[0], a)
                axpy(F, combo, hit[1], a)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def solve(self, vec: dict) -> dict | None:
        """Coefficients ``x`` with ``sum x_j columns[j] = vec``, or None if ``vec`` is outside the span."""
        F = self.field
        v = clean(F, vec)
        combo: dict = {}
        while v:
            c = min(v)
            hit = self.basis.get(c)
            if hit is None:
                return None
            a = v[c]
            axpy(F, v, hit[0], F.neg(a))
            axpy(F, combo, hit[1], a)
        return combo
