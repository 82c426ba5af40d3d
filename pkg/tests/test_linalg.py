from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hopfcat.errors import DimensionMismatchError, FieldMismatchError, InvalidPrimeError
from hopfcat.linalg import (FieldSpec, Matrix, Solver, Subspace, kernel_space, quotient_split, rref_basis,
                            subspace_ops)
from oracles import dense_rank, dense_rref, rows_of

Q = FieldSpec.rationals()
F2, F3, F5 = FieldSpec.prime(2), FieldSpec.prime(3), FieldSpec.prime(5)


# ---------------------------------------------------------------- fields


def test_field_parse_and_str():
    assert FieldSpec.parse("Q") == Q
    assert FieldSpec.parse("Fp:5") == F5
    assert FieldSpec.parse("F3") == F3
    assert str(F5) == "Fp:5" and str(Q) == "Q"


@pytest.mark.parametrize("p", [0, 1, 4, 9, 2**31 + 11])
def test_field_rejects_non_primes(p):
    with pytest.raises(InvalidPrimeError):
        FieldSpec.prime(p)


def test_scalar_normalization():
    assert F5(7) == 2 and F5(-1) == 4
    assert F5(Fraction(1, 2)) == 3
    assert Q("4/6") == Fraction(2, 3)
    assert Q(Fraction(4, 2)) == 2 and isinstance(Q(Fraction(4, 2)), int)


# ---------------------------------------------------------------- worked examples


def test_rref_dependent_rows():
    W = rref_basis(Matrix.from_rows(Q, [[1, 1], [2, 2]]))
    assert W.dim == 1 and rows_of(W) == [[1, 1]]


def test_rref_empty():
    W = rref_basis(Matrix(Q, 0, 3, ()))
    assert W.dim == 0 and W.ambient_dim == 3


def test_rref_full_over_f2():
    W = rref_basis(Matrix.from_rows(F2, [[1, 0], [1, 1]]))
    assert W.dim == 2 and W == Subspace.full(F2, 2)


def test_kernel_examples():
    assert kernel_space(Matrix.identity(Q, 3)).dim == 0
    assert kernel_space(Matrix.zeros(Q, 2, 3)) == Subspace.full(Q, 3)
    assert kernel_space(Matrix.from_rows(Q, [[1] * 6])).dim == 5


def test_subspace_ops_examples():
    a = Subspace.span(Q, 3, [{0: 1}, {1: 1}])
    b = Subspace.span(Q, 3, [{1: 1}, {2: 1}])
    ops = subspace_ops(a, b)
    assert ops.intersection == Subspace.span(Q, 3, [{1: 1}])
    assert ops.sum == Subspace.full(Q, 3)
    assert not ops.contains and not ops.equals
    same = subspace_ops(a, a)
    assert same.sum == a and same.intersection == a and same.contains and same.equals
    l1, l2 = Subspace.span(Q, 2, [{0: 1}]), Subspace.span(Q, 2, [{0: 1, 1: 1}])
    ops = subspace_ops(l1, l2)
    assert ops.sum.dim == 2 and ops.intersection.dim == 0


def test_subspace_ops_mismatch():
    with pytest.raises(DimensionMismatchError):
        subspace_ops(Subspace.zero(Q, 2), Subspace.zero(Q, 3))
    with pytest.raises(FieldMismatchError):
        subspace_ops(Subspace.zero(Q, 2), Subspace.zero(F2, 2))


def test_quotient_split_examples():
    assert quotient_split(3, Subspace.zero(Q, 3)).proj.is_identity()
    assert quotient_split(3, Subspace.full(Q, 3)).proj.rows == 0
    w = Subspace.span(Q, 3, [{0: 1, 2: -1}])
    qs = quotient_split(3, w)
    assert qs.proj.rank() == 2
    assert (qs.proj @ qs.section).is_identity()
    assert qs.coset_basis == [1, 2]


def test_solver():
    cols = [{0: 1, 1: 1}, {1: 1}, {0: 2, 1: 3}]
    s = Solver(Q, cols)
    assert s.rank == 2
    x = s.solve({0: 3, 1: 5})
    total = {}
    for j, c in x.items():
        for k, v in cols[j].items():
            total[k] = total.get(k, 0) + c * v
    assert {k: v for k, v in total.items() if v} == {0: 3, 1: 5}
    assert Solver(Q, [{0: 1}]).solve({1: 1}) is None


# ---------------------------------------------------------------- properties

FIELDS = st.sampled_from([Q, F2, F3, F5])


@st.composite
def matrices(draw, max_rows=5, max_cols=6):
    F = draw(FIELDS)
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(1, max_cols))
    lo, hi = (-3, 3) if F.p is None else (0, F.p - 1)
    rows = [[draw(st.integers(lo, hi)) for _ in range(c)] for _ in range(r)]
    return F, Matrix(F, r, c, tuple(tuple(F(x) for x in row) for row in rows))


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_rref_matches_dense_oracle(fm):
    F, M = fm
    W = rref_basis(M)
    assert rows_of(W) == dense_rref(M.tolist(), F.p)


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_rref_canonical(fm):
    F, M = fm
    W = rref_basis(M)
    assert rref_basis(W.basis) == W


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_rank_nullity(fm):
    F, M = fm
    K = kernel_space(M)
    assert K.dim + M.rank() == M.cols
    assert M.rank() == dense_rank(M.tolist(), F.p)
    for v in K.vectors():
        assert not M.apply(v)


@st.composite
def subspace_pairs(draw):
    F, A = draw(matrices(4, 5))
    n = A.cols
    r = draw(st.integers(0, 4))
    lo, hi = (-2, 2) if F.p is None else (0, F.p - 1)
    rows = [[draw(st.integers(lo, hi)) for _ in range(n)] for _ in range(r)]
    B = Matrix(F, r, n, tuple(tuple(F(x) for x in row) for row in rows))
    return rref_basis(A), rref_basis(B)


@given(subspace_pairs())
@settings(max_examples=150, deadline=None)
def test_modular_law(ab):
    a, b = ab
    ops = subspace_ops(a, b)
    assert ops.sum.dim + ops.intersection.dim == a.dim + b.dim
    assert ops.sum.contains(a) and ops.sum.contains(b)
    assert a.contains(ops.intersection) and b.contains(ops.intersection)
    assert ops.contains == (ops.sum == a)


@given(subspace_pairs())
@settings(max_examples=150, deadline=None)
def test_quotient_split_properties(ab):
    w, _ = ab
    n = w.ambient_dim
    qs = quotient_split(n, w)
    assert kernel_space(qs.proj) == w
    assert (qs.proj @ qs.section).is_identity()
    assert qs.proj.rows == n - w.dim


@given(subspace_pairs())
@settings(max_examples=100, deadline=None)
def test_coordinates_roundtrip(ab):
    w, _ = ab
    for v in w.vectors():
        assert w.embed(w.coord_vec(v)) == v
    if w.dim < w.ambient_dim:
        outside = next(i for i in range(w.ambient_dim) if i not in w.pivots)
        assert w.coords({outside: 1}) is None or w.contains_vec({outside: 1})
