from __future__ import annotations

import pytest

from hopfcat import HopfSubalgebra, group_algebra
from hopfcat.categorical import diagonal_is_normal, direct_image, hkernel
from hopfcat.commutator import abelianization, bracket, commute_check, huq_commutator, quotient_by_normal
from hopfcat.constructors import find_group_like_iso, subgroup_subalgebra
from hopfcat.errors import NormalityError
from hopfcat.groups import CATALOG, direct_product, quotient_group
from hopfcat.linalg import Subspace
from conftest import F2, F3, Q
from oracles import commutator_subgroup_naive, derived_subgroup

GROUPS = ["C2", "C3", "C4", "C6", "C2xC2", "S3", "D4", "Q8"]


def group_space(A, elements) -> Subspace:
    return Subspace.span(A.field, A.dim, [{g: 1} for g in elements])


def test_commute_examples(alg):
    A = alg("S3")
    assert commute_check(HopfSubalgebra.trivial(A), HopfSubalgebra.whole(A)).elementwise
    C6 = CATALOG["C6"]
    c3 = subgroup_subalgebra(alg("C6"), [x for x in range(6) if C6.elem_order(x) in (1, 3)])
    r = commute_check(c3, c3)
    assert r.elementwise and r.sweedler
    whole = HopfSubalgebra.whole(A)
    r = commute_check(whole, whole)
    assert not r.elementwise and not r.sweedler
    a, b = r.witness
    S3 = CATALOG["S3"]
    va, vb = whole.space.vectors()[a], whole.space.vectors()[b]
    assert A.mul(va, vb) != A.mul(vb, va)
    labels = {S3.label(next(iter(va))), S3.label(next(iter(vb)))}
    assert labels <= {"(12)", "(13)", "(23)", "(123)", "(132)"}


@pytest.mark.parametrize("g", GROUPS)
def test_commute_verdicts_agree_on_subgroup_pairs(g, alg):
    G = CATALOG[g]
    A = alg(g)
    subs = [subgroup_subalgebra(A, s) for s in G.subgroups]
    for x in subs:
        for y in subs:
            r = commute_check(x, y)  # raises if the two criteria disagree
            X, Y = G.subgroups[subs.index(x)], G.subgroups[subs.index(y)]
            assert r.elementwise == all(G.mul(a, b) == G.mul(b, a) for a in X for b in Y)


def test_bracket_on_group_likes(alg):
    S3 = CATALOG["S3"]
    A = alg("S3")
    for a in range(6):
        for b in range(6):
            c = S3.mul(S3.mul(a, b), S3.mul(S3.inv(a), S3.inv(b)))
            assert bracket(A, {a: 1}, {b: 1}) == {c: 1}


def test_huq_examples(alg):
    S3 = alg("S3")
    whole = HopfSubalgebra.whole(S3)
    w = huq_commutator(whole, whole)
    assert w.dim == 3
    assert w.closure.space == group_space(S3, derived_subgroup(CATALOG["S3"]))
    assert huq_commutator(HopfSubalgebra.trivial(S3), whole).dim == 1
    Q8 = alg("Q8")
    assert huq_commutator(HopfSubalgebra.whole(Q8), HopfSubalgebra.whole(Q8)).dim == 2


def test_huq_requires_normal(alg):
    S3 = CATALOG["S3"]
    A = alg("S3")
    t = subgroup_subalgebra(A, [S3.identity_index, S3.labels.index("(12)")])
    with pytest.raises(NormalityError):
        huq_commutator(t, HopfSubalgebra.whole(A))


@pytest.mark.parametrize("F", [Q, F2, F3], ids=str)
@pytest.mark.parametrize("g", GROUPS)
def test_huq_group_oracle(g, F, alg):
    G = CATALOG[g]
    A = alg(g, F)
    normals = G.normal_subgroups
    for N in normals:
        for M in normals:
            x, y = subgroup_subalgebra(A, N), subgroup_subalgebra(A, M)
            w = huq_commutator(x, y)
            assert w.closure.space == group_space(A, commutator_subgroup_naive(G, N, M))
            assert w.closure.space == huq_commutator(y, x).closure.space
            assert all(w.closure.space.contains_vec(v) for v in w.generators)


@pytest.mark.parametrize("g", ["S3", "D4", "Q8", "C2xC2"])
def test_commutator_images_commute(g, alg):
    G = CATALOG[g]
    A = alg(g)
    for N in G.normal_subgroups:
        for M in G.normal_subgroups:
            x, y = subgroup_subalgebra(A, N), subgroup_subalgebra(A, M)
            w = huq_commutator(x, y)
            res = quotient_by_normal(w.closure)
            qx, qy = direct_image(res.proj, x), direct_image(res.proj, y)
            assert commute_check(qx, qy).elementwise


@pytest.mark.parametrize("g", ["S3", "D4", "Q8"])
def test_commutator_minimality(g, alg):
    # any quotient by a normal subalgebra in which X and Y commute kills [X, Y]
    G = CATALOG[g]
    A = alg(g)
    whole = HopfSubalgebra.whole(A)
    w = huq_commutator(whole, whole).closure
    for K in G.normal_subgroups:
        res = quotient_by_normal(subgroup_subalgebra(A, K))
        if res.quotient.is_commutative:
            assert hkernel(res.proj).space.contains(w.space)


def test_quotient_examples(alg):
    A = alg("S3")
    assert quotient_by_normal(HopfSubalgebra.trivial(A)).proj.is_iso
    S3 = CATALOG["S3"]
    a3 = subgroup_subalgebra(A, derived_subgroup(S3))
    q = quotient_by_normal(a3)
    assert find_group_like_iso(q.quotient, alg("C2")) is not None
    assert quotient_by_normal(HopfSubalgebra.whole(A)).quotient.dim == 1
    t = subgroup_subalgebra(A, [S3.identity_index, S3.labels.index("(12)")])
    with pytest.raises(NormalityError):
        quotient_by_normal(t)


@pytest.mark.parametrize("g", GROUPS)
def test_quotient_group_oracle(g, alg):
    G = CATALOG[g]
    A = alg(g)
    for N in G.normal_subgroups:
        q = quotient_by_normal(subgroup_subalgebra(A, N))
        GN, _ = quotient_group(G, N)
        assert find_group_like_iso(q.quotient, group_algebra(GN, Q)) is not None


def test_abelianization_examples(alg):
    c6 = abelianization(alg("C6"))
    assert c6.proj.is_iso
    s3 = abelianization(alg("S3"))
    assert find_group_like_iso(s3.quotient, alg("C2")) is not None
    q8 = abelianization(alg("Q8"))
    assert q8.quotient.dim == 4
    assert find_group_like_iso(q8.quotient, alg("C2xC2")) is not None
    d4 = abelianization(alg("D4"))
    assert find_group_like_iso(d4.quotient, alg("C2xC2")) is not None


@pytest.mark.parametrize("g", GROUPS)
def test_abelian_criteria_agree(g, alg):
    A = alg(g)
    whole = HopfSubalgebra.whole(A)
    flags = (diagonal_is_normal(A), commute_check(whole, whole).elementwise,
             huq_commutator(whole, whole).dim == 1, CATALOG[g].is_abelian)
    assert len(set(flags)) == 1


def test_abelianization_of_product(alg):
    G = direct_product(CATALOG["S3"], CATALOG["C2"])
    ab = abelianization(group_algebra(G, Q))
    assert ab.quotient.dim == 4 and ab.quotient.is_commutative
