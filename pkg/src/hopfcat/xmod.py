"""Hopf crossed modules, split extensions, cat^1-Hopf algebras and internal groupoids.

Conventions for a reflexive graph ``delta, gamma: A1 -> A0``, ``i: A0 -> A1``:
``delta`` is the domain map and ``gamma`` the codomain map.  The object of
composable pairs is the pullback of ``delta`` (first leg) along ``gamma``
(second leg), and ``m(z (x) z')`` composes ``z'`` followed by ``z``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .actions import ModuleAction, SmashProduct, check_action_axioms, smash_product
from .categorical import Extension, Pullback, hkernel, pullback
from .commutator import commute_check, huq_commutator
from .constructors import group_action, group_algebra, hopf_from_group_hom
from .errors import DiagramError, InternalError, NormalityError, NotCat1Error
from .groups import FiniteGroupTable, subgroup_table
from .hopf import (AxiomReport, HopfAlgebra, HopfMorphism, HopfSubalgebra, _first,
                   check_morphism, tensor_product, trivial_algebra)
from .linalg import FieldSpec, Solver, Subspace, axpy, kernel_of_columns, tensor

__all__ = [
    "ModuleAction", "check_action_axioms", "CrossedModule", "check_crossed_module",
    "ReflexiveGraph", "GroupoidStructure", "SplitDecomposition", "split_epi_to_action",
    "crossed_to_cat1", "cat1_to_crossed", "is_cat1", "check_groupoid", "solve_multiplication",
    "canonical_inverse", "equivalence_verdicts", "check_crossed_module_morphism",
    "check_graph_morphism", "crossed_roundtrip", "graph_roundtrip", "inclusion_crossed_module",
    "module_crossed_module", "pair_graph", "discrete_graph", "indiscrete_graph",
]


# ---------------------------------------------------------------- crossed modules


@dataclass
class CrossedModule:
    action: ModuleAction
    d: HopfMorphism  # X -> B

    @property
    def acting(self) -> HopfAlgebra:
        return self.action.acting

    @property
    def carrier(self) -> HopfAlgebra:
        return self.action.carrier


def check_crossed_module(cm: CrossedModule) -> AxiomReport:
    """Equivariance ``d(b.x) = b_1 d(x) S(b_2)`` and Peiffer ``d(y).x = y_1 x S(y_2)``.

    Raises :class:`AxiomFailure` if the action or ``d`` is itself invalid.
    """
    B, X, d, act = cm.acting, cm.carrier, cm.d, cm.action
    check_action_axioms(act).raise_if_failed()
    check_morphism(d).raise_if_failed()
    rep = AxiomReport()
    rep.add("equivariance", _first(
        ((b, x), d(act.act({b: 1}, {x: 1})) == B.adjoint({b: 1}, d.cols[x]))
        for b in range(B.dim) for x in range(X.dim)))
    rep.add("peiffer", _first(
        ((y, x), act.act(d.cols[y], {x: 1}) == X.adjoint({y: 1}, {x: 1}))
        for y in range(X.dim) for x in range(X.dim)))
    return rep


def check_crossed_module_morphism(cm: CrossedModule, cm2: CrossedModule, alpha: HopfMorphism,
                                  beta: HopfMorphism) -> AxiomReport:
    """``d' alpha = beta d`` and ``alpha(b.x) = beta(b).alpha(x)``."""
    rep = AxiomReport()
    rep.extend(check_morphism(alpha), "alpha:")
    rep.extend(check_morphism(beta), "beta:")
    rep.add("commutes-with-d", None if (cm2.d @ alpha).same_map(beta @ cm.d) else ())
    B, X = cm.acting, cm.carrier
    rep.add("preserves-action", _first(
        ((b, x), alpha(cm.action.act({b: 1}, {x: 1})) == cm2.action.act(beta.cols[b], alpha.cols[x]))
        for b in range(B.dim) for x in range(X.dim)))
    return rep


# ---------------------------------------------------------------- split extensions


class SplitDecomposition(NamedTuple):
    action: ModuleAction
    phi: HopfMorphism  # HKer x| B -> A
    psi: HopfMorphism  # A -> HKer x| B
    smash: SmashProduct
    kernel: HopfMorphism  # inclusion HKer -> A


def _conjugation_action(kernel_incl: HopfMorphism, i: HopfMorphism) -> ModuleAction:
    """``b . k = i(b_1) k i(S(b_2))`` on the kernel, in the kernel's own basis."""
    A, B, K = i.target, i.source, kernel_incl.source
    F = A.field
    solver = Solver(F, kernel_incl.cols)
    table = []
    for b in range(B.dim):
        for k in range(K.dim):
            v: dict = {}
            for b1, b2, c in B.coproduct_terms[b]:
                axpy(F, v, A.mul_all(i.cols[b1], kernel_incl.cols[k], i(B.antipode_table[b2])), c)
            coords = solver.solve(v)
            if coords is None:
                raise InternalError("conjugation leaves the kernel")
            table.append(coords)
    return ModuleAction(B, K, table)


def split_epi_to_action(e: Extension) -> SplitDecomposition:
    """Decompose a split epimorphism ``delta`` with section ``i`` as ``HKer(delta) x| B``."""
    if e.section is None:
        raise DiagramError("split_epi_to_action needs a section")
    delta, i, kin = e.epi, e.section, e.kernel_inclusion
    A, B, K = delta.source, delta.target, kin.source
    F = A.field
    action = _conjugation_action(kin, i)
    sm = smash_product(K, B, action)
    db = B.dim
    phi = HopfMorphism(sm.algebra, A, [A.mul(kin.cols[j // db], i.cols[j % db]) for j in range(sm.algebra.dim)], "phi")
    solver = Solver(F, kin.cols)
    cols = []
    for a in range(A.dim):
        out: dict = {}
        for (a1, a2, a3), c in A.sweedler({a: 1}, 3):
            left = solver.solve(A.mul({a1: 1}, i(delta(A.antipode_table[a2]))))
            if left is None:
                raise InternalError("psi leaves the kernel")
            axpy(F, out, tensor(F, left, delta.cols[a3], db), c)
        cols.append(out)
    psi = HopfMorphism(A, sm.algebra, cols, "psi")
    return SplitDecomposition(action, phi, psi, sm, kin)


# ---------------------------------------------------------------- graphs and groupoids


@dataclass
class ReflexiveGraph:
    a1: HopfAlgebra
    a0: HopfAlgebra
    delta: HopfMorphism
    gamma: HopfMorphism
    i: HopfMorphism
    name: str = ""

    def check(self) -> AxiomReport:
        rep = AxiomReport()
        for key in ("delta", "gamma", "i"):
            rep.extend(check_morphism(getattr(self, key)), f"{key}:")
        ident = HopfMorphism.identity(self.a0)
        rep.add("delta-section", None if (self.delta @ self.i).same_map(ident) else ())
        rep.add("gamma-section", None if (self.gamma @ self.i).same_map(ident) else ())
        return rep

    @cached_property
    def composable(self) -> Pullback:
        return pullback(self.delta, self.gamma)

    @cached_property
    def kernels(self) -> tuple[HopfSubalgebra, HopfSubalgebra]:
        return hkernel(self.delta), hkernel(self.gamma)


@dataclass
class GroupoidStructure:
    graph: ReflexiveGraph
    m: HopfMorphism  # composable pairs -> A1
    iota: HopfMorphism

    @property
    def pullback(self) -> Pullback:
        return self.graph.composable


def canonical_inverse(g: ReflexiveGraph) -> HopfMorphism:
    """``iota(a) = i(gamma(a_1)) S(a_2) i(delta(a_3))``."""
    A = g.a1
    F = A.field
    ig = g.i @ g.gamma
    idl = g.i @ g.delta
    cols = []
    for a in range(A.dim):
        out: dict = {}
        for (a1, a2, a3), c in A.sweedler({a: 1}, 3):
            axpy(F, out, A.mul_all(ig.cols[a1], A.antipode_table[a2], idl.cols[a3]), c)
        cols.append(out)
    return HopfMorphism(A, A, cols, "iota")


def _apply_on_pairs(pb: Pullback, m: HopfMorphism, vec: dict) -> dict:
    c = pb.coords(vec)
    if c is None:
        raise DiagramError("pair is not composable")
    return m(c)


def _triple_space(pb: Pullback) -> tuple[Subspace, int]:
    """Composable triples inside ``A1 (x) A1 (x) A1``: ``P (x) A1`` intersected with ``A1 (x) P``."""
    P = pb.sub.space
    d = pb.p1.target.dim
    F = P.field
    dd = d * d
    param = []
    images = []
    for k, row in enumerate(P.vectors()):
        for c in range(d):
            vec = {idx * d + c: x for idx, x in row.items()}
            param.append(vec)
            img: dict = {}
            by_first: dict[int, dict] = {}
            for idx, x in vec.items():
                a, rest = divmod(idx, dd)
                by_first.setdefault(a, {})[rest] = x
            for a, w in by_first.items():
                for r, x in P.residual(w).items():
                    img[a * dd + r] = x
            images.append(img)
    rel = kernel_of_columns(F, images, len(param))
    vecs = []
    for r in rel.vectors():
        v: dict = {}
        for j, x in r.items():
            axpy(F, v, param[j], x)
        vecs.append(v)
    return Subspace.span(F, d * dd, vecs), d


def check_groupoid(g: GroupoidStructure) -> AxiomReport:
    """Every internal groupoid identity, as an equation of linear maps."""
    G = g.graph
    rep = G.check()
    pb = g.pullback
    A = G.a1
    m, iota = g.m, g.iota
    ident = HopfMorphism.identity(A)
    rep.extend(check_morphism(m), "m:")
    rep.extend(check_morphism(iota), "iota:")
    idl, ig = G.i @ G.delta, G.i @ G.gamma

    def law(name, build):
        try:
            lhs, rhs = build()
        except DiagramError:
            rep.add(name, ("not-composable",))
            return
        rep.add(name, _first(((j,), lhs.cols[j] == rhs.cols[j]) for j in range(len(lhs.cols))))

    law("unit-right", lambda: (m @ pb.induced(ident, idl), ident))
    law("unit-left", lambda: (m @ pb.induced(ig, ident), ident))
    law("domain", lambda: (G.delta @ m, G.delta @ pb.p2))
    law("codomain", lambda: (G.gamma @ m, G.gamma @ pb.p1))
    law("inverse-domain", lambda: (G.delta @ iota, G.gamma))
    law("inverse-codomain", lambda: (G.gamma @ iota, G.delta))
    law("inverse-left", lambda: (m @ pb.induced(iota, ident), idl))
    law("inverse-right", lambda: (m @ pb.induced(ident, iota), ig))
    rep.add("associativity", _associativity_witness(pb, m))
    return rep


def _associativity_witness(pb: Pullback, m: HopfMorphism):
    T, d = _triple_space(pb)
    F = T.field
    dd = d * d
    for k, t in enumerate(T.vectors()):
        try:
            # (m (x) 1): group by last leg
            by_last: dict[int, dict] = {}
            by_first: dict[int, dict] = {}
            for idx, x in t.items():
                ab, c = divmod(idx, d)
                by_last.setdefault(c, {})[ab] = x
                a, bc = divmod(idx, dd)
                by_first.setdefault(a, {})[bc] = x
            left: dict = {}
            for c, w in by_last.items():
                axpy(F, left, tensor(F, _apply_on_pairs(pb, m, w), {c: 1}, d))
            right: dict = {}
            for a, w in by_first.items():
                axpy(F, right, tensor(F, {a: 1}, _apply_on_pairs(pb, m, w), d))
            if _apply_on_pairs(pb, m, left) != _apply_on_pairs(pb, m, right):
                return (k,)
        except DiagramError:
            return (k, "not-composable")
    return None


# ---------------------------------------------------------------- the two functors


def crossed_to_cat1(cm: CrossedModule, verify: bool = True) -> GroupoidStructure:
    """Graph ``X x| B`` with ``delta(x(x)b) = eps(x) b``, ``gamma(x(x)b) = d(x) b``, ``i(b) = 1(x)b``.

    The multiplication is ``m(x(x)b, x'(x)b') = x x' (x) eps(b) b'``.  With
    ``verify=False`` the construction also runs on pre-crossed modules, so a
    Peiffer failure can be observed as ``m`` failing to be multiplicative.
    """
    if verify:
        check_crossed_module(cm).raise_if_failed()
    X, B, d = cm.carrier, cm.acting, cm.d
    F = X.field
    sm = smash_product(X, B, cm.action, verify=verify)
    A1 = sm.algebra
    db = B.dim
    gamma = HopfMorphism(A1, B, [B.mul(d.cols[j // db], {j % db: 1}) for j in range(A1.dim)], "gamma")
    graph = ReflexiveGraph(A1, B, sm.proj_b, gamma, sm.inj_b, "G(cm)")
    pb = graph.composable
    n = A1.dim
    cols = []
    for v in pb.sub.space.vectors():
        out: dict = {}
        for z, z2, c in A1.split(v, n):
            x, b = divmod(z, db)
            x2, b2 = divmod(z2, db)
            coef = B.counit_row[b]
            if coef:
                axpy(F, out, tensor(F, X.mult_table[x * X.dim + x2], {b2: 1}, db), c * coef)
        cols.append(out)
    m = HopfMorphism(pb.object, A1, cols, "m")
    g = GroupoidStructure(graph, m, canonical_inverse(graph))
    if verify:
        rep = check_groupoid(g)
        if not rep.ok:
            raise InternalError(f"groupoid axioms fail: {rep.failed()}")
    return g


def cat1_to_crossed(g: ReflexiveGraph) -> CrossedModule:
    """``d = gamma . hker(delta)`` with action ``a.k = i(a_1) k i(S(a_2))``."""
    if not is_cat1(g):
        raise NotCat1Error("reflexive graph is not a cat^1-Hopf algebra")
    K = g.kernels[0]
    incl = K.inclusion
    cm = CrossedModule(_conjugation_action(incl, g.i), g.gamma @ incl)
    rep = check_crossed_module(cm)
    if not rep.ok:
        raise InternalError(f"induced crossed module fails {rep.failed()}")
    return cm


def is_cat1(g: ReflexiveGraph) -> bool:
    kd, kg = g.kernels
    return commute_check(kd, kg).elementwise


def solve_multiplication(g: ReflexiveGraph) -> HopfMorphism | None:
    """The unique multiplication satisfying the unit laws, if one exists.

    Any such ``m`` is an algebra map with ``m(L(a)) = a`` and ``m(R(b)) = b``
    for ``L = (id, i delta)`` and ``R = (i gamma, id)``, so it is forced on
    products ``L(a) R(b)``; these span the composable pairs.
    """
    pb = g.composable
    A, P = g.a1, g.composable.object
    ident = HopfMorphism.identity(A)
    L = pb.induced(ident, g.i @ g.delta)
    R = pb.induced(g.i @ g.gamma, ident)
    d = A.dim
    phi_cols = [P.mul(L.cols[a], R.cols[b]) for a in range(d) for b in range(d)]
    theta_cols = [A.mult_table[a * d + b] for a in range(d) for b in range(d)]
    solver = Solver(A.field, phi_cols)
    if solver.rank != P.dim:
        raise InternalError("unit-law images do not generate the composable pairs")
    cols = []
    for k in range(P.dim):
        out: dict = {}
        for j, c in solver.solve({k: 1}).items():
            axpy(A.field, out, theta_cols[j], c)
        cols.append(out)
    m = HopfMorphism(P, A, cols, "m")
    # well defined iff every relation among the L(a)R(b) also holds among the ab
    if any(m(phi_cols[j]) != theta_cols[j] for j in range(len(phi_cols))):
        return None
    if not check_morphism(m).ok:
        return None
    if not ((m @ L).same_map(ident) and (m @ R).same_map(ident)):
        return None
    return m


def equivalence_verdicts(g: ReflexiveGraph) -> dict[str, bool]:
    """The four equivalent conditions: multiplicative graph, groupoid, trivial Huq commutator, cat^1."""
    m = solve_multiplication(g)
    groupoid = False
    if m is not None:
        groupoid = check_groupoid(GroupoidStructure(g, m, canonical_inverse(g))).ok
    kd, kg = g.kernels
    huq = huq_commutator(kd, kg).dim == 1
    return {"multiplicative": m is not None, "groupoid": groupoid, "huq-trivial": huq, "cat1": is_cat1(g)}


# ---------------------------------------------------------------- round trips


def check_graph_morphism(g: ReflexiveGraph, g2: ReflexiveGraph, f1: HopfMorphism, f0: HopfMorphism) -> AxiomReport:
    """``(f1, f0): g -> g2`` commutes with delta, gamma and i."""
    rep = AxiomReport()
    rep.extend(check_morphism(f1), "f1:")
    rep.extend(check_morphism(f0), "f0:")
    rep.add("delta", None if (g2.delta @ f1).same_map(f0 @ g.delta) else ())
    rep.add("gamma", None if (g2.gamma @ f1).same_map(f0 @ g.gamma) else ())
    rep.add("i", None if (f1 @ g.i).same_map(g2.i @ f0) else ())
    return rep


class RoundTrip(NamedTuple):
    result: object
    forward: HopfMorphism
    base: HopfMorphism
    report: AxiomReport


def crossed_roundtrip(cm: CrossedModule) -> RoundTrip:
    """``F(G(cm))`` with the isomorphism ``x -> x (x) 1`` onto ``HKer(delta)``."""
    g = crossed_to_cat1(cm).graph
    cm2 = cat1_to_crossed(g)
    X, B = cm.carrier, cm.acting
    F = X.field
    K = g.kernels[0]
    solver = Solver(F, K.inclusion.cols)
    cols = []
    for x in range(X.dim):
        c = solver.solve(tensor(F, {x: 1}, B.unit_vec, B.dim))
        if c is None:
            raise InternalError("x (x) 1 is not in the kernel of delta")
        cols.append(c)
    alpha = HopfMorphism(X, cm2.carrier, cols, "alpha")
    beta = HopfMorphism.identity(B)
    rep = check_crossed_module_morphism(cm, cm2, alpha, beta)
    rep.add("alpha-iso", None if alpha.is_iso else ())
    return RoundTrip(cm2, alpha, beta, rep)


def graph_roundtrip(g: ReflexiveGraph) -> RoundTrip:
    """``G(F(g))`` with ``phi(k (x) b) = k i(b)`` back onto ``g``."""
    cm = cat1_to_crossed(g)
    g2 = crossed_to_cat1(cm).graph
    K = g.kernels[0].inclusion
    db = g.a0.dim
    A = g.a1
    phi = HopfMorphism(g2.a1, A, [A.mul(K.cols[j // db], g.i.cols[j % db]) for j in range(g2.a1.dim)], "phi")
    f0 = HopfMorphism.identity(g.a0)
    rep = check_graph_morphism(g2, g, phi, f0)
    rep.add("phi-iso", None if phi.is_iso else ())
    return RoundTrip(g2, phi, f0, rep)


# ---------------------------------------------------------------- catalog builders


def inclusion_crossed_module(G: FiniteGroupTable, N, field: FieldSpec, B: HopfAlgebra | None = None) -> CrossedModule:
    """``K[N] -> K[G]`` for a normal subgroup, acted on by conjugation."""
    if not G.is_normal(N):
        raise NormalityError("inclusion crossed module needs a normal subgroup")
    B = B or group_algebra(G, field)
    T, emb = subgroup_table(G, N)
    X = group_algebra(T, field)
    idx = {g: i for i, g in enumerate(emb)}
    act = [[idx[G.mul(G.mul(b, g), G.inv(b))] for g in emb] for b in range(G.order)]
    return CrossedModule(group_action(B, X, act), hopf_from_group_hom(emb, T, G, field, X, B))


def module_crossed_module(B: FiniteGroupTable, X: FiniteGroupTable, act, field: FieldSpec) -> CrossedModule:
    """``d = u eps`` with ``B`` acting on ``X`` by automorphisms; Peiffer holds iff ``X`` is abelian."""
    KB, KX = group_algebra(B, field), group_algebra(X, field)
    return CrossedModule(group_action(KB, KX, act), HopfMorphism.zero(KX, KB))


def pair_graph(A: HopfAlgebra) -> ReflexiveGraph:
    """``A (x) A`` over ``A`` with the two projections and ``i = Delta``."""
    T = tensor_product(A, A)
    return ReflexiveGraph(T.product, A, T.p1, T.p2, HopfMorphism(A, T.product, A.comult_table, "diag"), "pair")


def discrete_graph(A: HopfAlgebra) -> ReflexiveGraph:
    ident = HopfMorphism.identity(A)
    return ReflexiveGraph(A, A, ident, ident, ident, "discrete")


def indiscrete_graph(A: HopfAlgebra) -> ReflexiveGraph:
    """``A`` over the zero object ``K``; a cat^1 object exactly when ``A`` is commutative."""
    K = trivial_algebra(A.field)
    eps = HopfMorphism(A, K, [{0: c} if c else {} for c in A.counit_row], "eps")
    return ReflexiveGraph(A, K, eps, eps, HopfMorphism(K, A, [A.unit_vec], "u"), "over-K")
