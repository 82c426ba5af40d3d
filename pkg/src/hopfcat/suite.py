"""Reproducible property suite over the group catalog.

Every property is evaluated on a deterministic list of cases; the report has
one ``PROP <name> cases=<n> fail=<k>`` line per property, followed by a
``WITNESS <json>`` line for the first failing case.
"""

from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .categorical import (cokernel, diagonal_is_normal, direct_image, equalizer, h_inverse, hkernel,
                          image_factorization, is_normal, linear_kernel_identity, newman_phi, newman_psi,
                          pullback, Extension, check_split_short_five)
from .commutator import abelianization, commute_check, huq_commutator
from .constructors import (find_group_like_iso, group_action, group_algebra, hopf_from_group_hom,
                           subgroup_subalgebra, truncated_primitive)
from .errors import HopfError, MalformedInputError, UnknownGroupError
from .groups import CATALOG, group_actions, homomorphisms, quotient_group, semidirect_product
from .hopf import HopfAlgebra, HopfMorphism, HopfSubalgebra, check_hopf_axioms, check_morphism
from .linalg import FieldSpec, Subspace
from .actions import smash_product
from .xmod import (GroupoidStructure, canonical_inverse, check_crossed_module, check_groupoid,
                   crossed_roundtrip, crossed_to_cat1, discrete_graph, equivalence_verdicts,
                   graph_roundtrip, inclusion_crossed_module, indiscrete_graph, module_crossed_module,
                   pair_graph, split_epi_to_action)

DEFAULT_SEED = 20240521
INJECTIONS = ("mutated-antipode",)


@dataclass
class SuiteConfig:
    seed: int = DEFAULT_SEED
    groups: list[str] = field(default_factory=lambda: list(CATALOG))
    fields: list[FieldSpec] = field(default_factory=lambda: [FieldSpec.rationals(), FieldSpec.prime(2),
                                                             FieldSpec.prime(3)])
    max_dim: int = 18
    inject: str | None = None

    def __post_init__(self):
        for g in self.groups:
            if g not in CATALOG:
                raise UnknownGroupError(f"unknown group {g!r}; known: {', '.join(CATALOG)}")
        if self.inject is not None and self.inject not in INJECTIONS:
            raise MalformedInputError(f"unknown fault injection {self.inject!r}")
        env = os.environ.get("HOPFCAT_SEED")
        if env is not None:
            self.seed = int(env, 0)
        self.seed &= (1 << 64) - 1


@dataclass
class PropResult:
    name: str
    cases: int = 0
    failures: int = 0
    witness: object = None

    def record(self, ok: bool, witness=None):
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.witness is None:
                self.witness = witness

    @property
    def ok(self) -> bool:
        return self.failures == 0


class _Context:
    def __init__(self, cfg: SuiteConfig):
        self.cfg = cfg
        self.rng = random.Random(cfg.seed)
        self.groups = {n: CATALOG[n] for n in cfg.groups}
        self._alg: dict = {}

    def alg(self, name: str, F: FieldSpec) -> HopfAlgebra:
        key = (name, F)
        if key not in self._alg:
            self._alg[key] = group_algebra(self.groups[name], F)
        return self._alg[key]

    def hom_cases(self) -> Iterator[tuple]:
        for gn, G in self.groups.items():
            for hn, H in self.groups.items():
                for f in homomorphisms(G, H):
                    yield gn, hn, f


def _span(A: HopfAlgebra, elems) -> Subspace:
    return Subspace.span(A.field, A.dim, [{g: 1} for g in elems])


# ---------------------------------------------------------------- properties


def prop_axioms(ctx: _Context, res: PropResult):
    """Catalog algebras satisfy every Hopf axiom, ``S^2 = id`` and ``S(ab) = S(b)S(a)``."""
    for F in ctx.cfg.fields:
        algebras = [(n, ctx.alg(n, F)) for n in ctx.groups]
        if F.kind == "Fp" and F.p <= 7:
            algebras.append((f"u(F{F.p})", truncated_primitive(F.p, F)))
        for name, A in algebras:
            if ctx.cfg.inject == "mutated-antipode":
                A = HopfAlgebra(A.field, A.dim, A.mult_table, A.unit_vec, A.comult_table, A.counit_row,
                                [{i: 1} for i in range(A.dim)], A.name)
            rep = check_hopf_axioms(A)
            s2 = all(A.S(A.antipode_table[i]) == {i: 1} for i in range(A.dim))
            anti = all(A.S(A.mult_table[i * A.dim + j]) == A.mul(A.antipode_table[j], A.antipode_table[i])
                       for i in range(A.dim) for j in range(A.dim))
            fail = rep.first_failure()
            wit = {"algebra": name, "field": str(F)}
            if fail is not None:
                wit.update(axiom=fail.name, at=fail.witness)
            elif not s2:
                wit.update(axiom="antipode-involutive")
            elif not anti:
                wit.update(axiom="antipode-antimultiplicative")
            res.record(rep.ok and s2 and anti, wit)


def prop_kernel_oracle(ctx: _Context, res: PropResult):
    """``HKer(K[f]) = K[ker f]``, always normal."""
    for F in ctx.cfg.fields:
        for gn, hn, f in ctx.hom_cases():
            G, H = ctx.groups[gn], ctx.groups[hn]
            A = ctx.alg(gn, F)
            k = hkernel(hopf_from_group_hom(f, G, H, F, A, ctx.alg(hn, F)))
            want = _span(A, [a for a in range(G.order) if f[a] == H.identity_index])
            res.record(k.space == want and is_normal(k), {"hom": [gn, hn, list(f)], "field": str(F)})


def prop_cokernel_oracle(ctx: _Context, res: PropResult):
    """``cokernel(K[N] -> K[G]) = K[G/N]`` for every normal subgroup."""
    for F in ctx.cfg.fields:
        for gn, G in ctx.groups.items():
            A = ctx.alg(gn, F)
            for N in G.normal_subgroups:
                q = cokernel(subgroup_subalgebra(A, N).inclusion)
                Q, _ = quotient_group(G, N)
                iso = find_group_like_iso(q.quotient, group_algebra(Q, F))
                res.record(iso is not None, {"group": gn, "normal": sorted(N), "field": str(F)})


def prop_factorization(ctx: _Context, res: PropResult):
    """``ker f = A HKer(f)^+ = A HKer(f)^+ A`` and the image has dimension ``rank f``."""
    for F in ctx.cfg.fields:
        for gn, hn, f in ctx.hom_cases():
            m = hopf_from_group_hom(f, ctx.groups[gn], ctx.groups[hn], F, ctx.alg(gn, F), ctx.alg(hn, F))
            left, two = linear_kernel_identity(m)
            fac = image_factorization(m)
            ok = left and two and fac.epi_part.target.dim == m.rank
            res.record(ok, {"hom": [gn, hn, list(f)], "field": str(F)})


def prop_pullback_oracle(ctx: _Context, res: PropResult):
    """Pullbacks of group algebra maps have the order of the group fibre product."""
    F = ctx.cfg.fields[0]
    cases = []
    for hn in ctx.groups:
        ins = [(gn, f) for gn in ctx.groups for f in homomorphisms(ctx.groups[gn], ctx.groups[hn])]
        for (gn, f) in ins:
            for (kn, g) in ins:
                if ctx.groups[gn].order * ctx.groups[kn].order <= 2 * ctx.cfg.max_dim:
                    cases.append((gn, kn, hn, f, g))
    ctx.rng.shuffle(cases)
    for gn, kn, hn, f, g in sorted(cases[:40]):
        G, K, H = ctx.groups[gn], ctx.groups[kn], ctx.groups[hn]
        pb = pullback(hopf_from_group_hom(f, G, H, F, ctx.alg(gn, F), ctx.alg(hn, F)),
                      hopf_from_group_hom(g, K, H, F, ctx.alg(kn, F), ctx.alg(hn, F)))
        want = _span(pb.product.product, [a * K.order + c for a in range(G.order) for c in range(K.order)
                                          if f[a] == g[c]])
        res.record(pb.sub.space == want, {"f": [gn, hn, list(f)], "g": [kn, hn, list(g)]})


def prop_equalizer_oracle(ctx: _Context, res: PropResult):
    F = ctx.cfg.fields[0]
    for gn, G in ctx.groups.items():
        for hn, H in ctx.groups.items():
            homs = homomorphisms(G, H)
            if len(homs) > 6:
                homs = homs[:6]
            for f in homs:
                for g in homs:
                    A, B = ctx.alg(gn, F), ctx.alg(hn, F)
                    e = equalizer(hopf_from_group_hom(f, G, H, F, A, B), hopf_from_group_hom(g, G, H, F, A, B))
                    want = _span(A, [a for a in range(G.order) if f[a] == g[a]])
                    res.record(e.space == want, {"pair": [gn, hn, list(f), list(g)]})


def prop_newman(ctx: _Context, res: PropResult):
    """``Psi(Phi(D)) = D`` and ``Phi(Psi(I)) = I`` for subgroup subalgebras."""
    for F in ctx.cfg.fields:
        for gn, G in ctx.groups.items():
            A = ctx.alg(gn, F)
            for S in G.subgroups:
                D = subgroup_subalgebra(A, S)
                I = newman_phi(D)
                back = newman_psi(I)
                res.record(back.space == D.space and newman_phi(back).space == I.space,
                           {"group": gn, "sub": sorted(S), "field": str(F)})


def prop_regularity(ctx: _Context, res: PropResult):
    """h-inverses along surjections: surjective restriction and order preservation."""
    F = ctx.cfg.fields[0]
    for gn, hn, f in ctx.hom_cases():
        G, Q = ctx.groups[gn], ctx.groups[hn]
        if len(set(f)) != Q.order:
            continue
        A, B = ctx.alg(gn, F), ctx.alg(hn, F)
        p = hopf_from_group_hom(f, G, Q, F, A, B)
        for C in Q.subgroups:
            Csub = subgroup_subalgebra(B, C)
            pre = h_inverse(p, Csub)
            oracle = pre.space == _span(A, [a for a in range(G.order) if f[a] in C])
            surj = (p @ pre.inclusion).rank == Csub.dim
            img_in = Csub.space.contains(direct_image(p, pre).space)
            order_ok = True
            for S in G.subgroups:
                D = subgroup_subalgebra(A, S)
                pD = direct_image(p, D)
                if not h_inverse(p, pD).space.contains(D.space):
                    order_ok = False
                if pre.space.contains(D.space) != Csub.space.contains(pD.space):
                    order_ok = False
            res.record(oracle and surj and img_in and order_ok, {"p": [gn, hn, list(f)], "C": sorted(C)})


def prop_normality(ctx: _Context, res: PropResult):
    for F in ctx.cfg.fields:
        for gn, G in ctx.groups.items():
            A = ctx.alg(gn, F)
            for S in G.subgroups:
                res.record(is_normal(subgroup_subalgebra(A, S)) == G.is_normal(S),
                           {"group": gn, "sub": sorted(S), "field": str(F)})


def prop_commutator(ctx: _Context, res: PropResult):
    """``[K[N], K[M]] = K[[N, M]]``, symmetric, with agreeing commutation verdicts."""
    for F in ctx.cfg.fields:
        for gn, G in ctx.groups.items():
            A = ctx.alg(gn, F)
            normals = G.normal_subgroups
            for i, N in enumerate(normals):
                for M in normals[i:]:
                    X, Y = subgroup_subalgebra(A, N), subgroup_subalgebra(A, M)
                    c = huq_commutator(X, Y).closure
                    sym = huq_commutator(Y, X).closure.space == c.space
                    verdict = commute_check(X, Y)
                    oracle = c.space == _span(A, G.commutator(N, M))
                    trivial = (c.dim == 1) == verdict.elementwise
                    res.record(oracle and sym and trivial,
                               {"group": gn, "N": sorted(N), "M": sorted(M), "field": str(F)})


def prop_takeuchi(ctx: _Context, res: PropResult):
    """Diagonal normal iff commutative; abelianization is commutative and equals the group one."""
    for F in ctx.cfg.fields:
        for gn, G in ctx.groups.items():
            A = ctx.alg(gn, F)
            ab = abelianization(A)
            Q, _ = quotient_group(G, G.commutator(range(G.order), range(G.order)))
            ok = (diagonal_is_normal(A) == G.is_abelian and ab.quotient.is_commutative
                  and find_group_like_iso(ab.quotient, group_algebra(Q, F)) is not None)
            res.record(ok, {"group": gn, "field": str(F)})


def _smash_cases(ctx: _Context):
    for bn, B in ctx.groups.items():
        for xn, X in ctx.groups.items():
            if B.order * X.order > ctx.cfg.max_dim or B.order == 1 or X.order == 1:
                continue
            for k, act in enumerate(group_actions(B, X)):
                yield bn, xn, k, act


def prop_smash(ctx: _Context, res: PropResult):
    """Smash products are Hopf, equal the semidirect product, and split back into their action."""
    F = ctx.cfg.fields[0]
    for bn, xn, k, act in _smash_cases(ctx):
        B, X = ctx.groups[bn], ctx.groups[xn]
        KB, KX = ctx.alg(bn, F), ctx.alg(xn, F)
        action = group_action(KB, KX, act)
        sm = smash_product(KX, KB, action)
        semi = group_algebra(semidirect_product(X, B, act), F)
        iso_ok = sm.algebra.same_structure(semi) or find_group_like_iso(sm.algebra, semi) is not None
        dec = split_epi_to_action(Extension.from_epi(sm.proj_b, sm.inj_b))
        inv_ok = ((dec.phi @ dec.psi).same_map(HopfMorphism.identity(sm.algebra))
                  and (dec.psi @ dec.phi).same_map(HopfMorphism.identity(dec.smash.algebra)))
        same_action = dec.action.table == action.table
        ext = Extension.from_epi(sm.proj_b, sm.inj_b)
        five = check_split_short_five(ext, ext, HopfMorphism.identity(ext.kernel),
                                      HopfMorphism.identity(sm.algebra), HopfMorphism.identity(KB))
        res.record(iso_ok and inv_ok and same_action and five, {"B": bn, "X": xn, "action": k})


def _crossed_cases(ctx: _Context, F: FieldSpec):
    lim = ctx.cfg.max_dim
    for gn, G in ctx.groups.items():
        for N in G.normal_subgroups:
            if len(N) * G.order <= lim:
                yield f"{gn}>{sorted(N)}", inclusion_crossed_module(G, N, F, ctx.alg(gn, F))
    for bn, xn, k, act in _smash_cases(ctx):
        if ctx.groups[xn].is_abelian:
            yield f"{bn}-module {xn}#{k}", module_crossed_module(ctx.groups[bn], ctx.groups[xn], act, F)


def prop_crossed_modules(ctx: _Context, res: PropResult):
    """Crossed modules give groupoids, and both round trips return isomorphic objects."""
    F = ctx.cfg.fields[0]
    for name, cm in _crossed_cases(ctx, F):
        ok = check_crossed_module(cm).ok
        if ok:
            g = crossed_to_cat1(cm)
            ok = check_groupoid(g).ok and crossed_roundtrip(cm).report.ok and graph_roundtrip(g.graph).report.ok
        res.record(ok, {"crossed-module": name})


def prop_equivalence(ctx: _Context, res: PropResult):
    """The four cat^1 conditions agree on every reflexive graph."""
    F = ctx.cfg.fields[0]
    graphs = []
    for name, cm in _crossed_cases(ctx, F):
        graphs.append((f"G({name})", crossed_to_cat1(cm, verify=False).graph, True))
    for gn, G in ctx.groups.items():
        A = ctx.alg(gn, F)
        graphs.append((f"discrete {gn}", discrete_graph(A), True))
        graphs.append((f"over-K {gn}", indiscrete_graph(A), G.is_abelian))
        if G.order ** 2 <= ctx.cfg.max_dim:
            graphs.append((f"pair {gn}", pair_graph(A), True))
    for name, g, expected in graphs:
        v = equivalence_verdicts(g)
        res.record(len(set(v.values())) == 1 and v["cat1"] == expected, {"graph": name, "verdicts": v})


def prop_peiffer(ctx: _Context, res: PropResult):
    """Dropping Peiffer (non-abelian X, trivial d) breaks multiplicativity of m."""
    F = ctx.cfg.fields[0]
    C2 = CATALOG["C2"]
    for xn, X in ctx.groups.items():
        if X.is_abelian or 2 * X.order > ctx.cfg.max_dim:
            continue
        cm = module_crossed_module(C2, X, [tuple(range(X.order))] * 2, F)
        rep = check_crossed_module(cm)
        g = crossed_to_cat1(cm, verify=False)
        mrep = check_morphism(g.m)
        res.record(rep.failed() == ["peiffer"] and not mrep["algebra-mult"].passed, {"X": xn})


PROPERTIES: list[tuple[str, Callable]] = [
    ("hopf-axioms", prop_axioms),
    ("hkernel-oracle", prop_kernel_oracle),
    ("cokernel-oracle", prop_cokernel_oracle),
    ("factorization", prop_factorization),
    ("pullback-oracle", prop_pullback_oracle),
    ("equalizer-oracle", prop_equalizer_oracle),
    ("newman-bijection", prop_newman),
    ("regularity", prop_regularity),
    ("normality-oracle", prop_normality),
    ("huq-commutator", prop_commutator),
    ("takeuchi", prop_takeuchi),
    ("smash-split", prop_smash),
    ("crossed-modules", prop_crossed_modules),
    ("cat1-equivalence", prop_equivalence),
    ("peiffer-necessity", prop_peiffer),
]


def run_suite(cfg: SuiteConfig, only: list[str] | None = None) -> tuple[str, int]:
    """Run every property; returns the report text and the exit code (0 iff all pass)."""
    known = [name for name, _ in PROPERTIES]
    unknown = sorted(set(only or ()) - set(known))
    if unknown:
        raise MalformedInputError(f"unknown properties {', '.join(unknown)}; known: {', '.join(known)}")
    ctx = _Context(cfg)
    lines = [f"SUITE seed={cfg.seed} groups={','.join(cfg.groups)} fields={','.join(map(str, cfg.fields))} "
             f"max_dim={cfg.max_dim}" + (f" inject={cfg.inject}" if cfg.inject else "")]
    code = 0
    for name, fn in PROPERTIES:
        if only and name not in only:
            continue
        res = PropResult(name)
        try:
            fn(ctx, res)
        except HopfError as exc:
            res.record(False, {"error": type(exc).__name__, "message": str(exc)})
        lines.append(f"PROP {name} cases={res.cases} fail={res.failures}")
        if res.witness is not None:
            lines.append("WITNESS " + json.dumps(res.witness, sort_keys=True, default=str))
        if not res.ok:
            code = 1
    return "\n".join(lines) + "\n", code
