"""Kernels, cokernels, factorizations, pullbacks, h-inverses and Newman's correspondence
in the category of cocommutative Hopf algebras."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import DiagramError, DimensionMismatchError, InternalError
from .hopf import (HopfAlgebra, HopfMorphism, HopfSubalgebra, LeftIdealCoideal, QuotientResult,
                   TensorProduct, check_hopf_ideal, check_morphism, ideal_closure,
                   largest_subcoalgebra_in, quotient_algebra, subspace_plus, tensor_coords,
                   tensor_product)
from .linalg import Quotient, Subspace, axpy, check_same_field, kernel_of_columns, tensor


def _coc(*algebras: HopfAlgebra):
    for a in algebras:
        a.require_cocommutative()


# ---------------------------------------------------------------- kernels and cokernels


def hkernel(f: HopfMorphism) -> HopfSubalgebra:
    """``HKer(f) = {a : f(a_1) (x) a_2 = 1 (x) a}`` as a normal Hopf subalgebra."""
    A, B = f.source, f.target
    _coc(A, B)
    F, dA = A.field, A.dim
    cols = []
    for i in range(dA):
        col: dict = {}
        for a1, a2, c in A.coproduct_terms[i]:
            axpy(F, col, tensor(F, f.cols[a1], {a2: 1}, dA), c)
        axpy(F, col, tensor(F, B.unit_vec, {i: 1}, dA), -1)
        cols.append(col)
    space = kernel_of_columns(F, cols, dA)
    sub = HopfSubalgebra(A, space, name="HKer")
    if not is_normal(sub):
        raise InternalError("Hopf kernel is not normal")
    return sub


def cokernel(f: HopfMorphism) -> QuotientResult:
    """``B -> B / B f(A)^+ B``."""
    A, B = f.source, f.target
    _coc(A, B)
    J = ideal_closure(B, subspace_plus(B, f.image()))
    res = quotient_algebra(B, J, name="Coker")
    zero = HopfMorphism.zero(A, res.quotient)
    if not (res.proj @ f).same_map(zero):
        raise InternalError("cokernel composite is not the zero morphism")
    return res


@dataclass
class FactorizationResult:
    epi_part: HopfMorphism
    mono_part: HopfMorphism
    kernel: HopfSubalgebra


def image_factorization(f: HopfMorphism) -> FactorizationResult:
    """Regular epi / mono factorization ``f = mono . epi`` through ``A / A HKer(f)^+ A``."""
    k = hkernel(f)
    Q, p, reps = cokernel(k.inclusion)
    mono = HopfMorphism(Q, f.target, [f.cols[r] for r in reps], "mono")
    if not (mono @ p).same_map(f):
        raise InternalError("factorization does not recompose to f")
    if not (p.is_surjective and mono.is_injective):
        raise InternalError("factorization parts have the wrong shape")
    for part in (p, mono):
        rep = check_morphism(part)
        if not rep.ok:
            raise InternalError(f"factorization part fails {rep.failed()}")
    return FactorizationResult(p, mono, k)


# ---------------------------------------------------------------- pullbacks and equalizers


class Pullback(NamedTuple):
    object: HopfAlgebra
    p1: HopfMorphism
    p2: HopfMorphism
    sub: HopfSubalgebra  # the object as a Hopf subalgebra of A (x) C
    product: TensorProduct

    def coords(self, vec: dict) -> dict | None:
        return self.sub.space.sparse_coords(vec)

    def induced(self, alpha: HopfMorphism, beta: HopfMorphism) -> HopfMorphism:
        """The map ``t -> alpha(t_1) (x) beta(t_2)`` into the pullback object."""
        T = alpha.source
        cols = []
        for i in range(T.dim):
            v = alpha.tensor_apply(T.comult_table[i], beta)
            c = self.coords(v)
            if c is None:
                raise DiagramError("the pair does not factor through the pullback")
            cols.append(c)
        return HopfMorphism(T, self.object, cols, "induced")


def pullback_space(f: HopfMorphism, g: HopfMorphism) -> Subspace:
    """``{a (x) c : a_1 (x) f(a_2) (x) c = a (x) g(c_1) (x) c_2}`` inside ``A (x) C``."""
    A, C, B = f.source, g.source, f.target
    if g.target is not B and g.target.dim != B.dim:
        raise DimensionMismatchError("pullback needs a common target")
    F = A.field
    dA, dB, dC = A.dim, B.dim, C.dim
    left = []
    for i in range(dA):
        v: dict = {}
        for a1, a2, c in A.coproduct_terms[i]:
            axpy(F, v, tensor(F, {a1: 1}, f.cols[a2], dB), c)
        left.append(v)
    right = []
    for j in range(dC):
        v = {}
        for c1, c2, c in C.coproduct_terms[j]:
            axpy(F, v, tensor(F, g.cols[c1], {c2: 1}, dC), c)
        right.append(v)
    cols = []
    for i in range(dA):
        for j in range(dC):
            col = tensor(F, left[i], {j: 1}, dC)
            axpy(F, col, tensor(F, {i: 1}, right[j], dB * dC), -1)
            cols.append(col)
    return kernel_of_columns(F, cols, dA * dC)


def pullback(f: HopfMorphism, g: HopfMorphism, product: TensorProduct | None = None) -> Pullback:
    _coc(f.source, g.source, f.target)
    check_same_field(f.source.field, g.source.field)
    if g.target is not f.target and g.target.dim != f.target.dim:
        raise DimensionMismatchError("pullback needs a common target")
    T = product or tensor_product(f.source, g.source)
    sub = HopfSubalgebra(T.product, pullback_space(f, g), name="P")
    P = sub.algebra
    inc = sub.inclusion
    p1 = T.p1 @ inc
    p2 = T.p2 @ inc
    if not (f @ p1).same_map(g @ p2):
        raise InternalError("pullback square does not commute")
    return Pullback(P, p1, p2, sub, T)


def equalizer(f: HopfMorphism, g: HopfMorphism) -> HopfSubalgebra:
    """Largest subcoalgebra of the linear equalizer, checked to be a Hopf subalgebra."""
    A = f.source
    if (f.source.dim, f.target.dim) != (g.source.dim, g.target.dim):
        raise DimensionMismatchError("equalizer needs parallel morphisms")
    _coc(A, f.target)
    F = A.field
    diff = [axpy(F, dict(a), b, -1) for a, b in zip(f.cols, g.cols)]
    E = largest_subcoalgebra_in(A, kernel_of_columns(F, diff, A.dim))
    sub = HopfSubalgebra(A, E, name="Eq")
    for v in E.vectors():
        if f(v) != g(v):
            raise InternalError("morphisms disagree on their equalizer")
    return sub


# ---------------------------------------------------------------- images and preimages


def h_inverse(p: HopfMorphism, c: HopfSubalgebra) -> HopfSubalgebra:
    """``{x : (p (x) id) Delta(x) - 1 (x) x  in  C^+ (x) A}``."""
    A, B = p.source, p.target
    if c.ambient is not B and c.ambient.dim != B.dim:
        raise DimensionMismatchError("subalgebra does not live in the target of p")
    _coc(A, B)
    F, dA = A.field, A.dim
    q = Quotient(c.plus())
    qcols = [q(col) for col in p.cols]
    qone = q(B.unit_vec)
    images = []
    for i in range(dA):
        v: dict = {}
        for a1, a2, coeff in A.coproduct_terms[i]:
            axpy(F, v, tensor(F, qcols[a1], {a2: 1}, dA), coeff)
        axpy(F, v, tensor(F, qone, {i: 1}, dA), -1)
        images.append(v)
    sub = HopfSubalgebra(A, kernel_of_columns(F, images, dA), name="h-inverse")
    if not c.space.contains(direct_image_space(p, sub.space)):
        raise InternalError("p(p^-1(C)) is not contained in C")
    return sub


def direct_image_space(p: HopfMorphism, w: Subspace) -> Subspace:
    return Subspace.span(p.source.field, p.target.dim, [p(v) for v in w.vectors()])


def direct_image(p: HopfMorphism, d: HopfSubalgebra) -> HopfSubalgebra:
    if d.ambient is not p.source and d.ambient.dim != p.source.dim:
        raise DimensionMismatchError("subalgebra does not live in the source of p")
    return HopfSubalgebra(p.target, direct_image_space(p, d.space), name="image")


# ---------------------------------------------------------------- Newman correspondence


def newman_phi(d: HopfSubalgebra) -> LeftIdealCoideal:
    """``A D^+``, the left ideal generated by the augmentation of ``D``."""
    A = d.ambient
    _coc(A)
    plus = d.plus().vectors()
    vecs = [A.mul({i: 1}, x) for i in range(A.dim) for x in plus]
    return LeftIdealCoideal(A, Subspace.span(A.field, A.dim, vecs))


def newman_psi(i: LeftIdealCoideal) -> HopfSubalgebra:
    """``{x : (id (x) pi) Delta(x) = x (x) pi(1)}`` with ``pi: A -> A/I``."""
    A = i.ambient
    _coc(A)
    F, d = A.field, A.dim
    q = Quotient(i.space)
    qcols = [q({k: 1}) for k in range(d)]
    qone = q(A.unit_vec)
    images = []
    for x in range(d):
        v: dict = {}
        for a1, a2, c in A.coproduct_terms[x]:
            axpy(F, v, tensor(F, {a1: 1}, qcols[a2], q.dim), c)
        axpy(F, v, tensor(F, {x: 1}, qone, q.dim), -1)
        images.append(v)
    return HopfSubalgebra(A, kernel_of_columns(F, images, d), name="Psi")


def adjoint_stable(d: HopfSubalgebra) -> bool:
    """``a_1 x S(a_2)`` stays in ``D`` for basis ``a`` of the ambient and ``x`` of ``D``."""
    A, W = d.ambient, d.space
    return all(W.contains_vec(A.adjoint({a: 1}, x)) for a in range(A.dim) for x in W.vectors())


def phi_is_hopf_ideal(d: HopfSubalgebra) -> bool:
    """Whether ``A D^+`` is a Hopf ideal (two-sided and antipode stable)."""
    return check_hopf_ideal(d.ambient, newman_phi(d).space).ok


def is_normal(d: HopfSubalgebra) -> bool:
    """Normality by the conjugation criterion, cross-checked against ``A D^+`` being a Hopf ideal."""
    _coc(d.ambient)
    conj = adjoint_stable(d)
    ideal = phi_is_hopf_ideal(d)
    if conj != ideal:
        raise InternalError("normality criteria disagree")
    return conj


def diagonal_is_normal(x: HopfAlgebra) -> bool:
    """Whether ``Delta: X -> X (x) X`` is a normal monomorphism (decided via ``Phi`` being a Hopf ideal)."""
    _coc(x)
    T = tensor_product(x, x).product
    image = Subspace.span(x.field, T.dim, x.comult_table)
    return phi_is_hopf_ideal(HopfSubalgebra(T, image, name="diag"))


def linear_kernel_identity(f: HopfMorphism) -> tuple[bool, bool]:
    """``(ker f == A HKer(f)^+, ker f == A HKer(f)^+ A)``."""
    A = f.source
    lin = f.linear_kernel()
    left = newman_phi(hkernel(f)).space
    two = ideal_closure(A, left)
    return lin == left, lin == two


# ---------------------------------------------------------------- split extensions


@dataclass
class Extension:
    kernel_inclusion: HopfMorphism
    epi: HopfMorphism
    section: HopfMorphism | None = None

    @classmethod
    def from_epi(cls, epi: HopfMorphism, section: HopfMorphism | None = None) -> Extension:
        if not epi.is_surjective:
            raise DiagramError("extension map is not surjective")
        if section is not None and not (epi @ section).same_map(HopfMorphism.identity(epi.target)):
            raise DiagramError("section is not a right inverse of the epimorphism")
        return cls(hkernel(epi).inclusion, epi, section)

    @property
    def kernel(self) -> HopfAlgebra:
        return self.kernel_inclusion.source

    @property
    def middle(self) -> HopfAlgebra:
        return self.epi.source

    @property
    def base(self) -> HopfAlgebra:
        return self.epi.target


def check_split_short_five(top: Extension, bottom: Extension, kappa: HopfMorphism,
                           alpha: HopfMorphism, beta: HopfMorphism) -> bool:
    """Validate a morphism of split extensions and report whether ``alpha`` is an isomorphism."""
    if top.section is None or bottom.section is None:
        raise DiagramError("both extensions need sections")
    squares = {
        "kernel": (alpha @ top.kernel_inclusion, bottom.kernel_inclusion @ kappa),
        "epi": (beta @ top.epi, bottom.epi @ alpha),
        "section": (alpha @ top.section, bottom.section @ beta),
    }
    for name, (lhs, rhs) in squares.items():
        if not lhs.same_map(rhs):
            raise DiagramError(f"{name} square does not commute")
    return alpha.is_iso
