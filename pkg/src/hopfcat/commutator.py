"""Commuting Hopf subalgebras, the Huq commutator and abelianization."""

from __future__ import annotations

from dataclasses import dataclass

from .categorical import cokernel, hkernel, is_normal
from .errors import InternalError, NormalityError
from .hopf import HopfAlgebra, HopfSubalgebra, QuotientResult
from .linalg import Subspace, axpy, scale


@dataclass
class CommuteResult:
    elementwise: bool
    sweedler: bool
    witness: tuple | None = None  # basis indices (in the ambient) of a non-commuting pair

    def __bool__(self):
        return self.elementwise


@dataclass
class CommutatorWitness:
    generators: list[dict]
    closure: HopfSubalgebra

    @property
    def dim(self) -> int:
        return self.closure.dim


def bracket(A: HopfAlgebra, a: dict, b: dict) -> dict:
    """``{a, b} = a_1 b_1 S(a_2) S(b_2)``."""
    F = A.field
    out: dict = {}
    for (a1, a2), ca in A.sweedler(a):
        for (b1, b2), cb in A.sweedler(b):
            term = A.mul(A.mul({a1: 1}, {b1: 1}), A.mul(A.antipode_table[a2], A.antipode_table[b2]))
            axpy(F, out, term, ca * cb)
    return out


def _same_ambient(x: HopfSubalgebra, y: HopfSubalgebra) -> HopfAlgebra:
    if x.ambient is not y.ambient and not x.ambient.same_structure(y.ambient):
        raise NormalityError("subalgebras live in different ambients")
    return x.ambient


def commute_check(x: HopfSubalgebra, y: HopfSubalgebra) -> CommuteResult:
    """Test ``ab = ba`` and ``a_1 b_1 S(a_2) S(b_2) = eps(a) eps(b) 1`` on basis pairs."""
    A = _same_ambient(x, y)
    A.require_cocommutative()
    F = A.field
    xs, ys = x.space.vectors(), y.space.vectors()
    elementwise, witness = True, None
    for i, a in enumerate(xs):
        for j, b in enumerate(ys):
            if A.mul(a, b) != A.mul(b, a):
                elementwise, witness = False, (i, j)
                break
        if not elementwise:
            break
    sweed = all(bracket(A, a, b) == scale(F, A.one(), A.eps(a) * A.eps(b)) for a in xs for b in ys)
    if elementwise != sweed:
        raise InternalError("elementwise and Sweedler commutation verdicts disagree")
    return CommuteResult(elementwise, sweed, witness)


def generate_subalgebra(A: HopfAlgebra, vectors: list[dict]) -> Subspace:
    """Span of ``vectors`` and the unit, closed under multiplication."""
    W = Subspace.span(A.field, A.dim, list(vectors) + [A.one()])
    for _ in range(A.dim + 1):
        vecs = W.vectors()
        prods = [A.mul(u, v) for u in vecs for v in vecs]
        nxt = Subspace.span(A.field, A.dim, vecs + prods)
        if nxt.dim == W.dim:
            return nxt
        W = nxt
    raise InternalError("subalgebra generation did not stabilize")


def huq_commutator(x: HopfSubalgebra, y: HopfSubalgebra) -> CommutatorWitness:
    """``[X, Y]``: the subalgebra generated by ``{a, b}``, verified normal and Hopf."""
    A = _same_ambient(x, y)
    for s in (x, y):
        if not is_normal(s):
            raise NormalityError("the Huq commutator is taken of normal Hopf subalgebras")
    gens = [bracket(A, a, b) for a in x.space.vectors() for b in y.space.vectors()]
    space = generate_subalgebra(A, gens)
    closure = HopfSubalgebra(A, space, name="[X,Y]")
    if not is_normal(closure):
        raise InternalError("commutator is not normal")
    return CommutatorWitness(gens, closure)


def quotient_by_normal(n: HopfSubalgebra) -> QuotientResult:
    if not is_normal(n):
        raise NormalityError("quotient by a non-normal Hopf subalgebra")
    res = cokernel(n.inclusion)
    if hkernel(res.proj).space != n.space:
        raise InternalError("kernel of the quotient map is not the subalgebra")
    return res


def abelianization(a: HopfAlgebra) -> QuotientResult:
    whole = HopfSubalgebra.whole(a)
    res = quotient_by_normal(huq_commutator(whole, whole).closure)
    if not res.quotient.is_commutative:
        raise InternalError("abelianization is not commutative")
    return res
