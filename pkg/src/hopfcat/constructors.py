"""Factories for the example catalog and group-like based isomorphism search."""

from __future__ import annotations

from math import comb

from .actions import ModuleAction, SmashProduct, smash_product
from .errors import InvalidHomError, InvalidPrimeError, MalformedInputError
from .groups import FiniteGroupTable, check_hom, find_isomorphism
from .hopf import HopfAlgebra, HopfMorphism, HopfSubalgebra
from .linalg import FieldSpec, Subspace, _is_prime

__all__ = [
    "group_algebra", "truncated_primitive", "hopf_from_group_hom", "smash_product", "SmashProduct",
    "group_action", "group_like_indices", "group_of_group_likes", "find_group_like_iso",
    "subgroup_subalgebra",
]


def group_algebra(g: FiniteGroupTable, field: FieldSpec) -> HopfAlgebra:
    """``K[G]``: basis the group elements, ``Delta(g) = g (x) g``, ``S(g) = g^-1``."""
    n = g.order
    mult = [{g.mul(a, b): 1} for a in range(n) for b in range(n)]
    comult = [{a * n + a: 1} for a in range(n)]
    return HopfAlgebra(field, n, mult, {g.identity_index: 1}, comult, [1] * n,
                       [{g.inv(a): 1} for a in range(n)], name=f"K[{g.name}]" if g.name else None)


def truncated_primitive(p: int, field: FieldSpec | None = None) -> HopfAlgebra:
    """``F_p[x]/(x^p)`` with ``x`` primitive; basis ``1, x, ..., x^(p-1)``.

    Only consistent in characteristic ``p``, so any other field is refused.
    """
    if not _is_prime(p):
        raise InvalidPrimeError(f"{p} is not prime")
    if p > 7:
        raise InvalidPrimeError("carrier dimension is capped at 7")
    F = FieldSpec.prime(p)
    if field is not None and field != F:
        raise InvalidPrimeError(f"x^p = 0 is only a Hopf ideal in characteristic {p}, not over {field}")
    mult = [{i + j: 1} if i + j < p else {} for i in range(p) for j in range(p)]
    comult = [{i * p + (k - i): comb(k, i) % p for i in range(k + 1) if comb(k, i) % p} for k in range(p)]
    counit = [1] + [0] * (p - 1)
    antipode = [{k: (-1) ** k % p} for k in range(p)]
    return HopfAlgebra(F, p, mult, {0: 1}, comult, counit, antipode, name=f"F{p}[x]/(x^{p})")


def hopf_from_group_hom(f, src: FiniteGroupTable, tgt: FiniteGroupTable, field: FieldSpec,
                        source: HopfAlgebra | None = None, target: HopfAlgebra | None = None) -> HopfMorphism:
    check_hom(f, src, tgt)
    A = source or group_algebra(src, field)
    B = target or group_algebra(tgt, field)
    return HopfMorphism(A, B, [{f[a]: 1} for a in range(src.order)], "K[f]")


def subgroup_subalgebra(A: HopfAlgebra, elements) -> HopfSubalgebra:
    """``K[H]`` inside ``K[G]`` for a subgroup given by element indices."""
    return HopfSubalgebra(A, Subspace.span(A.field, A.dim, [{g: 1} for g in elements]))


def group_action(B: HopfAlgebra, X: HopfAlgebra, act) -> ModuleAction:
    """Linearize a group action; ``act[b][x]`` is the index of ``b . x``."""
    n = X.dim
    return ModuleAction(B, X, [{act[b][x]: 1} for b in range(B.dim) for x in range(n)])


# ---------------------------------------------------------------- group-likes


def group_like_indices(h: HopfAlgebra) -> list[int]:
    """Basis vectors ``e`` with ``Delta(e) = e (x) e`` and ``eps(e) = 1``."""
    d = h.dim
    return [i for i in range(d) if h.comult_table[i] == {i * d + i: 1} and h.counit_row[i] == 1]


def group_of_group_likes(h: HopfAlgebra) -> FiniteGroupTable | None:
    """The group of basis group-likes, when they form the whole basis."""
    gl = group_like_indices(h)
    if len(gl) != h.dim:
        return None
    d = h.dim
    table = []
    for a in range(d):
        row = []
        for b in range(d):
            prod = h.mult_table[a * d + b]
            if len(prod) != 1 or next(iter(prod.values())) != 1:
                raise MalformedInputError("product of group-likes is not a basis vector")
            row.append(next(iter(prod)))
        table.append(row)
    return FiniteGroupTable.from_table(table, h.name or "")


def find_group_like_iso(h1: HopfAlgebra, h2: HopfAlgebra) -> HopfMorphism | None:
    """A Hopf isomorphism ``h1 -> h2`` matching basis group-likes, if both are group algebras."""
    if h1.dim != h2.dim or h1.field != h2.field:
        return None
    G1, G2 = group_of_group_likes(h1), group_of_group_likes(h2)
    if G1 is None or G2 is None:
        return None
    f = find_isomorphism(G1, G2)
    if f is None:
        return None
    return HopfMorphism(h1, h2, [{f[a]: 1} for a in range(h1.dim)], "iso")


def require_group_like_iso(h1: HopfAlgebra, h2: HopfAlgebra) -> HopfMorphism:
    iso = find_group_like_iso(h1, h2)
    if iso is None:
        raise InvalidHomError(f"no group-like isomorphism between {h1!r} and {h2!r}")
    return iso
