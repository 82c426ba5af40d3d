"""Finite groups as multiplication tables, plus brute-force group theory.

These routines are the independent oracles the Hopf-level constructions are
checked against (kernels, quotients, commutator subgroups, fibre products).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product

from .errors import InvalidGroupError, InvalidHomError, UnknownGroupError


@dataclass(frozen=True, eq=False)
class FiniteGroupTable:
    order: int
    mult_table: tuple
    identity_index: int
    inverse: tuple
    labels: tuple | None = None
    name: str = ""

    def __post_init__(self):
        n = self.order
        T = self.mult_table
        if len(T) != n or any(len(r) != n for r in T):
            raise InvalidGroupError("table shape does not match order")
        full = set(range(n))
        for r in T:
            if set(r) != full:
                raise InvalidGroupError("table is not a Latin square")
        for c in range(n):
            if {T[r][c] for r in range(n)} != full:
                raise InvalidGroupError("table is not a Latin square")
        e = self.identity_index
        if any(T[e][a] != a or T[a][e] != a for a in range(n)):
            raise InvalidGroupError("identity index is wrong")
        if len(self.inverse) != n or any(T[a][self.inverse[a]] != e for a in range(n)):
            raise InvalidGroupError("inverse array is inconsistent")
        for a, b, c in product(range(n), repeat=3):
            if T[T[a][b]][c] != T[a][T[b][c]]:
                raise InvalidGroupError(f"table is not associative at {(a, b, c)}")

    @classmethod
    def from_table(cls, table, name: str = "", labels=None) -> FiniteGroupTable:
        table = tuple(tuple(r) for r in table)
        n = len(table)
        e = next((a for a in range(n) if all(table[a][b] == b for b in range(n))), None)
        if e is None:
            raise InvalidGroupError("no identity element")
        inv = []
        for a in range(n):
            b = next((b for b in range(n) if table[a][b] == e), None)
            if b is None:
                raise InvalidGroupError("element without inverse")
            inv.append(b)
        return cls(n, table, e, tuple(inv), tuple(labels) if labels else None, name)

    def mul(self, a: int, b: int) -> int:
        return self.mult_table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def __repr__(self):
        return f"<FiniteGroupTable {self.name or '?'} order={self.order}>"

    @cached_property
    def is_abelian(self) -> bool:
        T = self.mult_table
        return all(T[a][b] == T[b][a] for a in range(self.order) for b in range(a))

    def elem_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity_index:
            x = self.mul(x, a)
            k += 1
        return k

    def closure(self, gens) -> frozenset:
        """Subgroup generated by ``gens``."""
        S = {self.identity_index}
        frontier = list(S)
        gens = list(gens)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in S:
                        S.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(S)

    @cached_property
    def generators(self) -> tuple:
        gens: list[int] = []
        H = self.closure(gens)
        # prefer high-order elements so generating sets stay small
        for a in sorted(range(self.order), key=lambda x: (-self.elem_order(x), x)):
            if a not in H:
                gens.append(a)
                H = self.closure(gens)
            if len(H) == self.order:
                break
        return tuple(gens)

    @cached_property
    def subgroups(self) -> tuple:
        subs = {self.closure([a]) for a in range(self.order)}
        while True:
            new = {self.closure(h | k) for h in subs for k in subs} | subs
            if new == subs:
                break
            subs = new
        return tuple(sorted(subs, key=lambda s: (len(s), sorted(s))))

    def is_normal(self, N) -> bool:
        return all(self.mul(self.mul(g, n), self.inv(g)) in N for g in range(self.order) for n in N)

    @cached_property
    def normal_subgroups(self) -> tuple:
        return tuple(N for N in self.subgroups if self.is_normal(N))

    def commutator(self, N, M) -> frozenset:
        """``[N, M]``, generated by ``n m n^-1 m^-1``."""
        gens = {self.mul(self.mul(n, m), self.mul(self.inv(n), self.inv(m))) for n in N for m in M}
        return self.closure(gens)

    def normal_closure(self, S) -> frozenset:
        conj = {self.mul(self.mul(g, s), self.inv(g)) for g in range(self.order) for s in S}
        return self.closure(conj)

    def cosets(self, N) -> list[frozenset]:
        seen: set = set()
        out = []
        for g in range(self.order):
            if g not in seen:
                c = frozenset(self.mul(g, n) for n in N)
                seen |= c
                out.append(c)
        return out


def _sorted_group(elements, mul, name, labeler=str) -> FiniteGroupTable:
    elements = list(elements)
    index = {x: i for i, x in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    return FiniteGroupTable.from_table(table, name, [labeler(x) for x in elements])


def cyclic(n: int, name: str | None = None) -> FiniteGroupTable:
    return FiniteGroupTable.from_table([[(a + b) % n for b in range(n)] for a in range(n)],
                                       name or f"C{n}", [f"a^{k}" if k > 1 else ("a" if k else "e") for k in range(n)])


def _cycle_label(p: tuple) -> str:
    seen, cycles = set(), []
    for s in range(len(p)):
        if s in seen or p[s] == s:
            continue
        cyc, x = [], s
        while x not in seen:
            seen.add(x)
            cyc.append(x + 1)
            x = p[x]
        cycles.append("(" + "".join(map(str, cyc)) + ")")
    return "".join(cycles) or "e"


def permutation_group(gens, name: str) -> FiniteGroupTable:
    """Closure of permutation tuples; elements sorted lexicographically (identity first)."""
    n = len(gens[0])
    ident = tuple(range(n))

    def compose(p, q):  # p after q
        return tuple(p[q[i]] for i in range(n))

    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return _sorted_group(sorted(elems), compose, name, _cycle_label)


def symmetric(n: int) -> FiniteGroupTable:
    return _sorted_group(sorted(permutations(range(n))),
                         lambda p, q: tuple(p[q[i]] for i in range(n)), f"S{n}", _cycle_label)


def quaternion() -> FiniteGroupTable:
    # units 1, i, j, k as 0..3; element = (sign, unit)
    unit_mul = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }

    def mul(a, b):
        s, u = unit_mul[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    names = "1ijk"
    elems = [(s, u) for u in range(4) for s in (1, -1)]
    return _sorted_group(elems, mul, "Q8", lambda x: ("" if x[0] > 0 else "-") + names[x[1]])


def direct_product(G: FiniteGroupTable, H: FiniteGroupTable, name: str | None = None) -> FiniteGroupTable:
    """``G x H`` with element ``(g, h)`` at index ``g*|H| + h``."""
    m = H.order
    table = [[G.mul(a // m, b // m) * m + H.mul(a % m, b % m) for b in range(G.order * m)]
             for a in range(G.order * m)]
    labels = [f"({G.label(a // m)},{H.label(a % m)})" for a in range(G.order * m)]
    return FiniteGroupTable.from_table(table, name or f"{G.name}x{H.name}", labels)


def subgroup_table(G: FiniteGroupTable, S) -> tuple[FiniteGroupTable, list[int]]:
    elems = sorted(S)
    index = {x: i for i, x in enumerate(elems)}
    table = [[index[G.mul(a, b)] for b in elems] for a in elems]
    return FiniteGroupTable.from_table(table, "", [G.label(x) for x in elems]), elems


def quotient_group(G: FiniteGroupTable, N) -> tuple[FiniteGroupTable, list[int]]:
    """``G/N`` and the projection as a list of coset indices."""
    cos = G.cosets(N)
    which = [0] * G.order
    for k, c in enumerate(cos):
        for g in c:
            which[g] = k
    reps = [min(c) for c in cos]
    table = [[which[G.mul(a, b)] for b in reps] for a in reps]
    return FiniteGroupTable.from_table(table, f"{G.name}/N"), which


def _catalog():
    S3 = symmetric(3)
    D4 = permutation_group([(1, 2, 3, 0), (3, 2, 1, 0)], "D4")
    V4 = direct_product(cyclic(2), cyclic(2), "C2xC2")
    return {
        "C1": cyclic(1, "C1"),
        "C2": cyclic(2),
        "C3": cyclic(3),
        "C4": cyclic(4),
        "C6": cyclic(6),
        "C2xC2": V4,
        "S3": S3,
        "D4": D4,
        "Q8": quaternion(),
    }


CATALOG: dict[str, FiniteGroupTable] = _catalog()


def catalog_group(name: str) -> FiniteGroupTable:
    try:
        return CATALOG[name]
    except KeyError:
        raise UnknownGroupError(f"unknown group {name!r}; known: {', '.join(CATALOG)}") from None


# ---------------------------------------------------------------- homomorphisms


def is_hom(f, G: FiniteGroupTable, H: FiniteGroupTable) -> bool:
    return all(f[G.mul(a, b)] == H.mul(f[a], f[b]) for a in range(G.order) for b in range(G.order))


def check_hom(f, G, H):
    if len(f) != G.order or any(not 0 <= x < H.order for x in f):
        raise InvalidHomError("image list has the wrong length or bad indices")
    if not is_hom(f, G, H):
        raise InvalidHomError("map is not a group homomorphism")


def _extend(G: FiniteGroupTable, H: FiniteGroupTable, gens, images):
    f = {G.identity_index: H.identity_index}
    frontier = [G.identity_index]
    while frontier:
        nxt = []
        for x in frontier:
            for g, h in zip(gens, images):
                y = G.mul(x, g)
                val = H.mul(f[x], h)
                if y in f:
                    if f[y] != val:
                        return None
                else:
                    f[y] = val
                    nxt.append(y)
        frontier = nxt
    out = tuple(f[a] for a in range(G.order))
    return out if is_hom(out, G, H) else None


def homomorphisms(G: FiniteGroupTable, H: FiniteGroupTable) -> list[tuple]:
    """All homomorphisms ``G -> H`` as image tuples (brute force over generator images)."""
    gens = G.generators
    out = []
    for images in product(range(H.order), repeat=len(gens)):
        if any(H.elem_order(h) and G.elem_order(g) % H.elem_order(h) for g, h in zip(gens, images)):
            continue
        f = _extend(G, H, gens, images)
        if f is not None:
            out.append(f)
    return sorted(set(out))


def find_isomorphism(G: FiniteGroupTable, H: FiniteGroupTable) -> tuple | None:
    if G.order != H.order:
        return None
    gens = G.generators
    for images in product(range(H.order), repeat=len(gens)):
        if any(G.elem_order(g) != H.elem_order(h) for g, h in zip(gens, images)):
            continue
        f = _extend(G, H, gens, images)
        if f is not None and len(set(f)) == G.order:
            return f
    return None


def hom_kernel(f, G, H) -> frozenset:
    return frozenset(a for a in range(G.order) if f[a] == H.identity_index)


def fibre_product_order(f, g, G, K, H) -> int:
    """``|{(a, c) : f(a) = g(c)}|`` for ``f: G -> H``, ``g: K -> H``."""
    return sum(1 for a in range(G.order) for c in range(K.order) if f[a] == g[c])


def semidirect_product(N: FiniteGroupTable, B: FiniteGroupTable, action, name: str = "") -> FiniteGroupTable:
    """``N x| B`` with ``(n, b)(n', b') = (n . b(n'), b b')``; ``action[b][n]`` is ``b(n)``.

    Element ``(n, b)`` has index ``n*|B| + b``, matching the smash-product basis order.
    """
    m = B.order
    table = []
    for x in range(N.order * m):
        n, b = divmod(x, m)
        row = []
        for y in range(N.order * m):
            n2, b2 = divmod(y, m)
            row.append(N.mul(n, action[b][n2]) * m + B.mul(b, b2))
        table.append(row)
    return FiniteGroupTable.from_table(table, name or f"{N.name}x|{B.name}")


def automorphisms(G: FiniteGroupTable) -> list[tuple]:
    return [f for f in homomorphisms(G, G) if len(set(f)) == G.order]


def group_actions(B: FiniteGroupTable, X: FiniteGroupTable) -> list[tuple]:
    """Every action of ``B`` on ``X`` by automorphisms, as tables ``act[b][x]``.

    Found as homomorphisms into ``Aut(X)`` realized as a permutation group.
    """
    auts = automorphisms(X)
    aut = permutation_group(auts, f"Aut({X.name})") if X.order > 1 else None
    if aut is None:
        return [tuple((0,) for _ in range(B.order))]
    perms = sorted(set(auts))  # permutation_group sorts its elements the same way
    out = []
    for f in homomorphisms(B, aut):
        out.append(tuple(perms[f[b]] for b in range(B.order)))
    return out
