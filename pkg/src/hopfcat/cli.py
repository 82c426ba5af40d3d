"""Command line interface: ``hopfcat <command> ...``.

Exit codes: 0 when the requested property holds, 1 when it fails (axiom or
theorem violation, non-normal input, ...), 2 for unusable input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import fileio
from .actions import smash_product
from .categorical import (cokernel, equalizer, h_inverse, hkernel, image_factorization,
                          is_normal, linear_kernel_identity, newman_phi, newman_psi, pullback)
from .commutator import abelianization, commute_check, huq_commutator
from .constructors import group_action, group_algebra, hopf_from_group_hom, subgroup_subalgebra
from .errors import (AxiomFailure, DiagramError, FieldMismatchError, DimensionMismatchError, HopfError,
                     InternalError, InvalidGroupError, InvalidHomError, InvalidPrimeError,
                     MalformedInputError, NormalityError, NotCat1Error, UnknownGroupError)
from .groups import CATALOG, FiniteGroupTable, catalog_group, group_actions, homomorphisms
from .hopf import HopfAlgebra, HopfMorphism, HopfSubalgebra, check_hopf_axioms, dual_fd
from .linalg import FieldSpec, Subspace
from .suite import INJECTIONS, PROPERTIES, SuiteConfig, run_suite
from .xmod import (CrossedModule, cat1_to_crossed, check_crossed_module, check_groupoid,
                   crossed_roundtrip, crossed_to_cat1, discrete_graph, graph_roundtrip,
                   inclusion_crossed_module, indiscrete_graph, module_crossed_module, pair_graph)

INPUT_ERRORS = (MalformedInputError, UnknownGroupError, InvalidGroupError, InvalidHomError, InvalidPrimeError,
                FieldMismatchError, DimensionMismatchError, OSError, ValueError)


class UsageError(Exception):
    pass


def _out(text: str = ""):
    print(text)


def _fmt_scalar(x) -> str:
    return str(x)


def _fmt_vec(v: dict) -> str:
    if not v:
        return "0"
    return " + ".join(f"{_fmt_scalar(c)}*e{k}" if c != 1 else f"e{k}" for k, c in sorted(v.items()))


def _print_space(title: str, W: Subspace):
    _out(f"{title} dim={W.dim} ambient={W.ambient_dim}")
    for row in W.vectors():
        _out(f"  {_fmt_vec(row)}")


def _write_or_print(text: str, path: str | None):
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- input resolution


def _field(args) -> FieldSpec:
    try:
        return FieldSpec.parse(args.field)
    except (ValueError, InvalidPrimeError) as exc:
        raise UsageError(f"bad --field {args.field!r}: {exc}") from None


def _group(name: str | None, flag: str = "--group") -> FiniteGroupTable:
    if not name:
        raise UsageError(f"{flag} is required")
    return catalog_group(name)


def _elements(G: FiniteGroupTable, spec: str | None) -> frozenset:
    """Subgroup generated by a comma list of element indices or labels; default the whole group."""
    if spec is None or spec == "all":
        return frozenset(range(G.order))
    labels = {str(lbl): i for i, lbl in enumerate(G.labels or ())}
    elems = []
    for tok in filter(None, (t.strip() for t in spec.split(","))):
        if tok in labels:
            elems.append(labels[tok])
        elif tok.lstrip("-").isdigit() and 0 <= int(tok) < G.order:
            elems.append(int(tok))
        else:
            raise UsageError(f"unknown element {tok!r} of {G.name}")
    return G.closure(elems)


def _algebra(args) -> HopfAlgebra:
    if getattr(args, "file", None):
        return fileio.parse_hopf(args.file)
    return group_algebra(_group(args.group), _field(args))


def _hom_from(G, H, hom: int | None, images: str | None) -> tuple:
    if images is not None:
        try:
            f = tuple(int(t) for t in images.split(","))
        except ValueError:
            raise UsageError(f"bad image list {images!r}") from None
        return f
    homs = homomorphisms(G, H)
    k = 0 if hom is None else hom
    if not 0 <= k < len(homs):
        raise UsageError(f"--hom must be in 0..{len(homs) - 1} for {G.name} -> {H.name}")
    return homs[k]


def _morphism(args, second: bool = False) -> HopfMorphism:
    file = args.morphism2 if second else args.morphism
    if file:
        return fileio.parse_morphism(file)
    F = _field(args)
    src_name = (args.other or args.group) if second else args.group
    G, H = _group(src_name), _group(args.target, "--target")
    f = _hom_from(G, H, args.hom2 if second else args.hom, args.images2 if second else args.images)
    return hopf_from_group_hom(f, G, H, F)


def _subalgebra(A: HopfAlgebra, G: FiniteGroupTable, spec: str | None) -> HopfSubalgebra:
    return subgroup_subalgebra(A, _elements(G, spec))


def _crossed_module(args) -> CrossedModule:
    F = _field(args)
    G = _group(args.group)
    if args.carrier:
        X = _group(args.carrier, "--carrier")
        acts = group_actions(G, X)
        k = args.action or 0
        if not 0 <= k < len(acts):
            raise UsageError(f"--action must be in 0..{len(acts) - 1}")
        return module_crossed_module(G, X, acts[k], F)
    N = _elements(G, args.sub)
    return inclusion_crossed_module(G, N, F)


# ---------------------------------------------------------------- commands


def cmd_catalog(args) -> int:
    for name, G in CATALOG.items():
        labels = " ".join(f"{i}:{lbl}" for i, lbl in enumerate(G.labels or ()))
        _out(f"{name} order={G.order} abelian={'yes' if G.is_abelian else 'no'} elements {labels}")
    return 0


def cmd_dump(args) -> int:
    _write_or_print(fileio.dumps_hopf(_algebra(args)), args.output)
    return 0


def cmd_check(args) -> int:
    if args.file:
        h = fileio.loads_hopf(Path(args.file).read_text(encoding="utf-8"), verify=False)
    else:
        h = group_algebra(_group(args.group), _field(args))
    rep = check_hopf_axioms(h)
    _out(f"{h.name or 'algebra'} dim={h.dim} field={h.field}")
    _out(rep.format())
    return 0 if rep.ok else 1


def cmd_dual(args) -> int:
    D = dual_fd(_algebra(args))
    rep = check_hopf_axioms(D)
    _out(f"dual dim={D.dim} commutative={'yes' if D.is_commutative else 'no'} "
         f"cocommutative={'yes' if rep['cocommutativity'].passed else 'no'}")
    if args.output:
        fileio.serialize_hopf(D, args.output)
    return 0


def cmd_kernel(args) -> int:
    k = hkernel(_morphism(args))
    _print_space("hkernel", k.space)
    _out(f"normal={'yes' if is_normal(k) else 'no'}")
    return 0


def cmd_cokernel(args) -> int:
    q = cokernel(_morphism(args))
    _out(f"cokernel dim={q.quotient.dim} proj-rank={q.proj.rank}")
    if args.output:
        fileio.serialize_hopf(q.quotient, args.output)
    return 0


def cmd_factorize(args) -> int:
    f = _morphism(args)
    fac = image_factorization(f)
    left, two = linear_kernel_identity(f)
    _out(f"rank={f.rank} intermediate-dim={fac.epi_part.target.dim} hkernel-dim={fac.kernel.dim}")
    _out(f"ker(f) = A.HKer(f)+ : {'yes' if left else 'no'}")
    _out(f"ker(f) = A.HKer(f)+.A : {'yes' if two else 'no'}")
    return 0 if left and two and fac.epi_part.target.dim == f.rank else 1


def cmd_pullback(args) -> int:
    f, g = _morphism(args), _morphism(args, second=True)
    pb = pullback(f, g)
    _print_space("pullback", pb.sub.space)
    return 0


def cmd_equalizer(args) -> int:
    e = equalizer(_morphism(args), _morphism(args, second=True))
    _print_space("equalizer", e.space)
    return 0


def cmd_hinv(args) -> int:
    p = _morphism(args)
    if args.morphism:
        raise UsageError("hinv takes its subalgebra from --target; use the catalog form")
    C = _subalgebra(p.target, _group(args.target, "--target"), args.sub)
    pre = h_inverse(p, C)
    _print_space("h-inverse", pre.space)
    surj = (p @ pre.inclusion).rank == C.dim
    _out(f"restriction onto C surjective={'yes' if surj else 'no'}")
    return 0


def cmd_newman(args) -> int:
    G = _group(args.group)
    A = group_algebra(G, _field(args))
    D = _subalgebra(A, G, args.sub)
    I = newman_phi(D)
    if args.which == "phi":
        _print_space("phi", I.space)
        return 0
    back = newman_psi(I)
    _print_space("psi(phi(D))", back.space)
    ok = back.space == D.space and newman_phi(back).space == I.space
    _out(f"bijection round trip={'yes' if ok else 'no'}")
    return 0 if ok else 1


def cmd_normal(args) -> int:
    G = _group(args.group)
    A = group_algebra(G, _field(args))
    ok = is_normal(_subalgebra(A, G, args.sub))
    _out("normal" if ok else "not normal")
    return 0 if ok else 1


def cmd_commutator(args) -> int:
    G = _group(args.group)
    A = group_algebra(G, _field(args))
    X, Y = _subalgebra(A, G, args.sub), _subalgebra(A, G, args.sub2)
    c = huq_commutator(X, Y)
    _print_space("commutator", c.closure.space)
    verdict = commute_check(X, Y)
    _out(f"X and Y commute={'yes' if verdict.elementwise else 'no'}")
    return 0


def cmd_abelianize(args) -> int:
    ab = abelianization(_algebra(args))
    _out(f"abelianization dim={ab.quotient.dim} commutative={'yes' if ab.quotient.is_commutative else 'no'}")
    if args.output:
        fileio.serialize_hopf(ab.quotient, args.output)
    return 0


def cmd_smash(args) -> int:
    F = _field(args)
    X, B = _group(args.group), _group(args.acting, "--acting")
    acts = group_actions(B, X)
    k = args.action or 0
    if not 0 <= k < len(acts):
        raise UsageError(f"--action must be in 0..{len(acts) - 1}")
    KX, KB = group_algebra(X, F), group_algebra(B, F)
    sm = smash_product(KX, KB, group_action(KB, KX, acts[k]))
    _out(f"smash dim={sm.algebra.dim} commutative={'yes' if sm.algebra.is_commutative else 'no'}")
    if args.output:
        fileio.serialize_hopf(sm.algebra, args.output)
    return 0


def _graph(args):
    kind = args.graph
    if kind == "xmod":
        return crossed_to_cat1(_crossed_module(args)).graph
    A = group_algebra(_group(args.group), _field(args))
    return {"pair": pair_graph, "discrete": discrete_graph, "over-K": indiscrete_graph}[kind](A)


def cmd_xmod(args) -> int:
    op = args.op
    if op == "from-cat1":
        cm = cat1_to_crossed(_graph(args))
        _out(f"crossed module d: dim {cm.carrier.dim} -> dim {cm.acting.dim}")
        _out(check_crossed_module(cm).format())
        return 0
    cm = _crossed_module(args)
    if op == "check":
        rep = check_crossed_module(cm)
        _out(rep.format())
        return 0 if rep.ok else 1
    if op == "to-cat1":
        g = crossed_to_cat1(cm, verify=not args.no_verify)
        _out(f"A1 dim={g.graph.a1.dim} A0 dim={g.graph.a0.dim} pairs dim={g.pullback.object.dim}")
        rep = check_groupoid(g)
        _out(rep.format())
        return 0 if rep.ok else 1
    r1 = crossed_roundtrip(cm)
    r2 = graph_roundtrip(crossed_to_cat1(cm).graph)
    _out("crossed module round trip:")
    _out(r1.report.format())
    _out("reflexive graph round trip:")
    _out(r2.report.format())
    return 0 if r1.report.ok and r2.report.ok else 1


def cmd_suite(args) -> int:
    kw = {}
    if args.seed is not None:
        kw["seed"] = args.seed
    if args.groups:
        kw["groups"] = [g.strip() for g in args.groups.split(",") if g.strip()]
    if args.fields:
        try:
            kw["fields"] = [FieldSpec.parse(t) for t in args.fields.split(",")]
        except (ValueError, InvalidPrimeError) as exc:
            raise UsageError(f"bad --fields: {exc}") from None
    cfg = SuiteConfig(max_dim=args.max_dim, inject=args.inject, **kw)
    only = args.only.split(",") if args.only else None
    report, code = run_suite(cfg, only)
    _write_or_print(report, args.output)
    return code


# ---------------------------------------------------------------- parser


def _add_source(p, file: bool = True):
    if file:
        p.add_argument("file", nargs="?", help="Hopf algebra file (format version 1)")
    p.add_argument("--group", help="catalog group name")
    p.add_argument("--field", default="Q", help="Q or Fp:<p> (default Q)")


def _add_morphism(p, two: bool = False):
    _add_source(p, file=False)
    p.add_argument("--morphism", help="morphism file")
    p.add_argument("--target", help="catalog target group")
    p.add_argument("--hom", type=int, help="index into the homomorphisms group -> target")
    p.add_argument("--images", help="explicit image indices, comma separated")
    if two:
        p.add_argument("--morphism2", help="second morphism file")
        p.add_argument("--other", help="source group of the second morphism (default --group)")
        p.add_argument("--hom2", type=int)
        p.add_argument("--images2")
    else:
        p.set_defaults(morphism2=None, other=None, hom2=None, images2=None)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hopfcat", description="Exact computations with cocommutative Hopf algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list the built-in groups")
    p.set_defaults(fn=cmd_catalog)

    p = sub.add_parser("dump", help="write a catalog group algebra as a file")
    _add_source(p)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_dump)

    p = sub.add_parser("check", help="verify every Hopf axiom")
    _add_source(p)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("dual", help="finite dual")
    _add_source(p)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_dual)

    for name, fn, two in [("kernel", cmd_kernel, False), ("cokernel", cmd_cokernel, False),
                          ("factorize", cmd_factorize, False), ("pullback", cmd_pullback, True),
                          ("equalizer", cmd_equalizer, True), ("hinv", cmd_hinv, False)]:
        p = sub.add_parser(name)
        _add_morphism(p, two)
        if name == "cokernel":
            p.add_argument("-o", "--output")
        if name == "hinv":
            p.add_argument("--sub", help="subgroup of the target (generators)")
        p.set_defaults(fn=fn)

    p = sub.add_parser("newman", help="Newman correspondence on a subgroup subalgebra")
    p.add_argument("which", choices=["phi", "psi"])
    _add_source(p, file=False)
    p.add_argument("--sub", help="subgroup generators (indices or labels)")
    p.set_defaults(fn=cmd_newman)

    p = sub.add_parser("normal", help="normality of a subgroup subalgebra")
    _add_source(p, file=False)
    p.add_argument("--sub")
    p.set_defaults(fn=cmd_normal)

    p = sub.add_parser("commutator", help="Huq commutator of two normal subalgebras")
    _add_source(p, file=False)
    p.add_argument("--sub", help="first normal subgroup (default whole group)")
    p.add_argument("--sub2", help="second normal subgroup (default whole group)")
    p.set_defaults(fn=cmd_commutator)

    p = sub.add_parser("abelianize")
    _add_source(p)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_abelianize)

    p = sub.add_parser("smash", help="smash product K[X] x| K[B] of a catalog action")
    _add_source(p, file=False)
    p.add_argument("--acting", help="acting group B")
    p.add_argument("--action", type=int, help="index into the actions of B on X")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_smash)

    p = sub.add_parser("xmod", help="crossed modules and cat^1 objects")
    p.add_argument("op", choices=["check", "to-cat1", "from-cat1", "roundtrip"])
    _add_source(p, file=False)
    p.add_argument("--sub", help="normal subgroup: inclusion crossed module with conjugation")
    p.add_argument("--carrier", help="carrier group X for d = trivial (with --action)")
    p.add_argument("--action", type=int)
    p.add_argument("--graph", choices=["xmod", "pair", "discrete", "over-K"], default="xmod",
                   help="reflexive graph for from-cat1")
    p.add_argument("--no-verify", action="store_true", help="build the groupoid even if axioms fail")
    p.set_defaults(fn=cmd_xmod)

    p = sub.add_parser("suite", help="run the property suite")
    p.add_argument("--seed", type=lambda s: int(s, 0))
    p.add_argument("--groups", help="comma separated catalog names")
    p.add_argument("--fields", help="comma separated fields, e.g. Q,Fp:2")
    p.add_argument("--max-dim", type=int, default=18)
    p.add_argument("--inject", choices=INJECTIONS)
    p.add_argument("--only", help="comma separated property names: " + ",".join(n for n, _ in PROPERTIES))
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_suite)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AxiomFailure as exc:
        print(f"axiom failure: {exc}", file=sys.stderr)
        return 1
    except (NormalityError, NotCat1Error, DiagramError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    except INPUT_ERRORS as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except HopfError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
