"""Text serialization of Hopf algebras (format version "1").

A file is a JSON object with keys in the canonical order ``format_version``,
``name``, ``field``, ``dim``, ``mult``, ``unit``, ``comult``, ``counit``,
``antipode``.  Scalars are written ``num, den`` over Q and as a single residue
over F_p:

* ``mult``: ``[i, j, k, c...]`` means ``e_i e_j`` has coefficient ``c`` at ``e_k``.
* ``comult``: ``[i, j, k, c...]`` means ``Delta(e_i)`` has ``c`` at ``e_j (x) e_k``.
* ``antipode``: ``[i, j, c...]`` means ``S(e_i)`` has ``c`` at ``e_j``.
* ``unit`` and ``counit``: dense lists of scalars (``[num, den]`` pairs over Q).
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import AxiomFailure, FormatError, FormatVersionError
from .hopf import HopfAlgebra, HopfMorphism, check_hopf_axioms, check_morphism
from .linalg import FieldSpec

FORMAT_VERSION = "1"
KEYS = ("format_version", "name", "field", "dim", "mult", "unit", "comult", "counit", "antipode")


def _enc(F: FieldSpec, x) -> list:
    if F.kind == "Q":
        x = Fraction(x)
        return [x.numerator, x.denominator]
    return [int(x)]


def _dec(F: FieldSpec, parts: list, where: str):
    if F.kind == "Q":
        if len(parts) != 2:
            raise FormatError(f"{where}: expected numerator and denominator")
        num, den = parts
        if not isinstance(num, int) or not isinstance(den, int) or isinstance(num, bool) or den <= 0:
            raise FormatError(f"{where}: bad rational {parts}")
        return F(Fraction(num, den))
    if len(parts) != 1 or not isinstance(parts[0], int) or isinstance(parts[0], bool):
        raise FormatError(f"{where}: expected one residue (no denominator over Fp)")
    if not 0 <= parts[0] < F.p:
        raise FormatError(f"{where}: residue {parts[0]} outside [0, {F.p})")
    return parts[0]


def to_dict(h: HopfAlgebra) -> dict:
    F = h.field
    n = h.dim
    field = {"kind": "Q"} if F.kind == "Q" else {"kind": "Fp", "p": F.p}
    mult = sorted([i, j, k, *_enc(F, c)] for ij, v in enumerate(h.mult_table)
                  for i, j in [divmod(ij, n)] for k, c in v.items())
    comult = sorted([i, *divmod(jk, n), *_enc(F, c)] for i, v in enumerate(h.comult_table)
                    for jk, c in v.items())
    antipode = sorted([i, j, *_enc(F, c)] for i, v in enumerate(h.antipode_table) for j, c in v.items())

    def dense(vec):
        return [(_enc(F, vec.get(i, 0)) if F.kind == "Q" else vec.get(i, 0)) for i in range(n)]

    return {
        "format_version": FORMAT_VERSION,
        "name": h.name or "",
        "field": field,
        "dim": n,
        "mult": mult,
        "unit": dense(h.unit_vec),
        "comult": comult,
        "counit": dense(dict(enumerate(h.counit_row))),
        "antipode": antipode,
    }


def dumps_hopf(h: HopfAlgebra) -> str:
    """Canonical text: one top-level key per line, sorted entries, trailing newline."""
    d = to_dict(h)
    compact = (", ", ": ")
    lines = [f"  {json.dumps(k)}: {json.dumps(d[k], separators=compact)}" for k in KEYS]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def serialize_hopf(h: HopfAlgebra, path) -> None:
    Path(path).write_text(dumps_hopf(h), encoding="utf-8")


def _field_of(obj) -> FieldSpec:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise FormatError("field must be an object with a 'kind'")
    if obj["kind"] == "Q":
        if set(obj) != {"kind"}:
            raise FormatError("field of kind Q takes no other keys")
        return FieldSpec.rationals()
    if obj["kind"] == "Fp":
        p = obj.get("p")
        if not isinstance(p, int) or isinstance(p, bool):
            raise FormatError("field of kind Fp needs an integer 'p'")
        try:
            return FieldSpec.prime(p)
        except Exception as exc:
            raise FormatError(str(exc)) from None
    raise FormatError(f"unknown field kind {obj['kind']!r}")


def from_dict(d: dict) -> HopfAlgebra:
    if not isinstance(d, dict):
        raise FormatError("top level must be an object")
    if "format_version" not in d:
        raise FormatVersionError("missing format_version")
    if d["format_version"] != FORMAT_VERSION:
        raise FormatVersionError(f"unsupported format_version {d['format_version']!r}; expected {FORMAT_VERSION!r}")
    missing = [k for k in KEYS if k not in d]
    if missing:
        raise FormatError(f"missing keys: {', '.join(missing)}")
    extra = sorted(set(d) - set(KEYS))
    if extra:
        raise FormatError(f"unknown keys: {', '.join(extra)}")
    F = _field_of(d["field"])
    n = d["dim"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise FormatError("dim must be a positive integer")
    width = 2 if F.kind == "Q" else 1

    def entries(key: str, nidx: int):
        rows = d[key]
        if not isinstance(rows, list):
            raise FormatError(f"{key} must be a list")
        out = []
        for pos, row in enumerate(rows):
            where = f"{key}[{pos}]"
            if not isinstance(row, list) or len(row) != nidx + width:
                raise FormatError(f"{where}: expected {nidx} indices and {width} scalar field(s)")
            idx = row[:nidx]
            if any(not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < n for i in idx):
                raise FormatError(f"{where}: index out of range 0..{n - 1}")
            out.append((idx, _dec(F, row[nidx:], where)))
        return out

    def dense(key: str):
        vals = d[key]
        if not isinstance(vals, list) or len(vals) != n:
            raise FormatError(f"{key} must list {n} scalars")
        return [_dec(F, v if isinstance(v, list) else [v], f"{key}[{i}]") for i, v in enumerate(vals)]

    mult = [dict() for _ in range(n * n)]
    for (i, j, k), c in entries("mult", 3):
        mult[i * n + j][k] = F.norm(mult[i * n + j].get(k, 0) + c)
    comult = [dict() for _ in range(n)]
    for (i, j, k), c in entries("comult", 3):
        comult[i][j * n + k] = F.norm(comult[i].get(j * n + k, 0) + c)
    antipode = [dict() for _ in range(n)]
    for (i, j), c in entries("antipode", 2):
        antipode[i][j] = F.norm(antipode[i].get(j, 0) + c)
    unit = dict(enumerate(dense("unit")))
    counit = dense("counit")
    name = d["name"]
    if not isinstance(name, str):
        raise FormatError("name must be a string")
    return HopfAlgebra(F, n, mult, unit, comult, counit, antipode, name or None)


def loads_hopf(text: str, verify: bool = True) -> HopfAlgebra:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"syntax error: {exc.msg}", exc.lineno, exc.colno) from None
    h = from_dict(d)
    if verify:
        rep = check_hopf_axioms(h)
        if not rep.ok:
            raise AxiomFailure(rep)
    return h


def parse_hopf(path, verify: bool = True) -> HopfAlgebra:
    """Read and validate a Hopf algebra file; axiom failures raise :class:`AxiomFailure`."""
    return loads_hopf(Path(path).read_text(encoding="utf-8"), verify)


# ---------------------------------------------------------------- morphisms
#
# A morphism file embeds its source and target and lists ``[i, j, c...]``
# meaning ``f(e_i)`` has coefficient ``c`` at ``e_j``.

MORPHISM_KEYS = ("format_version", "name", "source", "target", "map")


def dumps_morphism(f: HopfMorphism) -> str:
    F = f.source.field
    entries = sorted([i, j, *_enc(F, c)] for i, col in enumerate(f.cols) for j, c in col.items())
    src, tgt = to_dict(f.source), to_dict(f.target)
    compact = (", ", ": ")
    body = {"format_version": FORMAT_VERSION, "name": f.name or "", "source": src, "target": tgt, "map": entries}
    lines = [f"  {json.dumps(k)}: {json.dumps(body[k], separators=compact)}" for k in MORPHISM_KEYS]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def loads_morphism(text: str, verify: bool = True) -> HopfMorphism:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"syntax error: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(d, dict):
        raise FormatError("top level must be an object")
    if d.get("format_version") != FORMAT_VERSION:
        raise FormatVersionError(f"unsupported format_version {d.get('format_version')!r}")
    missing = [k for k in MORPHISM_KEYS if k not in d]
    if missing:
        raise FormatError(f"missing keys: {', '.join(missing)}")
    src, tgt = from_dict(d["source"]), from_dict(d["target"])
    if src.field != tgt.field:
        raise FormatError("source and target are over different fields")
    F = src.field
    width = 2 if F.kind == "Q" else 1
    cols: list[dict] = [dict() for _ in range(src.dim)]
    for pos, row in enumerate(d["map"]):
        where = f"map[{pos}]"
        if not isinstance(row, list) or len(row) != 2 + width:
            raise FormatError(f"{where}: expected 2 indices and {width} scalar field(s)")
        i, j = row[:2]
        if not (isinstance(i, int) and 0 <= i < src.dim and isinstance(j, int) and 0 <= j < tgt.dim):
            raise FormatError(f"{where}: index out of range")
        cols[i][j] = F.norm(cols[i].get(j, 0) + _dec(F, row[2:], where))
    if verify:
        for h in (src, tgt):
            rep = check_hopf_axioms(h)
            if not rep.ok:
                raise AxiomFailure(rep)
    f = HopfMorphism(src, tgt, cols, d["name"] or None)
    if verify:
        rep = check_morphism(f)
        if not rep.ok:
            raise AxiomFailure(rep)
    return f


def parse_morphism(path, verify: bool = True) -> HopfMorphism:
    return loads_morphism(Path(path).read_text(encoding="utf-8"), verify)
