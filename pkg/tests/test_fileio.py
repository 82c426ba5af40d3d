from __future__ import annotations

import json

import pytest

from hopfcat import HopfMorphism, group_algebra
from hopfcat.constructors import truncated_primitive
from hopfcat.errors import AxiomFailure, FormatError, FormatVersionError, MalformedInputError
from hopfcat.fileio import (dumps_hopf, dumps_morphism, loads_hopf, loads_morphism, parse_hopf,
                            serialize_hopf)
from hopfcat.groups import CATALOG
from conftest import F5, FIELDS, Q, sign_hom


@pytest.mark.parametrize("F", FIELDS, ids=str)
@pytest.mark.parametrize("name", ["C1", "C2", "S3", "Q8"])
def test_roundtrip_bit_exact(name, F, tmp_path, alg):
    A = alg(name, F)
    path = tmp_path / "a.json"
    serialize_hopf(A, path)
    text = path.read_text()
    B = parse_hopf(path)
    assert B.same_structure(A)
    serialize_hopf(B, tmp_path / "b.json")
    assert (tmp_path / "b.json").read_text() == text


def test_roundtrip_non_integer_entries():
    # K[C2] in the basis 1, g/2: every structure map picks up a power of two
    from fractions import Fraction
    from hopfcat import check_hopf_axioms
    from hopfcat.hopf import HopfAlgebra
    h = Fraction(1, 2)
    E = HopfAlgebra(Q, 2, [{0: 1}, {1: 1}, {1: 1}, {0: Fraction(1, 4)}], {0: 1},
                    [{0: 1}, {3: 2}], [1, h], [{0: 1}, {1: 1}])
    assert check_hopf_axioms(E).ok
    t = dumps_hopf(E)
    assert "[1, 1, 0, 1, 4]" in t and "[1, 2]" in t
    assert dumps_hopf(loads_hopf(t)) == t


def test_canonical_layout(alg):
    text = dumps_hopf(alg("C2"))
    lines = text.splitlines()
    assert lines[0] == "{" and lines[-1] == "}"
    keys = [json.loads("{" + line.rstrip(",") + "}").popitem()[0] for line in lines[1:-1]]
    assert keys == ["format_version", "name", "field", "dim", "mult", "unit", "comult", "counit", "antipode"]
    d = json.loads(text)
    assert d["mult"] == sorted(d["mult"])
    assert all(len(e) == 5 for e in d["mult"])  # i, j, k, num, den


def test_fp_entries_have_no_denominator(alg):
    d = json.loads(dumps_hopf(alg("S3", F5)))
    assert d["field"] == {"kind": "Fp", "p": 5}
    assert all(len(e) == 4 for e in d["mult"]) and all(len(e) == 3 for e in d["antipode"])


def test_s3_over_f5_dump_parses(alg, tmp_path):
    path = tmp_path / "s3.json"
    serialize_hopf(alg("S3", F5), path)
    assert parse_hopf(path).dim == 6


def test_truncated_primitive_roundtrip():
    A = truncated_primitive(5)
    assert loads_hopf(dumps_hopf(A)).same_structure(A)


def test_counit_of_unit_zero(alg):
    d = json.loads(dumps_hopf(alg("C2")))
    d["counit"][0] = [0, 1]
    with pytest.raises(AxiomFailure) as info:
        loads_hopf(json.dumps(d))
    assert "counit-unit" in info.value.report.failed()
    assert isinstance(loads_hopf(json.dumps(d), verify=False).dim, int)


def test_syntax_error_location(alg):
    text = dumps_hopf(alg("C2"))
    lines = text.splitlines()
    lines[5] = lines[5].replace("],", "]],", 1)
    with pytest.raises(FormatError) as info:
        loads_hopf("\n".join(lines))
    err = info.value
    assert err.line == 6 and err.column is not None
    assert "line 6" in str(err)


def test_version_mismatch(alg):
    d = json.loads(dumps_hopf(alg("C2")))
    d["format_version"] = "2"
    with pytest.raises(FormatVersionError):
        loads_hopf(json.dumps(d))
    del d["format_version"]
    with pytest.raises(FormatVersionError):
        loads_hopf(json.dumps(d))


@pytest.mark.parametrize("mutate,fragment", [
    (lambda d: d.update(dim=0), "dim"),
    (lambda d: d["mult"].append([0, 0, 9, 1, 1]), "out of range"),
    (lambda d: d["mult"].append([0, 0, 0, 1]), "mult[4]"),
    (lambda d: d.update(field={"kind": "Fp", "p": 4}), "prime"),
    (lambda d: d.update(field={"kind": "R"}), "kind"),
    (lambda d: d.update(extra=1), "unknown keys"),
    (lambda d: d.pop("antipode"), "missing"),
    (lambda d: d.update(unit=[[1, 1]]), "unit"),
])
def test_malformed_files(mutate, fragment, alg):
    d = json.loads(dumps_hopf(alg("C2")))
    mutate(d)
    with pytest.raises(MalformedInputError) as info:
        loads_hopf(json.dumps(d))
    assert fragment in str(info.value)


def test_fp_residue_out_of_range(alg):
    d = json.loads(dumps_hopf(alg("C2", F5)))
    d["mult"][0][3] = 7
    with pytest.raises(FormatError):
        loads_hopf(json.dumps(d))


def test_morphism_roundtrip(alg):
    f = HopfMorphism(alg("S3"), alg("C2"), [{x: 1} for x in sign_hom()], "sign")
    text = dumps_morphism(f)
    g = loads_morphism(text)
    assert g.same_map(f) and g.name == "sign"
    assert dumps_morphism(g) == text


def test_morphism_file_rejects_non_morphism(alg):
    A = alg("C2")
    text = dumps_morphism(HopfMorphism(A, A, [{1: 1}, {0: 1}]))
    with pytest.raises(AxiomFailure):
        loads_morphism(text)
