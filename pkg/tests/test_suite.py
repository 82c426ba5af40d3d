from __future__ import annotations

import json

import pytest

from hopfcat.errors import MalformedInputError, UnknownGroupError
from hopfcat.linalg import FieldSpec
from hopfcat.suite import DEFAULT_SEED, PROPERTIES, SuiteConfig, run_suite

Q = FieldSpec.rationals()
SMALL = dict(groups=["C2", "C3", "S3"], fields=[Q, FieldSpec.prime(2)])


def props(report: str) -> dict[str, tuple[int, int]]:
    out = {}
    for line in report.splitlines():
        if line.startswith("PROP "):
            _, name, cases, fail = line.split()
            out[name] = (int(cases.split("=")[1]), int(fail.split("=")[1]))
    return out


def test_deterministic():
    cfg = SuiteConfig(**SMALL)
    a, ca = run_suite(cfg)
    b, cb = run_suite(SuiteConfig(**SMALL))
    assert a == b and ca == cb == 0


def test_every_property_reported():
    report, code = run_suite(SuiteConfig(**SMALL))
    assert code == 0
    p = props(report)
    assert list(p) == [name for name, _ in PROPERTIES]
    assert all(fail == 0 for _, fail in p.values())
    assert all(cases > 0 for cases, _ in p.values())


def test_c2_only():
    report, code = run_suite(SuiteConfig(groups=["C2"]))
    assert code == 0
    assert "WITNESS" not in report
    assert report.splitlines()[0].startswith(f"SUITE seed={DEFAULT_SEED} groups=C2 ")


def test_seed_env_override(monkeypatch):
    monkeypatch.setenv("HOPFCAT_SEED", "0x2a")
    assert SuiteConfig().seed == 42
    report, _ = run_suite(SuiteConfig(groups=["C2"]), only=["pullback-oracle"])
    assert report.startswith("SUITE seed=42 ")


def test_injection_fails_with_witness():
    report, code = run_suite(SuiteConfig(groups=["S3"], fields=[Q], inject="mutated-antipode"),
                             only=["hopf-axioms"])
    assert code == 1
    lines = report.splitlines()
    assert lines[1].startswith("PROP hopf-axioms") and not lines[1].endswith("fail=0")
    witness = json.loads(lines[2].removeprefix("WITNESS "))
    assert "antipode" in json.dumps(witness)


def test_unknown_group():
    with pytest.raises(UnknownGroupError):
        SuiteConfig(groups=["C2", "A5"])


def test_unknown_injection_and_property():
    with pytest.raises(MalformedInputError):
        SuiteConfig(inject="nonsense")
    with pytest.raises(MalformedInputError):
        run_suite(SuiteConfig(groups=["C2"]), only=["no-such-property"])


def test_default_config_passes():
    report, code = run_suite(SuiteConfig())
    assert code == 0, report
    assert all(fail == 0 for _, fail in props(report).values())
