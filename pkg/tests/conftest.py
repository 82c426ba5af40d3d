from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hopfcat import FieldSpec, group_algebra  # noqa: E402
from hopfcat.groups import CATALOG  # noqa: E402

Q = FieldSpec.rationals()
F2 = FieldSpec.prime(2)
F3 = FieldSpec.prime(3)
F5 = FieldSpec.prime(5)
FIELDS = [Q, F2, F3, F5]


@pytest.fixture(scope="session")
def alg():
    cache = {}

    def get(name: str, field: FieldSpec = Q):
        key = (name, field)
        if key not in cache:
            cache[key] = group_algebra(CATALOG[name], field)
        return cache[key]

    return get


@pytest.fixture(scope="session")
def S3():
    return CATALOG["S3"]


def sign_hom():
    """Parity S3 -> C2 as an index tuple."""
    S3, C2 = CATALOG["S3"], CATALOG["C2"]
    return tuple(0 if lbl in ("e", "(123)", "(132)") else 1 for lbl in S3.labels)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
