import json
from pathlib import Path

import pytest

from momentangle.complex import complex_from_json, link, vertex_delete
from momentangle.verify import default_fixture_path

try:
    from hypothesis import settings

    settings.register_profile("default", max_examples=60, deadline=None)
    settings.load_profile("default")
except ImportError:  # pragma: no cover
    pass

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def paper_fixture():
    return json.loads(default_fixture_path().read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def K(paper_fixture):
    return complex_from_json(paper_fixture["complex"])


@pytest.fixture(scope="session")
def K_minus_1(K):
    return vertex_delete(K, 1)


@pytest.fixture(scope="session")
def link2(K):
    return link(K, [2])


@pytest.fixture(scope="session")
def link4(K):
    return link(K, [4])


ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        name, ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {name}" + (f" ({detail})" if detail else ""))
