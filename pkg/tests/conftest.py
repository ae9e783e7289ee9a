import pytest

from gf4sss import catalog

# criterion number -> (passed, detail); filled by test_acceptance
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def hexacode_linear():
    return catalog.get("hexacode_linear").code


@pytest.fixture(scope="session")
def hexacode_additive():
    return catalog.get("hexacode_additive").code


@pytest.fixture(scope="session")
def qc12():
    return catalog.get("qc12").code


@pytest.fixture(scope="session")
def e12():
    return catalog.get("e12").code


@pytest.fixture(scope="session")
def golay24():
    return catalog.get("golay24").code


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
