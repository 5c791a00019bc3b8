import numpy as np
import pytest
from hypothesis import settings

from grand_edge.codebook import generate_rlc

settings.register_profile("ci", max_examples=200, deadline=None)
settings.register_profile("fast", max_examples=20, deadline=None)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def code8():
    return generate_rlc(8, 4, seed=3)


@pytest.fixture(scope="session")
def code16():
    return generate_rlc(16, 10, seed=11)


@pytest.fixture(scope="session")
def code128():
    return generate_rlc(128, 105, seed=0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


_criteria: dict[int, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    num, text = mark.args
    entry = _criteria.setdefault(num, [text, True, False])
    if report.when == "call":
        entry[2] = True
    if report.failed:
        entry[1] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        text, ok, ran = _criteria[num]
        verdict = "PASS" if ok and ran else "FAIL" if ran or not ok else "SKIP"
        terminalreporter.write_line(f"AC{num} {verdict}  {text}")
