import os
import time

import pytest
from hypothesis import HealthCheck, settings

from thompson_ore.config import get_limits, set_limits

# property suites are reproducible: derandomize ties examples to the test source
settings.register_profile(
    "fixed",
    derandomize=True,
    deadline=None,
    max_examples=100,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "fixed"))


@pytest.fixture(autouse=True)
def _restore_limits():
    saved = get_limits()
    yield
    set_limits(saved)


SESSION_START = pytest.StashKey[float]()
_criteria: dict[str, str] = {}


def pytest_sessionstart(session):
    session.config.stash[SESSION_START] = time.perf_counter()


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if not name.startswith("test_criterion_"):
        return
    if report.when == "call" or report.failed:
        if _criteria.get(name) != "FAIL":
            _criteria[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter, config):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        num = int(name.split("_")[2])
        label = " ".join(name.split("_")[3:])
        terminalreporter.write_line(f"criterion {num:2d} ({label}): {_criteria[name]}")
    elapsed = time.perf_counter() - config.stash[SESSION_START]
    terminalreporter.write_line(f"session time: {elapsed:.1f} s")
