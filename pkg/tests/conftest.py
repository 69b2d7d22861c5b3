from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from latmin.poset import poset_from_relations

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

WEDGE_RELATIONS = [(1, 3), (2, 3)]


@pytest.fixture
def wedge_poset():
    """P = ({1,2,3}, 1 ≺ 3, 2 ≺ 3)."""
    return poset_from_relations(3, WEDGE_RELATIONS, one_indexed=True)


# --- one summary line per acceptance criterion -------------------------------

_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    marker = report.__dict__.get("criterion")
    if marker is None:
        return
    number, title = marker
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        prev = _criteria.get(number, (title, "PASS"))[1]
        outcome = "PASS" if report.passed and prev == "PASS" else "FAIL"
        _criteria[number] = (title, outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        report.__dict__["criterion"] = tuple(m.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, outcome = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {outcome}  {title}")
