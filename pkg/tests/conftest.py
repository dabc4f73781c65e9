from __future__ import annotations

from hypothesis import HealthCheck, settings

# fixed example streams keep the suite reproducible run to run
settings.register_profile(
    "repro",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repro")


import pytest

_CRITERIA: dict[int, tuple[str, str, float, float]] = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(number, title, limit): acceptance criterion with a time limit (s)"
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call":
        return
    number, title, limit = mark.args
    _CRITERIA[number] = (title, "PASS" if rep.passed else "FAIL", rep.duration, limit)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, status, secs, limit = _CRITERIA[number]
        terminalreporter.write_line(
            f"criterion {number}: {status}  {title}  ({secs:.1f} s, limit {limit:g} s)"
        )
