import os

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_outcomes = {}
_titles = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    label = marker.args[0]
    _titles.setdefault(label, marker.kwargs.get("title", ""))
    if rep.when == "call" or rep.failed or rep.skipped:
        ok = rep.passed if rep.when == "call" else not rep.failed
        prev = _outcomes.get(label, True)
        _outcomes[label] = prev and ok and not rep.skipped


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    def key(label):
        num = "".join(ch for ch in label if ch.isdigit())
        return int(num or 0), label
    for label in sorted(_outcomes, key=key):
        status = "PASS" if _outcomes[label] else "FAIL"
        title = _titles.get(label, "")
        terminalreporter.write_line(f"criterion {label}: {status}  {title}".rstrip())
