import re
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE = {}


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        key, title = marker.args
        prev = _ACCEPTANCE.get(key, ("passed", title))
        status = "failed" if "failed" in (prev[0], rep.outcome) else rep.outcome
        _ACCEPTANCE[key] = (status, title)


def _order(key):
    m = re.match(r"AC(\d+)(.*)", key)
    return (int(m.group(1)), m.group(2)) if m else (10 ** 6, key)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE, key=_order):
        status, title = _ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if status == 'passed' else 'FAIL'}  {key:>5}  {title}")
