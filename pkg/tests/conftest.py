from __future__ import annotations

import pytest

from hyperzeta.fixtures import load_fixtures

FIXTURES = {fx.name: fx for fx in load_fixtures()}
NAMES = list(FIXTURES)
SMALL = ["1.5.d", "1.5.ad", "1.7.a"]


@pytest.fixture(params=NAMES)
def fixture(request):
    return FIXTURES[request.param]


@pytest.fixture(params=SMALL)
def small_fixture(request):
    return FIXTURES[request.param]


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
