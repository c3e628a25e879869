import pytest
from hypothesis import settings

from trichrome.core import EdgeColoring

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def coloring_from():
    def make(n, text):
        return EdgeColoring(n, ["rby".index(ch) for ch in text])
    return make


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
