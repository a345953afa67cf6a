import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dyncoord.grammar import reference_grammar  # noqa: E402

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def g_ref():
    return reference_grammar()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
