import sys
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"
TOOLS = Path(__file__).parent.parent / "tools"
sys.path.insert(0, str(TOOLS))

# acceptance results, printed in the terminal summary
ACCEPTANCE: list[str] = []


@pytest.fixture
def data_dir() -> Path:
    return DATA


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
