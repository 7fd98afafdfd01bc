import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from narm.dataset import Dataset  # noqa: E402


@pytest.fixture
def small_dataset():
    # rows: (a, b, colour)
    return Dataset.from_columns(
        ["a", "b", "colour"],
        [[1.0, 2.0, 3.0, 4.0], [10.0, 20.0, 30.0, 10.0], ["red", "blue", "blue", "red"]],
    )


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def pytest_terminal_summary(terminalreporter):
    """Print one pass/fail line per acceptance criterion that ran."""
    results = sys.modules.get("test_acceptance")
    if results is None or not results.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results.RESULTS):
        ok, title, detail = results.RESULTS[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail})")
