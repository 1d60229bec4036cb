import os

import pytest
from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", deadline=None, max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def partitions(max_len=5, max_part=6):
    return st.lists(st.integers(1, max_part), max_size=max_len).map(lambda xs: sorted(xs, reverse=True))


def strict_partitions(max_part=6):
    return st.sets(st.integers(1, max_part), max_size=max_part).map(lambda xs: sorted(xs, reverse=True))


@st.composite
def skew_pairs(draw, max_len=4, max_part=4):
    lam = draw(partitions(max_len, max_part))
    mu = [draw(st.integers(0, p)) for p in lam]
    # clip to keep mu a partition
    for i in range(1, len(mu)):
        mu[i] = min(mu[i], mu[i - 1])
    return lam, mu


@st.composite
def rectangles(draw, max_k=7):
    """(k, a, b) with a + b < k, possibly the empty rectangle."""
    k = draw(st.integers(2, max_k))
    if draw(st.booleans()):
        return k, 0, 0
    a = draw(st.integers(1, k - 2)) if k > 2 else 0
    if a == 0:
        return k, 0, 0
    b = draw(st.integers(1, k - 1 - a))
    return k, a, b


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def report():
    def add(number: int, ok: bool, detail: str) -> None:
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES[number] = line
        print(line)
    return add


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])
