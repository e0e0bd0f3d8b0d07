import itertools
import math

import pytest


def all_tuples(n):
    return list(itertools.product(range(1, n + 1), repeat=n))


def brute_sign(t):
    """Parity by sorting with adjacent swaps; independent of the inversion counter."""
    if len(set(t)) != len(t):
        return 0
    a = list(t)
    swaps = 0
    for i in range(len(a)):
        for j in range(len(a) - 1 - i):
            if a[j] > a[j + 1]:
                a[j], a[j + 1] = a[j + 1], a[j]
                swaps += 1
    return -1 if swaps % 2 else 1


@pytest.fixture(scope="session")
def brute_table():
    """{n: {tuple: sign}} for n = 2..5 from the bubble-sort parity."""
    return {n: {t: brute_sign(t) for t in all_tuples(n)} for n in range(2, 6)}


@pytest.fixture
def factorial():
    return math.factorial


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
