import itertools

import pytest

ACCEPTANCE_LINES = []


def brute_expansions(b, n):
    """Every hyper-expansion of n by exhaustive search over coefficient tuples."""
    if n == 0:
        return [()]
    width = 1
    while b**width <= n:
        width += 1
    found = []
    for coeffs in itertools.product(range(b + 1), repeat=width):
        if sum(a * b**i for i, a in enumerate(coeffs)) == n:
            trimmed = list(coeffs)
            while trimmed and trimmed[-1] == 0:
                trimmed.pop()
            found.append(tuple(trimmed))
    return sorted(found)


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
