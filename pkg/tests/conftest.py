import itertools

import pytest

from grsdual.grs import encode

ACCEPTANCE_LINES: list[str] = []


def eta_by_discrete_log(F):
    """Quadratic character from the parity of discrete logarithms."""
    table = {0: 0}
    x = 1
    for e in range(F.q - 1):
        table[x] = 1 if e % 2 == 0 else -1
        x = F.mul(x, F.generator)
    assert len(table) == F.q
    return table


def brute_min_distance(F, code):
    """Minimum weight by encoding every nonzero message."""
    best = code.n + 1
    for msg in itertools.product(range(F.q), repeat=code.k):
        if any(msg):
            best = min(best, sum(1 for x in encode(F, code, list(msg)) if x))
    return best


def direct_l(F, points, i):
    out = 1
    for j, b in enumerate(points):
        if j != i:
            out = F.mul(out, F.sub(points[i], b))
    return out


@pytest.fixture
def record_criterion():
    def record(number, passed, detail):
        ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
