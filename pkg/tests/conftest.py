"""Shared test helpers: seeded random instances and a tiny independent
enumerator over ALL feasible assignments (not just full-game ones), used to
cross-check the package's efficient-only scans."""

import random
from itertools import combinations, product

import pytest

from fairplay.model import Assignment, Problem, validate_problem


def make_problem(rows, g=4, players=None, days=None):
    """Problem from a literal matrix with synthetic names."""
    n, m = len(rows), len(rows[0]) if rows else 0
    players = players or [f"p{i + 1}" for i in range(n)]
    days = days or [f"d{k + 1}" for k in range(m)]
    return validate_problem(players, days, rows, g)


def random_problem(rng: random.Random, max_n=8, max_m=4, g_choices=(2, 3, 4)):
    """Seeded random instance; may be reducible or even hopeless."""
    n = rng.randint(2, max_n)
    m = rng.randint(1, max_m)
    g = rng.choice(g_choices)
    density = rng.choice((0.4, 0.6, 0.8))
    rows = [[1 if rng.random() < density else 0 for _ in range(m)] for _ in range(n)]
    return make_problem(rows, g)


def all_feasible_assignments(p: Problem):
    """Every assignment satisfying availability and the day-total rule,
    including partial and empty ones.  Exponential; tiny instances only."""
    per_day = []
    for k in range(p.m):
        players = [i for i in range(p.n) if p.avail[i][k]]
        options = []
        for size in range(0, len(players) + 1, p.group_size):
            options.extend(combinations(players, size))
        per_day.append(options)
    for chosen in product(*per_day):
        matrix = [[0] * p.m for _ in range(p.n)]
        for k, combo in enumerate(chosen):
            for i in combo:
                matrix[i][k] = 1
        yield Assignment(tuple(tuple(row) for row in matrix))


@pytest.fixture
def rng():
    return random.Random(20260808)


# One line per acceptance criterion, printed after the run (uncaptured).
ACCEPTANCE_RESULTS: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_RESULTS:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)
