import random
from itertools import product

import pytest

from edtop import PointSet, build_from_opens, build_from_preorder


def ps(n, *members):
    return PointSet.of(n, members)


def all_subsets(n):
    return [PointSet(n, m) for m in range(1 << n)]


def random_preorder(rng: random.Random, n: int, density: float | None = None) -> list[list[int]]:
    """Reflexive-transitive closure of a random relation."""
    p = rng.random() if density is None else density
    r = [[1 if x == y or rng.random() < p * 0.5 else 0 for y in range(n)] for x in range(n)]
    for k, i, j in product(range(n), repeat=3):
        if r[i][k] and r[k][j]:
            r[i][j] = 1
    return r


def random_topology(rng: random.Random, n: int):
    return build_from_preorder(n, random_preorder(rng, n))


@pytest.fixture
def sierpinski():
    return build_from_opens(2, [[], [0], [0, 1]])


@pytest.fixture
def five_open():
    """The smallest non-extremally-disconnected space: opens {}, {0}, {1}, {0,1}, X."""
    return build_from_opens(3, [[], [0], [1], [0, 1], [0, 1, 2]])


def discrete(n):
    return build_from_preorder(n, [[int(x == y) for y in range(n)] for x in range(n)])


def indiscrete(n):
    return build_from_opens(n, [[], list(range(n))])


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record():
    """Log one pass/fail line per acceptance criterion; shown in the summary."""

    def _record(criterion: str, passed: bool, detail: str) -> bool:
        line = f"[{'PASS' if passed else 'FAIL'}] criterion {criterion}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return passed

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
