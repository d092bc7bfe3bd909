import random

import pytest

from rectangle_forge.core import PartialRectangle


def rect(n, m, *edges):
    return PartialRectangle.from_edges(n, m, edges)


@pytest.fixture
def diag2():
    return rect(2, 2, ((1, 1), (2, 2)), ((1, 2), (2, 1)))


@pytest.fixture
def rows2():
    return rect(2, 2, ((1, 1), (1, 2)), ((2, 1), (2, 2)))


@pytest.fixture
def cols2():
    return rect(2, 2, ((1, 1), (2, 1)), ((1, 2), (2, 2)))


def random_complete(n, m, rng):
    cells = list(range(n * m))
    rng.shuffle(cells)
    match = [-1] * (n * m)
    for a, b in zip(cells[::2], cells[1::2]):
        match[a], match[b] = b, a
    return PartialRectangle(n, m, tuple(match))


def random_partial(n, m, rng, edges=None):
    cells = list(range(n * m))
    rng.shuffle(cells)
    k = rng.randint(0, n * m // 2) if edges is None else edges
    match = [-1] * (n * m)
    for t in range(k):
        a, b = cells[2 * t], cells[2 * t + 1]
        match[a], match[b] = b, a
    return PartialRectangle(n, m, tuple(match))


@pytest.fixture
def rng():
    return random.Random(20240601)


# one line per acceptance criterion, printed after the run
ACCEPTANCE: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


def random_domain(n, m, rng):
    """Random complete rectangle without proper matched sub-rectangle.

    Pairs each free cell with a random free cell in another row and column,
    restarting when stuck, then rejects the rare leftover sub-rectangles.
    """
    from rectangle_forge.kernels import proper_subrectangle

    size = n * m
    while True:
        match = [-1] * size
        for x in range(size):
            if match[x] >= 0:
                continue
            options = [y for y in range(x + 1, size)
                       if match[y] < 0 and y // m != x // m and y % m != x % m]
            if not options:
                break
            y = rng.choice(options)
            match[x], match[y] = y, x
        else:
            if proper_subrectangle(match, n, m) is None:
                return PartialRectangle(n, m, tuple(match))
