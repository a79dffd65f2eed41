import random
from math import gcd

import pytest

from kunzkit import KunzPoset, NumericalSemigroup

# Equality rows of the m = 8 face whose poset has atoms 3, 4, 5, 7.
H8 = [
    [0, 0, 2, 0, 0, -1, 0],
    [0, -1, 1, 0, 0, 0, 1],
    [-1, 0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, -1, 2],
    [-1, 0, 1, 0, 0, 1, 0],
    [-1, 1, 0, 0, 0, 0, 1],
]

# Factorizations per class on that face, as printed by the KunzPoset class of Sage
H8_TABLE = {
    0: [(0, 0, 0, 0)],
    1: [(3, 0, 0, 0), (1, 0, 0, 2), (0, 1, 1, 0)],
    2: [(1, 0, 0, 1)],
    3: [(1, 0, 0, 0)],
    4: [(0, 1, 0, 0)],
    5: [(0, 0, 1, 0)],
    6: [(2, 0, 0, 0), (0, 0, 0, 2)],
    7: [(0, 0, 0, 1)],
}

# Rows a2+a3=a5, a1+a3=a4, 2a2=a4 in columns 1..5.
H6 = [
    [0, 1, 1, 0, -1],
    [1, 0, 1, -1, 0],
    [0, 2, 0, -1, 0],
]


def random_suite(n=100, seed=20240601, max_m=9, max_gens=6):
    """Deterministic list of numerical semigroups with multiplicity <= max_m."""
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        m = rng.randint(2, max_m)
        extra = rng.randint(1, max_gens - 1)
        gens = {m} | {rng.randint(m + 1, 5 * m) for _ in range(extra)}
        g = 0
        for x in gens:
            g = gcd(g, x)
        if g != 1:
            continue
        out.append(NumericalSemigroup(gens))
    return out


@pytest.fixture(scope="session")
def suite():
    return random_suite()


@pytest.fixture(scope="session")
def fig_a():
    return KunzPoset.from_semigroup(NumericalSemigroup([6, 7, 8, 9]))


@pytest.fixture(scope="session")
def fig_b():
    return KunzPoset.from_face(H8, 8)


@pytest.fixture(scope="session")
def fig_c():
    return KunzPoset.from_semigroup(NumericalSemigroup([8, 9, 11, 12, 15]))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
