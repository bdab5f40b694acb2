"""Shared fixtures, strategies and brute-force oracles.

The oracles here deliberately avoid the library's own code paths: symmetric
functions are evaluated at concrete rational points, tableaux are counted
by exhaustion, permutations are enumerated directly.  Expected values in
the tests either come from these oracles or from the reference tables.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from plethy.partitions import partitions_of
from plethy.symfunc import SymFunc

# property checks here verify theorems, so replay adds nothing; keep runs
# reproducible instead
settings.register_profile("deterministic", derandomize=True)
settings.load_profile("deterministic")


# -- hypothesis strategies ------------------------------------------------------


@st.composite
def partition_strategy(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    options = partitions_of(n)
    return options[draw(st.integers(min_value=0, max_value=len(options) - 1))]


@st.composite
def symfunc_strategy(draw, max_deg=6, max_terms=4, homogeneous=False, min_deg=0):
    terms = {}
    if homogeneous:
        n = draw(st.integers(min_value=min_deg, max_value=max_deg))
        pool = partitions_of(n)
    else:
        pool = [lam for n in range(min_deg, max_deg + 1) for lam in partitions_of(n)]
    count = draw(st.integers(min_value=0, max_value=max_terms))
    for _ in range(count):
        lam = pool[draw(st.integers(min_value=0, max_value=len(pool) - 1))]
        num = draw(st.integers(min_value=-6, max_value=6))
        den = draw(st.integers(min_value=1, max_value=4))
        terms[lam] = terms.get(lam, Fraction(0)) + Fraction(num, den)
    return SymFunc(terms)


# -- evaluation oracle ------------------------------------------------------------


def power_sum_at(k: int, xs: list[Fraction]) -> Fraction:
    return sum((x**k for x in xs), Fraction(0))


def eval_at(f: SymFunc, xs: list[Fraction]) -> Fraction:
    """Evaluate a p-basis function at concrete points."""
    total = Fraction(0)
    for lam, c in f.items():
        prod = c
        for part in lam:
            prod *= power_sum_at(part, xs)
        total += prod
    return total


def brute_h(n: int, xs: list[Fraction]) -> Fraction:
    """Complete homogeneous sum by dynamic programming over the variables."""
    coeffs = [Fraction(1)] + [Fraction(0)] * n  # of prod 1/(1 - x_i t)
    for x in xs:
        for d in range(1, n + 1):
            coeffs[d] += coeffs[d - 1] * x
    return coeffs[n]


def brute_e(n: int, xs: list[Fraction]) -> Fraction:
    coeffs = [Fraction(1)] + [Fraction(0)] * n  # of prod (1 + x_i t)
    for x in xs:
        for d in range(min(n, len(xs)), 0, -1):
            coeffs[d] += coeffs[d - 1] * x
    return coeffs[n]


def _det(mat: list[list[Fraction]]) -> Fraction:
    m = [row[:] for row in mat]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = Fraction(1) / m[col][col]
        for r in range(col + 1, size):
            factor = m[r][col] * inv
            if factor:
                for c2 in range(col, size):
                    m[r][c2] -= factor * m[col][c2]
    return det


def brute_s(lam: tuple, xs: list[Fraction]) -> Fraction:
    """Schur value as a ratio of alternants; xs must be distinct."""
    m = len(xs)
    assert len(lam) <= m
    full = tuple(lam) + (0,) * (m - len(lam))
    num = [[x ** (full[j] + m - 1 - j) for j in range(m)] for x in xs]
    den = [[x ** (m - 1 - j) for j in range(m)] for x in xs]
    return _det(num) / _det(den)


# -- permutation oracles -----------------------------------------------------------


def cycle_type(perm: tuple) -> tuple:
    n = len(perm)
    seen = [False] * n
    lengths = []
    for i in range(n):
        if seen[i]:
            continue
        ln = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            ln += 1
        lengths.append(ln)
    return tuple(sorted(lengths, reverse=True))


def count_derangements(n: int, cycles: int | None = None) -> int:
    count = 0
    for perm in itertools.permutations(range(n)):
        if any(perm[i] == i for i in range(n)):
            continue
        if cycles is not None and len(cycle_type(perm)) != cycles:
            continue
        count += 1
    return count


def count_by_cycles(n: int, cycles: int) -> int:
    """Signless Stirling number of the first kind, by exhaustion."""
    return sum(1 for perm in itertools.permutations(range(n)) if len(cycle_type(perm)) == cycles)


def pytest_terminal_summary(terminalreporter):
    """Surface the acceptance pass/fail lines in every run."""
    try:
        from test_acceptance import ACCEPTANCE_LINES
    except ImportError:
        return
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def ctx8():
    from plethy.series import SeriesContext

    return SeriesContext(8)


@pytest.fixture(scope="session")
def sample_points():
    return [Fraction(1, 2), Fraction(-2, 3), Fraction(3), Fraction(-1, 5)]
