"""Exact kernel: determinants and the rational LP solver."""

import itertools
import random
from fractions import Fraction

import pytest

from simplotope.exact import (
    INFEASIBLE,
    OPTIMAL,
    UNBOUNDED,
    LpProblem,
    det,
    lp_minimize,
    scaled_inverse,
    solve_rational,
)


def cofactor_det(m):
    """Independent oracle: textbook cofactor expansion along the first row."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * cofactor_det(minor)
    return total


def test_det_examples():
    assert det([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    assert det([[1, 0, 1], [1, 1, 0], [0, 1, 1]]) == 2
    assert det([[1, 2, 3], [1, 2, 3], [0, 1, 1]]) == 0


def test_det_rejects_non_square():
    with pytest.raises(ValueError):
        det([[1, 2, 3], [4, 5, 6]])


def test_det_row_swap_negates():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(2, 5)
        m = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        i, j = rng.sample(range(n), 2)
        swapped = list(m)
        swapped[i], swapped[j] = swapped[j], swapped[i]
        assert det(swapped) == -det(m)


def test_det_agrees_with_cofactor_oracle():
    for n in range(0, 4):
        for bits in itertools.product((0, 1), repeat=n * n):
            m = [list(bits[i * n:(i + 1) * n]) for i in range(n)]
            assert det(m) == cofactor_det(m)
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(4, 6)
        m = [[rng.randint(0, 1) for _ in range(n)] for _ in range(n)]
        assert det(m) == cofactor_det(m)


def test_solve_rational_and_scaled_inverse():
    a = [[2, 1], [1, 3]]
    x = solve_rational(a, [3, 5])
    assert x == [Fraction(4, 5), Fraction(7, 5)]
    assert solve_rational([[1, 2], [2, 4]], [1, 1]) is None
    d, adj = scaled_inverse(a)
    assert d == 5
    for i in range(2):
        for j in range(2):
            got = sum(a[i][k] * adj[k][j] for k in range(2))
            assert got == (d if i == j else 0)


def test_lp_examples():
    r = lp_minimize(LpProblem.build([1, 1], [([1, 0], 4), ([1, 2], 6)]))
    assert r.status == OPTIMAL and r.value == 5 and r.solution == (4, 1)
    r = lp_minimize(LpProblem.build([1], [([1], 3)]))
    assert r.status == OPTIMAL and r.value == 3
    r = lp_minimize(LpProblem.build([1], [([-1], 1)]))
    assert r.status == INFEASIBLE
    r = lp_minimize(LpProblem.build([-1], [([1], 0)]))
    assert r.status == UNBOUNDED


def test_lp_residuals_exact():
    obj = [Fraction(2), Fraction(3), Fraction(1)]
    cons = [([1, 1, 0], Fraction(7, 3)), ([0, 2, 1], Fraction(5, 2)), ([1, 0, 3], 1)]
    problem = LpProblem.build(obj, cons)
    r = lp_minimize(problem)
    assert r.status == OPTIMAL
    for row, rhs in problem.constraints:
        residual = sum(c * x for c, x in zip(row, r.solution)) - rhs
        assert residual >= 0
    assert all(x >= 0 for x in r.solution)


def test_lp_value_invariant_under_permutation():
    # re-solving from a permuted constraint/variable order is the spec's
    # stand-in for a dual certificate: the optimum must be identical
    rng = random.Random(3)
    obj = [1, 2, 1, 3]
    cons = [([1, 1, 0, 0], 4), ([0, 1, 1, 1], 3), ([2, 0, 1, 0], 5), ([1, 0, 0, 2], 2)]
    base = lp_minimize(LpProblem.build(obj, cons)).value
    for _ in range(5):
        cperm = rng.sample(range(len(cons)), len(cons))
        vperm = rng.sample(range(4), 4)
        obj2 = [obj[v] for v in vperm]
        cons2 = [([cons[c][0][v] for v in vperm], cons[c][1]) for c in cperm]
        assert lp_minimize(LpProblem.build(obj2, cons2)).value == base


def test_lp_degenerate_terminates():
    # many redundant constraints through one vertex: Bland's rule must not cycle
    cons = [([1, 0], 1), ([0, 1], 1), ([1, 1], 2), ([2, 1], 3), ([1, 2], 3), ([3, 3], 6)]
    r = lp_minimize(LpProblem.build([1, 1], cons))
    assert r.status == OPTIMAL and r.value == 2


def test_lp_no_constraints():
    r = lp_minimize(LpProblem.build([1, 1], []))
    assert r.status == OPTIMAL and r.value == 0
