"""Exact numeric kernel: integer determinants and a rational simplex LP solver.

Integers are plain Python ints (arbitrary precision), rationals are
``fractions.Fraction`` (always normalized, positive denominator).  The
determinant uses fraction-free Bareiss elimination, so intermediate values
stay integral.  The LP solver is a dense two-phase simplex over the
rationals with Bland's least-index rule, which guarantees termination on
the small, often degenerate programs this package produces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def det(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("det requires a square matrix")
    if n == 0:
        return 1
    a = [list(map(int, r)) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                # Bareiss one-step: the division by the previous pivot is exact.
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def solve_rational(rows: Sequence[Sequence[int]], rhs: Sequence) -> list[Fraction] | None:
    """Solve a square linear system exactly; None when the matrix is singular.

    Coefficients may be ints or Fractions; the result is a list of Fractions.
    """
    n = len(rows)
    if any(len(r) != n for r in rows) or len(rhs) != n:
        raise ValueError("solve_rational requires a square system")
    a = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    for k in range(n):
        piv = None
        for i in range(k, n):
            if a[i][k] != 0:
                piv = i
                break
        if piv is None:
            return None
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k] != 0:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return [a[i][n] for i in range(n)]


def scaled_inverse(rows: Sequence[Sequence[int]]) -> tuple[int, list[list[int]]]:
    """Return (det, adjugate) of an integer matrix, so inverse = adj / det.

    Raises ValueError when the matrix is singular.
    """
    n = len(rows)
    d = det(rows)
    if d == 0:
        raise ValueError("matrix is singular")
    adj = [[0] * n for _ in range(n)]
    for j in range(n):
        e = [Fraction(1 if i == j else 0) for i in range(n)]
        col = solve_rational(rows, e)
        assert col is not None
        for i in range(n):
            v = col[i] * d
            assert v.denominator == 1
            adj[i][j] = v.numerator
    return d, adj


@dataclass(frozen=True)
class LpProblem:
    """min objective . x  subject to  row . x >= rhs for every constraint, x >= 0."""

    objective: tuple[Fraction, ...]
    constraints: tuple[tuple[tuple[Fraction, ...], Fraction], ...]

    def __post_init__(self):
        n = len(self.objective)
        for row, _ in self.constraints:
            if len(row) != n:
                raise ValueError("constraint row length does not match objective")

    @staticmethod
    def build(objective, constraints) -> "LpProblem":
        obj = tuple(Fraction(c) for c in objective)
        cons = tuple((tuple(Fraction(c) for c in row), Fraction(b)) for row, b in constraints)
        return LpProblem(obj, cons)


@dataclass(frozen=True)
class LpResult:
    status: str
    value: Fraction | None
    solution: tuple[Fraction, ...] | None


ZERO = Fraction(0)
ONE = Fraction(1)


def _pivot(tab: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    inv = 1 / tab[row][col]
    tab[row] = [x * inv for x in tab[row]]
    prow = tab[row]
    for i in range(len(tab)):
        if i != row and tab[i][col] != 0:
            f = tab[i][col]
            tab[i] = [x - f * y for x, y in zip(tab[i], prow)]
    basis[row] = col


def _simplex_phase(tab: list[list[Fraction]], basis: list[int], cost: list[Fraction]) -> str:
    """Minimize cost over the tableau in place; Bland's rule, so it terminates."""
    m = len(tab)
    ncols = len(tab[0]) - 1
    while True:
        # reduced costs: c_j - c_B . (column j)
        cb = [cost[b] for b in basis]
        entering = -1
        for j in range(ncols):
            rc = cost[j]
            for i in range(m):
                if tab[i][j] != 0 and cb[i] != 0:
                    rc -= cb[i] * tab[i][j]
            if rc < 0:
                entering = j
                break
        if entering < 0:
            return OPTIMAL
        leaving = -1
        best = None
        for i in range(m):
            a = tab[i][entering]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    best = ratio
                    leaving = i
        if leaving < 0:
            return UNBOUNDED
        _pivot(tab, basis, leaving, entering)


def lp_minimize(problem: LpProblem) -> LpResult:
    """Exact optimum of an LP in >=/nonnegative form; see LpProblem.

    Returns status optimal/infeasible/unbounded; when optimal, the solution
    satisfies every constraint exactly over the rationals.
    """
    n = len(problem.objective)
    m = len(problem.constraints)
    if m == 0:
        # x = 0 is feasible; negative objective coefficients make it unbounded.
        if any(c < 0 for c in problem.objective):
            return LpResult(UNBOUNDED, None, None)
        return LpResult(OPTIMAL, ZERO, (ZERO,) * n)

    # Standard form: row . x - surplus = rhs, then flip rows to get rhs >= 0.
    # Columns: n structural, m surplus, m artificial, then the rhs.
    ncols = n + 2 * m
    tab: list[list[Fraction]] = []
    for i, (row, rhs) in enumerate(problem.constraints):
        line = [ZERO] * (ncols + 1)
        sgn = ONE if rhs >= 0 else -ONE
        for j, c in enumerate(row):
            line[j] = sgn * c
        line[n + i] = -sgn
        line[n + m + i] = ONE
        line[ncols] = sgn * rhs
        tab.append(line)
    basis = [n + m + i for i in range(m)]

    phase1 = [ZERO] * ncols
    for i in range(m):
        phase1[n + m + i] = ONE
    status = _simplex_phase(tab, basis, phase1)
    assert status == OPTIMAL  # phase 1 is bounded below by 0
    p1value = sum((tab[i][-1] for i in range(m) if basis[i] >= n + m), ZERO)
    if p1value != 0:
        return LpResult(INFEASIBLE, None, None)
    # Drive any residual zero-level artificials out of the basis.
    for i in range(m):
        if basis[i] >= n + m:
            for j in range(n + m):
                if tab[i][j] != 0:
                    _pivot(tab, basis, i, j)
                    break
    # Artificials stay as dead columns; forbid re-entry via infinite-ish cost.
    phase2 = [Fraction(c) for c in problem.objective] + [ZERO] * m
    live = n + m
    rows_keep = [i for i in range(m) if basis[i] < live]
    tab = [tab[i][:live] + [tab[i][-1]] for i in rows_keep]
    basis = [basis[i] for i in rows_keep]
    status = _simplex_phase(tab, basis, phase2)
    if status == UNBOUNDED:
        return LpResult(UNBOUNDED, None, None)
    x = [ZERO] * n
    for i, b in enumerate(basis):
        if b < n:
            x[b] = tab[i][-1]
    value = sum((c * v for c, v in zip(problem.objective, x)), ZERO)
    return LpResult(OPTIMAL, value, tuple(x))
