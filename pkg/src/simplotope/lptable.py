"""Lower bounds on cover sizes of segment/triangle products via an exact LP.

For each (s, t), any cover's class counts x_c must supply enough exterior
faces to cover every family of (s', t')-faces: summed over classes,
c * x_c * F(s, t, c, s', t', c) / (s'+2t')!  must reach  Q(s, t, s', t') / 2^t'.
Minimizing sum x_c over those inequalities (one per (s', t') with
0 <= t' <= t, 0 <= s' <= s+t-t') gives a lower bound; its ceiling is the
reported table entry since the x_c are cardinalities.

The (s', t') = (0, 0) inequality is omitted: with the vertex-count value of
F there it would overshoot the reference table (see the bounds module),
and dropping a constraint only weakens the minimum, so the reported bounds
stay valid.  Constraint rows are scaled by (s'+2t')! so the coefficient side
is integral.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .counting import QQuery, q_count
from .exact import OPTIMAL, LpProblem, lp_minimize
from .fbounds import DEFAULT_MEMO, DEFAULT_VTABLE, FKey, FMemo, VMaxUnavailable, VTable, f_bound


class InconsistentCellError(Exception):
    """A constraint with no support but a positive requirement: F/Q disagree."""


@dataclass(frozen=True)
class BoundCell:
    s: int
    t: int
    lp_value: Fraction
    lower_bound: int
    v_used: int
    v_provenance: str
    n_constraints: int
    memo_hits: tuple[FKey, ...]


@dataclass(frozen=True)
class BoundsTable:
    max_s: int
    max_t: int
    dim_cap: int
    cells: tuple[BoundCell, ...]
    skipped: tuple[tuple[int, int, str], ...]

    def cell(self, s: int, t: int) -> BoundCell:
        for c in self.cells:
            if (c.s, c.t) == (s, t):
                return c
        raise KeyError((s, t))

    def to_csv(self) -> str:
        lines = ["s,t,lp_value,lower_bound,v_used"]
        for c in self.cells:
            lines.append(f"{c.s},{c.t},{c.lp_value},{c.lower_bound},{c.v_used}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "max_s": self.max_s,
            "max_t": self.max_t,
            "dim_cap": self.dim_cap,
            "cells": [
                {
                    "s": c.s,
                    "t": c.t,
                    "lp_value": str(c.lp_value),
                    "lower_bound": c.lower_bound,
                    "v_used": c.v_used,
                    "v_provenance": c.v_provenance,
                    "constraints": c.n_constraints,
                }
                for c in self.cells
            ],
            "skipped": [{"s": s, "t": t, "reason": r} for s, t, r in self.skipped],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def constraint_pairs(s: int, t: int) -> list[tuple[int, int]]:
    """The (s', t') index range of the inequalities, without (0, 0)."""
    return [(sp, tp)
            for tp in range(0, t + 1)
            for sp in range(0, s + t - tp + 1)
            if (sp, tp) != (0, 0)]


def build_lp(s: int, t: int, memo: FMemo | None = None, vtable: VTable | None = None,
             hit_log: list[FKey] | None = None) -> LpProblem:
    """Assemble the cover inequalities for (s, t) as an exact LP."""
    if s < 0 or t < 0 or s + 2 * t < 1:
        raise ValueError("the LP needs a positive-dimensional simplotope")
    memo = memo if memo is not None else DEFAULT_MEMO
    vtable = vtable or DEFAULT_VTABLE
    v = vtable.get(s, t).value
    rows = []
    for sp, tp in constraint_pairs(s, t):
        fact = math.factorial(sp + 2 * tp)
        coeffs = []
        for c in range(1, v + 1):
            key = FKey(s, t, c, sp, tp, c)
            if hit_log is not None and memo.lookup(key) is not None:
                hit_log.append(key)
            coeffs.append(Fraction(c * f_bound(key, memo, vtable)))
        rhs = Fraction(q_count(QQuery(s, t, sp, tp)) * fact, 2 ** tp)
        if rhs > 0 and all(co == 0 for co in coeffs):
            raise InconsistentCellError(
                f"(s,t)=({s},{t}) constraint (s',t')=({sp},{tp}) has no support")
        rows.append((coeffs, rhs))
    objective = [Fraction(1)] * v
    return LpProblem.build(objective, rows)


def solve_cell(s: int, t: int, memo: FMemo | None = None,
               vtable: VTable | None = None) -> BoundCell:
    """Exact LP optimum for one (s, t) cell; the bound is its ceiling."""
    memo = memo if memo is not None else DEFAULT_MEMO
    vtable = vtable or DEFAULT_VTABLE
    hits: list[FKey] = []
    problem = build_lp(s, t, memo, vtable, hit_log=hits)
    result = lp_minimize(problem)
    if result.status != OPTIMAL:
        raise RuntimeError(f"cell ({s},{t}) unexpectedly {result.status}")
    entry = vtable.get(s, t)
    return BoundCell(
        s=s,
        t=t,
        lp_value=result.value,
        lower_bound=math.ceil(result.value),
        v_used=entry.value,
        v_provenance=entry.provenance,
        n_constraints=len(problem.constraints),
        memo_hits=tuple(hits),
    )


def bounds_table(max_s: int, max_t: int, dim_cap: int,
                 memo: FMemo | None = None, vtable: VTable | None = None) -> BoundsTable:
    """All cells with s <= max_s, t <= max_t, s + 2t <= dim_cap.

    Cells whose V value is unavailable (no brute force, no configured cap)
    are skipped and marked rather than guessed.
    """
    cells = []
    skipped = []
    for s in range(0, max_s + 1):
        for t in range(0, max_t + 1):
            if s + 2 * t > dim_cap:
                skipped.append((s, t, "beyond dimension cap"))
                continue
            if s == 0 and t == 0:
                # the empty product is a point; one 0-simplex covers it
                cells.append(BoundCell(0, 0, Fraction(1), 1, 1, "brute-forced", 0, ()))
                continue
            try:
                cells.append(solve_cell(s, t, memo, vtable))
            except VMaxUnavailable as exc:
                skipped.append((s, t, str(exc)))
    return BoundsTable(max_s, max_t, dim_cap, tuple(cells), tuple(skipped))
