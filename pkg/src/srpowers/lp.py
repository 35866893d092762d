"""Exact rational linear programming.

Problems have the form ``minimize c.x subject to A x >= b, x >= 0``.  They are
solved by the two-phase simplex method on a dense tableau of ``Fraction``
entries with Bland's smallest-index rule, so every run terminates and the same
input always produces the same pivots.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


class LPStatus(str, Enum):
    OPTIMAL = OPTIMAL
    INFEASIBLE = INFEASIBLE
    UNBOUNDED = UNBOUNDED


def _frac_vector(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class LinearProgram:
    num_vars: int
    objective: tuple[Fraction, ...]
    constraints: tuple[tuple[tuple[Fraction, ...], Fraction], ...]

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("need at least one variable")
        obj = _frac_vector(self.objective)
        if len(obj) != self.num_vars:
            raise ValueError(f"objective has length {len(obj)}, expected {self.num_vars}")
        cons = []
        for coeffs, bound in self.constraints:
            row = _frac_vector(coeffs)
            if len(row) != self.num_vars:
                raise ValueError(f"constraint has length {len(row)}, expected {self.num_vars}")
            cons.append((row, Fraction(bound)))
        object.__setattr__(self, "objective", obj)
        object.__setattr__(self, "constraints", tuple(cons))

    def with_constraints(self, extra: Iterable[tuple[Sequence, object]]) -> "LinearProgram":
        return LinearProgram(self.num_vars, self.objective, self.constraints + tuple(extra))

    def with_objective(self, objective: Sequence) -> "LinearProgram":
        return LinearProgram(self.num_vars, tuple(objective), self.constraints)

    def is_feasible(self, point: Sequence) -> bool:
        if len(point) != self.num_vars or any(v < 0 for v in point):
            return False
        return all(sum(a * x for a, x in zip(row, point)) >= b for row, b in self.constraints)

    def evaluate(self, point: Sequence) -> Fraction:
        return sum((c * x for c, x in zip(self.objective, point)), Fraction(0))


@dataclass(frozen=True)
class LPSolution:
    status: LPStatus
    value: Fraction | None = None
    point: tuple[Fraction, ...] | None = None

    @property
    def optimal(self) -> bool:
        return self.status is LPStatus.OPTIMAL


Trace = Callable[[str], None]


class _Tableau:
    """Rows hold ``[coefficients..., rhs]``; ``cost`` is the reduced-cost row."""

    def __init__(self, rows, basis, names, trace: Trace | None = None):
        self.rows: list[list[Fraction]] = rows
        self.basis: list[int] = basis
        self.names: list[str] = names
        self.cost: list[Fraction] = []
        self.trace = trace

    def set_cost(self, c: Sequence[Fraction]) -> None:
        width = len(self.names)
        cost = list(c) + [Fraction(0)] * (width + 1 - len(c))
        for row, b in zip(self.rows, self.basis):
            cb = cost[b]
            if cb:
                for j, v in enumerate(row):
                    if v:
                        cost[j] -= cb * v
        self.cost = cost

    def pivot(self, r: int, col: int) -> None:
        prow = self.rows[r]
        p = prow[col]
        if p != 1:
            prow = [v / p for v in prow]
            self.rows[r] = prow
        nz = [j for j, v in enumerate(prow) if v]
        for k, row in enumerate(self.rows):
            if k == r:
                continue
            f = row[col]
            if f:
                for j in nz:
                    row[j] -= f * prow[j]
        f = self.cost[col]
        if f:
            for j in nz:
                self.cost[j] -= f * prow[j]
        if self.trace:
            self.trace(f"pivot: {self.names[self.basis[r]]} leaves, {self.names[col]} enters")
        self.basis[r] = col
        if self.trace:
            self.trace(self.dump())

    def run(self, allowed: int) -> str:
        """Bland's rule over the first ``allowed`` columns."""
        while True:
            col = next((j for j in range(allowed) if self.cost[j] < 0), None)
            if col is None:
                return OPTIMAL
            best = None
            for r, row in enumerate(self.rows):
                a = row[col]
                if a > 0:
                    key = (row[-1] / a, self.basis[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                return UNBOUNDED
            self.pivot(best[1], col)

    def dump(self) -> str:
        cells = [["basis"] + self.names + ["rhs"]]
        for b, row in zip(self.basis, self.rows):
            cells.append([self.names[b]] + [str(v) for v in row])
        cells.append(["cost"] + [str(v) for v in self.cost])
        widths = [max(len(r[j]) for r in cells) for j in range(len(cells[0]))]
        return "\n".join(" ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells)


def solve_lp(lp: LinearProgram, trace: Trace | None = None) -> LPSolution:
    """Exact optimum of ``lp``; infeasibility and unboundedness go in ``status``."""
    n = lp.num_vars
    k = len(lp.constraints)
    # columns: x_0..x_{n-1}, surplus s_0..s_{k-1}, then one artificial per row with b > 0
    rows: list[list[Fraction]] = []
    basis: list[int] = []
    needs_art = [b > 0 for _, b in lp.constraints]
    art_cols = {}
    col = n + k
    for i, flag in enumerate(needs_art):
        if flag:
            art_cols[i] = col
            col += 1
    width = col
    zero = Fraction(0)
    for i, (coeffs, b) in enumerate(lp.constraints):
        row = [zero] * (width + 1)
        if i in art_cols:
            row[:n] = coeffs
            row[n + i] = Fraction(-1)
            row[art_cols[i]] = Fraction(1)
            row[-1] = b
            basis.append(art_cols[i])
        else:
            row[:n] = [-a for a in coeffs]
            row[n + i] = Fraction(1)
            row[-1] = -b
            basis.append(n + i)
        rows.append(row)
    names = [f"x{j}" for j in range(n)] + [f"s{i}" for i in range(k)]
    names += [f"r{i}" for i in sorted(art_cols)]
    tab = _Tableau(rows, basis, names, trace)

    if art_cols:
        phase1 = [zero] * (n + k) + [Fraction(1)] * len(art_cols)
        tab.set_cost(phase1)
        if trace:
            trace("phase 1\n" + tab.dump())
        tab.run(width)
        if tab.cost[-1] != 0:
            return LPSolution(LPStatus.INFEASIBLE)
        # drive zero-level artificials out of the basis, dropping redundant rows
        for r in reversed(range(len(tab.rows))):
            if tab.basis[r] < n + k:
                continue
            row = tab.rows[r]
            col = next((j for j in range(n + k) if row[j]), None)
            if col is None:
                del tab.rows[r]
                del tab.basis[r]
            else:
                tab.pivot(r, col)
        for row in tab.rows:
            del row[n + k:width]
        del tab.names[n + k:]

    tab.set_cost(list(lp.objective) + [zero] * k)
    if trace:
        trace("phase 2\n" + tab.dump())
    if tab.run(n + k) == UNBOUNDED:
        return LPSolution(LPStatus.UNBOUNDED)
    point = [zero] * n
    for row, b in zip(tab.rows, tab.basis):
        if b < n:
            point[b] = row[-1]
    point = tuple(point)
    return LPSolution(LPStatus.OPTIMAL, lp.evaluate(point), point)
