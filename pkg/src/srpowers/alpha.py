"""Initial degree of symbolic powers of squarefree monomial ideals.

``alpha_symbolic`` solves the covering integer program

    minimize sum(a)  subject to  sum(a[i] for i in P) >= m  for every minimal prime P

by branch-and-bound over the exact LP relaxation.  ``alpha_bruteforce`` is an
independent enumeration oracle that never touches the LP code.

Both report the same canonical witness: among all members of minimal degree,
the lexicographically largest exponent vector (for the bipyramid over a
hexagon at m = 2 that is x1*x3*x5).
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .ideal import Monomial, SquarefreeMonomialIdeal, bipyramid_ideal, symbolic_membership
from .lp import LinearProgram, LPSolution, solve_lp


class BudgetExceeded(RuntimeError):
    """The wall-clock budget ran out before a solve finished."""


class DegreeCapExhausted(RuntimeError):
    """Brute force found no member up to the supplied degree cap."""


def check_deadline(deadline: float | None) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise BudgetExceeded("time budget exhausted")


@dataclass(frozen=True)
class AlphaQuery:
    ideal: SquarefreeMonomialIdeal
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")


@dataclass(frozen=True)
class AlphaResult:
    value: int
    witness: Monomial
    nodes: int = 0


def membership_program(ideal: SquarefreeMonomialIdeal, m: int | Fraction = 1) -> LinearProgram:
    """Covering LP: total degree over exponent vectors whose prime weights are all >= m."""
    n = ideal.num_variables
    rows = []
    for p in ideal.minimal_primes:
        members = set(p)
        rows.append((tuple(1 if i in members else 0 for i in range(n)), m))
    return LinearProgram(n, (1,) * n, tuple(rows))


def _bound_rows(n: int, lower: dict[int, int], upper: dict[int, int]):
    for j, v in lower.items():
        row = [0] * n
        row[j] = 1
        yield row, v
    for j, v in upper.items():
        row = [0] * n
        row[j] = -1
        yield row, -v


def _most_fractional(point: Sequence[Fraction]) -> int | None:
    best, best_dist = None, None
    for j, v in enumerate(point):
        frac = v - math.floor(v)
        if frac:
            dist = abs(frac - Fraction(1, 2))
            if best is None or dist < best_dist:
                best, best_dist = j, dist
    return best


def branch_and_bound(
    lp: LinearProgram,
    incumbent: Sequence[int] | None = None,
    deadline: float | None = None,
    trace=None,
) -> tuple[Fraction, tuple[int, ...], int] | None:
    """Minimize ``lp`` over non-negative integer points.

    Depth-first search branching on the most fractional coordinate (lowest
    index on ties), up-branch first.  Returns ``(value, point, nodes)`` or
    ``None`` when no integer point exists.  The LP must be bounded below.
    """
    integral_obj = all(c.denominator == 1 for c in lp.objective)

    def bound(v: Fraction) -> Fraction:
        return Fraction(math.ceil(v)) if integral_obj else v

    best_val: Fraction | None = None
    best_pt: tuple[int, ...] | None = None
    if incumbent is not None:
        best_pt = tuple(int(x) for x in incumbent)
        best_val = lp.evaluate(best_pt)

    nodes = 0
    stack: list[tuple[dict[int, int], dict[int, int]]] = [({}, {})]
    root_bound = None
    while stack:
        check_deadline(deadline)
        lower, upper = stack.pop()
        nodes += 1
        sol: LPSolution = solve_lp(
            lp.with_constraints(_bound_rows(lp.num_vars, lower, upper)), trace=trace
        )
        if not sol.optimal:
            if sol.status == "unbounded":
                raise ValueError("branch-and-bound needs an LP bounded below")
            continue
        b = bound(sol.value)
        if root_bound is None:
            root_bound = b
        if best_val is not None and b >= best_val:
            continue
        j = _most_fractional(sol.point)
        if j is None:
            best_val, best_pt = sol.value, tuple(int(v) for v in sol.point)
            if best_val == root_bound:
                break
            continue
        v = sol.point[j]
        down = (lower, {**upper, j: math.floor(v)})
        up = ({**lower, j: math.ceil(v)}, upper)
        stack.append(down)
        stack.append(up)
    if best_pt is None:
        return None
    return best_val, best_pt, nodes


def _lexmax_optimum(
    lp: LinearProgram, total: int, start: Sequence[int], deadline: float | None
) -> tuple[tuple[int, ...], int]:
    """Lexicographically largest integer point of ``lp`` with coordinate sum ``total``.

    Fixes one coordinate at a time to its largest attainable value; ``start``
    is any feasible point of that degree and seeds every sub-search.
    """
    n = lp.num_vars
    ones = (1,) * n
    base = lp.with_constraints([(ones, total), ((-1,) * n, -total)])
    fixed: list[tuple[tuple[int, ...], int]] = []
    current = tuple(start)
    nodes = 0
    for i in range(n):
        obj = [0] * n
        obj[i] = -1
        sub = base.with_constraints(fixed).with_objective(obj)
        value, current, used = branch_and_bound(sub, incumbent=current, deadline=deadline)
        nodes += used
        e = [0] * n
        e[i] = 1
        fixed.append((tuple(e), current[i]))
        e = [0] * n
        e[i] = -1
        fixed.append((tuple(e), -current[i]))
    return current, nodes


def alpha_symbolic(q: AlphaQuery, deadline: float | None = None, trace=None) -> AlphaResult:
    """Initial degree of the m-th symbolic power, with canonical witness."""
    ideal, m = q.ideal, q.m
    n = ideal.num_variables
    lp = membership_program(ideal, m)
    relax = solve_lp(lp, trace=trace)
    # power of a smallest generator, and the LP point rounded up: both feasible
    gen = min(ideal.generator_supports, key=lambda s: (len(s), s))
    candidates = [Monomial.from_support(n, gen, m).exponents]
    candidates.append(tuple(math.ceil(v) for v in relax.point))
    incumbent = min(candidates, key=sum)
    found = branch_and_bound(lp, incumbent=incumbent, deadline=deadline, trace=trace)
    value, point, nodes = found
    witness, more = _lexmax_optimum(lp, int(value), point, deadline)
    return AlphaResult(int(value), Monomial(witness), nodes + more)


def _compositions_desc(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All non-negative vectors with the given sum, lexicographically decreasing."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions_desc(total - first, parts - 1):
            yield (first,) + rest


def alpha_bruteforce(q: AlphaQuery, degree_cap: int, deadline: float | None = None) -> AlphaResult:
    """Enumerate monomials by increasing degree until one is a member."""
    ideal, m = q.ideal, q.m
    n = ideal.num_variables
    tried = 0
    for d in range(degree_cap + 1):
        for exps in _compositions_desc(d, n):
            tried += 1
            if tried % 4096 == 0:
                check_deadline(deadline)
            f = Monomial(exps)
            if symbolic_membership(f, ideal, m):
                return AlphaResult(d, f, tried)
    raise DegreeCapExhausted(f"no member of the {m}-th symbolic power up to degree {degree_cap}")


def closed_form_prediction(n: int, m: int) -> int | None:
    """What the known formulas say about alpha for the bipyramid over an n-gon.

    Covers m = 1, the even progression m = s(k-1) for n = 2k, the odd
    progression m = s(2k-3) for n = 2k-1, and stationarity alpha = m+1 once
    n >= 2(m+1).  Returns None off these families or for n < 4.
    """
    if n < 4 or m < 1:
        return None
    if m == 1:
        return 2
    if n % 2 == 0:
        k = n // 2
        if m % (k - 1) == 0:
            return (m // (k - 1)) * k
    else:
        k = (n + 1) // 2
        if m % (2 * k - 3) == 0:
            return (m // (2 * k - 3)) * (2 * k - 1)
    if n >= 2 * (m + 1):
        return m + 1
    return None


@dataclass(frozen=True)
class AlphaCell:
    n: int
    m: int
    result: AlphaResult | None
    prediction: int | None

    @property
    def match(self) -> bool | None:
        if self.result is None or self.prediction is None:
            return None
        return self.result.value == self.prediction


def _solve_cell(args) -> AlphaCell:
    n, m, deadline = args
    pred = closed_form_prediction(n, m)
    try:
        res = alpha_symbolic(AlphaQuery(bipyramid_ideal(n), m), deadline=deadline)
    except BudgetExceeded:
        res = None
    return AlphaCell(n, m, res, pred)


def alpha_table(
    n_values: Iterable[int],
    m_values: Iterable[int],
    jobs: int = 1,
    budget: float | None = None,
) -> list[AlphaCell]:
    """alpha over a grid of bipyramids, in (n, m) order.

    Cells whose solve runs past the budget come back with ``result=None``.
    """
    m_values = list(m_values)
    return alpha_cells([(n, m) for n in n_values for m in m_values], jobs=jobs, budget=budget)


def alpha_cells(
    pairs: Sequence[tuple[int, int]], jobs: int = 1, budget: float | None = None
) -> list[AlphaCell]:
    deadline = time.monotonic() + budget if budget is not None else None
    cells = [(n, m, deadline) for n, m in pairs]
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, os.cpu_count() or 1)) as pool:
            return list(pool.map(_solve_cell, cells))
    return [_solve_cell(c) for c in cells]


def table_csv(cells: Sequence[AlphaCell]) -> str:
    lines = ["n,m,alpha,witness,closed_form_prediction,match"]
    for c in cells:
        alpha = "" if c.result is None else str(c.result.value)
        witness = "" if c.result is None else str(c.result.witness)
        pred = "" if c.prediction is None else str(c.prediction)
        match = "" if c.match is None else str(c.match).lower()
        lines.append(f"{c.n},{c.m},{alpha},{witness},{pred},{match}")
    return "\n".join(lines) + "\n"
