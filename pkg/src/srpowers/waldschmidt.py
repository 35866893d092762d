"""Waldschmidt constants of squarefree monomial ideals.

For a squarefree monomial ideal the constant is the optimum of the fractional
covering LP over the minimal primes.  ``gamma_report`` checks that value against
the sequence alpha(I^(m))/m and, for bipyramids, against n/(n-2).
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .alpha import AlphaQuery, BudgetExceeded, alpha_symbolic, membership_program
from .ideal import SquarefreeMonomialIdeal, bipyramid_order
from .lp import solve_lp

DEFAULT_M_MAX = 12


def fmt(q: Fraction | int | None) -> str:
    if q is None:
        return "-"
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def gamma_lp(ideal: SquarefreeMonomialIdeal, trace=None) -> Fraction:
    sol = solve_lp(membership_program(ideal, 1), trace=trace)
    return sol.value


def gamma_lp_point(ideal: SquarefreeMonomialIdeal) -> tuple[Fraction, ...]:
    return solve_lp(membership_program(ideal, 1)).point


def gamma_closed_form(n: int) -> Fraction:
    if n <= 3:
        raise ValueError(f"closed form needs n >= 4, got {n}")
    return Fraction(n, n - 2)


def subsequence_step(n: int) -> tuple[int, int]:
    """(m-step, alpha-step) of the progression on which alpha/m is constant.

    n = 2k gives m = s(k-1), alpha = sk; n = 2k-1 gives m = s(2k-3), alpha = s(2k-1).
    """
    if n < 4:
        raise ValueError(f"no progression for n = {n}")
    if n % 2 == 0:
        k = n // 2
        return k - 1, k
    return n - 2, n


@dataclass
class SequenceEntry:
    m: int
    alpha: int
    witness: str

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.alpha, self.m)


@dataclass
class GammaReport:
    lp_value: Fraction
    closed_form: Fraction | None
    sequence: list[SequenceEntry]
    upper_env: Fraction | None
    consistent: bool
    bipyramid_n: int | None = None
    lower_bound_ok: bool = True
    subsequence_ok: bool | None = None
    truncated: bool = False
    notes: list[str] = field(default_factory=list)

    def summary(self) -> str:
        if self.closed_form is None:
            tail = "no closed form" if self.bipyramid_n is None else "no closed form for n = 3"
        else:
            tail = f"closed form {fmt(self.closed_form)}, {'consistent' if self.consistent else 'INCONSISTENT'}"
        return f"{fmt(self.lp_value)} ({tail})"

    def to_text(self) -> str:
        lines = [
            f"bipyramid_n: {self.bipyramid_n if self.bipyramid_n is not None else '-'}",
            f"lp_value: {fmt(self.lp_value)}",
            f"closed_form: {fmt(self.closed_form)}",
            f"upper_env: {fmt(self.upper_env)}",
            f"lower_bound_ok: {str(self.lower_bound_ok).lower()}",
            f"subsequence_ok: {'-' if self.subsequence_ok is None else str(self.subsequence_ok).lower()}",
            f"consistent: {str(self.consistent).lower()}",
            f"truncated: {str(self.truncated).lower()}",
        ]
        lines += [f"note: {t}" for t in self.notes]
        lines.append("sequence:")
        lines += [f"  m={e.m} alpha={e.alpha} ratio={fmt(e.ratio)} witness={e.witness}" for e in self.sequence]
        return "\n".join(lines) + "\n"

    def sequence_csv(self) -> str:
        rows = ["m,alpha,ratio,witness"]
        rows += [f"{e.m},{e.alpha},{fmt(e.ratio)},{e.witness}" for e in self.sequence]
        return "\n".join(rows) + "\n"

    def to_record(self) -> dict:
        return {
            "bipyramid_n": self.bipyramid_n,
            "lp_value": fmt(self.lp_value),
            "closed_form": None if self.closed_form is None else fmt(self.closed_form),
            "upper_env": None if self.upper_env is None else fmt(self.upper_env),
            "lower_bound_ok": self.lower_bound_ok,
            "subsequence_ok": self.subsequence_ok,
            "consistent": self.consistent,
            "truncated": self.truncated,
            "notes": self.notes,
            "sequence": [
                {"m": e.m, "alpha": e.alpha, "ratio": fmt(e.ratio), "witness": e.witness}
                for e in self.sequence
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True)


def _alpha_entry(args) -> SequenceEntry | None:
    ideal, m, deadline = args
    try:
        res = alpha_symbolic(AlphaQuery(ideal, m), deadline=deadline)
    except BudgetExceeded:
        return None
    return SequenceEntry(m, res.value, str(res.witness))


def gamma_report(
    ideal: SquarefreeMonomialIdeal,
    m_max: int = DEFAULT_M_MAX,
    s_max: int | None = None,
    jobs: int = 1,
    budget: float | None = None,
    trace=None,
) -> GammaReport:
    """Collect alpha(m)/m for m = 1..m_max (plus the progression up to s_max) and check it.

    A report is returned even when something disagrees; ``consistent`` says so.
    """
    deadline = time.monotonic() + budget if budget is not None else None
    lp_value = gamma_lp(ideal, trace=trace)
    n = bipyramid_order(ideal)
    notes = []
    closed = None
    step = None
    if n is not None and n >= 4:
        closed = gamma_closed_form(n)
        step = subsequence_step(n)
    elif n == 3:
        notes.append(
            "n = 3: complete intersection, gamma = 2; the formula n/(n-2) would give 3 and is not applied"
        )
    ms = set(range(1, m_max + 1))
    if step is not None and s_max:
        ms.update(s * step[0] for s in range(1, s_max + 1))
    tasks = [(ideal, m, deadline) for m in sorted(ms)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, os.cpu_count() or 1)) as pool:
            results = list(pool.map(_alpha_entry, tasks))
    else:
        results = [_alpha_entry(t) for t in tasks]
    truncated = any(r is None for r in results)
    seq = [r for r in results if r is not None]
    if truncated:
        notes.append("budget exhausted: sequence is incomplete")

    lower_ok = all(lp_value <= e.ratio for e in seq)
    upper = min((e.ratio for e in seq), default=None)
    sub_ok = None
    if step is not None:
        sub_ok = all(
            e.alpha == (e.m // step[0]) * step[1] for e in seq if e.m % step[0] == 0
        )
    consistent = lower_ok and (closed is None or (closed == lp_value and bool(sub_ok)))
    return GammaReport(
        lp_value=lp_value,
        closed_form=closed,
        sequence=seq,
        upper_env=upper,
        consistent=consistent,
        bipyramid_n=n,
        lower_bound_ok=lower_ok,
        subsequence_ok=sub_ok,
        truncated=truncated,
        notes=notes,
    )
