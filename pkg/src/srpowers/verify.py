"""Checks of the bipyramid formulas, run by ``srpowers verify``."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .alpha import BudgetExceeded, alpha_cells
from .ideal import Monomial, bipyramid_ideal, minimal_primes, symbolic_membership, weight
from .simplicial import build_bipyramid, enumerate_base_paths, facet_complement_primes, minimal_nonfaces
from .waldschmidt import gamma_closed_form, gamma_lp


@dataclass
class Check:
    name: str
    passed: bool
    detail: str
    failing: str | None = None

    def line(self) -> str:
        head = "PASS" if self.passed else "FAIL"
        text = f"{head} {self.name}: {self.detail}"
        if self.failing:
            text += f" (minimal failing instance: {self.failing})"
        return text


def _first_failure(items):
    """items: iterable of (instance_label, ok); labels come smallest first."""
    for label, ok in items:
        if not ok:
            return label
    return None


def _check(name: str, detail: str, items) -> Check:
    bad = _first_failure(items)
    return Check(name, bad is None, detail, bad)


def bipyramid_primes(n: int):
    paths = enumerate_base_paths(n)
    return sorted({tuple(sorted((0,) + p)) for p in paths} | {tuple(sorted(p + (n + 1,))) for p in paths})


def verify_bipyramid(n_max: int = 10, s_max: int = 3, jobs: int = 1, budget: float | None = None) -> list[Check]:
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    if s_max < 1:
        raise ValueError("s_max must be at least 1")
    deadline = time.monotonic() + budget if budget is not None else None
    checks: list[Check] = []

    g3 = gamma_lp(bipyramid_ideal(3))
    checks.append(Check(
        "gamma n=3", g3 == 2,
        f"gamma_LP(I_B3) = {g3}; complete intersection, n/(n-2) = 3 is not applied for n = 3",
        None if g3 == 2 else "n=3",
    ))
    if n_max == 3:
        checks.append(Check("n=3 exclusion", True, "bipyramid closed forms need n >= 4; nothing else to check"))
        return checks

    ns = range(4, n_max + 1)

    def generators_ok(n):
        nf = minimal_nonfaces(build_bipyramid(n))
        return (nf == list(bipyramid_ideal(n).generator_supports)
                and len(nf) == n * (n - 3) // 2 + 1 and all(len(s) == 2 for s in nf))

    checks.append(_check("generators", f"n(n-3)/2+1 quadratic generators, n = 4..{n_max}",
                         ((f"n={n}", generators_ok(n)) for n in ns)))

    def primes_ok(n):
        a = minimal_primes(bipyramid_ideal(n))
        b = facet_complement_primes(build_bipyramid(n))
        return a == b == bipyramid_primes(n) and len(a) == 2 * n

    checks.append(_check("decomposition", f"transversals = facet complements = 2n apex+path primes, n = 4..{n_max}",
                         ((f"n={n}", primes_ok(n)) for n in ns)))

    f = Monomial.parse("0:3 3:2 5:1 7:2 10:1", 11)
    s1, s2 = (1, 2, 3, 4, 5, 6, 7), (1, 4, 5, 6, 7, 8, 9)
    got = [weight(f, (0,) + s1), weight(f, s1 + (10,)), weight(f, (0,) + s2), weight(f, s2 + (10,))]
    checks.append(Check("weight example", got == [8, 6, 6, 4], f"B_9 weights {got}, expected [8, 6, 6, 4]",
                        None if got == [8, 6, 6, 4] else "n=9"))

    alpha: dict[tuple[int, int], int] = {}

    def need(pairs):
        todo = sorted({p for p in pairs if p not in alpha})
        for c in _grid(todo, jobs, deadline):
            alpha[c[0], c[1]] = c[2]

    even = [(2 * k, s * (k - 1), s * k) for k in range(2, n_max // 2 + 1) for s in range(1, s_max + 1)]
    odd = [(2 * k - 1, s * (2 * k - 3), s * (2 * k - 1))
           for k in range(3, (n_max + 1) // 2 + 1) for s in range(1, s_max + 1)]
    m_grid = range(1, 2 * s_max + 1)
    stat = [(2 * k + t, k - 1, k) for k in range(3, n_max // 2 + 1) for t in range(0, n_max - 2 * k + 1)]
    try:
        need([(n, m) for n, m, _ in even + odd + stat] + [(n, 1) for n in ns] + [(n, m) for n in ns for m in m_grid])
    except BudgetExceeded:
        checks.append(Check("budget", False, "time budget exhausted before all alpha values were computed"))
        return checks

    checks.append(_check("even progression", f"alpha(2k, s(k-1)) = sk, 2k <= {n_max}, s <= {s_max}",
                         ((f"n={n}, m={m}: alpha={alpha[n, m]}, expected {v}", alpha[n, m] == v)
                          for n, m, v in even)))
    checks.append(_check("odd progression", f"alpha(2k-1, s(2k-3)) = s(2k-1), 2k-1 <= {n_max}, s <= {s_max}",
                         ((f"n={n}, m={m}: alpha={alpha[n, m]}, expected {v}", alpha[n, m] == v)
                          for n, m, v in odd)))
    checks.append(_check("base case", f"alpha(n, 1) = 2, n = 4..{n_max}",
                         ((f"n={n}: alpha={alpha[n, 1]}", alpha[n, 1] == 2) for n in ns)))
    checks.append(_check("monotonicity", f"alpha(n, m) >= alpha(n+1, m), n = 4..{n_max}, m = 1..{2 * s_max}",
                         ((f"n={n}, m={m}: {alpha[n, m]} < {alpha[n + 1, m]}", alpha[n, m] >= alpha[n + 1, m])
                          for m in m_grid for n in range(4, n_max))))
    checks.append(_check("stationarity", f"alpha(2k+t, k-1) = k, 3 <= k, 2k+t <= {n_max}",
                         ((f"n={n}, m={m}: alpha={alpha[n, m]}, expected {v}", alpha[n, m] == v)
                          for n, m, v in stat)))

    def gamma_items():
        for n in ns:
            g = gamma_lp(bipyramid_ideal(n))
            yield f"n={n}: gamma_LP={g}", g == gamma_closed_form(n)

    checks.append(_check("waldschmidt", f"gamma_LP(I_Bn) = n/(n-2), n = 4..{n_max}", gamma_items()))

    def alt_items():
        for k in range(2, n_max // 2 + 1):
            for r in range(1, max(1, s_max // 2) + 1):
                g = Monomial.from_support(2 * k + 2, range(1, 2 * k + 1), r)
                ok = g.degree == 2 * r * k and symbolic_membership(g, bipyramid_ideal(2 * k), 2 * r * (k - 1))
                yield f"k={k}, r={r}", ok

    checks.append(_check("alternative witness", "(x1...x2k)^r has degree sk and lies in I^(s(k-1)), s = 2r",
                         alt_items()))
    return checks


def _grid(pairs, jobs, deadline):
    budget = None if deadline is None else max(0.0, deadline - time.monotonic())
    out = []
    for cell in alpha_cells(pairs, jobs=jobs, budget=budget):
        if cell.result is None:
            raise BudgetExceeded("time budget exhausted")
        out.append((cell.n, cell.m, cell.result.value))
    return out
