import json
import math
from fractions import Fraction

import pytest

from srpowers.alpha import AlphaQuery, alpha_symbolic
from srpowers.ideal import Monomial, SquarefreeMonomialIdeal, bipyramid_ideal, symbolic_membership
from srpowers.waldschmidt import (
    gamma_closed_form,
    gamma_lp,
    gamma_lp_point,
    gamma_report,
    subsequence_step,
)


@pytest.mark.parametrize("n,expected", [(6, Fraction(3, 2)), (5, Fraction(5, 3)), (3, Fraction(2))])
def test_gamma_lp_examples(n, expected):
    assert gamma_lp(bipyramid_ideal(n)) == expected


def test_closed_form():
    assert gamma_closed_form(8) == Fraction(4, 3)
    assert gamma_closed_form(4) == 2
    assert gamma_closed_form(100) == Fraction(50, 49)
    with pytest.raises(ValueError):
        gamma_closed_form(3)


@pytest.mark.parametrize("n", range(4, 17))
def test_lp_equals_closed_form_both_parities(n):
    assert gamma_lp(bipyramid_ideal(n)) == Fraction(n, n - 2)


@pytest.mark.parametrize("n", range(3, 11))
def test_scaled_lp_vertex_is_a_member(n):
    ideal = bipyramid_ideal(n)
    point = gamma_lp_point(ideal)
    q = math.lcm(*(v.denominator for v in point))
    f = Monomial(tuple(int(v * q) for v in point))
    assert f.degree == q * gamma_lp(ideal)
    assert symbolic_membership(f, ideal, q)
    assert alpha_symbolic(AlphaQuery(ideal, q)).value == f.degree


def test_steps():
    assert subsequence_step(6) == (2, 3)
    assert subsequence_step(5) == (3, 5)
    assert subsequence_step(4) == (1, 2)


def test_report_hexagon():
    r = gamma_report(bipyramid_ideal(6), m_max=8)
    assert r.lp_value == Fraction(3, 2) and r.closed_form == Fraction(3, 2)
    assert r.consistent and r.subsequence_ok and r.lower_bound_ok
    ratios = {e.m: e.ratio for e in r.sequence}
    assert [ratios[m] for m in (2, 4, 6, 8)] == [Fraction(3, 2)] * 4
    assert r.upper_env == Fraction(3, 2)
    assert r.summary() == "3/2 (closed form 3/2, consistent)"


def test_report_pentagon():
    r = gamma_report(bipyramid_ideal(5), m_max=9)
    ratios = {e.m: e.ratio for e in r.sequence}
    assert [ratios[m] for m in (3, 6, 9)] == [Fraction(5, 3)] * 3
    assert r.consistent


def test_report_square():
    r = gamma_report(bipyramid_ideal(4), m_max=4)
    assert [e.ratio for e in r.sequence] == [2, 2, 2, 2]


def test_report_extends_progression():
    r = gamma_report(bipyramid_ideal(9), m_max=2, s_max=2)
    assert [e.m for e in r.sequence] == [1, 2, 7, 14]
    assert r.subsequence_ok


def test_report_triangle_notes_discrepancy():
    r = gamma_report(bipyramid_ideal(3), m_max=4)
    assert r.lp_value == 2 and r.closed_form is None
    assert any("n = 3" in note for note in r.notes)
    assert r.consistent


def test_report_generic_ideal():
    ideal = SquarefreeMonomialIdeal(5, [(i, (i + 1) % 5) for i in range(5)])
    r = gamma_report(ideal, m_max=4)
    assert r.bipyramid_n is None and r.closed_form is None
    assert r.lp_value == Fraction(5, 3)
    assert all(r.lp_value <= e.ratio for e in r.sequence)


def test_report_serialization():
    r = gamma_report(bipyramid_ideal(6), m_max=3)
    rec = json.loads(r.to_json())
    assert rec["lp_value"] == "3/2" and rec["sequence"][1]["ratio"] == "3/2"
    assert "lp_value: 3/2" in r.to_text()
    assert r.sequence_csv().splitlines()[0] == "m,alpha,ratio,witness"


def test_report_budget_truncates():
    r = gamma_report(bipyramid_ideal(9), m_max=3, budget=1e-9)
    assert r.truncated and not r.sequence
