from hypothesis import strategies as st

from srpowers.ideal import Monomial


def bipyramid_monomials(n: int, max_exp: int = 4):
    return st.lists(st.integers(0, max_exp), min_size=n + 2, max_size=n + 2).map(
        lambda e: Monomial(tuple(e))
    )


@st.composite
def n_and_monomial(draw, n_min=4, n_max=9, max_exp=4):
    n = draw(st.integers(n_min, n_max))
    return n, draw(bipyramid_monomials(n, max_exp))


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
