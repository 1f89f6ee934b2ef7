from fractions import Fraction

from hypothesis import strategies as st

from charvar.polycore import ExactPoly

small_fracs = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def polys(draw, variables=("x",), max_deg=3, max_terms=4, coefs=small_fracs):
    n = len(variables)
    exps = st.tuples(*[st.integers(0, max_deg)] * n)
    terms = draw(st.dictionaries(exps, coefs, max_size=max_terms))
    return ExactPoly(variables, terms)


def nonzero(strategy):
    return strategy.filter(lambda p: not p.is_zero())


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
