from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from charvar.errors import DomainError, StructureError
from charvar.plethys import (TruncSeries, pexp, plog, psi, series_exp, series_log, series_mul,
                             sym_power_e)
from charvar.polycore import ExactPoly

from conftest import polys

x = ExactPoly.var("x")
XV = ("x",)


def S(*coeffs, order=None):
    return TruncSeries(list(coeffs), order, XV)


def exp_oracle(g):
    """sum_{m <= N} g^m / m!, straight from the definition."""
    total = TruncSeries.one(g.order, g.variables)
    power = TruncSeries.one(g.order, g.variables)
    for m in range(1, g.order + 1):
        power = series_mul(power, g)
        total = total + power * Fraction(1, factorial(m))
    return total


@st.composite
def series(draw, variables=XV, max_order=6):
    order = draw(st.integers(1, max_order))
    body = [draw(polys(variables=variables, max_deg=3, max_terms=3)) for _ in range(order)]
    return TruncSeries([ExactPoly.zero(variables)] + body, order, variables)


def test_series_mul_examples():
    assert series_mul(S(1, 1, 0), S(1, -1, 0)) == S(1, 0, -1)
    a = S(0, x, 3 * x ** 2)
    assert series_mul(a, TruncSeries.one(2, XV)) == a
    geom = S(*[1] * 6)
    assert series_mul(geom, S(1, -1, order=5)) == TruncSeries.one(5, XV)


def test_series_mismatch():
    with pytest.raises(StructureError):
        series_mul(S(1, 1), S(1, 1, 1))
    with pytest.raises(StructureError):
        S(1, 1) + TruncSeries([1, 1], None, ("u", "v"))


def test_psi_examples():
    # psi(x z) = sum_l x^l z^l / l
    assert psi(S(0, x, 0, 0)) == S(0, x, x ** 2 / 2, x ** 3 / 3)
    assert psi(TruncSeries.zero(3, XV)) == TruncSeries.zero(3, XV)
    assert psi(S(0, 0, 1, 0)) == S(0, 0, 1, 0)
    with pytest.raises(DomainError):
        psi(S(1, x))


def test_psi_two_variables():
    uv = ("u", "v")
    u, v = ExactPoly.var("u", uv), ExactPoly.var("v", uv)
    f = TruncSeries([0, u * v ** 2, 0], 2, uv)
    assert psi(f) == TruncSeries([0, u * v ** 2, u ** 2 * v ** 4 / 2], 2, uv)


def test_pexp_examples():
    assert pexp(TruncSeries.zero(4, XV)) == TruncSeries.one(4, XV)
    assert pexp(S(0, x, 0)) == S(1, x, x ** 2)
    assert pexp(S(0, x - 1)) == S(1, x - 1)
    # PExp(x z) is the geometric series in x z
    assert pexp(S(0, x, 0, 0, 0, 0)) == S(*[x ** k for k in range(6)])


def test_plog_examples():
    assert plog(TruncSeries.one(3, XV)) == TruncSeries.zero(3, XV)
    assert plog(S(1, x, x ** 2, x ** 3)) == S(0, x, 0, 0)
    with pytest.raises(DomainError):
        plog(S(2, x))


def test_sym_power_examples():
    e = x ** 3 - 2 * x + 5
    assert sym_power_e(e, 0) == 1
    assert sym_power_e(e, 1) == e
    assert sym_power_e((x - 1) ** 2, 2) == (x - 1) ** 4 / 2 + (x ** 2 - 1) ** 2 / 2
    # Sym^m of a point is a point; Sym^m of the affine line is affine m-space
    assert all(sym_power_e(ExactPoly.one(XV), m) == 1 for m in range(5))
    assert all(sym_power_e(x, m) == x ** m for m in range(5))


@given(series())
def test_exp_recurrence_matches_definition(g):
    assert series_exp(g) == exp_oracle(g)


@given(series())
def test_log_inverts_exp(g):
    assert series_log(series_exp(g)) == g


@given(series(variables=("u", "v"), max_order=5))
@settings(max_examples=40)
def test_round_trips(f):
    g = pexp(f)
    assert g[0] == 1
    assert plog(g) == f
    assert pexp(plog(g)) == g


@given(series(), series())
@settings(max_examples=40)
def test_pexp_turns_sums_into_products(f, g):
    if f.order != g.order:
        g = TruncSeries(list(g)[: f.order + 1], f.order, XV) if g.order > f.order else \
            TruncSeries(list(g), f.order, XV)
    assert pexp(f + g) == series_mul(pexp(f), pexp(g))


@given(series())
def test_first_order_law(f):
    assert pexp(f)[1] == f[1]


@given(polys(max_deg=3, coefs=st.integers(-4, 4)), st.integers(0, 5))
def test_sym_power_integrality(e, m):
    assert sym_power_e(e, m).is_integral()


def test_json_round_trip():
    s = S(1, x / 3, x ** 2 - 1)
    obj = s.to_json_obj()
    assert obj["order"] == 2 and len(obj["coeffs"]) == 3
    assert TruncSeries.from_json(s.to_json()) == s
    with pytest.raises(StructureError):
        TruncSeries.from_json_obj({"order": 3, "coeffs": obj["coeffs"]})
