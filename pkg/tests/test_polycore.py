from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from charvar.errors import DivisibilityError, StructureError
from charvar.polycore import ExactPoly, add, eval_at_one, exact_div, mul, pow, substitute

from conftest import nonzero, polys

q = ExactPoly.var("q")
x = ExactPoly.var("x")
TUV = ("t", "u", "v")
t, u, v = (ExactPoly.var(s, TUV) for s in TUV)

three_var = polys(variables=("u", "v", "x"), max_deg=2, max_terms=3)


def test_add_examples():
    assert add(1 + q, 1 - q) == ExactPoly.constant(2, ("q",))
    p = 3 * q ** 2 - q
    assert add(p, ExactPoly.zero(("q",))) == p
    s = add(q ** 2, -q ** 2)
    assert s.is_zero() and len(s.terms) == 0


def test_mul_examples():
    assert mul(1 + q, 1 - q) == 1 - q ** 2
    assert mul(2 * q + 1, ExactPoly.one(("q",))) == 2 * q + 1
    assert mul(x - 1, x + 1) == x ** 2 - 1


def test_pow_examples():
    assert pow(1 + q, 0) == 1
    assert pow(1 + q, 2) == 1 + 2 * q + q ** 2
    assert pow(x - 1, 3) == x ** 3 - 3 * x ** 2 + 3 * x - 1


def test_substitute_examples():
    assert substitute(1 + t * u * v, {"t": -1}) == 1 - ExactPoly.var("u", ("u", "v")) * ExactPoly.var("v", ("u", "v"))
    assert substitute(x ** 2, {"x": x ** 3}) == x ** 6
    assert substitute(1 + t * u * v, {"u": 1, "v": 1}) == 1 + ExactPoly.var("t")


def test_exact_div_examples():
    assert exact_div(x ** 2 - 1, x - 1) == x + 1
    assert exact_div((1 + q) ** 2 * (1 + q ** 2), (1 + q) ** 2) == 1 + q ** 2
    with pytest.raises(DivisibilityError) as info:
        exact_div(x ** 2 + 1, x - 1)
    assert info.value.remainder == ExactPoly.constant(2, ("x",))


def test_exact_div_multivariate():
    a = (t * u - v) * (t + v ** 2 + 1)
    assert exact_div(a, t * u - v) == t + v ** 2 + 1
    with pytest.raises(DivisibilityError):
        exact_div(a + u, t * u - v)


def test_eval_at_one_examples():
    assert eval_at_one((x - 1) ** 4, "x") == 0
    assert eval_at_one(x ** 3, "x") == 1
    assert eval_at_one(2 * q ** 2 + 1, "q") == 3
    assert eval_at_one(1 + t * u * v, "u").variables == ("t", "v")


def test_variable_mismatch_is_structural():
    with pytest.raises(StructureError):
        q + x
    with pytest.raises(StructureError):
        q * x
    with pytest.raises(StructureError):
        ExactPoly(("y",))


def test_no_zero_coefficients_stored():
    p = ExactPoly(("x",), {(0,): 0, (1,): Fraction(0), (2,): 3})
    assert dict(p.terms) == {(2,): 3}


def test_rational_prefactors_stay_exact():
    half = (x + 1) * Fraction(1, 2) + (x - 1) * Fraction(1, 2)
    assert half == x
    assert ((x + 1) / 3).coeff((1,)) == Fraction(1, 3)


def test_text_latex_and_json():
    p = x ** 4 - 2 * x ** 3 + Fraction(1, 2) * x - 1
    assert p.to_text() == "-1 + 1/2*x - 2*x^3 + x^4"
    assert p.to_latex() == r"-1 + \frac{1}{2} x - 2 x^{3} + x^{4}"
    assert ExactPoly.zero(("q",)).to_text() == "0"
    obj = (1 + t * u * v).to_json_obj()
    assert obj == {"variables": ["t", "u", "v"],
                   "terms": [{"exp": [0, 0, 0], "coef": "1"}, {"exp": [1, 1, 1], "coef": "1"}]}
    assert ExactPoly.from_json(p.to_json()) == p
    assert p.to_json_obj()["terms"][1]["coef"] == "1/2"


def test_coefficients_dense():
    assert (1 - q ** 2).coefficients() == [1, 0, -1]
    assert ExactPoly.from_coefficients([1, 0, -1], "q") == 1 - q ** 2


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(three_var, three_var, three_var)
@settings(max_examples=50)
def test_ring_axioms_multivariate(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@given(polys(), nonzero(polys()))
def test_exact_div_inverts_mul(a, b):
    assert exact_div(a * b, b) == a


@given(three_var, nonzero(three_var))
@settings(max_examples=50)
def test_exact_div_inverts_mul_multivariate(a, b):
    assert exact_div(a * b, b) == a


@given(three_var, three_var, polys(variables=("t", "u", "v", "x"), max_deg=1, max_terms=2))
@settings(max_examples=50)
def test_substitute_is_ring_homomorphism(a, b, image):
    bind = {"u": image, "x": -image}
    lhs = (a * b).substitute(bind)
    rhs = a.substitute(bind, lhs.variables) * b.substitute(bind, lhs.variables)
    assert lhs == rhs
    assert (a + b).substitute(bind, lhs.variables) == (
        a.substitute(bind, lhs.variables) + b.substitute(bind, lhs.variables))


@given(three_var)
def test_json_round_trip(p):
    assert ExactPoly.from_json(p.to_json()) == p
    assert hash(ExactPoly.from_json(p.to_json())) == hash(p)


@given(polys(), st.integers(0, 5))
def test_pow_matches_repeated_product(a, e):
    expected = ExactPoly.one(("x",))
    for _ in range(e):
        expected = expected * a
    assert a ** e == expected
