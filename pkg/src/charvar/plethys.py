"""Truncated power series in a counting variable z and plethystic calculus.

A :class:`TruncSeries` of order N holds the coefficients of z^0 .. z^N,
each an :class:`ExactPoly` over one shared variable list (typically
``("x",)`` or ``("u", "v")``).

``psi`` sums the Frobenius twists f(x^l, z^l) / l, ``pexp`` exponentiates
that, and ``plog`` inverts ``pexp`` by taking a logarithm and undoing
``psi`` with Moebius inversion.  Twisting by l multiplies the lowest
z-degree by l, so only finitely many l contribute below any order.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .combinat import moebius
from .errors import DomainError, StructureError
from .polycore import ExactPoly


class TruncSeries:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs, order=None, variables=None):
        coeffs = list(coeffs)
        if variables is None:
            polys = [c for c in coeffs if isinstance(c, ExactPoly)]
            if not polys:
                raise StructureError("cannot infer coefficient variables; pass variables=")
            variables = polys[0].variables
        variables = tuple(variables)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise StructureError("order must be non-negative")
        if len(coeffs) > order + 1:
            raise StructureError(f"{len(coeffs)} coefficients exceed order {order}")
        fixed = []
        for c in coeffs:
            if not isinstance(c, ExactPoly):
                c = ExactPoly.constant(c, variables)
            elif c.variables != variables:
                raise StructureError(
                    f"coefficient variables {c.variables} differ from {variables}")
            fixed.append(c)
        fixed.extend(ExactPoly.zero(variables) for _ in range(order + 1 - len(fixed)))
        self._coeffs = tuple(fixed)

    @classmethod
    def zero(cls, order, variables):
        return cls([], order, variables)

    @classmethod
    def one(cls, order, variables):
        return cls([1], order, variables)

    @classmethod
    def monomial(cls, coeff, k, order):
        """``coeff * z^k`` truncated at ``order``."""
        vs = coeff.variables
        if k > order:
            return cls.zero(order, vs)
        return cls([0] * k + [coeff], order, vs)

    @property
    def order(self):
        return len(self._coeffs) - 1

    @property
    def variables(self):
        return self._coeffs[0].variables

    @property
    def coeffs(self):
        return self._coeffs

    def __getitem__(self, k):
        return self._coeffs[k]

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def _check(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        if other.order != self.order or other.variables != self.variables:
            raise StructureError(
                f"series mismatch: order {self.order} over {self.variables} "
                f"vs order {other.order} over {other.variables}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return TruncSeries([a + b for a, b in zip(self, other)], self.order, self.variables)

    def __neg__(self):
        return TruncSeries([-a for a in self], self.order, self.variables)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction, ExactPoly)):
            return TruncSeries([a * other for a in self], self.order, self.variables)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        body = " + ".join(f"({c})*z^{k}" for k, c in enumerate(self) if c)
        return f"TruncSeries({body or '0'}, order={self.order})"

    def min_degree(self):
        """Lowest k with a nonzero z^k coefficient, or None for the zero series."""
        for k, c in enumerate(self):
            if c:
                return k
        return None

    def truncate(self, order):
        if order > self.order:
            raise StructureError("cannot raise the order of a truncated series")
        return TruncSeries(self._coeffs[:order + 1], order, self.variables)

    def to_json_obj(self):
        return {"order": self.order, "coeffs": [c.to_json_obj() for c in self]}

    @classmethod
    def from_json_obj(cls, obj):
        try:
            coeffs = [ExactPoly.from_json_obj(c) for c in obj["coeffs"]]
            order = obj["order"]
        except (KeyError, TypeError) as exc:
            raise StructureError(f"malformed series JSON: {exc}") from exc
        if len(coeffs) != order + 1:
            raise StructureError(f"order {order} needs {order + 1} coefficients")
        return cls(coeffs, order)

    def to_json(self):
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text):
        return cls.from_json_obj(json.loads(text))


def series_mul(a, b):
    """Cauchy product truncated at the common order."""
    a._check(b)
    n = a.order
    out = []
    for k in range(n + 1):
        acc = ExactPoly.zero(a.variables)
        for i in range(k + 1):
            if a[i] and b[k - i]:
                acc = acc + a[i] * b[k - i]
        out.append(acc)
    return TruncSeries(out, n, a.variables)


def series_exp(g):
    """exp(g) for g with zero constant term, via n a_n = sum_k k g_k a_{n-k}."""
    if g[0]:
        raise DomainError("series_exp needs a zero constant term")
    vs = g.variables
    a = [ExactPoly.one(vs)]
    for n in range(1, g.order + 1):
        acc = ExactPoly.zero(vs)
        for k in range(1, n + 1):
            if g[k] and a[n - k]:
                acc = acc + k * g[k] * a[n - k]
        a.append(acc * Fraction(1, n))
    return TruncSeries(a, g.order, vs)


def series_log(g):
    """log(g) for g with constant term 1, via n h_n = n g_n - sum_k k h_k g_{n-k}."""
    if g[0] != 1:
        raise DomainError("series_log needs constant term 1")
    vs = g.variables
    h = [ExactPoly.zero(vs)]
    for n in range(1, g.order + 1):
        acc = n * g[n]
        for k in range(1, n):
            if h[k] and g[n - k]:
                acc = acc - k * h[k] * g[n - k]
        h.append(acc * Fraction(1, n))
    return TruncSeries(h, g.order, vs)


def frobenius(f, l):
    """f(x^l, z^l): twist coefficients and spread z-degrees by l, truncating."""
    out = [ExactPoly.zero(f.variables)] * (f.order + 1)
    for k, c in enumerate(f):
        if c and k * l <= f.order:
            out[k * l] = c.frobenius(l)
    return TruncSeries(out, f.order, f.variables)


def _twist_sum(f, weight):
    lo = f.min_degree()
    total = TruncSeries.zero(f.order, f.variables)
    if lo is None:
        return total
    l = 1
    while l * lo <= f.order:
        w = weight(l)
        if w:
            total = total + frobenius(f, l) * w
        l += 1
    return total


def psi(f):
    """sum over l >= 1 of f(x^l, z^l) / l."""
    if f[0]:
        raise DomainError("psi needs a zero constant term")
    return _twist_sum(f, lambda l: Fraction(1, l))


def psi_inverse(h):
    """sum over l >= 1 of moebius(l) h(x^l, z^l) / l."""
    if h[0]:
        raise DomainError("psi_inverse needs a zero constant term")
    return _twist_sum(h, lambda l: Fraction(moebius(l), l))


def pexp(f):
    return series_exp(psi(f))


def plog(g):
    if g[0] != 1:
        raise DomainError("plog needs constant term 1")
    return psi_inverse(series_log(g))


def sym_power_e(e, m):
    """Coefficient of z^m in pexp(e * z): the E-polynomial of an m-th symmetric power."""
    if m < 0:
        raise DomainError("m must be non-negative")
    if m == 0:
        return ExactPoly.one(e.variables)
    return pexp(TruncSeries.monomial(e, 1, m))[m]
