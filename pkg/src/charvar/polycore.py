"""Exact sparse multivariate polynomials with rational coefficients.

An :class:`ExactPoly` lives over an ordered tuple of variable names taken
from the fixed alphabet ``t, u, v, x, q``.  Terms are kept in a dict that
maps exponent tuples to nonzero :class:`fractions.Fraction` coefficients,
so two polynomials over the same variables are equal exactly when their
term maps are equal.

Values are immutable; every operation returns a fresh polynomial.

    >>> q = ExactPoly.var("q")
    >>> (1 + q) * (1 - q)
    ExactPoly('1 - q^2')
    >>> ((1 + q) ** 3).coefficients()
    [1, 3, 3, 1]
"""

from __future__ import annotations

import json
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType

from .errors import DivisibilityError, DomainError, StructureError

ALPHABET = ("t", "u", "v", "x", "q")


def _check_variables(variables):
    variables = tuple(variables)
    for name in variables:
        if name not in ALPHABET:
            raise StructureError(f"unknown variable {name!r}; alphabet is {ALPHABET}")
    if len(set(variables)) != len(variables):
        raise StructureError(f"repeated variable in {variables}")
    return variables


def _canonical_order(names):
    return tuple(v for v in ALPHABET if v in names)


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


class ExactPoly:
    """Polynomial over a fixed ordered variable list with exact coefficients."""

    __slots__ = ("_vars", "_terms", "_hash")

    def __init__(self, variables=(), terms=None):
        self._vars = _check_variables(variables)
        nv = len(self._vars)
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nv:
                raise StructureError(
                    f"exponent {exp} has length {len(exp)}, expected {nv}")
            if any(e < 0 for e in exp):
                raise StructureError(f"negative exponent in {exp}")
            c = _as_fraction(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, variables, terms):
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p._vars = variables
        p._terms = terms
        p._hash = None
        return p

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, variables=()):
        return cls(variables)

    @classmethod
    def constant(cls, c, variables=()):
        variables = _check_variables(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def one(cls, variables=()):
        return cls.constant(1, variables)

    @classmethod
    def var(cls, name, variables=None):
        """The polynomial ``name`` over ``variables`` (default: just ``name``)."""
        variables = _check_variables(variables if variables is not None else (name,))
        if name not in variables:
            raise StructureError(f"{name!r} not among {variables}")
        exp = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exp: 1})

    @classmethod
    def from_coefficients(cls, coeffs, name):
        """Univariate polynomial ``sum(coeffs[i] * name**i)``."""
        return cls((name,), {(i,): c for i, c in enumerate(coeffs)})

    # -- basic accessors --------------------------------------------------

    @property
    def variables(self):
        return self._vars

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def coeff(self, exp):
        return self._terms.get(tuple(exp), Fraction(0))

    def constant_term(self):
        return self.coeff((0,) * len(self._vars))

    def is_constant(self):
        return all(not any(e) for e in self._terms)

    def degree(self, var=None):
        """Total degree, or the degree in ``var``.  The zero polynomial has degree -1."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(e) for e in self._terms)
        i = self._index(var)
        return max(e[i] for e in self._terms)

    def coefficients(self):
        """Dense coefficient list of a univariate polynomial, lowest degree first."""
        if len(self._vars) != 1:
            raise StructureError("coefficients() needs a univariate polynomial")
        out = [Fraction(0)] * (self.degree() + 1)
        for (e,), c in self._terms.items():
            out[e] = c
        return out

    def is_integral(self):
        return all(c.denominator == 1 for c in self._terms.values())

    def is_nonnegative(self):
        return all(c >= 0 for c in self._terms.values())

    def _index(self, var):
        try:
            return self._vars.index(var)
        except ValueError:
            raise StructureError(f"{var!r} not among {self._vars}") from None

    # -- ring operations --------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, ExactPoly):
            if other._vars != self._vars:
                raise StructureError(
                    f"variable lists differ: {self._vars} vs {other._vars}")
            return other
        if isinstance(other, (int, Rational)):
            return ExactPoly.constant(other, self._vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for e, c in other._terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return ExactPoly._raw(self._vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return ExactPoly._raw(self._vars, {e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, ExactPoly):
            other = Fraction(other)
            if not other:
                return ExactPoly._raw(self._vars, {})
            return ExactPoly._raw(self._vars, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return ExactPoly._raw(self._vars, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero scalar, or exact division by a polynomial."""
        if isinstance(other, ExactPoly):
            return exact_div(self, other)
        if isinstance(other, (int, Rational)):
            if not other:
                raise ZeroDivisionError("division of polynomial by zero")
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise DomainError(f"exponent must be a non-negative integer, got {e!r}")
        result = ExactPoly.one(self._vars)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, ExactPoly):
            return self._vars == other._vars and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == ExactPoly.constant(other, self._vars)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vars, frozenset(self._terms.items())))
        return self._hash

    # -- substitution -----------------------------------------------------

    def embed(self, variables):
        """Re-express over a variable list containing all current variables."""
        variables = _check_variables(variables)
        if variables == self._vars:
            return self
        pos = []
        for v in self._vars:
            if v not in variables:
                raise StructureError(f"cannot embed: {v!r} missing from {variables}")
            pos.append(variables.index(v))
        n = len(variables)
        terms = {}
        for e, c in self._terms.items():
            new = [0] * n
            for i, k in zip(pos, e):
                new[i] = k
            terms[tuple(new)] = c
        return ExactPoly._raw(variables, terms)

    def substitute(self, bindings, variables=None):
        """Simultaneously replace variables by polynomials.

        ``bindings`` maps variable names to :class:`ExactPoly` values or
        scalars.  Unbound variables are carried through.  The result lives
        over ``variables`` if given, otherwise over the union of the
        carried-through variables and those of the bound values, in
        alphabet order.
        """
        for name in bindings:
            if name not in self._vars:
                raise StructureError(f"cannot bind {name!r}: not among {self._vars}")
        if variables is None:
            names = {v for v in self._vars if v not in bindings}
            for val in bindings.values():
                if isinstance(val, ExactPoly):
                    names.update(val._vars)
            variables = _canonical_order(names)
        variables = _check_variables(variables)

        images = []
        for v in self._vars:
            if v in bindings:
                val = bindings[v]
                if isinstance(val, ExactPoly):
                    images.append(val.embed(variables))
                else:
                    images.append(ExactPoly.constant(val, variables))
            else:
                images.append(ExactPoly.var(v, variables))

        # cache powers of each image; polynomials here are small and sparse
        powers = [{0: ExactPoly.one(variables)} for _ in images]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = images[i] ** k
            return cache[k]

        result = ExactPoly.zero(variables)
        for e, c in self._terms.items():
            term = ExactPoly.constant(c, variables)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def eval_at_one(self, var):
        """Set ``var = 1`` and drop it from the variable list."""
        i = self._index(var)
        rest = self._vars[:i] + self._vars[i + 1:]
        terms = {}
        for e, c in self._terms.items():
            k = e[:i] + e[i + 1:]
            terms[k] = terms.get(k, 0) + c
        return ExactPoly._raw(rest, {e: c for e, c in terms.items() if c})

    def frobenius(self, l):
        """Replace every variable by its ``l``-th power."""
        if l < 1:
            raise DomainError("Frobenius twist needs l >= 1")
        if l == 1:
            return self
        return ExactPoly._raw(
            self._vars, {tuple(l * k for k in e): c for e, c in self._terms.items()})

    def to_scalar(self):
        """The value of a constant polynomial as a Fraction."""
        if not self.is_constant():
            raise DomainError(f"not a constant: {self}")
        return self.constant_term()

    # -- presentation -----------------------------------------------------

    def sorted_terms(self):
        """Terms in display order: ascending total degree, then variables in list order."""
        return sorted(self._terms.items(), key=lambda item: (sum(item[0]), [-k for k in item[0]]))

    def to_text(self):
        if not self._terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self._vars, e) if k)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append((c < 0, body))
        neg, body = pieces[0]
        out = ("-" if neg else "") + body
        for neg, body in pieces[1:]:
            out += (" - " if neg else " + ") + body
        return out

    __str__ = to_text

    def __repr__(self):
        return f"ExactPoly({self.to_text()!r})"

    def to_latex(self):
        if not self._terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = " ".join(
                v if k == 1 else f"{v}^{{{k}}}" for v, k in zip(self._vars, e) if k)
            mag = abs(c)
            if mag.denominator == 1:
                coef = str(mag.numerator)
            else:
                coef = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
            if not mono:
                body = coef
            elif mag == 1:
                body = mono
            else:
                body = f"{coef} {mono}"
            pieces.append((c < 0, body))
        neg, body = pieces[0]
        out = ("-" if neg else "") + body
        for neg, body in pieces[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def to_json_obj(self):
        return {
            "variables": list(self._vars),
            "terms": [{"exp": list(e), "coef": str(c)} for e, c in sorted(self._terms.items())],
        }

    @classmethod
    def from_json_obj(cls, obj):
        try:
            variables = obj["variables"]
            terms = {}
            for t in obj["terms"]:
                exp = tuple(t["exp"])
                if exp in terms:
                    raise StructureError(f"duplicate exponent {exp}")
                terms[exp] = Fraction(t["coef"])
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, StructureError):
                raise
            raise StructureError(f"malformed polynomial JSON: {exc}") from exc
        return cls(variables, terms)

    def to_json(self):
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text):
        return cls.from_json_obj(json.loads(text))


# -- functional aliases, mirroring the operator methods ---------------------

def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def pow(a, e):  # noqa: A001 - shadows builtin deliberately within the API
    return a ** e


def substitute(a, bindings, variables=None):
    return a.substitute(bindings, variables)


def eval_at_one(a, var):
    return a.eval_at_one(var)


def _leading(terms):
    return max(terms)


def exact_div(a, b):
    """Return ``c`` with ``a == b * c`` or raise :class:`DivisibilityError`.

    Runs multivariate division by the single divisor ``b`` under
    lexicographic order.  If ``b`` divides ``a`` the leading term of every
    intermediate remainder is divisible by that of ``b``, so the remainder
    computed here is zero exactly when ``b | a``.
    """
    if not isinstance(a, ExactPoly) or not isinstance(b, ExactPoly):
        raise TypeError("exact_div needs two ExactPoly operands")
    if a.variables != b.variables:
        raise StructureError(f"variable lists differ: {a.variables} vs {b.variables}")
    if b.is_zero():
        raise ZeroDivisionError("exact_div by the zero polynomial")
    lt_b = _leading(b._terms)
    lc_b = b._terms[lt_b]
    rest_b = [(e, c) for e, c in b._terms.items() if e != lt_b]

    work = dict(a._terms)
    quot = {}
    rem = {}
    while work:
        lt = _leading(work)
        c = work.pop(lt)
        shift = tuple(x - y for x, y in zip(lt, lt_b))
        if any(s < 0 for s in shift):
            rem[lt] = c
            continue
        f = c / lc_b
        quot[shift] = f
        for e, cb in rest_b:
            k = tuple(x + y for x, y in zip(e, shift))
            v = work.get(k, 0) - f * cb
            if v:
                work[k] = v
            else:
                work.pop(k, None)
    if rem:
        r = ExactPoly._raw(a.variables, rem)
        raise DivisibilityError(f"{b} does not divide {a}; remainder {r}", remainder=r)
    return ExactPoly._raw(a.variables, quot)
