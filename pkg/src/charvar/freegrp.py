"""E-polynomials of GL_n, SL_n and PGL_n character varieties of free groups.

Everything is a polynomial in ``x = uv``.  The irreducible locus comes
from a Moebius-inverted partition sum over the auxiliary polynomials
``b_n``; totals and partition-type strata are assembled from the
irreducible loci through the plethystic exponential.  SL_n and PGL_n
values are the GL_n ones with ``(x - 1)^r`` divided out.

Results are memoized per ``(n, r)`` with :func:`functools.lru_cache`,
which is safe for concurrent readers; values are immutable, so a repeated
computation in a race yields an equal object.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .combinat import Partition, divisors, moebius, multinomial, partitions
from .errors import ConsistencyError, DivisibilityError, DomainError
from .groups import GroupSpec
from .plethys import TruncSeries, pexp, sym_power_e
from .polycore import ExactPoly, exact_div

X = ExactPoly.var("x")
_XV = ("x",)

KINDS = ("irreducible", "total", "stratum")


@dataclass(frozen=True)
class EPolyReport:
    group: GroupSpec
    r: int
    kind: str
    value: ExactPoly
    stratum: Partition | None = None

    @property
    def n(self):
        return self.group.n


def _check(n, r):
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if not isinstance(r, int) or r < 1:
        raise DomainError(f"r must be a positive integer, got {r!r}")


def _integral(p, what):
    if not p.is_integral():
        raise ConsistencyError(f"{what} has non-integral coefficients: {p}")
    return p


@lru_cache(maxsize=None)
def _c_poly(r, n):
    prod = ExactPoly.one(_XV)
    for i in range(1, n + 1):
        prod = prod * (X ** i - 1)
    return prod ** (r - 1)


@lru_cache(maxsize=None)
def _b_table(r, n_max):
    b = [ExactPoly.one(_XV)]
    for n in range(1, n_max + 1):
        acc = -_c_poly(r, n)
        for m in range(1, n):
            acc = acc - b[m] * _c_poly(r, n - m)
        b.append(acc)
    return tuple(b)


def c_polys(r, n_max):
    """``((x-1)(x^2-1)...(x^n-1))^(r-1)`` for n = 1..n_max."""
    return [_c_poly(r, n) for n in range(1, n_max + 1)]


def b_polys(r, n_max):
    """b_1 .. b_{n_max}, the coefficients of the inverse of 1 + sum c_n t^n."""
    if r < 1:
        raise DomainError("r must be positive")
    return list(_b_table(r, n_max)[1:])


def _b(r, j, n_max):
    return _b_table(r, n_max)[j]


@lru_cache(maxsize=None)
def _e_irr(n, r):
    if n == 1:
        # GL_1 representations of F_r form (C*)^r, all irreducible
        return (X - 1) ** r
    outer = ExactPoly.zero(_XV)
    for d in divisors(n):
        e = n // d
        inner = ExactPoly.zero(_XV)
        for k in partitions(d):
            length = k.length
            weight = Fraction((-1) ** length, length) * multinomial(length, list(k.mult))
            term = ExactPoly.constant(weight, _XV)
            shift = 0
            for j, kj in k.items():
                num = n * (r - 1) * kj * comb(j, 2)
                if num % d:
                    raise ConsistencyError(f"fractional exponent {num}/{d} at n={n}, r={r}")
                shift += num // d
                term = term * _b(r, j, n).substitute({"x": X ** e}) ** kj
            inner = inner + term * X ** shift
        outer = outer + inner * Fraction(moebius(e), e)
    value = _integral((X - 1) * outer, f"E(X^irr GL_{n}), r={r}")
    if n >= 2 and r == 1 and value:
        raise ConsistencyError(f"F_1 is abelian but E(X^irr GL_{n}) = {value}")
    return value


def e_irr_gl(n, r):
    """E-polynomial of the irreducible locus of the GL_n character variety of F_r."""
    _check(n, r)
    return EPolyReport(GroupSpec("GL", n), r, "irreducible", _e_irr(n, r))


def irreducible_series(r, order):
    """``sum_{n=1}^{order} E(X^irr GL_n) t^n`` as a truncated series."""
    return TruncSeries([0] + [_e_irr(n, r) for n in range(1, order + 1)], order, _XV)


@lru_cache(maxsize=None)
def _total_series(r, order):
    return pexp(irreducible_series(r, order))


def total_series(r, order):
    """``sum_{n=0}^{order} E(X GL_n) t^n``, the plethystic exponential of the irreducibles."""
    return _total_series(r, order)


def e_total_gl(n, r):
    _check(n, r)
    value = _integral(_total_series(r, n)[n], f"E(X GL_{n}), r={r}")
    return EPolyReport(GroupSpec("GL", n), r, "total", value)


@lru_cache(maxsize=None)
def _stratum(n, r, k):
    value = ExactPoly.one(_XV)
    for j, kj in k.items():
        value = value * sym_power_e(_e_irr(j, r), kj)
    return _integral(value, f"E(X^{k} GL_{n}), r={r}")


def e_stratum_gl(n, r, k):
    """E-polynomial of the stratum of representations of partition type ``k``.

    Its points are unordered collections of k_j irreducible j-dimensional
    representations for each j, so the value is the product over j of the
    k_j-th symmetric powers of the irreducible loci.
    """
    _check(n, r)
    if k.n != n:
        raise DomainError(f"{k} is not a partition of {n}")
    return EPolyReport(GroupSpec("GL", n), r, "stratum", _stratum(n, r, k), k)


def _divide_torus(value, r, what):
    try:
        return exact_div(value, (X - 1) ** r)
    except DivisibilityError as exc:
        raise ConsistencyError(f"(x-1)^{r} does not divide {what}: {exc}") from exc


def e_sl_pgl(n, r, k=None, family="SL"):
    """E-polynomial shared by the SL_n and PGL_n character varieties (or a stratum)."""
    _check(n, r)
    if family not in ("SL", "PGL"):
        raise DomainError(f"family must be SL or PGL, got {family!r}")
    if k is None:
        gl = e_total_gl(n, r).value
        kind = "total"
    else:
        gl = e_stratum_gl(n, r, k).value
        kind = "stratum"
    value = _divide_torus(gl, r, f"E(X GL_{n}) at r={r}")
    return EPolyReport(GroupSpec(family, n), r, kind, value, k)


def e_irr_sl_pgl(n, r, family="SL"):
    """The irreducible locus, i.e. the stratum of type [n^1]."""
    report = e_sl_pgl(n, r, Partition.from_parts([n]), family)
    return EPolyReport(report.group, r, "irreducible", report.value)


def epoly(group, r, kind="total", k=None):
    """Dispatch on a :class:`GroupSpec`; Sp has no free-group engine here."""
    n = group.n
    if kind not in KINDS:
        raise DomainError(f"unknown kind {kind!r}")
    if kind == "stratum" and k is None:
        raise DomainError("stratum needs a partition")
    if group.family == "GL":
        if kind == "irreducible":
            return e_irr_gl(n, r)
        if kind == "total":
            return e_total_gl(n, r)
        return e_stratum_gl(n, r, k)
    if group.family in ("SL", "PGL"):
        if kind == "irreducible":
            return e_irr_sl_pgl(n, r, group.family)
        return e_sl_pgl(n, r, k if kind == "stratum" else None, group.family)
    raise DomainError(f"no free-group E-polynomial engine for {group}")
