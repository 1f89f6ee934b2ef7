"""Mixed Hodge polynomials of free-abelian character varieties.

For G = GL_n, SL_n or Sp_n the character variety of Z^r is the quotient
of r copies of the maximal torus by the Weyl group, and its mixed Hodge
polynomial is the Weyl average of ``det(I + tuv A_g)^r``.  All of it is of
balanced type, so everything is computed in the single variable
``q = t*u*v`` and expanded back to (t, u, v) only for presentation.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinat import Partition, bipartitions, hyperoct_class_size, partitions, sn_centralizer
from .errors import ConsistencyError, DomainError
from .groups import GroupSpec
from .polycore import ExactPoly, exact_div
from .weylact import (CycleType, charfactor_from_cycles, cycle_type, det_oracle,
                      enumerate_weyl, weyl_order)

Q = ExactPoly.var("q")
_TUV = ("t", "u", "v")
_EMPTY = Partition(0, ())


@dataclass(frozen=True)
class MhpResult:
    poly_q: ExactPoly
    group: GroupSpec
    r: int

    @property
    def poly_tuv(self):
        t, u, v = (ExactPoly.var(s, _TUV) for s in _TUV)
        return self.poly_q.substitute({"q": t * u * v}, _TUV)

    def specialize(self, target):
        return specialize(self, target)


def _certify(poly, group, r):
    if not poly.is_integral():
        raise ConsistencyError(f"{group}, r={r}: non-integral coefficients in {poly}")
    if not poly.is_nonnegative():
        raise ConsistencyError(f"{group}, r={r}: negative coefficient in {poly}")
    if poly.constant_term() != 1:
        raise ConsistencyError(f"{group}, r={r}: constant term is not 1 in {poly}")
    # top coefficient is the Weyl average of det(A_g)^r: exactly 1 for even r
    top = r * group.torus_dim
    if poly.degree() > top or (r % 2 == 0 and poly.degree() != top):
        raise ConsistencyError(
            f"{group}, r={r}: degree {poly.degree()} incompatible with r * dim T = {top}")
    return MhpResult(poly, group, r)


def _check_args(n, r):
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if not isinstance(r, int) or r < 0:
        raise DomainError(f"r must be a non-negative integer, got {r!r}")


def mhp_generic(family, n, r):
    """Brute-force Weyl average over every element of W(A_{n-1}) or W(C_n).

    Elements are enumerated and bucketed by signed cycle type; class sizes
    are the bucket counts and the determinant of each class comes from the
    literal signed permutation matrix of a representative.
    """
    _check_args(n, r)
    counts = Counter()
    reps = {}
    for g in enumerate_weyl(family, n):
        ct = cycle_type(g)
        counts[ct] += 1
        reps.setdefault(ct, g)
    order = sum(counts.values())
    if order != weyl_order(family, n):
        raise ConsistencyError(f"enumerated {order} elements, expected {weyl_order(family, n)}")
    total = ExactPoly.zero(("q",))
    for ct in sorted(counts, key=str):
        total = total + counts[ct] * det_oracle(reps[ct], 1) ** r
    group = GroupSpec("GL" if family == "A" else "Sp", n)
    return _certify(total * Fraction(1, order), group, r)


@lru_cache(maxsize=None)
def _gl_q(n, r):
    total = ExactPoly.zero(("q",))
    for k in partitions(n):
        ct = CycleType(k, _EMPTY)
        total = total + charfactor_from_cycles(ct, r) * Fraction(1, sn_centralizer(k))
    return total


def mhp_gl(n, r):
    """Partition sum over cycle types of S_n, weighted by 1 / (prod_j k_j! j^k_j)."""
    _check_args(n, r)
    return _certify(_gl_q(n, r), GroupSpec("GL", n), r)


def mhp_sl(n, r):
    """The GL_n polynomial with the central torus factor (1 + q)^r divided out."""
    _check_args(n, r)
    try:
        poly = exact_div(_gl_q(n, r), (1 + Q) ** r)
    except ArithmeticError as exc:
        raise ConsistencyError(f"(1+q)^{r} does not divide mhp_gl({n}, {r})") from exc
    return _certify(poly, GroupSpec("SL", n), r)


def mhp_sp(n, r):
    """Bipartition sum over signed cycle types of the hyperoctahedral group."""
    _check_args(n, r)
    total = ExactPoly.zero(("q",))
    for bp in bipartitions(n):
        ct = CycleType(bp.a, bp.b)
        total = total + hyperoct_class_size(bp) * charfactor_from_cycles(ct, r)
    return _certify(total * Fraction(1, weyl_order("C", n)), GroupSpec("Sp", n), r)


def mhp(group, r):
    """Dispatch on a :class:`GroupSpec`; PGL has no free-abelian engine here."""
    if group.family == "GL":
        return mhp_gl(group.n, r)
    if group.family == "SL":
        return mhp_sl(group.n, r)
    if group.family == "Sp":
        return mhp_sp(group.n, r)
    raise DomainError(f"no mixed Hodge polynomial engine for {group}")


SPECIALIZATIONS = ("poincare", "e_poly", "euler")


def specialize(m, target):
    """Poincare polynomial in t, E-polynomial in x = uv, or the Euler characteristic.

    ``euler`` returns a constant polynomial over no variables.
    """
    if target == "poincare":
        return m.poly_q.substitute({"q": ExactPoly.var("t")})
    if target == "e_poly":
        return m.poly_q.substitute({"q": -ExactPoly.var("x")})
    if target == "euler":
        return m.poly_q.substitute({"q": -1}, ())
    raise DomainError(f"unknown specialization {target!r}; expected one of {SPECIALIZATIONS}")
