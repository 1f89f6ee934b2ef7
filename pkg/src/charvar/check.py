"""Oracle suites: closed forms against brute force and structural identities.

Each suite is a generator of :class:`CheckResult`; a failing result carries
a JSON-serializable counterexample.  ``max_n`` lowers the size caps of
every suite at once.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass, field

from .abelmhp import Q, mhp_generic, mhp_gl, mhp_sl, mhp_sp, specialize
from .combinat import (bipartitions, hyperoct_class_size, partitions, sn_class_size)
from .errors import CharVarError
from .freegrp import X, b_polys, c_polys, e_sl_pgl, e_stratum_gl, e_total_gl
from .plethys import TruncSeries, pexp, plog, series_mul
from .polycore import ExactPoly, exact_div
from .weylact import charfactor_from_cycles, cycle_type, det_oracle, enumerate_weyl, weyl_order

SUITES = ("weyl", "abel", "pleth", "free")


@dataclass
class CheckResult:
    name: str
    passed: bool
    seconds: float = 0.0
    counterexample: dict = field(default_factory=dict)

    def to_json_obj(self):
        # no timings: identical invocations must print identical bytes
        out = {"name": self.name, "passed": self.passed}
        if not self.passed:
            out["counterexample"] = self.counterexample
        return out


class _Fail(Exception):
    def __init__(self, **info):
        super().__init__(info)
        self.info = info


def _expect(ok, **info):
    if not ok:
        raise _Fail(**info)


def _run(name, fn):
    start = time.perf_counter()
    try:
        fn()
    except _Fail as exc:
        return CheckResult(name, False, time.perf_counter() - start, exc.info)
    except CharVarError as exc:
        return CheckResult(name, False, time.perf_counter() - start,
                           {"error": type(exc).__name__, "message": str(exc)})
    return CheckResult(name, True, time.perf_counter() - start)


def _cap(limit, max_n):
    return limit if max_n is None else min(limit, max_n)


# -- weyl ------------------------------------------------------------------

def _weyl_factors(family, n_max):
    def run():
        for n in range(1, n_max + 1):
            for g in enumerate_weyl(family, n):
                ct = cycle_type(g)
                for r in (1, 2, 3):
                    lhs = charfactor_from_cycles(ct, r)
                    rhs = det_oracle(g, r)
                    _expect(lhs == rhs, family=family, n=n, r=r, image=list(g.image),
                            signs=list(g.signs), from_cycles=str(lhs), determinant=str(rhs))
    return run


def _weyl_classes(family, n_max):
    def run():
        for n in range(1, n_max + 1):
            counts = Counter(cycle_type(g) for g in enumerate_weyl(family, n))
            _expect(sum(counts.values()) == weyl_order(family, n), family=family, n=n,
                    enumerated=sum(counts.values()), order=weyl_order(family, n))
            if family == "A":
                expected = {p: sn_class_size(p) for p in partitions(n)}
                found = {ct.positive: c for ct, c in counts.items()}
            else:
                expected = {(bp.a, bp.b): hyperoct_class_size(bp) for bp in bipartitions(n)}
                found = {(ct.positive, ct.negative): c for ct, c in counts.items()}
            _expect(len(found) == len(expected), family=family, n=n,
                    classes_found=len(found), classes_expected=len(expected))
            for key, size in expected.items():
                _expect(found.get(key) == size, family=family, n=n, cls=str(key),
                        enumerated=found.get(key), formula=size)
            _expect(sum(expected.values()) == weyl_order(family, n), family=family, n=n,
                    class_equation=sum(expected.values()))
    return run


def weyl_suite(max_n=None):
    yield _run("weyl.A.charfactor_vs_det", _weyl_factors("A", _cap(5, max_n)))
    yield _run("weyl.C.charfactor_vs_det", _weyl_factors("C", _cap(4, max_n)))
    yield _run("weyl.A.class_sizes", _weyl_classes("A", _cap(6, max_n)))
    yield _run("weyl.C.class_sizes", _weyl_classes("C", _cap(4, max_n)))


# -- abel ------------------------------------------------------------------

def abel_suite(max_n=None):
    def gl_oracle():
        for n in range(1, _cap(5, max_n) + 1):
            for r in range(1, 5):
                a, b = mhp_gl(n, r).poly_q, mhp_generic("A", n, r).poly_q
                _expect(a == b, n=n, r=r, closed_form=str(a), weyl_average=str(b))

    def sp_oracle():
        for n in range(1, _cap(4, max_n) + 1):
            for r in range(1, 4):
                a, b = mhp_sp(n, r).poly_q, mhp_generic("C", n, r).poly_q
                _expect(a == b, n=n, r=r, closed_form=str(a), weyl_average=str(b))

    def gl_sl_factor():
        for n in range(1, _cap(6, max_n) + 1):
            for r in range(1, 5):
                gl, sl = mhp_gl(n, r).poly_q, mhp_sl(n, r).poly_q
                _expect(gl == sl * (1 + Q) ** r, n=n, r=r, gl=str(gl), sl=str(sl))
                _expect(sl.is_integral() and sl.is_nonnegative(), n=n, r=r, sl=str(sl))

    def sp1_sl2():
        for r in range(1, 7):
            expected = ((1 + Q) ** r + (1 - Q) ** r) / 2
            sp, sl = mhp_sp(1, r).poly_q, mhp_sl(2, r).poly_q
            _expect(sp == sl == expected, r=r, sp1=str(sp), sl2=str(sl), expected=str(expected))

    def specializations():
        for n in range(1, _cap(4, max_n) + 1):
            for r in range(1, 4):
                for m in (mhp_gl(n, r), mhp_sl(n, r), mhp_sp(n, r)):
                    at_point = m.poly_tuv.substitute({"t": -1, "u": 1, "v": 1}, ())
                    via_e = specialize(m, "e_poly").eval_at_one("x")
                    _expect(at_point == via_e, group=str(m.group), r=r,
                            mu_at_point=str(at_point), e_at_one=str(via_e))
                euler = specialize(mhp_gl(n, r), "euler")
                _expect(euler == 0, n=n, r=r, euler=str(euler))

    yield _run("abel.gl_vs_weyl_average", gl_oracle)
    yield _run("abel.sp_vs_weyl_average", sp_oracle)
    yield _run("abel.gl_equals_sl_times_torus", gl_sl_factor)
    yield _run("abel.sp1_equals_sl2", sp1_sl2)
    yield _run("abel.specializations", specializations)


# -- pleth -----------------------------------------------------------------

def random_poly(rng, variables, max_deg=4, max_terms=4, max_coef=5):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exp = tuple(rng.randint(0, max_deg) for _ in variables)
        while sum(exp) > max_deg:
            exp = tuple(e // 2 for e in exp)
        terms[exp] = rng.randint(-max_coef, max_coef)
    return ExactPoly(variables, terms)


def random_series(rng, order, variables):
    """Random series with zero constant term."""
    return TruncSeries([0] + [random_poly(rng, variables) for _ in range(order)], order, variables)


_VARSETS = (("x",), ("u", "v"), ("t", "u", "v"))


def pleth_suite(max_n=None, trials=100, seed=20240611):
    rng = random.Random(seed)
    max_order = _cap(8, max_n)
    cases = []
    for _ in range(trials):
        vs = rng.choice(_VARSETS)
        order = rng.randint(1, max_order)
        cases.append((random_series(rng, order, vs), random_series(rng, order, vs)))

    def round_trip():
        for f, _ in cases:
            g = pexp(f)
            _expect(g[0] == 1, series=f.to_json_obj(), constant=str(g[0]))
            back = plog(g)
            _expect(back == f, series=f.to_json_obj(), plog_pexp=back.to_json_obj())
            _expect(pexp(back) == g, series=f.to_json_obj())

    def additivity():
        for f, g in cases:
            lhs, rhs = pexp(f + g), series_mul(pexp(f), pexp(g))
            _expect(lhs == rhs, f=f.to_json_obj(), g=g.to_json_obj())

    def first_order():
        for f, _ in cases:
            _expect(pexp(f)[1] == f[1], series=f.to_json_obj())

    yield _run("pleth.plog_pexp_round_trip", round_trip)
    yield _run("pleth.pexp_additive_to_multiplicative", additivity)
    yield _run("pleth.first_order_law", first_order)


# -- free ------------------------------------------------------------------

def free_suite(max_n=None):
    def b_identity():
        order = _cap(8, max_n)
        for r in (2, 3, 4):
            b = TruncSeries([1] + b_polys(r, order), order, ("x",))
            c = TruncSeries([1] + c_polys(r, order), order, ("x",))
            prod = series_mul(b, c)
            _expect(prod == TruncSeries.one(order, ("x",)), r=r,
                    product=prod.to_json_obj())

    def strata_sum():
        for n in range(1, _cap(4, max_n) + 1):
            for r in range(1, 4):
                total = e_total_gl(n, r).value
                strata = sum((e_stratum_gl(n, r, k).value for k in partitions(n)),
                             ExactPoly.zero(("x",)))
                _expect(strata == total, n=n, r=r, strata_sum=str(strata), total=str(total))

    def divisibility():
        for n in range(1, _cap(5, max_n) + 1):
            for r in range(1, 5):
                total = e_total_gl(n, r).value
                try:
                    exact_div(total, (X - 1) ** r)
                except ArithmeticError:
                    raise _Fail(n=n, r=r, total=str(total)) from None
                _expect(total.eval_at_one("x") == 0, n=n, r=r, euler=str(total.eval_at_one("x")))
                for k in partitions(n):
                    e_sl_pgl(n, r, k)

    def sl2_gate():
        value = e_sl_pgl(2, 2).value
        _expect(value == X ** 3, sl2_r2=str(value), expected="x^3")

    yield _run("free.b_defining_identity", b_identity)
    yield _run("free.strata_sum_to_total", strata_sum)
    yield _run("free.torus_divisibility", divisibility)
    yield _run("free.sl2_free2_is_affine_3_space", sl2_gate)


_SUITE_FNS = {"weyl": weyl_suite, "abel": abel_suite, "pleth": pleth_suite, "free": free_suite}


def run_suites(suite="all", max_n=None):
    names = SUITES if suite == "all" else (suite,)
    results = []
    for name in names:
        results.extend(_SUITE_FNS[name](max_n=max_n))
    return results
