from collections import Counter

import pytest

from charvar.combinat import Partition, bipartitions, hyperoct_class_size, partitions, sn_class_size
from charvar.errors import CapacityError
from charvar.polycore import ExactPoly
from charvar.weylact import (ENUM_CAP, CycleType, SignedPerm, charfactor_from_cycles, cycle_type,
                             det_oracle, enumerate_weyl, weyl_order)

q = ExactPoly.var("q")
E = Partition(0, ())


def P(*parts):
    return Partition.from_parts(list(parts))


def test_enumeration_sizes():
    assert len(list(enumerate_weyl("A", 3))) == 6
    assert len(list(enumerate_weyl("C", 2))) == 8
    assert len(list(enumerate_weyl("C", 1))) == 2
    for family in "AC":
        for n in range(1, 5):
            elems = list(enumerate_weyl(family, n))
            assert len(elems) == len(set(elems)) == weyl_order(family, n)


def test_enumeration_cap():
    assert ENUM_CAP["A"] >= 5 and ENUM_CAP["C"] >= 4
    with pytest.raises(CapacityError):
        next(enumerate_weyl("C", ENUM_CAP["C"] + 1))


@pytest.mark.parametrize("family,n", [("A", 3), ("C", 2), ("C", 3)])
def test_group_axioms(family, n):
    elems = set(enumerate_weyl(family, n))
    ident = SignedPerm.identity(n)
    for g in elems:
        assert g * ident == g == ident * g
        assert g * g.inverse() == ident
        for h in list(elems)[:8]:
            assert g * h in elems
    # composition agrees with matrix multiplication
    for g in list(elems)[:10]:
        for h in list(elems)[:10]:
            mg, mh, mgh = g.matrix(), h.matrix(), (g * h).matrix()
            prod = [[sum(mg[i][k] * mh[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
            assert prod == mgh


def test_cycle_type_examples():
    assert cycle_type(SignedPerm.identity(4)) == CycleType(P(1, 1, 1, 1), E)
    assert cycle_type(SignedPerm.from_perm((1, 0))) == CycleType(P(2), E)
    assert cycle_type(SignedPerm((0,), (-1,))) == CycleType(E, P(1))
    # a 2-cycle with one flipped sign is negative, with two flipped it is positive
    assert cycle_type(SignedPerm((1, 0), (-1, 1))) == CycleType(E, P(2))
    assert cycle_type(SignedPerm((1, 0), (-1, -1))) == CycleType(P(2), E)


def test_charfactor_examples():
    assert charfactor_from_cycles(CycleType(P(1, 1), E), 1) == (1 + q) ** 2
    assert charfactor_from_cycles(CycleType(P(2), E), 1) == 1 - q ** 2
    assert charfactor_from_cycles(CycleType(E, P(1)), 1) == 1 - q


def test_det_oracle_examples():
    assert det_oracle(SignedPerm.identity(2), 1) == (1 + q) ** 2
    assert det_oracle(SignedPerm.from_perm((1, 0)), 1) == 1 - q ** 2
    assert det_oracle(SignedPerm((0,), (-1,)), 2) == (1 - q) ** 2
    # 3-cycle: det(I + qC) = 1 + q^3
    assert det_oracle(SignedPerm.from_perm((1, 2, 0)), 1) == 1 + q ** 3


def test_det_oracle_beyond_enumeration():
    # an 8-cycle with an odd number of sign flips
    g = SignedPerm(tuple((i + 1) % 8 for i in range(8)), (-1,) + (1,) * 7)
    assert det_oracle(g, 1) == 1 + q ** 8
    assert charfactor_from_cycles(cycle_type(g), 1) == 1 + q ** 8


@pytest.mark.parametrize("family,n_max", [("A", 5), ("C", 4)])
def test_charfactor_equals_determinant_elementwise(family, n_max):
    for n in range(1, n_max + 1):
        for g in enumerate_weyl(family, n):
            ct = cycle_type(g)
            for r in (1, 2, 3):
                assert charfactor_from_cycles(ct, r) == det_oracle(g, r), (g, r)


@pytest.mark.parametrize("n", range(1, 5))
def test_conjugation_preserves_cycle_type(n):
    elems = list(enumerate_weyl("C", n))
    for g in elems[:: max(1, len(elems) // 12)]:
        for h in elems[:: max(1, len(elems) // 12)]:
            assert cycle_type(h * g * h.inverse()) == cycle_type(g)


@pytest.mark.parametrize("n", range(1, 5))
def test_class_counts_and_sizes_against_enumeration(n):
    c_counts = Counter(cycle_type(g) for g in enumerate_weyl("C", n))
    assert len(c_counts) == len(bipartitions(n))
    for bp in bipartitions(n):
        assert c_counts[CycleType(bp.a, bp.b)] == hyperoct_class_size(bp)
    a_counts = Counter(cycle_type(g) for g in enumerate_weyl("A", n))
    for p in partitions(n):
        assert a_counts[CycleType(p, E)] == sn_class_size(p)
