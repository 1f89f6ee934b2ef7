"""Weyl groups of types A and C as signed permutations.

Type A_{n-1} is the symmetric group S_n acting on C^n by permuting
coordinates.  Type C_n is the hyperoctahedral group of order 2^n n!: a
permutation together with a sign on each coordinate.  The element acts
by the signed permutation matrix ``M[image[i], i] = signs[i]``.

Two independent routes give ``det(I + q M_g)``: from the signed cycle
type (:func:`charfactor_from_cycles`) and from the matrix itself
(:func:`det_oracle`).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial

from .combinat import Partition
from .errors import CapacityError, DomainError
from .polycore import ExactPoly

# Brute-force enumeration caps: 7! = 5040 and 2^5 5! = 3840 elements.
ENUM_CAP = {"A": 7, "C": 5}
DET_CAP = 8

_Q = ExactPoly.var("q")


@dataclass(frozen=True)
class SignedPerm:
    """``i -> image[i]`` (0-based) with sign ``signs[i]`` attached to coordinate i."""

    image: tuple
    signs: tuple

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        object.__setattr__(self, "signs", tuple(self.signs))
        n = len(self.image)
        if sorted(self.image) != list(range(n)):
            raise DomainError(f"{self.image} is not a permutation of 0..{n - 1}")
        if len(self.signs) != n or any(s not in (1, -1) for s in self.signs):
            raise DomainError(f"bad sign vector {self.signs}")

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)), (1,) * n)

    @classmethod
    def from_perm(cls, image):
        return cls(tuple(image), (1,) * len(image))

    @property
    def n(self):
        return len(self.image)

    def __mul__(self, other):
        """Composition ``self . other`` (apply ``other`` first), as matrices M_self M_other."""
        if self.n != other.n:
            raise DomainError("cannot compose signed permutations of different sizes")
        image = tuple(self.image[other.image[i]] for i in range(self.n))
        signs = tuple(self.signs[other.image[i]] * other.signs[i] for i in range(self.n))
        return SignedPerm(image, signs)

    def inverse(self):
        image = [0] * self.n
        signs = [1] * self.n
        for i, (j, s) in enumerate(zip(self.image, self.signs)):
            image[j] = i
            signs[j] = s
        return SignedPerm(tuple(image), tuple(signs))

    def matrix(self):
        m = [[0] * self.n for _ in range(self.n)]
        for i, (j, s) in enumerate(zip(self.image, self.signs)):
            m[j][i] = s
        return m


@dataclass(frozen=True)
class CycleType:
    positive: Partition
    negative: Partition

    @property
    def n(self):
        return self.positive.n + self.negative.n

    def __str__(self):
        return f"({self.positive}, {self.negative})"


def _check_family(family):
    if family not in ENUM_CAP:
        raise DomainError(f"unsupported Weyl family {family!r}; expected 'A' or 'C'")


def weyl_order(family, n):
    _check_family(family)
    return factorial(n) if family == "A" else 2 ** n * factorial(n)


def enumerate_weyl(family, n):
    """Yield every element of W(A_{n-1}) = S_n or W(C_n), each exactly once."""
    _check_family(family)
    if n < 1:
        raise DomainError("rank must be positive")
    if n > ENUM_CAP[family]:
        raise CapacityError(
            f"enumerating W({family}, n={n}) exceeds the cap n <= {ENUM_CAP[family]}; "
            "use the class-indexed closed forms instead")
    sign_choices = [(1,) * n] if family == "A" else list(product((1, -1), repeat=n))
    for image in permutations(range(n)):
        for signs in sign_choices:
            yield SignedPerm(image, signs)


def cycle_type(g):
    """Signed cycle type; a cycle is negative iff the product of its signs is -1."""
    seen = [False] * g.n
    pos, neg = [], []
    for start in range(g.n):
        if seen[start]:
            continue
        length, sign, i = 0, 1, start
        while not seen[i]:
            seen[i] = True
            sign *= g.signs[i]
            i = g.image[i]
            length += 1
        (pos if sign == 1 else neg).append(length)
    return CycleType(Partition.from_parts(pos), Partition.from_parts(neg))


@lru_cache(maxsize=None)
def _cycle_factor(j, sign):
    # det(I + q C) for a j-cycle C whose sign product is `sign`: 1 - sign * (-q)^j
    return 1 - sign * (-_Q) ** j


def charfactor_from_cycles(ct, r):
    """``det(I + q A_g)^r`` read off the signed cycle type."""
    if r < 0:
        raise DomainError("r must be non-negative")
    out = ExactPoly.one(("q",))
    for j, k in ct.positive.items():
        out = out * _cycle_factor(j, 1) ** (k * r)
    for j, k in ct.negative.items():
        out = out * _cycle_factor(j, -1) ** (k * r)
    return out


def det_oracle(g, r):
    """``det(I + q M_g)^r`` by cofactor expansion of the literal matrix.

    Expansion runs along rows with a memo on the set of columns still in
    play, skipping zero entries, so the cost is at most 2^n n products.
    """
    n = g.n
    if n > DET_CAP:
        raise CapacityError(f"det_oracle is capped at n <= {DET_CAP}")
    m = g.matrix()
    one = ExactPoly.one(("q",))
    entries = [[(1 if i == j else 0) + m[i][j] * _Q if (i == j or m[i][j]) else None
                for j in range(n)] for i in range(n)]

    memo = {}

    def minor(row, cols):
        if row == n:
            return one
        key = cols
        if key in memo:
            return memo[key]
        total = ExactPoly.zero(("q",))
        free = [c for c in range(n) if cols >> c & 1]
        for pos, c in enumerate(free):
            e = entries[row][c]
            if e is None or e.is_zero():
                continue
            sub = minor(row + 1, cols & ~(1 << c))
            term = e * sub
            total = total - term if pos % 2 else total + term
        memo[key] = total
        return total

    return minor(0, (1 << n) - 1) ** r
