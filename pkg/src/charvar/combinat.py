"""Partitions, bipartitions and the number theory used by the closed forms.

A partition of ``n`` is stored in exponent notation: ``mult[j-1]`` is the
number of parts equal to ``j``.  So ``[1^2 2^1]`` (that is 2+1+1) of 4 is
``Partition(4, (2, 1, 0, 0))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .errors import DomainError


@dataclass(frozen=True, order=True)
class Partition:
    n: int
    mult: tuple

    def __post_init__(self):
        object.__setattr__(self, "mult", tuple(self.mult))
        if len(self.mult) != self.n:
            raise DomainError(f"multiplicity vector must have length {self.n}")
        if any(k < 0 for k in self.mult):
            raise DomainError("negative multiplicity")
        if sum((j + 1) * k for j, k in enumerate(self.mult)) != self.n:
            raise DomainError(f"{self.mult} does not partition {self.n}")

    @classmethod
    def from_parts(cls, parts):
        """Build from a list of part sizes, e.g. ``[2, 1, 1]``."""
        n = sum(parts)
        mult = [0] * n
        for p in parts:
            if p < 1:
                raise DomainError(f"parts must be positive, got {p}")
            mult[p - 1] += 1
        return cls(n, tuple(mult))

    @classmethod
    def from_mults(cls, mults):
        """Build from a mapping ``{j: k_j}``."""
        n = sum(j * k for j, k in mults.items())
        mult = [0] * n
        for j, k in mults.items():
            if j < 1:
                raise DomainError(f"part sizes must be positive, got {j}")
            if k:
                mult[j - 1] = k
        return cls(n, tuple(mult))

    def k(self, j):
        """Number of parts of size ``j``."""
        return self.mult[j - 1] if 1 <= j <= self.n else 0

    def items(self):
        """``(j, k_j)`` pairs with ``k_j > 0``, increasing in ``j``."""
        return [(j + 1, k) for j, k in enumerate(self.mult) if k]

    @property
    def length(self):
        return sum(self.mult)

    def parts(self):
        """Part sizes in decreasing order."""
        out = []
        for j, k in reversed(self.items()):
            out.extend([j] * k)
        return out

    def __str__(self):
        if not self.n:
            return "[]"
        return "[" + " ".join(f"{j}^{k}" for j, k in self.items()) + "]"


@dataclass(frozen=True, order=True)
class Bipartition:
    a: Partition
    b: Partition

    @property
    def n(self):
        return self.a.n + self.b.n

    def __str__(self):
        return f"({self.a}, {self.b})"


def _parts_desc(n, largest):
    if n == 0:
        yield []
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _parts_desc(n - first, first):
            yield [first] + rest


@lru_cache(maxsize=None)
def _partitions(n):
    out = [Partition.from_parts(p) if p else Partition(0, ()) for p in _parts_desc(n, n)]
    # reverse-lexicographic on multiplicity vectors, read from the largest part down
    out.sort(key=lambda p: tuple(reversed(p.mult)), reverse=True)
    return tuple(out)


def partitions(n):
    """All partitions of ``n``.

    Ordered reverse-lexicographically on the multiplicity vector read from
    the largest part size downwards, so ``[n^1]`` comes first and ``[1^n]``
    last.  ``partitions(0)`` is the single empty partition.

        >>> [str(p) for p in partitions(3)]
        ['[3^1]', '[1^1 2^1]', '[1^3]']
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    return list(_partitions(n))


def bipartitions(n):
    """All ordered pairs ``(a, b)`` of partitions with ``|a| + |b| = n``."""
    if n < 0:
        raise DomainError("n must be non-negative")
    return [Bipartition(a, b)
            for k in range(n, -1, -1)
            for a in _partitions(k)
            for b in _partitions(n - k)]


def moebius(n):
    if n < 1:
        raise DomainError("moebius needs n >= 1")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def divisors(n):
    if n < 1:
        raise DomainError("divisors needs n >= 1")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def multinomial(total, parts):
    if any(p < 0 for p in parts) or sum(parts) != total:
        raise DomainError(f"parts {parts} do not sum to {total}")
    out = factorial(total)
    for p in parts:
        out //= factorial(p)
    return out


def sn_centralizer(p):
    out = 1
    for j, k in p.items():
        out *= j ** k * factorial(k)
    return out


def sn_class_size(p):
    """Size of the conjugacy class of cycle type ``p`` in the symmetric group."""
    return factorial(p.n) // sn_centralizer(p)


def hyperoct_class_size(bp):
    """Size of the signed-cycle-type class ``bp`` in the hyperoctahedral group.

    ``bp.a`` lists positive cycles and ``bp.b`` negative ones.  A signed
    j-cycle with multiplicity k has centralizer of order ``(2j)^k k!``.
    """
    n = bp.n
    cent = 1
    for part in (bp.a, bp.b):
        for j, k in part.items():
            cent *= (2 * j) ** k * factorial(k)
    return 2 ** n * factorial(n) // cent


_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text, n=None):
    """Parse ``"1^2 2^1"``-style syntax; a bare ``j`` means ``j^1``.

    Repeated sizes accumulate.  With ``n`` given, the total must match.
    """
    mults = {}
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise DomainError(f"bad partition token {tok!r}; expected j or j^k")
        j = int(m.group(1))
        k = int(m.group(2)) if m.group(2) is not None else 1
        if j < 1:
            raise DomainError(f"part size must be positive in {tok!r}")
        mults[j] = mults.get(j, 0) + k
    p = Partition.from_mults(mults)
    if n is not None and p.n != n:
        raise DomainError(f"partition {p} has total {p.n}, expected {n}")
    return p
