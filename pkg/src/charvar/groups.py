"""Group selectors shared by the engines and the CLI."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError

FAMILIES = ("GL", "SL", "PGL", "Sp")


@dataclass(frozen=True)
class GroupSpec:
    """A classical group by family and size.

    For ``Sp`` the size is the rank: ``GroupSpec("Sp", n)`` has a Weyl group
    of order 2^n n! and an n-dimensional maximal torus (so ``Sp(1) = SL(2)``).
    """

    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown group family {self.family!r}")
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"group size must be a positive integer, got {self.n!r}")

    @classmethod
    def parse(cls, family, n):
        lookup = {f.lower(): f for f in FAMILIES}
        try:
            return cls(lookup[family.lower()], n)
        except KeyError:
            raise DomainError(f"unknown group family {family!r}") from None

    @property
    def torus_dim(self):
        return self.n - 1 if self.family in ("SL", "PGL") else self.n

    def __str__(self):
        return f"{self.family}({self.n})"
