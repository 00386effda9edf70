"""Integer partitions: the index set of every sparse series in this package."""

from __future__ import annotations

from functools import lru_cache
from math import factorial


class Partition(tuple):
    """A partition as a weakly decreasing tuple of positive integers.

    Instances behave as plain tuples (hashing, equality, ordering), so they
    work directly as sparse-map keys.  Tuple comparison on the decreasing
    part vectors is the lexicographic order used throughout the package:
    among partitions of equal weight the all-ones partition is smallest and
    the one-part partition largest, e.g.

        (1,1,1,1) < (2,1,1) < (2,2) < (3,1) < (4)

    ``partitions_of`` enumerates in exactly this (ascending) order.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(parts)
        prev = None
        for p in parts:
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"parts must be positive integers: {parts!r}")
            if prev is not None and p > prev:
                raise ValueError(f"parts must be weakly decreasing: {parts!r}")
            prev = p
        return tuple.__new__(cls, parts)

    @property
    def weight(self) -> int:
        """Sum of the parts (the n in "partition of n")."""
        return sum(self)

    def multiplicities(self) -> dict[int, int]:
        """Map part value -> number of occurrences; round-trips with parts."""
        mult: dict[int, int] = {}
        for p in self:
            mult[p] = mult.get(p, 0) + 1
        return mult

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram; an involution."""
        if not self:
            return self
        cols = [0] * self[0]
        for p in self:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def __repr__(self) -> str:
        return f"Partition{tuple(self)!r}"


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n, ascending in the order documented on Partition.

    partitions_of(0) == [Partition(())].
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return [Partition(t) for t in _partition_tuples(n, n)]


@lru_cache(maxsize=None)
def _partition_tuples(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(1, min(n, max_part) + 1):
        out.extend((first,) + rest for rest in _partition_tuples(n - first, first))
    return tuple(out)


def z(lam) -> int:
    """Centralizer size of the conjugacy class with cycle type lam.

    For lam with multiplicities r_1, r_2, ... this is the product of
    i**r_i * r_i! over the distinct part values i.  Exact arbitrary
    precision; z(()) == 1.
    """
    result = 1
    prev = None
    count = 0
    for p in lam:
        if p == prev:
            count += 1
        else:
            if prev is not None:
                result *= prev ** count * factorial(count)
            prev, count = p, 1
    if prev is not None:
        result *= prev ** count * factorial(count)
    return result


def conjugate(lam) -> Partition:
    """Transpose of the Young diagram of lam."""
    return Partition(lam).conjugate()
