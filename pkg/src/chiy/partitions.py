"""Integer partitions, used as indices of Chern monomials."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    ``Partition((2, 1, 1))`` indexes the Chern monomial ``c_2 c_1^2``. The
    empty partition has weight 0.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts!r}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts!r}")
        return super().__new__(cls, parts)

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "Partition":
        """Sort arbitrary positive indices into a partition."""
        return cls(sorted(indices, reverse=True))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > i) for i in range(self[0]))

    def multiplicities(self) -> Counter:
        return Counter(self)

    def orbit_size(self, nvars: int) -> int:
        """Number of distinct exponent vectors in ``m_lambda(x_1..x_nvars)``."""
        if len(self) > nvars:
            return 0
        mult = Counter(self)
        mult[0] = nvars - len(self)
        out = factorial(nvars)
        for m in mult.values():
            out //= factorial(m)
        return out

    def key(self) -> str:
        """Descriptor key, e.g. ``"2,1,1"``; the empty partition is ``""``."""
        return ",".join(str(p) for p in self)

    @classmethod
    def from_key(cls, key: str) -> "Partition":
        key = key.strip()
        if not key:
            return cls()
        try:
            parts = [int(tok) for tok in key.split(",")]
        except ValueError:
            raise ValueError(f"malformed partition key {key!r}") from None
        return cls(parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


def _generate(w: int, largest: int) -> Iterator[tuple[int, ...]]:
    if w == 0:
        yield ()
        return
    for first in range(min(w, largest), 0, -1):
        for rest in _generate(w - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions(w: int) -> tuple[Partition, ...]:
    """All partitions of ``w`` in reverse-lexicographic order.

    >>> [tuple(p) for p in partitions(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if w < 0:
        raise ValueError("weight must be nonnegative")
    return tuple(Partition(p) for p in _generate(w, w))


def partition_index(w: int) -> dict[Partition, int]:
    return {p: i for i, p in enumerate(partitions(w))}


def dominates(lam: Partition, mu: Partition) -> bool:
    """True when ``lam >= mu`` in dominance order (equal weights assumed)."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True
