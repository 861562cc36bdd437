"""Subsets of a finite universe ``{0, ..., n-1}`` stored as membership masks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_POINTS = 16


class UniverseMismatch(ValueError):
    """Operands live in universes of different sizes."""


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in ascending order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def full_mask(n: int) -> int:
    return (1 << n) - 1


def order_key(mask: int) -> tuple[int, int]:
    """Canonical ordering of subsets: by cardinality, then by mask value."""
    return popcount(mask), mask


def roster(mask: int) -> str:
    return "{" + ",".join(str(i) for i in bits(mask)) + "}"


@dataclass(frozen=True, order=False)
class PointSet:
    """An immutable subset of an ``n``-point universe."""

    universe_size: int
    mask: int

    def __post_init__(self) -> None:
        if not 0 <= self.universe_size <= MAX_POINTS:
            raise ValueError(
                f"universe size must be in 0..{MAX_POINTS}, got {self.universe_size}"
            )
        if self.mask < 0 or self.mask >> self.universe_size:
            raise ValueError(
                f"mask {self.mask:#x} has members outside 0..{self.universe_size - 1}"
            )

    @classmethod
    def of(cls, n: int, members: Iterable[int] = ()) -> "PointSet":
        mask = 0
        for i in members:
            if not 0 <= i < n:
                raise ValueError(f"point {i} is not in 0..{n - 1}")
            mask |= 1 << i
        return cls(n, mask)

    @classmethod
    def empty(cls, n: int) -> "PointSet":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "PointSet":
        return cls(n, full_mask(n))

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __contains__(self, point: object) -> bool:
        return isinstance(point, int) and 0 <= point < self.universe_size and bool(
            self.mask >> point & 1
        )

    def _check(self, other: "PointSet") -> None:
        if not isinstance(other, PointSet):
            raise TypeError(f"expected PointSet, got {type(other).__name__}")
        if other.universe_size != self.universe_size:
            raise UniverseMismatch(
                f"universe sizes differ: {self.universe_size} vs {other.universe_size}"
            )

    def __or__(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.universe_size, self.mask | other.mask)

    def __and__(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.universe_size, self.mask & other.mask)

    def __sub__(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.universe_size, self.mask & ~other.mask)

    def __le__(self, other: "PointSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __ge__(self, other: "PointSet") -> bool:
        return other <= self

    def complement(self) -> "PointSet":
        return PointSet(self.universe_size, full_mask(self.universe_size) & ~self.mask)

    def isdisjoint(self, other: "PointSet") -> bool:
        self._check(other)
        return self.mask & other.mask == 0

    def sort_key(self) -> tuple[int, int]:
        return order_key(self.mask)

    def __str__(self) -> str:
        return roster(self.mask)

    def __repr__(self) -> str:
        return f"PointSet({self.universe_size}, {roster(self.mask)})"
