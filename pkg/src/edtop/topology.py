"""Finite topologies, their specialization preorders, and interior/closure."""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

from .pointset import (
    MAX_POINTS,
    PointSet,
    UniverseMismatch,
    bits,
    full_mask,
    order_key,
    roster,
)

__all__ = [
    "TopologyError",
    "MissingEmptyOrFull",
    "NotClosedUnderUnion",
    "NotClosedUnderIntersection",
    "NotReflexive",
    "NotTransitive",
    "UniverseMismatch",
    "Topology",
    "build_from_opens",
    "build_from_preorder",
    "derive_preorder",
    "interior",
    "closure",
    "is_open",
    "is_closed",
    "open_sets",
    "closed_sets",
]


class TopologyError(ValueError):
    """Input does not describe a topology.

    ``problems`` lists every violation found, the raised one first.
    """

    def __init__(self, message: str, problems: Sequence["TopologyError"] = ()):
        super().__init__(message)
        self.problems: list[TopologyError] = list(problems) or [self]


class MissingEmptyOrFull(TopologyError):
    pass


class NotClosedUnderUnion(TopologyError):
    def __init__(self, left: int, right: int, n: int):
        super().__init__(
            f"{roster(left)} | {roster(right)} = {roster(left | right)} is not open"
        )
        self.pair = (PointSet(n, left), PointSet(n, right))


class NotClosedUnderIntersection(TopologyError):
    def __init__(self, left: int, right: int, n: int):
        super().__init__(
            f"{roster(left)} & {roster(right)} = {roster(left & right)} is not open"
        )
        self.pair = (PointSet(n, left), PointSet(n, right))


class NotReflexive(TopologyError):
    def __init__(self, point: int):
        super().__init__(f"preorder is not reflexive at point {point}")
        self.point = point


class NotTransitive(TopologyError):
    def __init__(self, x: int, y: int, z: int):
        super().__init__(
            f"preorder is not transitive: {x}->{y} and {y}->{z} but not {x}->{z}"
        )
        self.triple = (x, y, z)


def _raise_all(problems: list[TopologyError]) -> None:
    if not problems:
        return
    first = problems[0]
    if len(problems) > 1:
        first.args = ("; ".join(str(p) for p in problems),)
    first.problems = problems
    raise first


def _check_size(n: int) -> None:
    if not 0 <= n <= MAX_POINTS:
        raise ValueError(f"point count must be in 0..{MAX_POINTS}, got {n}")


def _closure_table(n: int, nbhd: Sequence[int]) -> list[int]:
    # closure distributes over finite unions, so one pass over masks suffices
    point_closure = [0] * n
    for x, nb in enumerate(nbhd):
        for y in bits(nb):
            point_closure[y] |= 1 << x
    table = [0] * (1 << n)
    for m in range(1, 1 << n):
        low = m & -m
        table[m] = table[m ^ low] | point_closure[low.bit_length() - 1]
    return table


class Topology:
    """A validated topology on the points ``0..n-1``.

    Construct through :func:`build_from_opens` or :func:`build_from_preorder`.
    ``opens`` is sorted by (cardinality, mask) without duplicates and
    ``min_nbhd[x]`` is the smallest open set containing ``x``.
    """

    def __init__(self, n: int, open_masks: Sequence[int], nbhd: Sequence[int]):
        self.n = n
        self.full = full_mask(n)
        self.open_masks: tuple[int, ...] = tuple(open_masks)
        self.nbhd: tuple[int, ...] = tuple(nbhd)
        self._open_lookup = frozenset(self.open_masks)

    @cached_property
    def opens(self) -> tuple[PointSet, ...]:
        return tuple(PointSet(self.n, m) for m in self.open_masks)

    @cached_property
    def min_nbhd(self) -> tuple[PointSet, ...]:
        return tuple(PointSet(self.n, m) for m in self.nbhd)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        return tuple(self.full ^ m for m in self.open_masks)

    @cached_property
    def closure_table(self) -> list[int]:
        """``closure_table[m]`` is the closure of mask ``m``; size ``2**n``."""
        return _closure_table(self.n, self.nbhd)

    @cached_property
    def interior_table(self) -> list[int]:
        cl = self.closure_table
        full = self.full
        return [full ^ cl[full ^ m] for m in range(1 << self.n)]

    # mask-level operators: O(n) scans against the minimal neighbourhoods

    def interior_mask(self, m: int) -> int:
        out = 0
        for x, nb in enumerate(self.nbhd):
            if nb & ~m == 0:
                out |= 1 << x
        return out

    def closure_mask(self, m: int) -> int:
        out = 0
        for x, nb in enumerate(self.nbhd):
            if nb & m:
                out |= 1 << x
        return out

    def is_open_mask(self, m: int) -> bool:
        return m in self._open_lookup

    def is_closed_mask(self, m: int) -> bool:
        return (self.full ^ m) in self._open_lookup

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Topology):
            return NotImplemented
        return self.n == other.n and self.open_masks == other.open_masks

    def __hash__(self) -> int:
        return hash((self.n, self.open_masks))

    def __repr__(self) -> str:
        return f"Topology(n={self.n}, opens=[{', '.join(map(roster, self.open_masks))}])"


def _masks_of(n: int, family: Iterable[PointSet | Iterable[int]]) -> list[int]:
    masks = []
    for s in family:
        if isinstance(s, PointSet):
            if s.universe_size != n:
                raise UniverseMismatch(
                    f"set {s} has universe size {s.universe_size}, expected {n}"
                )
            masks.append(s.mask)
        else:
            masks.append(PointSet.of(n, s).mask)
    return masks


def _up_closed_sets(n: int, nbhd: Sequence[int]) -> list[int]:
    cl = _closure_table(n, nbhd)
    full = full_mask(n)
    # A is open iff its complement is closed
    return sorted((m for m in range(1 << n) if cl[full ^ m] == full ^ m), key=order_key)


def build_from_opens(n: int, family: Iterable[PointSet | Iterable[int]]) -> Topology:
    """Validate an open-set family and return the topology it defines.

    Members may be :class:`PointSet` or iterables of point indices.
    """
    _check_size(n)
    masks = set(_masks_of(n, family))
    full = full_mask(n)
    nbhd = []
    for x in range(n):
        nb = full
        for m in masks:
            if m >> x & 1:
                nb &= m
        nbhd.append(nb)

    problems: list[TopologyError] = []
    missing = [name for name, m in (("empty set", 0), ("X", full)) if m not in masks]
    if missing:
        problems.append(MissingEmptyOrFull(f"family lacks {' and '.join(missing)}"))

    expected = _up_closed_sets(n, nbhd)
    # every member is up-closed under the derived preorder, so equal size means equal
    if len(expected) != len(masks) or missing:
        problems.extend(_closure_violations(n, masks))
    _raise_all(problems)
    return Topology(n, expected, nbhd)


def _closure_violations(n: int, masks: set[int]) -> list[TopologyError]:
    ordered = sorted(masks, key=order_key)
    union_bad = inter_bad = None
    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            if union_bad is None and (a | b) not in masks:
                union_bad = NotClosedUnderUnion(a, b, n)
            if inter_bad is None and (a & b) not in masks:
                inter_bad = NotClosedUnderIntersection(a, b, n)
            if union_bad and inter_bad:
                return [union_bad, inter_bad]
    return [p for p in (union_bad, inter_bad) if p is not None]


def build_from_preorder(n: int, reaches: Sequence[Sequence[int | bool]]) -> Topology:
    """Topology of the up-closed sets of a preorder.

    ``reaches[x][y]`` true means ``y`` lies in the minimal neighbourhood of ``x``.
    """
    _check_size(n)
    if len(reaches) != n or any(len(row) != n for row in reaches):
        raise UniverseMismatch(f"preorder matrix must be {n}x{n}")
    nbhd = [sum(1 << y for y in range(n) if reaches[x][y]) for x in range(n)]
    for x in range(n):
        if not nbhd[x] >> x & 1:
            raise NotReflexive(x)
    for x in range(n):
        for y in bits(nbhd[x]):
            extra = nbhd[y] & ~nbhd[x]
            if extra:
                z = next(bits(extra))
                raise NotTransitive(x, y, z)
    return from_nbhd(n, nbhd)


def from_nbhd(n: int, nbhd: Sequence[int]) -> Topology:
    """Unchecked constructor from a valid minimal-neighbourhood mask list."""
    return Topology(n, _up_closed_sets(n, nbhd), nbhd)


def derive_preorder(T: Topology) -> list[list[int]]:
    return [[(nb >> y) & 1 for y in range(T.n)] for nb in T.nbhd]


def _mask(T: Topology, A: PointSet) -> int:
    if not isinstance(A, PointSet):
        raise TypeError(f"expected PointSet, got {type(A).__name__}")
    if A.universe_size != T.n:
        raise UniverseMismatch(
            f"set {A} has universe size {A.universe_size}, topology has {T.n} points"
        )
    return A.mask


def interior(T: Topology, A: PointSet) -> PointSet:
    """Largest open subset of ``A``."""
    return PointSet(T.n, T.interior_mask(_mask(T, A)))


def closure(T: Topology, A: PointSet) -> PointSet:
    """Smallest closed superset of ``A``."""
    return PointSet(T.n, T.closure_mask(_mask(T, A)))


def is_open(T: Topology, A: PointSet) -> bool:
    return T.is_open_mask(_mask(T, A))


def is_closed(T: Topology, A: PointSet) -> bool:
    return T.is_closed_mask(_mask(T, A))


def open_sets(T: Topology) -> tuple[PointSet, ...]:
    return T.opens


def closed_sets(T: Topology) -> tuple[PointSet, ...]:
    return tuple(PointSet(T.n, m) for m in T.closed_masks)
