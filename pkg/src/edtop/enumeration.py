"""Labeled finite topologies via their specialization preorders, plus
brute-force canonical forms up to relabeling of points."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterator

from .pointset import bits, full_mask, order_key
from .topology import Topology, build_from_opens, from_nbhd

DEFAULT_CAP = 5
EXTENDED_CAP = 7

CanonicalKey = tuple[int, ...]


class CapExceeded(ValueError):
    """Requested point count is beyond what the enumerator will attempt."""


def check_cap(n: int, extended: bool = False) -> None:
    cap = EXTENDED_CAP if extended else DEFAULT_CAP
    if n < 0:
        raise ValueError(f"point count must be non-negative, got {n}")
    if n > cap:
        hint = "" if extended else " (pass extended=True / --extended for 6-7)"
        raise CapExceeded(f"n={n} exceeds the enumeration cap of {cap}{hint}")


def _extensions(n: int, nbhd: tuple[int, ...], opens: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Preorders on n+1 points restricting to ``nbhd`` on the first n points.

    The new point k gets an up-set U (an open set of the old topology) and a
    down-set D (a closed set); transitivity requires U within every
    neighbourhood of D.
    """
    full = full_mask(n)
    k = 1 << n
    for closed_d in sorted((full ^ m for m in opens), key=order_key):
        bound = full
        for d in bits(closed_d):
            bound &= nbhd[d]
        for up in opens:
            if up & ~bound:
                continue
            new = [nb | k if closed_d >> x & 1 else nb for x, nb in enumerate(nbhd)]
            new.append(up | k)
            yield tuple(new)


def _preorders(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for nbhd in _preorders(n - 1):
        T = from_nbhd(n - 1, nbhd)
        yield from _extensions(n - 1, nbhd, T.open_masks)


def enumerate_topologies(n: int, extended: bool = False) -> Iterator[Topology]:
    """Every topology on ``{0..n-1}`` exactly once, in a fixed order."""
    check_cap(n, extended)
    for nbhd in _preorders(n):
        yield from_nbhd(n, nbhd)


def enumerate_topologies_slice(n: int, start: int, stop: int) -> Iterator[Topology]:
    """Topologies grown from the parents ``start..stop-1`` of the (n-1)-point
    enumeration; concatenating consecutive slices reproduces the full stream."""
    if n == 0:
        if start == 0 < stop:
            yield from_nbhd(0, ())
        return
    for i, nbhd in enumerate(_preorders(n - 1)):
        if i >= stop:
            break
        if i < start:
            continue
        T = from_nbhd(n - 1, nbhd)
        for child in _extensions(n - 1, nbhd, T.open_masks):
            yield from_nbhd(n, child)


def parent_count(n: int) -> int:
    return 1 if n == 0 else sum(1 for _ in _preorders(n - 1))


@lru_cache(maxsize=None)
def _permutation_maps(n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """For each permutation of the points, the induced map on all masks."""
    maps = []
    for perm in permutations(range(n)):
        image = [0] * (1 << n)
        for m in range(1, 1 << n):
            low = m & -m
            image[m] = image[m ^ low] | 1 << perm[low.bit_length() - 1]
        maps.append(tuple(image))
    return tuple(maps)


def _encode(masks) -> CanonicalKey:
    return tuple(sorted(masks, key=order_key))


def canonical_form(T: Topology) -> CanonicalKey:
    """Least permuted opens encoding over all relabelings of the points."""
    check_cap(T.n, extended=True)
    return min(_encode(p[m] for m in T.open_masks) for p in _permutation_maps(T.n))


def is_canonical(T: Topology) -> bool:
    own = T.open_masks
    for p in _permutation_maps(T.n):
        if _encode(p[m] for m in own) < own:
            return False
    return True


def stabilizer_size(T: Topology) -> int:
    own = set(T.open_masks)
    return sum(1 for p in _permutation_maps(T.n) if {p[m] for m in own} == own)


def enumerate_homeo_classes(n: int, extended: bool = False) -> Iterator[Topology]:
    """One representative per homeomorphism class: the labeling whose own
    encoding is its canonical key."""
    for T in enumerate_topologies(n, extended):
        if is_canonical(T):
            yield T


def enumerate_by_families(n: int) -> Iterator[Topology]:
    """Independent enumerator: every family of subsets containing the empty
    set and X that is closed under pairwise union and intersection.

    Brute force over families; only meant for n <= 4.
    """
    if n > 4:
        raise CapExceeded("the family enumerator is limited to n <= 4")
    full = full_mask(n)
    inner = [m for m in range(1, full)]
    for choice in range(1 << len(inner)):
        family = {0, full}
        family.update(m for i, m in enumerate(inner) if choice >> i & 1)
        if all((a | b) in family and (a & b) in family for a in family for b in family):
            yield build_from_opens(n, [list(bits(m)) for m in family])
