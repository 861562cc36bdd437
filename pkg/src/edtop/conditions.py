"""Extremal-disconnectedness conditions and the companion lemmas as exhaustive,
witness-producing predicates on a single finite topology.

Every check walks its variables left to right; set-valued variables ascend by
mask and open/closed variables follow the topology's normalized opens order.
The first failing assignment is returned, so witnesses are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .pointset import PointSet
from .topology import Topology

CONDITION_IDS = ("a", "b", "c", "d", "e", "f", "g")
LEMMA_IDS = ("lemma1", "corollary2", "hint", "hint_open")
ALL_IDS = CONDITION_IDS + LEMMA_IDS


@dataclass(frozen=True)
class Witness:
    """A failing assignment together with both evaluated sides of the relation."""

    assignment: tuple[tuple[str, PointSet], ...]
    lhs: PointSet
    relation: str  # "=" or "<="
    rhs: PointSet

    def __getitem__(self, name: str) -> PointSet:
        for key, value in self.assignment:
            if key == name:
                return value
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {
            "assignment": {k: list(v.members) for k, v in self.assignment},
            "lhs": list(self.lhs.members),
            "relation": self.relation,
            "rhs": list(self.rhs.members),
        }

    def __str__(self) -> str:
        binds = ", ".join(f"{k}={v}" for k, v in self.assignment)
        op = "!=" if self.relation == "=" else "not <="
        return f"{binds}: {self.lhs} {op} {self.rhs}"


@dataclass(frozen=True)
class Verdict:
    condition_id: str | None
    holds: bool
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.holds


def _fail(cid: str, n: int, names: str, values, lhs: int, rel: str, rhs: int) -> Verdict:
    assignment = tuple((name, PointSet(n, v)) for name, v in zip(names, values))
    return Verdict(cid, False, Witness(assignment, PointSet(n, lhs), rel, PointSet(n, rhs)))


def _ok(cid: str) -> Verdict:
    return Verdict(cid, True)


def check_a(T: Topology) -> Verdict:
    """Closure of every open set is open."""
    cl, it = T.closure_table, T.interior_table
    for A in T.open_masks:
        c = cl[A]
        if not T.is_open_mask(c):
            return _fail("a", T.n, "A", (A,), c, "=", it[c])
    return _ok("a")


def check_b(T: Topology) -> Verdict:
    cl = T.closure_table
    opens = T.open_masks
    for A in opens:
        ca = cl[A]
        for B in opens:
            lhs, rhs = ca & cl[B], cl[A & B]
            if lhs != rhs:
                return _fail("b", T.n, "AB", (A, B), lhs, "=", rhs)
    return _ok("b")


def check_c(T: Topology) -> Verdict:
    cl = T.closure_table
    opens = T.open_masks
    for A in opens:
        ca = cl[A]
        for B in opens:
            if A & B:
                continue
            lhs = ca & cl[B]
            if lhs:
                return _fail("c", T.n, "AB", (A, B), lhs, "=", 0)
    return _ok("c")


def check_d(T: Topology) -> Verdict:
    cl, it = T.closure_table, T.interior_table
    opens = T.open_masks
    full = T.full
    # K -> cl(int(cl(K))) is monotone, so K = X \ A is the hardest case for each A
    if all(cl[it[cl[full ^ A]]] & cl[A] == 0 for A in opens):
        return _ok("d")
    for K in range(1 << T.n):
        t = cl[it[cl[K]]]
        for A in opens:
            if K & A:
                continue
            lhs = t & cl[A]
            if lhs:
                return _fail("d", T.n, "KA", (K, A), lhs, "=", 0)
    return _ok("d")  # pragma: no cover - the shortcut above is exact


def check_e(T: Topology) -> Verdict:
    cl, it = T.closure_table, T.interior_table
    opens = T.open_masks
    for K in range(1 << T.n):
        t = it[cl[K]]
        for A in opens:
            if K & A:
                continue
            lhs, rhs = t & cl[A], it[cl[K & A]]
            if lhs != rhs:
                return _fail("e", T.n, "KA", (K, A), lhs, "=", rhs)
    return _ok("e")


def check_e_reduced(T: Topology) -> Verdict:
    """Condition (e) with its right-hand side reduced to the empty set.

    Under the side condition the intersection ``K & A`` is empty, so
    ``int(cl(K & A))`` is empty as well.
    """
    cl, it = T.closure_table, T.interior_table
    for K in range(1 << T.n):
        t = it[cl[K]]
        for A in T.open_masks:
            if K & A == 0 and t & cl[A]:
                return _fail("e", T.n, "KA", (K, A), t & cl[A], "=", 0)
    return _ok("e")


def check_e_unrestricted(T: Topology) -> Verdict:
    """Condition (e)'s identity over all subsets K and open A, without the
    disjointness side condition. Diagnostic only; not one of a..g."""
    cl, it = T.closure_table, T.interior_table
    for K in range(1 << T.n):
        t = it[cl[K]]
        for A in T.open_masks:
            lhs, rhs = t & cl[A], it[cl[K & A]]
            if lhs != rhs:
                return _fail("e_unrestricted", T.n, "KA", (K, A), lhs, "=", rhs)
    return _ok("e_unrestricted")


def check_f(T: Topology) -> Verdict:
    cl, it = T.closure_table, T.interior_table
    opens = T.open_masks
    for A in opens:
        ra = it[cl[A]]
        for B in opens:
            lhs, rhs = ra | it[cl[B]], it[cl[A | B]]
            if lhs != rhs:
                return _fail("f", T.n, "AB", (A, B), lhs, "=", rhs)
    return _ok("f")


def check_g(T: Topology) -> Verdict:
    it = T.interior_table
    closed = T.closed_masks
    for G in closed:
        ig = it[G]
        for H in closed:
            lhs, rhs = ig | it[H], it[G | H]
            if lhs != rhs:
                return _fail("g", T.n, "GH", (G, H), lhs, "=", rhs)
    return _ok("g")


def _regular_open_meet(T: Topology, cid: str, left_domain) -> Verdict:
    cl, it = T.closure_table, T.interior_table
    opens = T.open_masks
    reg_b = [it[cl[B]] for B in opens]
    for A in left_domain:
        ra = it[cl[A]]
        for B, rb in zip(opens, reg_b):
            lhs, rhs = ra & rb, it[cl[A & B]]
            if lhs != rhs:
                return _fail(cid, T.n, "AB", (A, B), lhs, "=", rhs)
    return _ok(cid)


def check_lemma1(T: Topology) -> Verdict:
    """int(cl(A)) & int(cl(B)) = int(cl(A & B)) for every subset A and open B."""
    return _regular_open_meet(T, "lemma1", range(1 << T.n))


def check_corollary2(T: Topology) -> Verdict:
    """The identity of :func:`check_lemma1` with A restricted to open sets."""
    return _regular_open_meet(T, "corollary2", T.open_masks)


def _hint(T: Topology, cid: str, left_domain) -> Verdict:
    cl, it = T.closure_table, T.interior_table
    opens = T.open_masks
    reg_b = [it[cl[B]] for B in opens]
    for A in left_domain:
        for B, rb in zip(opens, reg_b):
            lhs, rhs = A & rb, cl[A & B]
            if lhs & ~rhs:
                return _fail(cid, T.n, "AB", (A, B), lhs, "<=", rhs)
    return _ok(cid)


def check_hint_fact(T: Topology) -> Verdict:
    """A & int(cl(B)) <= cl(A & B) for every subset A and open B.

    Fails already on the two-point Sierpinski space.
    """
    return _hint(T, "hint", range(1 << T.n))


def check_hint_fact_open(T: Topology) -> Verdict:
    """The inclusion of :func:`check_hint_fact` with A restricted to open sets."""
    return _hint(T, "hint_open", T.open_masks)


CHECKS: dict[str, Callable[[Topology], Verdict]] = {
    "a": check_a,
    "b": check_b,
    "c": check_c,
    "d": check_d,
    "e": check_e,
    "f": check_f,
    "g": check_g,
    "lemma1": check_lemma1,
    "corollary2": check_corollary2,
    "hint": check_hint_fact,
    "hint_open": check_hint_fact_open,
}


def check_condition(T: Topology, condition_id: str) -> Verdict:
    try:
        check = CHECKS[condition_id]
    except KeyError:
        raise ValueError(
            f"unknown condition {condition_id!r}; expected one of {', '.join(ALL_IDS)}"
        ) from None
    return check(T)


def is_extremally_disconnected(T: Topology) -> bool:
    return check_a(T).holds

