import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_subsets, discrete, indiscrete, ps, random_preorder
from edtop import (
    PointSet,
    build_from_opens,
    build_from_preorder,
    closed_sets,
    closure,
    derive_preorder,
    enumerate_topologies,
    interior,
    is_closed,
    is_open,
    open_sets,
)
from edtop.topology import (
    MissingEmptyOrFull,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    NotReflexive,
    NotTransitive,
    UniverseMismatch,
)


# oracles computed from the opens family alone, never from min_nbhd


def interior_oracle(T, A):
    out = PointSet.empty(T.n)
    for U in T.opens:
        if U <= A:
            out = out | U
    return out


def closure_oracle(T, A):
    out = PointSet.full(T.n)
    for U in T.opens:
        F = U.complement()
        if A <= F:
            out = out & F
    return out


class TestBuildFromOpens:
    def test_sierpinski(self, sierpinski):
        assert sierpinski.min_nbhd == (ps(2, 0), ps(2, 0, 1))
        assert open_sets(sierpinski) == (ps(2), ps(2, 0), ps(2, 0, 1))

    def test_indiscrete(self):
        T = indiscrete(3)
        assert all(nb == ps(3, 0, 1, 2) for nb in T.min_nbhd)
        assert open_sets(T) == (ps(3), ps(3, 0, 1, 2))

    def test_normalizes_order_and_duplicates(self):
        T = build_from_opens(2, [[0, 1], [1], [], [1]])
        assert T.open_masks == (0, 0b10, 0b11)

    def test_missing_full_and_union(self):
        with pytest.raises(MissingEmptyOrFull) as info:
            build_from_opens(2, [[], [0], [1]])
        kinds = [type(p) for p in info.value.problems]
        assert kinds == [MissingEmptyOrFull, NotClosedUnderUnion]
        assert info.value.problems[1].pair == (ps(2, 0), ps(2, 1))

    def test_not_closed_under_union_alone(self):
        with pytest.raises(NotClosedUnderUnion):
            build_from_opens(3, [[], [0], [1], [0, 1, 2]])

    def test_not_closed_under_intersection(self):
        with pytest.raises(NotClosedUnderIntersection) as info:
            build_from_opens(3, [[], [0, 1], [1, 2], [0, 1, 2]])
        assert info.value.pair == (ps(3, 0, 1), ps(3, 1, 2))

    def test_universe_mismatch(self):
        with pytest.raises(UniverseMismatch):
            build_from_opens(2, [PointSet.empty(3), PointSet.full(2)])

    def test_empty_space(self):
        T = build_from_opens(0, [[]])
        assert T.opens == (PointSet(0, 0),)


class TestBuildFromPreorder:
    def test_sierpinski(self, sierpinski):
        assert build_from_preorder(2, [[1, 0], [1, 1]]) == sierpinski

    def test_identity_is_discrete(self):
        T = build_from_preorder(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        assert len(open_sets(T)) == 8

    def test_not_reflexive(self):
        with pytest.raises(NotReflexive) as info:
            build_from_preorder(2, [[0, 1], [0, 1]])
        assert info.value.point == 0

    def test_not_transitive(self):
        with pytest.raises(NotTransitive) as info:
            build_from_preorder(3, [[1, 1, 0], [0, 1, 1], [0, 0, 1]])
        assert info.value.triple == (0, 1, 2)

    @pytest.mark.parametrize("n", range(5))
    def test_round_trip(self, n):
        for T in enumerate_topologies(n):
            assert build_from_preorder(n, derive_preorder(T)).open_masks == T.open_masks
            assert build_from_opens(n, T.opens) == T


class TestOperators:
    def test_sierpinski_examples(self, sierpinski):
        assert interior(sierpinski, ps(2, 1)) == ps(2)
        assert closure(sierpinski, ps(2, 0)) == ps(2, 0, 1)
        assert is_open(sierpinski, ps(2, 0))
        assert not is_open(sierpinski, ps(2, 1)) and is_closed(sierpinski, ps(2, 1))
        assert closed_sets(sierpinski) == (ps(2, 0, 1), ps(2, 1), ps(2))

    def test_five_open_examples(self, five_open):
        assert interior(five_open, ps(3, 0, 2)) == ps(3, 0)
        assert closure(five_open, ps(3, 0)) == ps(3, 0, 2)

    @pytest.mark.parametrize("n", range(4))
    def test_trivial_cases(self, n):
        for T in enumerate_topologies(n):
            X, E = PointSet.full(n), PointSet.empty(n)
            assert interior(T, X) == X
            assert closure(T, E) == E
            assert is_open(T, X) and is_closed(T, X)

    def test_discrete_sizes(self):
        assert len(open_sets(discrete(2))) == 4

    def test_universe_mismatch(self, sierpinski):
        with pytest.raises(UniverseMismatch):
            interior(sierpinski, ps(3, 0))
        with pytest.raises(UniverseMismatch):
            is_open(sierpinski, ps(1, 0))

    @pytest.mark.parametrize("n", range(5))
    def test_against_opens_oracle(self, n):
        for T in enumerate_topologies(n):
            for A in all_subsets(n):
                assert interior(T, A) == interior_oracle(T, A)
                assert closure(T, A) == closure_oracle(T, A)
                assert T.closure_table[A.mask] == closure(T, A).mask
                assert T.interior_table[A.mask] == interior(T, A).mask


def kuratowski_orbit(T, A):
    seen = {A}
    frontier = [A]
    while frontier:
        S = frontier.pop()
        for nxt in (closure(T, S), S.complement()):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def assert_operator_laws(T, A, B):
    cA = A.complement()
    assert closure(T, A) == interior(T, cA).complement()
    assert interior(T, interior(T, A)) == interior(T, A)
    assert closure(T, closure(T, A)) == closure(T, A)
    assert interior(T, A) <= A <= closure(T, A)
    assert is_open(T, interior(T, A)) and is_closed(T, closure(T, A))
    if A <= B:
        assert interior(T, A) <= interior(T, B)
        assert closure(T, A) <= closure(T, B)
    assert len(kuratowski_orbit(T, A)) <= 14


@pytest.mark.parametrize("n", range(4))
def test_operator_laws_exhaustive(n):
    for T in enumerate_topologies(n):
        subsets = all_subsets(n)
        for A in subsets:
            for B in subsets:
                assert_operator_laws(T, A, B)


@settings(max_examples=200, deadline=None)
@given(st.randoms(use_true_random=False), st.integers(1, 10), st.data())
def test_operator_laws_random(rng, n, data):
    T = build_from_preorder(n, random_preorder(rng, n))
    a = data.draw(st.integers(0, (1 << n) - 1))
    b = data.draw(st.integers(0, (1 << n) - 1))
    A = PointSet(n, a)
    assert_operator_laws(T, A, A | PointSet(n, b))
    assert_operator_laws(T, A, PointSet(n, b))


def test_min_nbhd_invariants():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(0, 8)
        T = build_from_preorder(n, random_preorder(rng, n))
        for x, nb in enumerate(T.min_nbhd):
            assert x in nb and is_open(T, nb)
        for m in range(1 << n):
            A = PointSet(n, m)
            up_closed = all(T.min_nbhd[x] <= A for x in A)
            assert is_open(T, A) == up_closed


def test_sixteen_points_is_supported():
    T = discrete(16)
    A = PointSet.of(16, [3, 15])
    assert interior(T, A) == A == closure(T, A)
    assert len(T.opens) == 1 << 16
