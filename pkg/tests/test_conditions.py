import pytest

from conftest import discrete, indiscrete, ps
from edtop import (
    ALL_IDS,
    CONDITION_IDS,
    PointSet,
    check_condition,
    check_corollary2,
    check_e_reduced,
    check_e_unrestricted,
    check_hint_fact,
    check_hint_fact_open,
    check_lemma1,
    closure,
    enumerate_topologies,
    interior,
    is_extremally_disconnected,
    is_open,
)


def cl(T, A):
    return closure(T, A)


def reg(T, A):
    return interior(T, closure(T, A))


# Each failing witness is re-evaluated through the public PointSet operators.
RELATIONS = {
    "a": lambda T, w: is_open(T, cl(T, w["A"])),
    "b": lambda T, w: cl(T, w["A"]) & cl(T, w["B"]) == cl(T, w["A"] & w["B"]),
    "c": lambda T, w: not w["A"].isdisjoint(w["B"]) or (cl(T, w["A"]) & cl(T, w["B"])) == PointSet.empty(T.n),
    "d": lambda T, w: not w["K"].isdisjoint(w["A"])
    or (cl(T, interior(T, cl(T, w["K"]))) & cl(T, w["A"])) == PointSet.empty(T.n),
    "e": lambda T, w: not w["K"].isdisjoint(w["A"])
    or reg(T, w["K"]) & cl(T, w["A"]) == reg(T, w["K"] & w["A"]),
    "f": lambda T, w: reg(T, w["A"]) | reg(T, w["B"]) == reg(T, w["A"] | w["B"]),
    "g": lambda T, w: interior(T, w["G"]) | interior(T, w["H"]) == interior(T, w["G"] | w["H"]),
    "lemma1": lambda T, w: reg(T, w["A"]) & reg(T, w["B"]) == reg(T, w["A"] & w["B"]),
    "corollary2": lambda T, w: reg(T, w["A"]) & reg(T, w["B"]) == reg(T, w["A"] & w["B"]),
    "hint": lambda T, w: w["A"] & reg(T, w["B"]) <= cl(T, w["A"] & w["B"]),
    "hint_open": lambda T, w: w["A"] & reg(T, w["B"]) <= cl(T, w["A"] & w["B"]),
}


def test_sierpinski_is_ed(sierpinski):
    assert check_condition(sierpinski, "a").holds
    assert is_extremally_disconnected(sierpinski)


@pytest.mark.parametrize("n", range(5))
def test_indiscrete_is_ed(n):
    assert is_extremally_disconnected(indiscrete(n))


def test_five_open_fails_a(five_open):
    v = check_condition(five_open, "a")
    assert not v.holds
    assert v.witness["A"] == ps(3, 0)
    assert v.witness.lhs == ps(3, 0, 2)
    assert not is_extremally_disconnected(five_open)


def test_five_open_fails_c(five_open):
    v = check_condition(five_open, "c")
    assert not v.holds
    assert (v.witness["A"], v.witness["B"]) == (ps(3, 0), ps(3, 1))
    assert v.witness.lhs == ps(3, 2)


@pytest.mark.parametrize("cid", ALL_IDS)
def test_discrete_satisfies_everything(cid):
    assert check_condition(discrete(3), cid).holds


def test_unknown_condition(sierpinski):
    with pytest.raises(ValueError):
        check_condition(sierpinski, "h")


@pytest.mark.parametrize("n", range(5))
def test_witnesses_reproduce_failures(n):
    for T in enumerate_topologies(n):
        for cid in ALL_IDS:
            v = check_condition(T, cid)
            assert v.condition_id == cid
            if not v.holds:
                assert v.witness is not None
                assert not RELATIONS[cid](T, v.witness)
                assert v == check_condition(T, cid)


def test_lemma1_spot_values(sierpinski):
    S = sierpinski
    assert reg(S, ps(2, 1)) & reg(S, ps(2, 0)) == ps(2) == reg(S, ps(2))
    I = indiscrete(2)
    assert reg(I, ps(2, 0)) & reg(I, ps(2, 0, 1)) == ps(2, 0, 1) == reg(I, ps(2, 0))
    D = discrete(3)
    assert reg(D, ps(3, 0, 1)) & reg(D, ps(3, 1, 2)) == ps(3, 1) == reg(D, ps(3, 1))


def test_hint_fails_on_sierpinski(sierpinski):
    v = check_hint_fact(sierpinski)
    assert not v.holds
    assert (v.witness["A"], v.witness["B"]) == (ps(2, 1), ps(2, 0))
    assert (v.witness.lhs, v.witness.rhs) == (ps(2, 1), ps(2))
    assert check_hint_fact_open(sierpinski).holds


@pytest.mark.parametrize("n", range(5))
def test_universal_statements(n):
    for T in enumerate_topologies(n):
        assert check_lemma1(T).holds
        assert check_corollary2(T).holds
        assert check_hint_fact_open(T).holds


@pytest.mark.parametrize("n", range(5))
def test_ed_means_open_closures_are_regular(n):
    for T in enumerate_topologies(n):
        if is_extremally_disconnected(T):
            for A in T.opens:
                assert cl(T, A) == reg(T, A)


@pytest.mark.parametrize("n", range(5))
def test_e_matches_its_reduced_form(n):
    for T in enumerate_topologies(n):
        assert check_condition(T, "e") == check_e_reduced(T)


@pytest.mark.parametrize("n", range(5))
def test_conditions_other_than_e_agree(n):
    for T in enumerate_topologies(n):
        vector = {cid: check_condition(T, cid).holds for cid in CONDITION_IDS if cid != "e"}
        assert len(set(vector.values())) == 1, (T, vector)
        assert check_e_unrestricted(T).holds == vector["a"]


@pytest.mark.parametrize("n", range(5))
def test_e_as_stated_never_fails(n):
    # the side condition empties the right-hand side and the left-hand side
    # int(cl(K)) & cl(A) is then empty in every space
    assert all(check_condition(T, "e").holds for T in enumerate_topologies(n))


def test_e_unrestricted_witness(five_open):
    v = check_e_unrestricted(five_open)
    assert not v.holds
    K, A = v.witness["K"], v.witness["A"]
    assert reg(five_open, K) & cl(five_open, A) != reg(five_open, K & A)
