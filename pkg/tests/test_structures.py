import pytest

from pdgcost import coalition as c
from pdgcost import errors
from pdgcost.coalitions import nontrivial
from pdgcost.game import (
    base_family,
    make_full_game,
    make_partial_game,
    restrict,
    unanimity_game,
)
from pdgcost.structures import is_carrier, is_p_type, is_partnership, is_zero_coalition

N3 = 0b111


@pytest.fixture
def stage0(ex1_game):
    return restrict(ex1_game, base_family(3))


@pytest.mark.parametrize("mask", nontrivial(4) + [c(2)])
def test_unanimity_core_is_partnership(mask):
    assert is_partnership(unanimity_game(4, mask, 3), mask)


def test_example1_has_no_partnership(ex1_game):
    assert not is_partnership(ex1_game, c(1, 3))


def test_zero_below_grand_partnerships():
    g = make_full_game(3, [0] * 7 + [1])
    assert all(is_partnership(g, s) for s in range(1, 7))


def test_zero_coalitions(stage0):
    assert is_zero_coalition(stage0, 0)
    assert is_zero_coalition(stage0, c(3))
    assert not is_zero_coalition(stage0, c(1, 3))


def test_zero_coalition_downward_closed(stage0):
    for s in range(8):
        if is_zero_coalition(stage0, s):
            assert all(is_zero_coalition(stage0, t) for t in range(8) if t & s == t)


def test_grand_p_type_when_everything_else_is_zero():
    pg = make_partial_game(3, {c(1): 0, c(2): 0, c(3): 0, c(1, 2): 0, N3: 5})
    assert is_p_type(pg, N3)


@pytest.mark.parametrize("mask", nontrivial(4))
def test_unanimity_core_is_p_type(mask):
    pg = restrict(unanimity_game(4, mask, 2), range(16))
    assert is_p_type(pg, mask)


def test_example1_stage0_singleton_p_type(stage0):
    # N contains player 1 so it is outside the quantifier; the remaining known
    # coalitions satisfy the first condition trivially
    assert is_p_type(stage0, c(1))


def test_p_type_negative(ex1_game):
    # S = {2,3}: {1,2} \ {2,3} = {1} is known and v({1,2}) = 10 != v({1}) = 5
    pg = restrict(ex1_game, range(8))
    assert not is_p_type(pg, c(2, 3))


def test_grand_is_carrier(stage0, ex1_game):
    assert is_carrier(stage0, N3)
    assert is_carrier(restrict(ex1_game, range(8)), N3)


def test_unanimity_singleton_carrier():
    u = unanimity_game(3, c(1), 4)
    assert is_carrier(restrict(u, base_family(3)), c(1))
    assert is_carrier(restrict(u, base_family(3) | {c(2, 3)}), c(1))


def test_example1_stage0_not_carrier(stage0):
    assert not is_carrier(stage0, c(1))


def test_carrier_needs_known_coalition(stage0):
    with pytest.raises(errors.CoalitionNotKnownError):
        is_carrier(stage0, c(1, 2))


def test_carrier_requires_known_intersection():
    u = unanimity_game(4, c(1, 2), 1)
    # {1,2,3} ∩ {1,2,4} = {1,2}, whose worth is unknown here
    known = base_family(4) | {c(1, 2, 3), c(1, 2, 4)}
    assert not is_carrier(restrict(u, known), c(1, 2, 4))
    assert is_carrier(restrict(u, known | {c(1, 2)}), c(1, 2, 4))


def test_carrier_monotone_on_samples(ex1_game):
    u = unanimity_game(3, c(1), 2)
    pg = restrict(u, range(8))
    for s in range(1, 8):
        if is_carrier(pg, s):
            for r in range(8):
                if r & s == s:
                    assert is_carrier(pg, r)
