from fractions import Fraction

import pytest

from pdgcost import coalition as c
from pdgcost import errors
from pdgcost.coalitions import format_key, nontrivial, parse_key, submasks
from pdgcost.game import (
    FullGame,
    base_family,
    game_join,
    game_meet,
    game_sum,
    game_sum_capped,
    make_cost_profile,
    make_full_game,
    moebius_decompose,
    profile_sum,
    recompose,
    restrict,
    stage_family,
    unanimity_game,
    unity_game,
)

from conftest import EX1_COSTS, EX1_WORTH


def zero_below_grand(n, alpha=1):
    return make_full_game(n, [0] * ((1 << n) - 1) + [alpha])


# -- coalition keys ---------------------------------------------------------


@pytest.mark.parametrize(
    "key, mask",
    [("1", 0b1), ("1,3", 0b101), ("2,3", 0b110), ("N", 0b111), ("1,2,3", 0b111), ("", 0)],
)
def test_parse_key(key, mask):
    assert parse_key(key, 3) == mask


@pytest.mark.parametrize("key", ["3,1", "1,1", "0", "4", "a", "1,,2"])
def test_parse_key_rejects(key):
    with pytest.raises(errors.CoalitionKeyError):
        parse_key(key, 3)


def test_format_key_round_trip():
    for mask in range(1, 16):
        assert parse_key(format_key(mask), 4) == mask


def test_submasks_enumerates_every_subset():
    assert sorted(submasks(0b1011)) == [0, 1, 2, 3, 8, 9, 10, 11]


# -- make_full_game ---------------------------------------------------------


def test_example1_is_valid(ex1_game):
    assert ex1_game[c(1, 3)] == 8
    assert ex1_game.grand_worth == 20
    assert ex1_game[0] == 0


def test_smallest_legal_game():
    g = make_full_game(2, {c(1): 0, c(2): 0, c(1, 2): 1})
    assert nontrivial(2) == []
    assert g.grand_worth == 1


@pytest.mark.parametrize(
    "n, worths, exc",
    [
        (3, {**EX1_WORTH, c(1, 2, 3): 0}, errors.ZeroGrandWorthError),
        (3, {**EX1_WORTH, c(2): -1}, errors.NegativeWorthError),
        (3, {**EX1_WORTH, 0: 1}, errors.NonzeroEmptyWorthError),
        (3, {k: v for k, v in EX1_WORTH.items() if k != c(2, 3)}, errors.MissingCoalitionError),
        (1, {0: 0, 1: 1}, errors.PlayerCountError),
        (17, {}, errors.PlayerCountError),
    ],
)
def test_make_full_game_errors(n, worths, exc):
    with pytest.raises(exc):
        make_full_game(n, worths)


# -- make_cost_profile ------------------------------------------------------


def test_example1_order_from_tie_break(ex1_game):
    profile = make_cost_profile(ex1_game, EX1_COSTS)
    assert profile.order == (c(1, 3), c(2, 3), c(1, 2))
    assert profile.costs == (2, 2, 3)
    assert profile.accrued(3) == 7


def test_all_zero_costs_order_is_bitmask_order():
    g = make_full_game(3, [0, 1, 1, 1, 1, 1, 1, 5])
    profile = make_cost_profile(g, {s: 0 for s in nontrivial(3)})
    assert profile.order == (c(1, 2), c(1, 3), c(2, 3))


def test_assumption1_violation(ex1_game):
    g = make_full_game(3, {**EX1_WORTH, c(1, 3): 0})
    with pytest.raises(errors.Assumption1Violation):
        make_cost_profile(g, {**EX1_COSTS, c(1, 3): 1})


def test_cost_errors(ex1_game):
    with pytest.raises(errors.NegativeCostError):
        make_cost_profile(ex1_game, {**EX1_COSTS, c(1, 2): -1})
    with pytest.raises(errors.CostDomainMismatchError):
        make_cost_profile(ex1_game, {c(1, 2): 3, c(1, 3): 2})
    with pytest.raises(errors.CostDomainMismatchError):
        make_cost_profile(ex1_game, {**EX1_COSTS, c(1): 0})


def test_supplied_order_must_be_nondecreasing(ex1_game):
    with pytest.raises(errors.CostOrderError):
        make_cost_profile(ex1_game, EX1_COSTS, order=[c(1, 2), c(1, 3), c(2, 3)])
    # equal costs may be examined in either order
    p = make_cost_profile(ex1_game, EX1_COSTS, order=[c(2, 3), c(1, 3), c(1, 2)])
    assert p.order[0] == c(2, 3)


def test_order_must_be_permutation(ex1_game):
    with pytest.raises(errors.CostOrderError):
        make_cost_profile(ex1_game, EX1_COSTS, order=[c(1, 3), c(1, 3), c(1, 2)])


# -- restrict / stage_family ------------------------------------------------


def test_restrict_stage0(ex1_game):
    pg = restrict(ex1_game, base_family(3))
    assert len(pg.worth) == 3 + 2
    assert pg[c(1)] == 5 and pg[0b111] == 20


def test_restrict_full_family(ex1_game):
    pg = restrict(ex1_game, range(8))
    assert all(pg[s] == ex1_game[s] for s in range(8))


def test_restrict_bad_family(ex1_game):
    with pytest.raises(errors.BadKnownFamilyError):
        restrict(ex1_game, base_family(3) - {c(2)})


def test_stage_family(ex1):
    _, profile = ex1
    assert stage_family(profile, 0) == base_family(3)
    assert stage_family(profile, 1) == base_family(3) | {c(1, 3)}
    assert stage_family(profile, 3) == frozenset(range(8))
    with pytest.raises(errors.StageOutOfRangeError):
        stage_family(profile, 4)
    with pytest.raises(errors.StageOutOfRangeError):
        stage_family(profile, -1)


# -- game_sum and the summed cost profile -----------------------------------


def test_sum_with_zero_cost_zero_game_keeps_costs(ex1):
    v, pv = ex1
    z = zero_below_grand(3, alpha=1)
    pz = make_cost_profile(z, {s: 0 for s in nontrivial(3)}, order=pv.order)
    s = game_sum(v, z)
    assert profile_sum(pv, pz, s).costs == pv.costs


def test_example1_doubled_costs(ex1):
    v, pv = ex1
    s = game_sum(v, v)
    ps = profile_sum(pv, pv, s)
    assert ps.costs == (4, 4, 6)
    assert ps.order == pv.order


def test_sum_of_disjoint_unanimity_games():
    u = unanimity_game(4, c(1, 2), 3)
    w = unanimity_game(4, c(3, 4), 5)
    s = game_sum(u, w)
    for t in range(16):
        expected = (3 if t & 0b0011 == 0b0011 else 0) + (5 if t & 0b1100 == 0b1100 else 0)
        assert s[t] == expected


def test_sum_dimension_mismatch(ex1_game):
    with pytest.raises(errors.DimensionMismatchError):
        game_sum(ex1_game, zero_below_grand(2))


def test_profile_sum_with_different_orders_uses_elementwise_sequence():
    v = make_full_game(3, [0, 1, 1, 1, 4, 5, 6, 10])
    pv = make_cost_profile(v, {c(1, 2): 1, c(1, 3): 2, c(2, 3): 3})
    pw = make_cost_profile(v, {c(1, 2): 3, c(1, 3): 2, c(2, 3): 1})
    s = game_sum(v, v)
    ps = profile_sum(pv, pw, s)
    # sorted sequences (1, 2, 3) + (1, 2, 3); coalition-wise sums all tie at 4
    assert ps.costs == (2, 4, 6)
    assert ps.order == (c(1, 2), c(1, 3), c(2, 3))


# -- capped sum, join, meet -------------------------------------------------


def test_capped_sum(ex1_game):
    s = game_sum_capped(ex1_game, ex1_game, 20)
    assert s.grand_worth == 20
    assert all(s[t] == 2 * ex1_game[t] for t in range(7))


def test_capped_sum_with_zero_below_grand(ex1_game):
    assert game_sum_capped(ex1_game, zero_below_grand(3, 20), 20) == ex1_game


def test_capped_sum_alpha_mismatch(ex1_game):
    with pytest.raises(errors.AlphaMismatchError):
        game_sum_capped(ex1_game, zero_below_grand(3, 19), 20)


def test_join_meet(ex1_game):
    assert game_join(ex1_game, ex1_game) == ex1_game
    assert game_join(ex1_game, zero_below_grand(3, 20)) == ex1_game
    other = make_full_game(3, [0, 7, 1, 2, 3, 9, 5, 1])
    meet = game_meet(ex1_game, other)
    assert all(meet[t] <= ex1_game[t] and meet[t] <= other[t] for t in range(8))


# -- unanimity, unity, Moebius ----------------------------------------------


def test_unanimity_game():
    u = unanimity_game(3, c(1), 1)
    assert [t for t in range(8) if u[t] == 1] == [c(1), c(1, 2), c(1, 3), c(1, 2, 3)]
    u = unanimity_game(3, 0b111, 5)
    assert [u[t] for t in range(8)] == [0] * 7 + [5]
    assert unanimity_game(3, c(2), 0).worth == (0,) * 8
    with pytest.raises(errors.EmptyCoalitionError):
        unanimity_game(3, 0)


def test_unity_game(ex1_game):
    u = unity_game(ex1_game, c(1, 3))
    assert u[c(1, 3)] == 8
    assert (u[c(1)], u[c(2)], u[c(3)], u[0b111]) == (5, 3, 0, 20)
    assert u[c(1, 2)] == 0 and u[c(2, 3)] == 0


def test_unity_of_zero_below_grand_is_identity():
    z = zero_below_grand(4, 7)
    for s in nontrivial(4):
        assert unity_game(z, s) == z


@pytest.mark.parametrize("mask", [c(1), 0b111, 0])
def test_unity_game_rejects_trivial(ex1_game, mask):
    with pytest.raises(errors.TrivialCoalitionError):
        unity_game(ex1_game, mask)


def test_join_of_unity_games_covers_game(ex1_game):
    joined = None
    for s in nontrivial(3):
        u = unity_game(ex1_game, s)
        joined = u if joined is None else game_join(joined, u)
    for s in nontrivial(3):
        assert joined[s] == ex1_game[s]


def test_moebius_example1(ex1_game):
    coeffs = moebius_decompose(ex1_game)
    expected = {c(1): 5, c(2): 3, c(3): 0, c(1, 2): 2, c(1, 3): 3, c(2, 3): 2, c(1, 2, 3): 5}
    assert coeffs == expected


def test_moebius_of_unanimity_basis():
    coeffs = moebius_decompose(unanimity_game(4, c(2, 4), 7))
    assert coeffs[c(2, 4)] == 7
    assert all(x == 0 for s, x in coeffs.items() if s != c(2, 4))


def test_recompose_matches_explicit_unanimity_sum(ex1_game):
    coeffs = moebius_decompose(ex1_game)
    total = FullGame(3, (Fraction(0),) * 8)
    for s, x in coeffs.items():
        total = game_sum(total, unanimity_game(3, s, x))
    assert total == ex1_game
    assert recompose(3, coeffs) == ex1_game
