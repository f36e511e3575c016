from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

from pdgcost import coalition as c
from pdgcost import make_cost_profile, make_full_game
from pdgcost.coalitions import nontrivial

DATA = Path(__file__).parent / "data"

EX1_WORTH = {
    c(1): 5,
    c(2): 3,
    c(3): 0,
    c(1, 2): 10,
    c(1, 3): 8,
    c(2, 3): 5,
    c(1, 2, 3): 20,
}
EX1_COSTS = {c(1, 2): 3, c(1, 3): 2, c(2, 3): 2}


@pytest.fixture
def ex1():
    game = make_full_game(3, EX1_WORTH)
    return game, make_cost_profile(game, EX1_COSTS, order=[c(1, 3), c(2, 3), c(1, 2)])


@pytest.fixture
def ex1_game(ex1):
    return ex1[0]


@pytest.fixture
def ex1_file():
    return DATA / "example1.json"


rationals = st.builds(
    Fraction, st.integers(min_value=0, max_value=30), st.sampled_from([1, 1, 2, 3, 6])
)


@st.composite
def games(draw, min_n=2, max_n=4):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    worth = [Fraction(0)] + [draw(rationals) for _ in range((1 << n) - 2)]
    worth.append(draw(rationals.filter(lambda x: x > 0)))
    return make_full_game(n, worth)


@st.composite
def costed_games(draw, min_n=2, max_n=4):
    game = draw(games(min_n, max_n))
    costs = {
        s: Fraction(0) if game[s] == 0 else draw(st.sampled_from([0, 1, 2, 3, Fraction(1, 2)]))
        for s in nontrivial(game.n)
    }
    return game, make_cost_profile(game, costs)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is not None and module.LINES:
        terminalreporter.section("acceptance criteria")
        for line in module.LINES:
            terminalreporter.write_line(line)
