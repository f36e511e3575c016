"""Payoff computations.

The staged value assigns, after the k-th examination with known family
K = base ∪ {S_1, ..., S_k},

    phi[i, k] = sum_{S in K, S != N, i in S} d_K(S) / |S|
                + (d_K(N) - cost(S_1) - ... - cost(S_k)) / n

where d_K are the dividends of the game restricted to K.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import coalitions as co
from .coalitions import Coalition
from .errors import DimensionMismatchError
from .game import CostProfile, FullGame, PartialGame, base_family

Payoff = tuple[Fraction, ...]


def _dividend(worth: Fraction, mask: Coalition, known, d) -> Fraction:
    """worth(mask) minus the dividends of its known proper subsets."""
    total = Fraction(0)
    if len(known) < (1 << co.size(mask)):
        for t in known:
            if t != mask and t & mask == t:
                total += d[t]
    else:
        for t in co.submasks(mask):
            if t != mask and t in known:
                total += d[t]
    return worth - total


def harsanyi_dividends(pg: PartialGame) -> list[Fraction]:
    """Dividends indexed by bitmask; zero outside the known family."""
    d = [Fraction(0)] * (1 << pg.n)
    for s in co.by_size(pg.known):
        if s:
            d[s] = _dividend(pg[s], s, pg.known, d)
    return d


def shapley_classic(game: FullGame) -> Payoff:
    n = game.n
    weight = [Fraction(factorial(s - 1) * factorial(n - s), factorial(n)) for s in range(n + 1) if s]
    weight.insert(0, Fraction(0))
    phi = [Fraction(0)] * n
    for s in range(1, 1 << n):
        w = weight[co.size(s)]
        for i in co.members(s):
            phi[i] += w * (game[s] - game[s ^ (1 << i)])
    return tuple(phi)


def _shares(d, n: int, exclude: Coalition | None = None) -> list[Fraction]:
    phi = [Fraction(0)] * n
    for s in range(1, len(d)):
        if d[s] and s != exclude:
            share = d[s] / co.size(s)
            for i in co.members(s):
                phi[i] += share
    return phi


def shapley_pdg(pg: PartialGame) -> Payoff:
    """Every player gets an equal share of each dividend it takes part in."""
    return tuple(_shares(harsanyi_dividends(pg), pg.n))


def cis_value(game: FullGame) -> Payoff:
    singles = game.singleton_worths()
    surplus = (game.grand_worth - sum(singles)) / game.n
    return tuple(x + surplus for x in singles)


@dataclass(frozen=True)
class StageMatrix:
    """Payoffs per examination stage; ``columns[k][i]`` is player i after k examinations."""

    columns: tuple[Payoff, ...]

    @property
    def n(self) -> int:
        return len(self.columns[0])

    @property
    def stages(self) -> int:
        return len(self.columns)

    def column(self, k: int) -> Payoff:
        return self.columns[k]

    def row(self, i: int) -> Payoff:
        return tuple(col[i] for col in self.columns)

    def __getitem__(self, ik: tuple[int, int]) -> Fraction:
        i, k = ik
        return self.columns[k][i]

    def __add__(self, other: StageMatrix) -> StageMatrix:
        if (self.n, self.stages) != (other.n, other.stages):
            raise DimensionMismatchError("stage matrices differ in shape")
        return StageMatrix(
            tuple(tuple(a + b for a, b in zip(x, y)) for x, y in zip(self.columns, other.columns))
        )


def _stages(game: FullGame, profile: CostProfile):
    if game.n != profile.n:
        raise DimensionMismatchError(f"game has {game.n} players, profile {profile.n}")
    n = game.n
    full = co.grand(n)
    known = set(base_family(n))
    d = [Fraction(0)] * (1 << n)
    for i in range(n):
        d[1 << i] = game[1 << i]
    d[full] = game[full] - sum(d[1 << i] for i in range(n))
    yield known, d, {}
    for s in profile.order:
        known.add(s)
        changed = {}
        # adding s can only move the dividends of its known supersets
        for r in co.by_size(t for t in known if t & s == s):
            old = d[r]
            d[r] = _dividend(game[r], r, known, d)
            if d[r] != old:
                changed[r] = old
        yield known, d, changed


def stage_dividends(game: FullGame, profile: CostProfile) -> Iterator[tuple[int, frozenset, list]]:
    """Yield ``(k, known, dividends)`` for k = 0..m.

    The dividend list is updated in place between stages; copy it to keep it.
    """
    for k, (known, d, _) in enumerate(_stages(game, profile)):
        yield k, frozenset(known), d


def staged_value(game: FullGame, profile: CostProfile) -> StageMatrix:
    n = game.n
    full = co.grand(n)
    columns = []
    shares: list[Fraction] = []
    for k, (_known, d, changed) in enumerate(_stages(game, profile)):
        if k == 0:
            shares = _shares(d, n, exclude=full)
        for r, old in changed.items():
            if r != full:
                share = (d[r] - old) / co.size(r)
                for i in co.members(r):
                    shares[i] += share
        grand_part = (d[full] - profile.accrued(k)) / n
        columns.append(tuple(x + grand_part for x in shares))
    return StageMatrix(tuple(columns))
