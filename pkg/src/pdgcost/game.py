"""Games, examination costs and the algebra on them.

A ``FullGame`` stores one worth per coalition, indexed by bitmask.  Constructing
the dataclass directly performs no checks, which is what the algebra needs:
unanimity components with negative coefficients or a meet of two games may
fall outside the class of admissible games.  ``make_full_game`` is the
validating entry point and guarantees

    worth(empty) = 0,  worth(S) >= 0 for all S,  worth(N) > 0.

A ``CostProfile`` holds the examination order S_1, ..., S_m over the
m = 2^n - n - 2 non-trivial coalitions together with the nondecreasing cost
sequence along that order.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import accumulate
from numbers import Rational

from . import coalitions as co
from .coalitions import Coalition
from .errors import (
    AlphaMismatchError,
    Assumption1Violation,
    BadKnownFamilyError,
    CostDomainMismatchError,
    CostOrderError,
    DimensionMismatchError,
    EmptyCoalitionError,
    MissingCoalitionError,
    NegativeCostError,
    NegativeWorthError,
    NonzeroEmptyWorthError,
    PlayerCountError,
    StageOutOfRangeError,
    TrivialCoalitionError,
    ZeroGrandWorthError,
)

MIN_PLAYERS = 2
MAX_PLAYERS = 16


def as_rational(x) -> Fraction:
    """Exact conversion of ints, Fractions, ``"p/q"`` and decimal strings."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, float):
        # the decimal the user typed, not its binary approximation
        return Fraction(repr(x))
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in {x!r}") from None
    raise TypeError(f"cannot interpret {x!r} as a rational")


def _check_n(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise PlayerCountError(f"player count must be an integer, got {n!r}")
    if not MIN_PLAYERS <= n <= MAX_PLAYERS:
        raise PlayerCountError(f"player count must be in {MIN_PLAYERS}..{MAX_PLAYERS}, got {n}")


def num_unknown(n: int) -> int:
    """Number of examinable coalitions, 2^n - n - 2."""
    return (1 << n) - n - 2


@dataclass(frozen=True)
class FullGame:
    n: int
    worth: tuple[Fraction, ...]

    def __getitem__(self, mask: Coalition) -> Fraction:
        return self.worth[mask]

    @property
    def grand(self) -> Coalition:
        return co.grand(self.n)

    @property
    def grand_worth(self) -> Fraction:
        return self.worth[-1]

    def singleton_worths(self) -> list[Fraction]:
        return [self.worth[1 << i] for i in range(self.n)]

    def is_admissible(self) -> bool:
        return (
            self.worth[0] == 0
            and all(x >= 0 for x in self.worth)
            and self.grand_worth > 0
        )


def make_full_game(n: int, worths: Mapping[Coalition, object] | Sequence) -> FullGame:
    """Validate and freeze a worth function.

    ``worths`` is either a mapping from bitmask to rational or a sequence of
    length 2^n indexed by bitmask.  A missing empty coalition defaults to 0.
    """
    _check_n(n)
    size = 1 << n
    if isinstance(worths, Mapping):
        table: list[Fraction | None] = [None] * size
        for mask, value in worths.items():
            if not 0 <= mask < size:
                raise MissingCoalitionError(f"coalition bitmask {mask} outside a {n}-player game")
            table[mask] = as_rational(value)
        if table[0] is None:
            table[0] = Fraction(0)
        for mask, value in enumerate(table):
            if value is None:
                raise MissingCoalitionError(f"no worth given for coalition {{{co.format_key(mask)}}}")
    else:
        if len(worths) != size:
            raise MissingCoalitionError(f"expected {size} worths, got {len(worths)}")
        table = [as_rational(x) for x in worths]

    if table[0] != 0:
        raise NonzeroEmptyWorthError(f"worth of the empty coalition must be 0, got {table[0]}")
    for mask, value in enumerate(table):
        if value < 0:
            raise NegativeWorthError(f"worth of {{{co.format_key(mask)}}} is negative: {value}")
    if table[-1] <= 0:
        raise ZeroGrandWorthError(f"worth of the grand coalition must be positive, got {table[-1]}")
    return FullGame(n, tuple(table))


@dataclass(frozen=True)
class CostProfile:
    """Examination order and the cost paid at each step.

    ``costs[k-1]`` is the cost of examining ``order[k-1]`` (the k-th
    examination).  Construct through ``make_cost_profile`` unless the
    ordering assumptions are deliberately being relaxed.
    """

    n: int
    order: tuple[Coalition, ...]
    costs: tuple[Fraction, ...]

    @cached_property
    def cost_map(self) -> dict[Coalition, Fraction]:
        return dict(zip(self.order, self.costs))

    def cost(self, mask: Coalition) -> Fraction:
        return self.cost_map[mask]

    @cached_property
    def _prefix(self) -> tuple[Fraction, ...]:
        return tuple(accumulate(self.costs, initial=Fraction(0)))

    def accrued(self, k: int) -> Fraction:
        """Total cost of the first ``k`` examinations."""
        return self._prefix[k]

    @property
    def stages(self) -> int:
        return len(self.order)

    def reordered(self, order: Sequence[Coalition]) -> CostProfile:
        """Same cost function, different examination order; not re-validated."""
        return CostProfile(self.n, tuple(order), tuple(self.cost_map[s] for s in order))


def lex_order(costs: Mapping[Coalition, Fraction]) -> tuple[Coalition, ...]:
    """Sort by cost, equal costs by ascending bitmask."""
    return tuple(sorted(costs, key=lambda s: (costs[s], s)))


def make_cost_profile(
    game: FullGame,
    costs: Mapping[Coalition, object],
    order: Sequence[Coalition] | None = None,
) -> CostProfile:
    """Validate examination costs against ``game`` and fix the order.

    Without an explicit ``order`` coalitions are examined by increasing cost,
    ties broken by the smaller bitmask.  A supplied order must list every
    non-trivial coalition once and be cost-nondecreasing.
    """
    n = game.n
    expected = set(co.nontrivial(n))
    table = {mask: as_rational(c) for mask, c in costs.items()}
    if set(table) != expected:
        extra = sorted(set(table) - expected)
        missing = sorted(expected - set(table))
        parts = []
        if missing:
            parts.append("missing " + ", ".join("{%s}" % co.format_key(s) for s in missing))
        if extra:
            parts.append("unexpected " + ", ".join("{%s}" % co.format_key(s) for s in extra))
        raise CostDomainMismatchError(
            "costs must cover exactly the non-trivial coalitions: " + "; ".join(parts)
        )
    for mask, c in table.items():
        if c < 0:
            raise NegativeCostError(f"cost of {{{co.format_key(mask)}}} is negative: {c}")
    for mask, c in table.items():
        if c > 0 and game[mask] == 0:
            raise Assumption1Violation(
                f"coalition {{{co.format_key(mask)}}} has worth 0 but cost {c}"
            )

    if order is None:
        seq = lex_order(table)
    else:
        seq = tuple(order)
        if len(seq) != len(expected) or set(seq) != expected:
            raise CostOrderError("order must be a permutation of the non-trivial coalitions")
        for a, b in zip(seq, seq[1:]):
            if table[a] > table[b]:
                raise CostOrderError(
                    f"order is not cost-nondecreasing: {{{co.format_key(a)}}} costs {table[a]}"
                    f" before {{{co.format_key(b)}}} at {table[b]}"
                )
    return CostProfile(n, seq, tuple(table[s] for s in seq))


@dataclass(frozen=True)
class PartialGame:
    """Worths known only on the coalitions in ``known``."""

    n: int
    known: frozenset[Coalition]
    worth: Mapping[Coalition, Fraction]

    def __getitem__(self, mask: Coalition) -> Fraction:
        return self.worth[mask]

    def __contains__(self, mask: Coalition) -> bool:
        return mask in self.known

    @property
    def grand(self) -> Coalition:
        return co.grand(self.n)


def base_family(n: int) -> frozenset[Coalition]:
    """Empty set, singletons and the grand coalition."""
    return frozenset([0, co.grand(n), *(1 << i for i in range(n))])


def _check_family(n: int, known: Iterable[Coalition]) -> frozenset[Coalition]:
    known = frozenset(known)
    missing = base_family(n) - known
    if missing:
        names = ", ".join("{%s}" % co.format_key(s) for s in sorted(missing))
        raise BadKnownFamilyError(f"known family lacks {names}")
    if any(not 0 <= s < (1 << n) for s in known):
        raise BadKnownFamilyError(f"known family has coalitions outside a {n}-player game")
    return known


def restrict(game: FullGame, known: Iterable[Coalition]) -> PartialGame:
    known = _check_family(game.n, known)
    return PartialGame(game.n, known, {s: game[s] for s in known})


def make_partial_game(n: int, worths: Mapping[Coalition, object]) -> PartialGame:
    """Validated partial game whose known family is the key set of ``worths``."""
    _check_n(n)
    table = {s: as_rational(x) for s, x in worths.items()}
    table.setdefault(0, Fraction(0))
    known = _check_family(n, table)
    if table[0] != 0:
        raise NonzeroEmptyWorthError("worth of the empty coalition must be 0")
    for s, x in table.items():
        if x < 0:
            raise NegativeWorthError(f"worth of {{{co.format_key(s)}}} is negative: {x}")
    if table[co.grand(n)] <= 0:
        raise ZeroGrandWorthError("worth of the grand coalition must be positive")
    return PartialGame(n, known, table)


def stage_family(profile: CostProfile, k: int) -> frozenset[Coalition]:
    """Known coalitions after the first ``k`` examinations."""
    if not 0 <= k <= profile.stages:
        raise StageOutOfRangeError(f"stage {k} outside 0..{profile.stages}")
    return base_family(profile.n) | frozenset(profile.order[:k])


# -- game algebra -----------------------------------------------------------


def _same_n(v: FullGame, w: FullGame) -> None:
    if v.n != w.n:
        raise DimensionMismatchError(f"games have {v.n} and {w.n} players")


def game_sum(v: FullGame, w: FullGame) -> FullGame:
    _same_n(v, w)
    return FullGame(v.n, tuple(a + b for a, b in zip(v.worth, w.worth)))


def game_difference(v: FullGame, w: FullGame) -> FullGame:
    _same_n(v, w)
    return FullGame(v.n, tuple(a - b for a, b in zip(v.worth, w.worth)))


def game_scale(v: FullGame, factor) -> FullGame:
    factor = as_rational(factor)
    return FullGame(v.n, tuple(factor * a for a in v.worth))


def game_sum_capped(v: FullGame, w: FullGame, alpha) -> FullGame:
    """Pointwise sum that keeps the grand-coalition worth pinned at ``alpha``."""
    _same_n(v, w)
    alpha = as_rational(alpha)
    if v.grand_worth != alpha or w.grand_worth != alpha:
        raise AlphaMismatchError(
            f"both games need grand worth {alpha}, got {v.grand_worth} and {w.grand_worth}"
        )
    worth = [a + b for a, b in zip(v.worth, w.worth)]
    worth[-1] = alpha
    return FullGame(v.n, tuple(worth))


def game_join(v: FullGame, w: FullGame) -> FullGame:
    _same_n(v, w)
    return FullGame(v.n, tuple(max(a, b) for a, b in zip(v.worth, w.worth)))


def game_meet(v: FullGame, w: FullGame) -> FullGame:
    _same_n(v, w)
    return FullGame(v.n, tuple(min(a, b) for a, b in zip(v.worth, w.worth)))


def profile_sum(pv: CostProfile, pw: CostProfile, game: FullGame) -> CostProfile:
    """Cost profile of a sum game: the k-th cost is the sum of the k-th costs.

    When both operands examine coalitions in the same order the summed game
    keeps that order.  Otherwise the order of ``game`` is recomputed by sorting
    coalitions on their coalition-wise summed cost (ties by bitmask) and the
    summed sequence is laid along it.  Assumption 1 is then checked against
    ``game`` and may raise ``Assumption1Violation``.
    """
    if pv.n != pw.n or pv.n != game.n:
        raise DimensionMismatchError("profiles and game disagree on the player count")
    seq = tuple(a + b for a, b in zip(pv.costs, pw.costs))
    if pv.order == pw.order:
        order = pv.order
    else:
        combined = {s: pv.cost(s) + pw.cost(s) for s in pv.order}
        order = lex_order(combined)
    return make_cost_profile(game, dict(zip(order, seq)), order=order)


def unanimity_game(n: int, mask: Coalition, coeff=1) -> FullGame:
    """``coeff`` on every superset of ``mask``, 0 elsewhere."""
    _check_n(n)
    if mask == 0:
        raise EmptyCoalitionError("unanimity game needs a non-empty coalition")
    coeff = as_rational(coeff)
    zero = Fraction(0)
    return FullGame(n, tuple(coeff if t & mask == mask else zero for t in range(1 << n)))


def unity_game(v: FullGame, mask: Coalition) -> FullGame:
    """Keep singletons, ``mask`` and N; zero out every other coalition."""
    if co.is_trivial(mask, v.n):
        raise TrivialCoalitionError(
            f"unity game needs a coalition with 2..{v.n - 1} players, got {{{co.format_key(mask)}}}"
        )
    keep = base_family(v.n) | {mask}
    zero = Fraction(0)
    return FullGame(v.n, tuple(x if t in keep else zero for t, x in enumerate(v.worth)))


def moebius_decompose(game: FullGame) -> dict[Coalition, Fraction]:
    """Unanimity coefficients c_S with game = sum_S c_S u_S.

    In-place subset-lattice Moebius transform, O(n 2^n).
    """
    coeffs = list(game.worth)
    for i in range(game.n):
        bit = 1 << i
        for s in range(len(coeffs)):
            if s & bit:
                coeffs[s] -= coeffs[s ^ bit]
    return {s: coeffs[s] for s in range(1, len(coeffs))}


def recompose(n: int, coeffs: Mapping[Coalition, object]) -> FullGame:
    """Inverse of ``moebius_decompose``: sum of scaled unanimity games."""
    worth = [Fraction(0)] * (1 << n)
    for s, c in coeffs.items():
        worth[s] = as_rational(c)
    for i in range(n):
        bit = 1 << i
        for s in range(len(worth)):
            if s & bit:
                worth[s] += worth[s ^ bit]
    return FullGame(n, tuple(worth))
