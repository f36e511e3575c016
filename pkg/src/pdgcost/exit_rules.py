"""Exit rules: when to stop paying for coalition-worth examinations.

A rule maps a game and its cost profile to flags ``f[0..m-1]`` where
``f[k-1] == 1`` means the k-th examination is not performed.  Rules are
evaluated literally, so a raw vector may contain a 0 after a 1; once a stop is
signalled nothing further is examined, which ``effective_stop`` applies.

Each rule reads the worth of S_{k-1} only while deciding step k, i.e. after
that coalition has been examined.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass

from .errors import DimensionMismatchError
from .game import CostProfile, FullGame
from .values import Payoff, staged_value

IndicatorVector = tuple[int, ...]
Rule = Callable[[FullGame, CostProfile], IndicatorVector]


def _check(game: FullGame, profile: CostProfile) -> None:
    if game.n != profile.n:
        raise DimensionMismatchError(f"game has {game.n} players, profile {profile.n}")


def gamma(game: FullGame, profile: CostProfile) -> IndicatorVector:
    """Stop once the last examined worth reaches the cost-reduced grand worth."""
    _check(game, profile)
    flags = [0] * profile.stages
    for k in range(2, profile.stages + 1):
        last = game[profile.order[k - 2]]
        if last >= game.grand_worth - profile.accrued(k - 1):
            flags[k - 1] = 1
    return tuple(flags)


def gamma_A(game: FullGame, profile: CostProfile) -> IndicatorVector:
    """Examine everything."""
    _check(game, profile)
    return (0,) * profile.stages


def gamma_B(game: FullGame, profile: CostProfile) -> IndicatorVector:
    """Continue only while examinations keep turning up zero worth."""
    _check(game, profile)
    flags = [0] * profile.stages
    for k in range(2, profile.stages + 1):
        if game[profile.order[k - 2]] != 0:
            flags[k - 1] = 1
    return tuple(flags)


RULES: dict[str, Rule] = {"gamma": gamma, "gammaA": gamma_A, "gammaB": gamma_B}


@dataclass(frozen=True)
class ExitTrace:
    raw: IndicatorVector
    stop_stage: int | None
    examinations_performed: int


def effective_stop(raw: Sequence[int]) -> ExitTrace:
    raw = tuple(raw)
    for k, flag in enumerate(raw, 1):
        if flag:
            return ExitTrace(raw, k, k - 1)
    return ExitTrace(raw, None, len(raw))


def closure(raw: Sequence[int]) -> IndicatorVector:
    """Monotone closure: every flag after the first 1 becomes 1."""
    out = []
    seen = 0
    for flag in raw:
        seen = seen or int(bool(flag))
        out.append(seen)
    return tuple(out)


def run_examination(
    game: FullGame, profile: CostProfile, rule: str | Rule
) -> tuple[ExitTrace, Payoff]:
    """Apply ``rule`` and return the trace with the payoffs where it stops."""
    if isinstance(rule, str):
        try:
            rule = RULES[rule]
        except KeyError:
            raise ValueError(f"unknown rule {rule!r}; choose from {', '.join(RULES)}") from None
    trace = effective_stop(rule(game, profile))
    return trace, staged_value(game, profile).column(trace.examinations_performed)
