"""Structural predicates on games used by the value axioms."""

from __future__ import annotations

from . import coalitions as co
from .coalitions import Coalition
from .errors import CoalitionNotKnownError
from .game import FullGame, PartialGame


def is_partnership(game: FullGame, mask: Coalition) -> bool:
    """Every coalition that does not contain ``mask`` has worth 0.

    Quantifies over all coalitions of the full game, known or not.
    """
    return all(game[t] == 0 for t in range(1 << game.n) if t & mask != mask)


def is_zero_coalition(pg: PartialGame, mask: Coalition) -> bool:
    return all(pg[t] == 0 for t in pg.known if t & mask == t)


def is_p_type(pg: PartialGame, p: Coalition) -> bool:
    if p == 0:
        return False
    for s in pg.known:
        if p & ~s == 0:
            continue
        rest = s & ~p
        if rest in pg.known:
            if pg[s] != pg[rest]:
                return False
        elif not is_zero_coalition(pg, s):
            return False
    return True


def is_carrier(pg: PartialGame, mask: Coalition) -> bool:
    """Every known worth is the worth of its (known) intersection with ``mask``.

    An intersection outside the known family disqualifies ``mask``.
    """
    if mask not in pg.known:
        raise CoalitionNotKnownError(f"{{{co.format_key(mask)}}} is not a known coalition")
    for t in pg.known:
        cut = t & mask
        if cut not in pg.known or pg[t] != pg[cut]:
            return False
    return True
