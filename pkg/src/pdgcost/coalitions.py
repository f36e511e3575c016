"""Coalitions as integer bitmasks.

Player ``i`` (0-based) is bit ``1 << i``.  Externally players are 1-based and a
coalition is written as a comma-joined ascending list, e.g. ``"1,3"``; the key
``"N"`` is accepted for the grand coalition.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import CoalitionKeyError

Coalition = int


def coalition(*players: int) -> Coalition:
    """Build a coalition from 1-based player ids: ``coalition(1, 3) == 0b101``."""
    mask = 0
    for p in players:
        if p < 1:
            raise ValueError(f"player ids are 1-based, got {p}")
        mask |= 1 << (p - 1)
    return mask


def grand(n: int) -> Coalition:
    return (1 << n) - 1


def size(mask: Coalition) -> int:
    return bin(mask).count("1")


def members(mask: Coalition) -> list[int]:
    """0-based player indices in ``mask``."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def is_subset(a: Coalition, b: Coalition) -> bool:
    return a & b == a


def submasks(mask: Coalition) -> Iterator[Coalition]:
    """All subsets of ``mask`` including ``mask`` itself and the empty set."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def all_coalitions(n: int) -> range:
    return range(1 << n)


def is_trivial(mask: Coalition, n: int) -> bool:
    """True for the empty set, singletons and the grand coalition."""
    return mask == 0 or size(mask) == 1 or mask == grand(n)


def nontrivial(n: int) -> list[Coalition]:
    """The 2^n - n - 2 coalitions whose worth starts out unknown, ascending."""
    return [s for s in all_coalitions(n) if not is_trivial(s, n)]


def by_size(masks: Iterable[Coalition]) -> list[Coalition]:
    return sorted(masks, key=lambda s: (size(s), s))


def format_key(mask: Coalition) -> str:
    return ",".join(str(i + 1) for i in members(mask))


def parse_key(key: str, n: int) -> Coalition:
    """Parse an external coalition key.

    The empty string is the empty coalition.  Player ids must be strictly
    ascending integers in ``1..n``.
    """
    if key == "N":
        return grand(n)
    if key == "":
        return 0
    mask = 0
    prev = 0
    for part in key.split(","):
        part = part.strip()
        if not part.isdigit():
            raise CoalitionKeyError(f"coalition key {key!r}: {part!r} is not a player id")
        p = int(part)
        if not 1 <= p <= n:
            raise CoalitionKeyError(f"coalition key {key!r}: player {p} outside 1..{n}")
        if p <= prev:
            raise CoalitionKeyError(
                f"coalition key {key!r}: player ids must be sorted ascending without repeats"
            )
        prev = p
        mask |= 1 << (p - 1)
    return mask
