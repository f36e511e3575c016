"""Reading and writing game files.

A game file is a JSON document::

    {
      "players": 3,
      "worth": {"1": 5, "2": 3, "3": 0, "1,2": 10, "1,3": 8, "2,3": 5, "N": 20},
      "costs": {"1,2": 3, "1,3": 2, "2,3": 2},
      "order": ["1,3", "2,3", "1,2"]
    }

Rationals are JSON integers, finite decimals, or strings ``"p/q"``.  Written
files always use ``"p/q"`` strings and list the examination order.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from . import coalitions as co
from .errors import CoalitionKeyError, GameFileError
from .game import CostProfile, FullGame, make_cost_profile, make_full_game

_RATIONAL = re.compile(r"\s*-?\d+(\s*/\s*\d+|\.\d*)?\s*")


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _locate(text: str, key: str) -> tuple[int | None, int | None]:
    idx = text.find(json.dumps(key))
    if idx < 0:
        return None, None
    line = text.count("\n", 0, idx) + 1
    col = idx - (text.rfind("\n", 0, idx) + 1) + 1
    return line, col


def _rational(value, where: str, text: str, key: str) -> Fraction:
    if isinstance(value, bool):
        pass
    elif isinstance(value, (int, Fraction)):
        return Fraction(value)
    elif isinstance(value, str) and _RATIONAL.fullmatch(value):
        try:
            return Fraction(value.replace(" ", ""))
        except ZeroDivisionError:
            pass
    raise GameFileError(f"{where}: {value!r} is not a rational", *_locate(text, key))


def _coalition_table(obj, section: str, n: int, text: str) -> dict[int, Fraction]:
    if not isinstance(obj, dict):
        raise GameFileError(f'"{section}" must be an object keyed by coalition')
    out: dict[int, Fraction] = {}
    for key, value in obj.items():
        try:
            mask = co.parse_key(key, n)
        except CoalitionKeyError as exc:
            raise CoalitionKeyError(f"{section}: {exc}", *_locate(text, key)) from None
        if mask in out:
            raise GameFileError(
                f"{section}: coalition {{{co.format_key(mask)}}} listed twice", *_locate(text, key)
            )
        out[mask] = _rational(value, f"{section}[{key!r}]", text, key)
    return out


def parse_game(text: str) -> tuple[FullGame, CostProfile]:
    """Parse and validate a game file.

    Raises ``GameFileError`` for malformed documents and other ``GameError``
    subclasses when the content violates a game invariant.
    """
    try:
        doc = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise GameFileError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise GameFileError("top level must be an object")
    unknown = set(doc) - {"players", "worth", "costs", "order"}
    if unknown:
        raise GameFileError(f"unknown field(s): {', '.join(sorted(unknown))}")
    n = doc.get("players")
    if not isinstance(n, int) or isinstance(n, bool):
        raise GameFileError('"players" must be an integer')
    if "worth" not in doc:
        raise GameFileError('missing "worth"')
    worth = _coalition_table(doc["worth"], "worth", n, text)
    costs = _coalition_table(doc.get("costs", {}), "costs", n, text)
    order = None
    if "order" in doc:
        raw = doc["order"]
        if not isinstance(raw, list) or not all(isinstance(k, str) for k in raw):
            raise GameFileError('"order" must be a list of coalition keys')
        order = []
        for key in raw:
            try:
                order.append(co.parse_key(key, n))
            except CoalitionKeyError as exc:
                raise CoalitionKeyError(f"order: {exc}", *_locate(text, key)) from None
    game = make_full_game(n, worth)
    return game, make_cost_profile(game, costs, order)


def load_game(path: str | Path) -> tuple[FullGame, CostProfile]:
    return parse_game(Path(path).read_text())


def to_document(game: FullGame, profile: CostProfile) -> dict:
    keys = co.by_size(range(1, 1 << game.n))
    return {
        "players": game.n,
        "worth": {co.format_key(s): format_rational(game[s]) for s in keys},
        "costs": {co.format_key(s): format_rational(profile.cost(s)) for s in keys if s in profile.cost_map},
        "order": [co.format_key(s) for s in profile.order],
    }


def dump_game(game: FullGame, profile: CostProfile) -> str:
    return json.dumps(to_document(game, profile), indent=2) + "\n"
