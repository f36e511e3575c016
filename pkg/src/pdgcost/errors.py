"""Exception hierarchy.

Everything a caller can trigger with bad input derives from ``GameError``;
``GameFileError`` covers syntactic problems with a game file and the rest are
validation failures of otherwise well-formed data.
"""


class GameError(ValueError):
    """Base class for invalid games, profiles and arguments."""


class GameFileError(GameError):
    """A game file could not be parsed."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class CoalitionKeyError(GameFileError):
    pass


class PlayerCountError(GameError):
    pass


class MissingCoalitionError(GameError):
    pass


class NegativeWorthError(GameError):
    pass


class ZeroGrandWorthError(GameError):
    pass


class NonzeroEmptyWorthError(GameError):
    pass


class NegativeCostError(GameError):
    pass


class CostDomainMismatchError(GameError):
    pass


class CostOrderError(GameError):
    """A supplied examination order is not a cost-nondecreasing permutation."""


class Assumption1Violation(GameError):
    """A coalition of worth zero was given a positive examination cost."""


class BadKnownFamilyError(GameError):
    pass


class StageOutOfRangeError(GameError):
    pass


class DimensionMismatchError(GameError):
    pass


class AlphaMismatchError(GameError):
    pass


class EmptyCoalitionError(GameError):
    pass


class TrivialCoalitionError(GameError):
    pass


class CoalitionNotKnownError(GameError):
    pass


class TooManyPlayersError(GameError):
    pass
