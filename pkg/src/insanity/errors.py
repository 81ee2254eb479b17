"""
Exceptions raised by the Insanity puzzle engine.

Every error carries an ``exit_status`` used by the command line:
1 for domain errors (the input is well formed but not a valid puzzle),
2 for usage and parse errors.
"""


class InsanityError(ValueError):
    """Base class for all engine errors."""

    exit_status = 1


# Domain errors

class ImproperRow(InsanityError):
    """A cube does not show every color of the basis."""


class DuplicateCube(InsanityError):
    """Two cubes of a puzzle have the same cube type."""


class LengthMismatch(InsanityError):
    """Two partial solutions of different length were compared."""


class BadL(InsanityError):
    """Solution set size outside 1..3."""


class NotIndependent(InsanityError):
    """The members of a solution set share a selected entry."""


class WrongCount(InsanityError):
    """The block puzzle needs exactly four cubes."""


class UnsolvableTower(InsanityError):
    """A tower realization failed its own long-face check."""


# Usage / parse errors

class WrongArity(InsanityError):
    """Row count or row width does not match the basis."""

    exit_status = 2


class UnknownColor(InsanityError):
    """A token is not a color (or pair product) of the basis."""

    exit_status = 2


class ParseError(InsanityError):
    """Malformed puzzle text."""

    exit_status = 2


class BadThreads(InsanityError):
    """Thread count from INSANITY_THREADS is not an integer."""

    exit_status = 2
