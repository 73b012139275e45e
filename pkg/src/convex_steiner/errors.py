"""Exceptions raised by the Steiner toolkit.

Each class is a distinct failure kind; the command line maps them to exit
statuses.
"""


class DisconnectedGraphError(ValueError):
    """The input graph (or interval intersection graph) is not connected."""


class InfeasibleTerminalsError(ValueError):
    """The terminal set does not fit the instance or the requested solver."""


class OracleScaleError(ValueError):
    """A brute-force oracle was asked to enumerate an instance beyond its guard."""


class InstanceParseError(ValueError):
    """An instance file could not be parsed.

    Attributes:
        line (int): 1-based line of the offending token.
        column (int): 1-based column of the offending token.
    """

    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class TableInconsistencyError(RuntimeError):
    """The R subset Y table reached an entry no recursion case applies to."""
