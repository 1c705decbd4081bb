"""Exception types shared across the package.

Everything user-facing derives from NoethError so the CLI can map domain
failures to a single exit status; ParseError carries source coordinates.
"""

from __future__ import annotations


class NoethError(Exception):
    """Base class for domain errors (violated preconditions, bad input)."""


class RingMismatchError(NoethError):
    """Operands live over incompatible rings."""


class ZeroPolynomialError(NoethError):
    """An operation that needs a nonzero polynomial got the zero polynomial."""


class InfiniteStaircaseError(NoethError):
    """The residual monomials are not finite (missing pure power in some variable)."""


class NotEliminationOrderError(NoethError):
    """The ordering cannot certify membership of leading terms in the parameter block."""


class NormalPositionError(NoethError):
    """The ideal is not in normal position; carries the diagnostic report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class IterationLimitError(NoethError):
    """The parameter-power iteration exceeded its hard cap without stabilizing."""


class UnsolvableSystemError(NoethError):
    """The closure/annihilation system has no new solution before reaching the multiplicity."""


class NotClosedError(NoethError):
    """An operator family is not stable under the lowering morphisms."""


class ParseError(Exception):
    """Problem-file syntax error with 1-based source position."""

    def __init__(self, message, line, column):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
