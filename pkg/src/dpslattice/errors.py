"""Exception hierarchy shared across the package.

Everything derives from DomainError so the CLI can map domain failures
to a single exit code while usage errors keep argparse's own handling.
"""


class DomainError(ValueError):
    """A precondition of a library operation was violated."""


class DimensionMismatch(DomainError):
    """Operands live in different ambient dimensions."""


class NotUnimodular(DomainError):
    """Matrix determinant is not +1 or -1."""


class EmptyInput(DomainError):
    """An operation received an empty point list or difference set."""


class NotDps(DomainError):
    """Input polytope was required to be distinct pair-sum but is not."""


class CageNotHalvable(DomainError):
    """A Newton cage vertex has an odd coordinate, so half the cage is not a lattice polytope."""
