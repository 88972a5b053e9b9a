"""Exception types shared across the package.

Every error that can surface through the command line carries a distinct
``exit_code`` so that shell consumers can tell failure modes apart.  Exit
code 0 is reserved for a certified pipeline run, 1 for unexpected
(non-stm) exceptions, and 2 for command-line usage errors (argparse owns
that one), so package errors start at 10.
"""


class StmError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class NotABijection(StmError):
    """A permutation table does not describe a bijection of {1, ..., n}."""

    exit_code = 10


class Disconnected(StmError):
    """The pair (sigma_h, sigma_v) does not act transitively on the squares."""

    exit_code = 11


class UnknownName(StmError):
    """A catalog lookup used a name that is not in the catalog."""

    exit_code = 12


class OrbitTooLarge(StmError):
    """The SL(2,Z)-orbit exceeded the configured node cap."""

    exit_code = 13


class WordDoesNotStabilize(StmError):
    """A group word was expected to fix the base origami but moves it."""

    exit_code = 14


class NonCycleInput(StmError):
    """A chain that should have been a cycle has nonzero boundary."""

    exit_code = 15


class NotInSpan(StmError):
    """A cycle could not be expressed in the requested basis."""

    exit_code = 16


class NotAnAutomorphism(StmError):
    """A permutation does not commute with both gluing permutations."""

    exit_code = 17


class NonCommutingGenerators(StmError):
    """Simultaneous eigenspaces were requested for non-commuting matrices."""

    exit_code = 18


class IrrationalEigenvalue(StmError):
    """An eigenvalue needed for the decomposition is not rational."""

    exit_code = 19


class NotIrreducible(StmError):
    """A subrepresentation expected to be irreducible admits a splitting."""

    exit_code = 20


class DecompositionIncomplete(StmError):
    """Isotypic pieces failed to fill the homology; carries the partial report."""

    exit_code = 21

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class UnsupportedAlgebraType(StmError):
    """A division algebra other than R appeared where the bound needs R."""

    exit_code = 22


class NotUnipotent(StmError):
    """A logarithm was requested for a matrix with (m - I) not nilpotent."""

    exit_code = 23


class NotCertified(StmError):
    """Lower and upper Zariski bounds disagree; carries the partial verdict."""

    exit_code = 24

    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict
