"""Exception hierarchy shared by the engine and the command-line tool."""


class SyzkitError(Exception):
    """Base class for all errors raised by syzkit."""


class DimensionError(SyzkitError, ValueError):
    """Operands have incompatible shapes or dimensions."""


class SingularMatrixError(SyzkitError, ArithmeticError):
    pass


class ValidationError(SyzkitError, ValueError):
    """Input data violates a documented precondition (e.g. non-commuting matrices)."""


class NotReducedError(ValidationError):
    pass


class InfiniteQuotientError(ValidationError):
    """The staircase of a set of leading monomials is not finite."""


class StructuralAssumptionError(SyzkitError):
    """The leading module does not satisfy the structural assumption.

    ``generator`` is the offending minimal generator, ``pair`` the 0-based
    variable indices ``(i, j)`` with ``i < j`` such that ``X_i / X_j * generator``
    leaves the leading module.
    """

    def __init__(self, generator, pair):
        self.generator = generator
        self.pair = pair
        i, j = pair
        super().__init__(
            f"structural assumption fails at generator {generator}: "
            f"X{i + 1}/X{j + 1} * generator is not in the leading module"
        )


class InvariantError(SyzkitError, AssertionError):
    """An internal consistency check failed; indicates corrupted input or a bug."""


class OracleLimitError(SyzkitError):
    """A brute-force oracle refused to run because the problem is too large."""
