"""Exception hierarchy shared across the package.

The CLI maps these onto its exit-code contract: bad input is exit 2,
an identity that fails to hold is exit 1, a blown size budget is exit 3.
"""


class SerinvError(Exception):
    """Base class for all package-specific errors."""


class InputError(SerinvError):
    """Malformed or inconsistent input (maps to a usage error in the CLI)."""


class PrecisionError(InputError):
    """More coefficients were requested than a truncated object stores."""


class VariableMismatchError(InputError):
    """Two series in different variables were combined."""


class NotInvertibleError(InputError):
    """Series inversion requires a unit constant coefficient."""


class CompositionDomainError(InputError):
    """Series composition requires the inner series to vanish at 0."""


class UnknownVariableError(InputError):
    """A substitution referenced an indeterminate the polynomial does not know."""


class BudgetExceededError(SerinvError):
    """A determinant size cap was exceeded (maps to exit code 3)."""


class ExactDivisionError(SerinvError):
    """Exact division failed.

    Fraction-free elimination guarantees divisibility over an integral
    domain, so this signals a bug in the ring arithmetic and is never
    caught by normal control flow.
    """
