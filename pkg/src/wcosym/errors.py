"""Exception types shared across the package.

Each class tags one distinguishable failure condition; the CLI maps them
onto exit codes (bad input vs internal error).
"""


class WcoError(Exception):
    """Base class for all package errors."""


# ---- mobius ----------------------------------------------------------------

class PoleAtInputError(WcoError):
    """Evaluation point sits on (or numerically at) the pole of the map."""


class IdentityMapError(WcoError):
    """Operation undefined for the identity map (every point is fixed)."""


class NotSelfMapError(WcoError):
    """Map does not send the open unit disk into itself."""


class DegenerateMapError(WcoError):
    """Coefficient quadruple has (numerically) vanishing determinant."""


class ConstantMapError(WcoError):
    """Operation rejects constant maps."""


# ---- series ----------------------------------------------------------------

class PoleAtOriginError(WcoError):
    """Rational symbol has a pole at z = 0 and admits no Taylor expansion."""


class OrderMismatchError(WcoError):
    """Series operands have different truncation orders."""


class NotContractiveError(WcoError):
    """Composition symbol has |m(0)| too close to 1 for re-expansion."""


class OutsideDiskError(WcoError):
    """Kernel point lies outside the open unit disk."""


# ---- operators -------------------------------------------------------------

class SymbolPoleError(WcoError):
    """Weight symbol has a pole inside or on the closed unit disk."""


class BlockTooLargeError(WcoError):
    """Requested residual block violates the padding protocol k + 32 <= N."""


class DimensionMismatchError(WcoError):
    """Operands were truncated at different dimensions."""


class BadParameterDomainError(WcoError):
    """Conjugation parameters outside their admissible domain."""


# ---- families --------------------------------------------------------------

class DomainViolationError(WcoError):
    """Family parameters outside the stated domain."""


class DegenerateSymbolError(WcoError):
    """Family parameters make the symbol pair degenerate."""


class BranchConditionError(WcoError):
    """Parabolic branch condition on the parameter is violated."""


class DiscriminantError(WcoError):
    """Parabolic discriminant identity is violated."""


# ---- verify / cli ----------------------------------------------------------

class UnknownSuiteError(WcoError):
    """No verification suite registered under the requested id."""


class CliParseError(WcoError):
    """Command-line argument could not be parsed."""
