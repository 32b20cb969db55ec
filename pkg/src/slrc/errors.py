"""Exception types shared across the package."""


class SlrcError(Exception):
    """Base class for all package errors."""


class FieldError(SlrcError, ValueError):
    """Bad field specification or mixed-field operands."""


class ParameterError(SlrcError, ValueError):
    """Construction parameters violate an admissibility constraint."""


class ConstructionError(SlrcError, RuntimeError):
    """A candidate matrix failed its required verification."""


class DesignError(SlrcError, ValueError):
    """An incidence structure violates a design invariant."""


class InfeasibleError(SlrcError, RuntimeError):
    """A requested exhaustive search is too large for desk-scale work."""
