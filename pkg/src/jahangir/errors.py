"""Exception types shared across the package."""


class ParameterDomainError(ValueError):
    """A numeric parameter is outside its documented domain."""


class GraphValidationError(ValueError):
    """An edge list violates the simple-graph invariants."""


class SizeGuardError(ValueError):
    """Input exceeds a guard meant to keep an expensive check cheap."""


class EnumerationCapError(RuntimeError):
    """An enumeration would produce more trees than the configured cap."""


class EngineDisagreementError(RuntimeError):
    """Independent counting engines returned different results."""
