"""Exception types shared across the package."""


class SpectraMixError(Exception):
    """Base class for all errors raised by spectramix."""


class DomainError(SpectraMixError, ValueError):
    """An input value lies outside the documented domain of an operation."""


class DegenerateIlluminantError(DomainError):
    """Illuminant normalization factor is zero (or not positive)."""


class CatalogError(SpectraMixError, ValueError):
    """Catalog stream could not be parsed or violates catalog invariants."""


class NonConvergenceError(SpectraMixError, RuntimeError):
    """A reflectance recovery did not converge within its iteration budget."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}
