"""Exception hierarchy shared across the package.

Everything user-triggerable derives from :class:`GddxError` so callers (CLI,
HTTP service, fuzz harnesses) can catch one family and turn it into a
diagnostic instead of a traceback.
"""
from __future__ import annotations


class GddxError(Exception):
    """Base class for all errors raised deliberately by this package."""


class FactError(GddxError):
    """A predicate/point tuple that does not form a well-formed fact."""


class ConstructionError(GddxError):
    """An ill-formed construction (bad label, duplicate, undefined arg...)."""


class ParseError(GddxError):
    """Line-numbered diagnostic for any of the text input formats."""

    def __init__(self, message: str, line: int = 1, token: str | None = None):
        self.line = int(line) if line and line > 0 else 1
        self.token = token
        super().__init__(message)

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return f"line {self.line}: {super().__str__()}"


class CatalogError(ParseError):
    """Malformed localization catalog."""


class RuleError(ParseError):
    """Malformed rule file."""


class DegenerateError(GddxError):
    """A construction could not be realized without near-coincidences."""

    def __init__(self, message: str, step: str | None = None, attempts: int = 0):
        self.step = step
        self.attempts = attempts
        super().__init__(message)


class LimitError(GddxError):
    """A resource budget (facts, rounds, wall clock, monomials) was exhausted.

    ``partial`` carries whatever state was built before the budget tripped,
    when the caller can make use of it.
    """

    def __init__(self, message: str, kind: str, partial=None):
        self.kind = kind
        self.partial = partial
        super().__init__(message)


class AlgebraError(GddxError):
    """Invalid polynomial operation or an inconsistent hypothesis system."""


class UnsupportedGoalError(GddxError):
    """The selected backend cannot express the requested goal."""


class ProofExtractionError(GddxError):
    """Internal inconsistency while reconstructing a proof (a bug if seen)."""
