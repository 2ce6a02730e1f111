# errors.py
"""
Exception hierarchy.

Every failure is a ValueError so callers that only know about ValueError
(the CLI, the bootstrap script) keep working; subclasses let the harness tell
a bad scenario apart from an operation outside the supported scope.
"""
from typing import Optional


class DomainError(ValueError):
    """Arithmetic or geometric input outside the domain of an operation."""


class IndexOutOfRange(DomainError):
    """Structure-map index outside the bidegree of the chain."""


class ValidationError(ValueError):
    """A scenario, group table or bundle violates one of its invariants."""


class ScenarioParseError(ValidationError):
    """Scenario file could not be parsed."""

    def __init__(
        self,
        message: str,
        path: Optional[str] = None,
        line: Optional[int] = None,
        column: Optional[int] = None,
    ):
        self.path = path
        self.line = line
        self.column = column
        location = path or "<scenario>"
        if line is not None:
            location += f":{line}"
            if column is not None:
                location += f":{column}"
        super().__init__(f"{location}: {message}")


class UnsupportedOperation(ValueError):
    """Operation exists but not for this group or scenario."""
