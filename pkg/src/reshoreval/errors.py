"""Exception types shared across the toolkit."""

from __future__ import annotations

from typing import Iterable


class ReshorevalError(Exception):
    """Base class for every error this package raises on purpose."""


class DomainError(ReshorevalError):
    """A value lies outside the domain an operation is defined on."""


class ConfigError(ReshorevalError):
    """Inputs are internally inconsistent (mismatched keys, missing factors)."""


class InputError(ReshorevalError):
    """User-supplied data is malformed or contradictory.

    ``diagnostics`` holds the individual findings when the error comes from
    the dataset loader; each one knows its file, row, and column.
    """

    def __init__(self, message: str, diagnostics: Iterable[object] = ()) -> None:
        super().__init__(message)
        self.diagnostics = list(diagnostics)
