"""Exceptions shared across the workbench."""

from __future__ import annotations


class InputError(ValueError):
    """Raised when user-supplied data violates a documented precondition."""


class UnsupportedFieldError(InputError):
    """Raised when a field description cannot be parsed or is out of range."""
