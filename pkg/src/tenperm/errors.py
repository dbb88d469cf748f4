"""Exception types shared across the library."""

from __future__ import annotations


class NoConvergenceError(RuntimeError):
    """An iterative routine hit its iteration (or sweep) cap before meeting tolerance.

    Carries diagnostics so a caller can inspect how far the run got:
    ``iterations`` completed, the last ``residual``, and for the eigen solver
    the last iterate ``vector`` and its Rayleigh ``value``.
    """

    def __init__(self, message, *, iterations=None, residual=None, vector=None, value=None):
        super().__init__(message)
        self.iterations = iterations
        self.residual = residual
        self.vector = vector
        self.value = value


class SingularSystemError(ValueError):
    """A linear system missed the required residual bound even after regularization."""


class FormatError(ValueError):
    """A text stream does not conform to one of the tensor file formats."""

    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message
