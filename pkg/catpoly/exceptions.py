"""Exception hierarchy shared by the services and the CLI."""
from typing import Optional


class CatpolyError(Exception):
    """Base class for every error raised on bad user input or violated hypotheses."""


class CompositionError(CatpolyError, ValueError):
    """Malformed composition text or a composition outside an operation's domain."""


class TreeError(CatpolyError, ValueError):
    """Input that is not a simple tree (cycle, disconnection, loop, duplicate edge)."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotACaterpillarError(TreeError):
    """The tree's internal vertices do not induce a non-trivial path, or it is not proper."""


class HypothesisError(CatpolyError, ValueError):
    """A theorem was invoked on inputs that do not satisfy one of its hypotheses."""

    def __init__(self, hypothesis: str, message: str):
        self.hypothesis = hypothesis
        super().__init__(f"hypothesis '{hypothesis}' failed: {message}")


class CapExceededError(CatpolyError):
    """An enumeration would exceed the configured cap."""


class CoefficientOverflowError(CatpolyError, OverflowError):
    """A polynomial coefficient left the signed 64-bit range."""


class TheoremViolation(CatpolyError):
    """A computed quantity disagrees with a proven identity (a bug, or a genuine counterexample)."""
