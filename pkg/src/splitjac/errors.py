"""Typed errors shared by all modules."""


class MathDomainError(ValueError):
    """A mathematical precondition on the input failed.

    ``condition`` carries the violated condition as machine-readable text,
    e.g. ``"disc(P) = 0"`` or ``"a^3 = -1"``, so callers (and the CLI) can
    report exactly which inequality was broken.
    """

    def __init__(self, message: str, condition: str | None = None):
        super().__init__(message)
        self.condition = condition if condition is not None else message


class ParseError(ValueError):
    """An exact-value encoding (rational string, quad-ext JSON, ...) failed to parse."""
