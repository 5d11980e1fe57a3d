"""Exception types shared across the package."""


class ParseError(ValueError):
    """A line of an edge list could not be read."""

    def __init__(self, lineno: int, line: str, reason: str):
        self.lineno = lineno
        self.line = line
        self.reason = reason
        super().__init__(f"line {lineno}: {reason}: {line!r}")


class ContractViolation(ValueError):
    """A caller broke an operation's precondition."""


class AlphabetExhausted(ContractViolation):
    """A motif needs more distinct local labels than the code alphabet holds."""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed (e.g. a negative merged counter)."""
