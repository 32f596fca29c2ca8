"""Exception hierarchy shared by every module."""


class MincutError(Exception):
    pass


class StrictViolation(MincutError):
    """Duplicate edge or self-loop rejected in strict mode."""

    def __init__(self, pair, reason):
        self.pair = pair
        self.reason = reason
        super().__init__(f"{reason}: {pair[0]} {pair[1]}")


class EmptyGraph(MincutError):
    pass


class OverlappingSets(MincutError):
    pass


class OverlappingFamily(MincutError):
    pass


class ParseError(MincutError):
    def __init__(self, line_no, message):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class FormatMismatch(MincutError):
    pass


class InvalidPhi(MincutError):
    pass


class ConvergenceFailure(MincutError):
    pass


class TooLarge(MincutError):
    pass


class ExhaustiveTooLarge(TooLarge):
    pass


class GraphTooSmall(MincutError):
    pass


class InvariantViolation(MincutError):
    """An internal consistency check failed; indicates a bug, not bad input."""
