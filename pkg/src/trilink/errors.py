"""Exception types shared across the package."""


class TrilinkError(Exception):
    pass


class DegenerateTriangle(TrilinkError):
    pass


class DisjointnessViolated(TrilinkError):
    """Two triangle outlines meet."""

    def __init__(self, msg, pair=None):
        super().__init__(msg)
        self.pair = pair


class NonGeneric(TrilinkError):
    """Parity is not defined by crossing count for this pair; perturb first."""

    def __init__(self, msg, pair=None):
        super().__init__(msg)
        self.pair = pair


class InvalidMove(TrilinkError):
    pass


class ExhaustedAttempts(TrilinkError):
    pass


class CertificationFailed(TrilinkError):
    pass


class ParseError(TrilinkError):
    def __init__(self, msg, line=None):
        if line is not None:
            msg = f"line {line}: {msg}"
        super().__init__(msg)
        self.line = line


class ValidationError(ParseError):
    pass
