"""Exception types. Everything derives from SaturableError so callers can catch broadly."""


class SaturableError(Exception):
    pass


class ParseError(SaturableError, ValueError):
    def __init__(self, message, text="", position=None, line=None):
        self.text = text
        self.position = position
        self.line = line
        where = ""
        if line is not None:
            where += f"line {line}, "
        if position is not None:
            where += f"column {position + 1}: "
        super().__init__(where + message)


class UnknownVariable(ParseError):
    pass


class DivisionInInput(ParseError):
    pass


class NoTransverseElement(SaturableError):
    pass


class NotTransverse(SaturableError):
    pass


class NotStabilized(SaturableError):
    pass


class NotClosedUnderContraction(SaturableError):
    pass


class MembershipFails(SaturableError):
    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"t^d_{index} * G_{index} is not in the module spanned by F")


class DependentLimits(SaturableError):
    pass


class PointsCollideIdentically(SaturableError):
    pass


class HypothesesNotMet(SaturableError):
    pass


class UnsupportedHilbertFunction(SaturableError):
    pass


class WrongCharacteristic(SaturableError):
    pass


class CandidateNotBetween(SaturableError):
    pass


class SquareDoesNotAnnihilate(SaturableError):
    pass


class ShapeMismatch(SaturableError):
    pass


class LinearSolveFailed(SaturableError):
    pass


class InternalError(SaturableError):
    """An invariant that should hold by construction was violated."""
