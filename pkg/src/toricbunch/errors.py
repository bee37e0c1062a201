"""Exception types raised by toricbunch."""


class ToricBunchError(Exception):
    """Base class for all library errors."""


class ResourceCapExceeded(ToricBunchError):
    """An enumeration or search would exceed a configured cap."""


class FaceEnumerationTooLarge(ResourceCapExceeded):
    pass


class EnumerationTooLarge(ResourceCapExceeded):
    pass


class SearchTooLarge(ResourceCapExceeded):
    pass


class VerificationError(ToricBunchError):
    """Input data fails a defining condition.

    Attributes:
      condition: short name of the condition that failed.
    """

    def __init__(self, message, condition=None):
        super().__init__(message)
        self.condition = condition


class NotAProjectedFace(VerificationError):
    def __init__(self, index):
        super().__init__(f"candidate cone #{index} is not the image of a face of gamma",
                         condition="projected face")
        self.index = index


class ConditionViolated(VerificationError):
    pass


class NotMaximal(VerificationError):
    pass


class NotStandard(VerificationError):
    pass


class NotFree(VerificationError):
    pass


class Degenerate(VerificationError):
    pass


class NotSimplicial(VerificationError):
    pass


class NotFullDimensional(VerificationError):
    pass


class HypothesisViolated(VerificationError):
    pass


class InvalidParameters(VerificationError):
    pass


class MultiplicityDecrease(VerificationError):
    pass


class InvalidProjectedCone(VerificationError):
    pass


class InvalidFan(VerificationError):
    pass


class UnknownExample(ToricBunchError):
    pass


class ParseError(ToricBunchError):
    """A document could not be read.

    Attributes:
      line, column: 1-based position of the problem when known.
    """

    def __init__(self, message, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column
