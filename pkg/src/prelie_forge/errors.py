"""Error hierarchy.  Every error carries a stable machine-readable code."""


class ForgeError(Exception):
    code = "ERROR"


class DivisionByZeroError(ForgeError):
    code = "DIVISION_BY_ZERO"


class EvalDenZeroError(ForgeError):
    code = "EVAL_DEN_ZERO"


class ParseError(ForgeError):
    code = "PARSE_ERROR"

    def __init__(self, message, position, expected=()):
        super().__init__(f"{message} at offset {position}")
        self.position = position
        self.expected = tuple(expected)


class UnknownParamError(ForgeError):
    code = "UNKNOWN_PARAM"


class DimMismatchError(ForgeError):
    code = "DIM_MISMATCH"


class MissingMemberError(ForgeError):
    code = "MISSING_MEMBER"


class NotInvertibleError(ForgeError):
    code = "NOT_INVERTIBLE"


class UnknownFixtureError(ForgeError):
    code = "UNKNOWN_FIXTURE"


class UnknownLawError(ForgeError):
    code = "UNKNOWN_LAW"


class GridTooLargeError(ForgeError):
    code = "GRID_TOO_LARGE"


class SymbolicTemplateError(ForgeError):
    code = "SYMBOLIC_TEMPLATE"


class ValidationError(ForgeError):
    code = "VALIDATION_ERROR"
