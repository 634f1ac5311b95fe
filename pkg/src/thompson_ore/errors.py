"""Exception hierarchy.

Every error carries a stable machine-readable ``code`` used by the CLI.
"""


class ThompsonError(Exception):
    code = "error"


class MinIndexZero(ThompsonError, ValueError):
    code = "min_index_zero"


class ResourceLimit(ThompsonError, RuntimeError):
    code = "resource_limit"


class FieldMismatch(ThompsonError, TypeError):
    code = "field_mismatch"


class ZeroPolynomial(ThompsonError, ValueError):
    code = "zero_polynomial"


class NotDivisible(ThompsonError, ArithmeticError):
    code = "not_divisible"


class PreconditionViolated(ThompsonError, ValueError):
    code = "precondition_violated"


class InvalidSolution(ThompsonError, ValueError):
    code = "invalid_solution"


class NotASolution(ThompsonError, ValueError):
    code = "not_a_solution"


class LengthMismatch(ThompsonError, ValueError):
    code = "length_mismatch"


class NotARelation(ThompsonError, ValueError):
    code = "not_a_relation"


class DegenerateRelation(ThompsonError, ValueError):
    code = "degenerate_relation"


class UnsupportedGenerator(ThompsonError, ValueError):
    code = "unsupported_generator"


class EmptySet(ThompsonError, ValueError):
    code = "empty_set"


class MissingEdgeValue(ThompsonError, KeyError):
    code = "missing_edge_value"


class SizeMismatch(ThompsonError, ValueError):
    code = "size_mismatch"


class EmptySupport(ThompsonError, ValueError):
    code = "empty_support"


class NoSolutionInBounds(ThompsonError):
    """Only the zero vector fits the requested support (a finding, not a bug)."""

    code = "no_solution_in_bounds"


class ParseError(ThompsonError, ValueError):
    code = "syntax_error"

    def __init__(self, message: str, text: str = "", position: int = 0):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position
