"""Exception types.  Each carries a stable machine-readable ``code``."""


class InvsysError(Exception):
    code = "error"


class InputError(InvsysError, ValueError):
    """Malformed or inadmissible input (CLI exit status 2)."""

    code = "input_error"


class MathematicalError(InvsysError):
    """The input is well formed but a hypothesis of the construction fails."""


class NonvanishingError(MathematicalError):
    code = "ell_vanishes_at_point"


class NotGorensteinError(MathematicalError):
    code = "not_gorenstein"


class KernelDimensionError(MathematicalError):
    code = "kernel_dimension"


class ZeroCoefficientError(MathematicalError):
    code = "zero_coefficient"


class ConditionOneError(MathematicalError):
    code = "condition_one"


class ConditionTwoError(MathematicalError):
    code = "condition_two"


class AsymmetricHVectorError(MathematicalError):
    code = "asymmetric_h_vector"


class DegenerateError(MathematicalError):
    code = "degenerate"


class NoRecoveryError(MathematicalError):
    code = "no_recovery"
