"""Exception hierarchy shared by every module of the package."""


class ContractError(ValueError):
    """An operation was called outside its precondition."""


class DivisorError(ContractError):
    """Division by (or normalization on) a zero divisor."""


class RepresentationError(ContractError):
    """A 2x2 matrix does not have the shape of the requested algebra."""


class DegenerateInput(ContractError):
    """Input is degenerate (zero matrix, zero polynomial, ...)."""


class DegenerateSample(ContractError):
    """A curve sample is not generic enough for the local analysis."""


class InconsistentFoci(RuntimeError):
    """The minor-based focus solver disagrees with the per-kind closed form."""
