"""Exception types shared by all peftlab modules."""


class PeftLabError(Exception):
    """Base class for all errors raised by this package."""


class NonFinite(PeftLabError):
    """A NaN or Inf entered a numerical kernel or came out of one."""


class ConvergenceFailure(PeftLabError):
    """An iterative kernel exhausted its iteration budget."""


class RankOutOfRange(PeftLabError):
    """Requested truncation rank outside [0, min(rows, cols)]."""


class RankDeficient(PeftLabError):
    """Columns expected to be independent are numerically dependent."""


class ShapeMismatch(PeftLabError):
    """Array shapes do not compose."""


class TooLarge(PeftLabError):
    """Parameter count exceeds the dense-Hessian size cap."""


class NotLinear(PeftLabError):
    """Operation requires a linear reparameterization map."""


class NotPositiveDefinite(PeftLabError):
    """Hessian is not positive definite above the configured floor."""


class Diverged(PeftLabError):
    """Training loss became non-finite."""


class NotConverged(PeftLabError):
    """Gradient-norm stopping rule unmet within the step budget."""


class BiasedNet(PeftLabError):
    """Operation requires a bias-free network."""


class BoundViolated(PeftLabError):
    """A verified inequality failed; carries the counterexample."""

    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


class ConfigInvalid(PeftLabError):
    """Experiment configuration failed validation."""


class DegenerateFit(PeftLabError):
    """Too few usable points for a scaling-exponent fit."""


class IoFailure(PeftLabError):
    """Report or artifact could not be written."""
