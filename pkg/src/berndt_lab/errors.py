"""Exception types shared across the package."""


class DomainError(ValueError):
    """Arguments outside the domain where an operation is defined/convergent."""


class PoleError(DomainError):
    """Evaluation point too close to a pole of the requested function."""


class AccuracyError(RuntimeError):
    """Requested tolerance could not be met within the evaluation budget."""


class InconsistencyError(RuntimeError):
    """Two routes that must agree (exactly or within tolerance) did not."""


class UnsupportedChiError(DomainError):
    """Unknown factor identifier in a Dirichlet-type multiple sum."""
