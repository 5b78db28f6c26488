"""Exception types shared across the package."""


class ConvergenceError(RuntimeError):
    """A requested dressed state is not converged in the rotational basis."""


class MismatchedFieldError(ValueError):
    """Two dressed states computed at different field strengths were combined."""


class KindMismatchError(ValueError):
    """A dipole routine received quadrupole data, or the reverse."""


class SizeLimitError(ValueError):
    """Dense many-spin matrix requested beyond the supported size."""
