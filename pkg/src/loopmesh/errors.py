"""Exception types raised across the package."""


class LoopMeshError(Exception):
    """Base class for all package errors."""


class InvalidDimensionError(LoopMeshError, ValueError):
    pass


class InvalidInputError(LoopMeshError, ValueError):
    pass


class NotUnitaryError(LoopMeshError, ValueError):
    """Raised when a matrix expected to be unitary is not.

    The measured defect ``||U^dag U - I||_F`` is kept on ``defect``.
    """

    def __init__(self, defect: float, tol: float):
        self.defect = defect
        self.tol = tol
        super().__init__(f"matrix is not unitary: ||U^dag U - I||_F = {defect:.3e} (tol {tol:.1e})")


class InvalidTimingError(LoopMeshError, ValueError):
    pass


class UnsupportedDiagramError(LoopMeshError, ValueError):
    pass


class PhysicalityError(LoopMeshError, ValueError):
    pass


class UnknownConfigError(LoopMeshError, KeyError):
    def __str__(self):
        # KeyError quotes its argument; keep the message readable
        return str(self.args[0]) if self.args else ""


class TrialError(LoopMeshError):
    """A Monte-Carlo trial failed; carries the trial index and mode count."""

    def __init__(self, n: int, trial: int, cause: BaseException):
        self.n = n
        self.trial = trial
        self.cause = cause
        super().__init__(f"trial {trial} at N={n} failed: {cause}")
