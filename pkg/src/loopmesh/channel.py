"""Lossy process matrix of a loss diagram and its singular-value loss metrics."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .architectures import LossDiagram
from .errors import PhysicalityError
from .numerics import svd_values

PHYSICALITY_TOL = 1e-6


@dataclass(frozen=True)
class LossMetrics:
    """Effective transmissions ``eta_i = sigma_i**2`` of a process matrix.

    ``delta_eta`` is the population standard deviation (divides by N).
    """

    etas: tuple[float, ...]
    eta_max: float
    eta_min: float
    eta_bar: float
    delta_eta: float


def process_matrix(diagram: LossDiagram) -> np.ndarray:
    mat = np.eye(diagram.n, dtype=np.complex128)
    return kernels.apply_elements(mat, *diagram.element_arrays())


def loss_metrics(a) -> LossMetrics:
    s = svd_values(a)
    if s[0] > 1.0 + PHYSICALITY_TOL:
        raise PhysicalityError(f"singular value {s[0]:.12g} exceeds 1; diagram or transmissions are unphysical")
    etas = s * s
    return LossMetrics(
        etas=tuple(float(x) for x in etas),
        eta_max=float(etas[0]),
        eta_min=float(etas[-1]),
        eta_bar=float(np.mean(etas)),
        delta_eta=float(np.std(etas)),
    )
