"""MZI gate convention and Reck-style triangular mesh decomposition.

Gate convention: ``M(theta, phi) = B P(theta) B P(phi)`` with
``B = [[1, i], [i, 1]] / sqrt(2)`` and ``P(a) = diag(exp(i a), 1)``.
``(pi, pi)`` is the exact identity (bar) and ``(0, 0)`` the exact cross.

A decomposition of ``U`` is a padded mesh of ``(N-1)**2`` gates plus output
phases ``D`` such that ``U = D @ G_K @ ... @ G_1`` where ``G_1`` is the first
gate in (layer, pair) order. Layer ``l`` holds real gates on pairs
``1..N-l`` and identity padding on pairs ``N-l+1..N-1``. Layers and pairs
are 1-based; pair ``j`` acts on modes ``j`` and ``j+1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import InvalidDimensionError, InvalidInputError, NotUnitaryError
from .numerics import as_matrix, unitarity_defect

DECOMPOSE_TOL = 1e-10


@dataclass(frozen=True)
class GateParams:
    theta: float
    phi: float

    def __post_init__(self):
        if not (np.isfinite(self.theta) and np.isfinite(self.phi)):
            raise InvalidInputError(f"gate angles must be finite, got ({self.theta}, {self.phi})")
        object.__setattr__(self, "theta", kernels.canonical_angle(float(self.theta)))
        object.__setattr__(self, "phi", kernels.canonical_angle(float(self.phi)))


BAR = GateParams(np.pi, np.pi)
CROSS = GateParams(0.0, 0.0)


@dataclass(frozen=True)
class PlacedGate:
    layer: int
    pair: int
    params: GateParams
    is_padding: bool = False


@dataclass(frozen=True)
class MeshDecomposition:
    n: int
    gates: tuple[PlacedGate, ...]
    output_phases: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        phases = np.asarray(self.output_phases, dtype=np.complex128)
        if phases.shape != (self.n,):
            raise InvalidDimensionError(f"expected {self.n} output phases, got shape {phases.shape}")
        if np.any(np.abs(np.abs(phases) - 1.0) > 1e-12):
            raise InvalidInputError("output phases must have unit modulus")
        phases.setflags(write=False)
        object.__setattr__(self, "output_phases", phases)
        index = {}
        for g in self.gates:
            if not (1 <= g.pair <= self.n - 1):
                raise InvalidInputError(f"pair {g.pair} out of range for N={self.n}")
            if (g.layer, g.pair) in index:
                raise InvalidInputError(f"duplicate gate at layer {g.layer}, pair {g.pair}")
            index[(g.layer, g.pair)] = g
        object.__setattr__(self, "_index", index)

    @property
    def real_gates(self) -> list[PlacedGate]:
        return [g for g in self.gates if not g.is_padding]

    def gate(self, layer: int, pair: int) -> PlacedGate:
        return self._index[(layer, pair)]

    def layer(self, layer: int) -> list[PlacedGate]:
        return [g for g in self.gates if g.layer == layer]

    def without_phases(self) -> "MeshDecomposition":
        return MeshDecomposition(self.n, self.gates, np.ones(self.n, dtype=np.complex128))


def mzi_matrix(params: GateParams) -> np.ndarray:
    m00, m01, m10, m11 = kernels.mzi_entries(params.theta, params.phi)
    return np.array([[m00, m01], [m10, m11]], dtype=np.complex128)


def gate_arrays(gates) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Kernel element stream for a sequence of gates (see ``kernels``)."""
    gates = list(gates)
    kind = np.zeros(len(gates), dtype=np.int8)
    mode = np.array([g.pair - 1 for g in gates], dtype=np.int64)
    a = np.array([g.params.theta for g in gates], dtype=np.float64)
    b = np.array([g.params.phi for g in gates], dtype=np.float64)
    return kind, mode, a, b


def decompose_reck(u) -> MeshDecomposition:
    """Factor a unitary into the padded triangular mesh.

    Row ``N-l+1`` of ``U`` is nulled left to right by the inverse gates of
    layer ``l``; what remains is the diagonal of output phases.
    """
    u = as_matrix(u)
    if u.shape[0] != u.shape[1]:
        raise InvalidDimensionError(f"matrix must be square, got shape {u.shape}")
    n = u.shape[0]
    if n < 2:
        raise InvalidDimensionError(f"decomposition needs N >= 2, got {n}")
    if not np.all(np.isfinite(u)):
        raise InvalidInputError("matrix has non-finite entries")
    defect = unitarity_defect(u)
    if defect >= DECOMPOSE_TOL:
        raise NotUnitaryError(defect, DECOMPOSE_TOL)

    thetas, phis, w = kernels.reck_null(np.array(u, dtype=np.complex128, copy=True))
    d = np.diagonal(w).copy()
    phases = d / np.abs(d)

    gates = []
    for layer in range(1, n):
        for pair in range(1, n):
            padding = pair > n - layer
            params = BAR if padding else GateParams(thetas[layer - 1, pair - 1], phis[layer - 1, pair - 1])
            gates.append(PlacedGate(layer, pair, params, padding))
    return MeshDecomposition(n, tuple(gates), phases)


def mesh_product(mesh: MeshDecomposition) -> np.ndarray:
    """Product of the gates alone, output phases excluded."""
    mat = np.eye(mesh.n, dtype=np.complex128)
    return kernels.apply_elements(mat, *gate_arrays(mesh.gates))


def reconstruct(mesh: MeshDecomposition) -> np.ndarray:
    return mesh.output_phases[:, None] * mesh_product(mesh)
