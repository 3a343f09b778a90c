"""Dense complex linear algebra helpers and seeded randomness.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``.

Randomness: every Monte-Carlo trial draws from its own ``RandomSource``.
Stream ``i`` of seed ``s`` is a PCG64 generator seeded with
``SeedSequence(entropy=s, spawn_key=(i,))``, i.e. exactly the child that
``SeedSequence(s).spawn`` would hand out at position ``i``. No generator is
shared between trials, so trial results do not depend on execution order.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidDimensionError, InvalidInputError

UNITARY_TOL = 1e-12


@dataclass(frozen=True)
class RandomSource:
    base_seed: int
    stream_index: int = 0

    def generator(self) -> np.random.Generator:
        seq = np.random.SeedSequence(entropy=self.base_seed, spawn_key=(self.stream_index,))
        return np.random.Generator(np.random.PCG64(seq))

    def stream(self, index: int) -> "RandomSource":
        return RandomSource(self.base_seed, index)


def as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
        raise InvalidDimensionError(f"expected a non-empty 2-D matrix, got shape {a.shape}")
    return a


def unitarity_defect(u: np.ndarray) -> float:
    """``||U^dag U - I||_F``."""
    u = as_matrix(u)
    if u.shape[0] != u.shape[1]:
        raise InvalidDimensionError(f"matrix must be square, got shape {u.shape}")
    return float(np.linalg.norm(u.conj().T @ u - np.eye(u.shape[0])))


def haar_unitary(n: int, rng: RandomSource | np.random.Generator) -> np.ndarray:
    """Draw an ``n x n`` unitary from the Haar measure.

    QR of a complex Ginibre matrix, with each column of Q rotated by the phase
    of the matching diagonal entry of R. Without that phase fix the result is
    not Haar distributed.
    """
    if n < 1:
        raise InvalidDimensionError(f"n must be >= 1, got {n}")
    gen = rng.generator() if isinstance(rng, RandomSource) else rng
    z = (gen.standard_normal((n, n)) + 1j * gen.standard_normal((n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def _svd(m) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise InvalidInputError(f"matrix must be square, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise InvalidInputError("matrix has non-finite entries")
    return np.linalg.svd(a)


def svd_factors(m) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return ``(V, s, W)`` with ``M = V @ diag(s) @ W`` and ``s`` descending."""
    return _svd(m)


def svd_values(m) -> np.ndarray:
    """Singular values of a square matrix, descending."""
    return _svd(m)[1]


def frobenius_distance(a, b) -> float:
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise InvalidDimensionError(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(np.linalg.norm(a - b))
