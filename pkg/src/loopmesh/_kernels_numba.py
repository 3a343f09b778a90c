"""JIT-compiled kernels; same contracts as ``_kernels_numpy``."""
import numpy as np
from numba import njit

TWO_PI = 2.0 * np.pi
HALF_PI = 0.5 * np.pi
THREE_HALF_PI = 1.5 * np.pi


@njit(cache=True, nogil=True)
def expi(alpha):
    if alpha == 0.0:
        return 1.0 + 0.0j
    if alpha == HALF_PI:
        return 0.0 + 1.0j
    if alpha == np.pi:
        return -1.0 + 0.0j
    if alpha == THREE_HALF_PI:
        return 0.0 - 1.0j
    return complex(np.cos(alpha), np.sin(alpha))


@njit(cache=True, nogil=True)
def canonical_angle(alpha):
    r = alpha % TWO_PI
    if r >= TWO_PI:
        return 0.0
    return r


@njit(cache=True, nogil=True)
def mzi_entries(theta, phi):
    et = expi(theta)
    ep = expi(phi)
    return 0.5 * (et - 1.0) * ep, 0.5j * (et + 1.0), 0.5j * (et + 1.0) * ep, 0.5 * (1.0 - et)


@njit(cache=True, nogil=True)
def apply_elements(mat, kind, mode, a, b):
    ncols = mat.shape[1]
    for k in range(kind.shape[0]):
        p = mode[k]
        if kind[k] == 0:
            m00, m01, m10, m11 = mzi_entries(a[k], b[k])
            for c in range(ncols):
                top = mat[p, c]
                bot = mat[p + 1, c]
                mat[p, c] = m00 * top + m01 * bot
                mat[p + 1, c] = m10 * top + m11 * bot
        else:
            s = a[k]
            for c in range(ncols):
                mat[p, c] *= s
    return mat


@njit(cache=True, nogil=True)
def nulling_angles(x, y):
    if abs(x) == 0.0:
        return np.pi, np.pi
    theta = 2.0 * np.arctan2(abs(y), abs(x))
    if abs(y) == 0.0:
        return canonical_angle(theta), 0.0
    phi = np.pi + np.angle(x) - np.angle(y)
    return canonical_angle(theta), canonical_angle(phi)


@njit(cache=True, nogil=True)
def reck_null(w):
    n = w.shape[0]
    thetas = np.full((n - 1, n - 1), np.pi)
    phis = np.full((n - 1, n - 1), np.pi)
    for layer in range(n - 1):
        r = n - 1 - layer
        for j in range(n - 1 - layer):
            theta, phi = nulling_angles(w[r, j], w[r, j + 1])
            thetas[layer, j] = theta
            phis[layer, j] = phi
            m00, m01, m10, m11 = mzi_entries(theta, phi)
            c00 = np.conj(m00)
            c01 = np.conj(m01)
            c10 = np.conj(m10)
            c11 = np.conj(m11)
            for i in range(n):
                left = w[i, j]
                right = w[i, j + 1]
                w[i, j] = left * c00 + right * c01
                w[i, j + 1] = left * c10 + right * c11
    return thetas, phis, w
