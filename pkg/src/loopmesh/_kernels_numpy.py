"""Reference kernels: python loop over elements, numpy row/column updates.

Element streams are encoded as parallel arrays (see ``kernels``).
"""
import numpy as np

TWO_PI = 2.0 * np.pi
_QUARTER_TURNS = {0.0: 1.0 + 0.0j, 0.5 * np.pi: 1j, np.pi: -1.0 + 0.0j, 1.5 * np.pi: -1j}


def expi(alpha):
    # quarter turns are snapped so bar/cross settings are exact
    z = _QUARTER_TURNS.get(alpha)
    if z is not None:
        return z
    return complex(np.cos(alpha), np.sin(alpha))


def canonical_angle(alpha):
    r = alpha % TWO_PI
    return 0.0 if r >= TWO_PI else r


def mzi_entries(theta, phi):
    et = expi(theta)
    ep = expi(phi)
    return 0.5 * (et - 1.0) * ep, 0.5j * (et + 1.0), 0.5j * (et + 1.0) * ep, 0.5 * (1.0 - et)


def apply_elements(mat, kind, mode, a, b):
    for k in range(kind.shape[0]):
        p = mode[k]
        if kind[k] == 0:
            m00, m01, m10, m11 = mzi_entries(a[k], b[k])
            top = mat[p].copy()
            bot = mat[p + 1]
            mat[p] = m00 * top + m01 * bot
            mat[p + 1] = m10 * top + m11 * bot
        else:
            mat[p] *= a[k]
    return mat


def nulling_angles(x, y):
    """MZI setting whose inverse, applied on the right, zeroes ``x`` into ``y``'s column."""
    if abs(x) == 0.0:
        return np.pi, np.pi
    theta = 2.0 * np.arctan2(abs(y), abs(x))
    if abs(y) == 0.0:
        return canonical_angle(theta), 0.0
    phi = np.pi + np.angle(x) - np.angle(y)
    return canonical_angle(theta), canonical_angle(phi)


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
            left = w[:, j].copy()
            right = w[:, j + 1]
            w[:, j] = left * np.conj(m00) + right * np.conj(m01)
            w[:, j + 1] = left * np.conj(m10) + right * np.conj(m11)
    return thetas, phis, w
