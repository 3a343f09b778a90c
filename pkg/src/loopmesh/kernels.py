"""Backend selection for the hot loops.

Two interchangeable implementations exist: ``_kernels_numba`` (JIT) and
``_kernels_numpy`` (reference). The JIT path is used unless numba is missing
or ``LOOPMESH_DISABLE_NUMBA`` is set to a truthy value before import.

Element streams passed to :func:`apply_elements` are four parallel arrays:

``kind``  int8, 0 = MZI gate, 1 = attenuator
``mode``  int64, zero-based upper mode of a gate / the attenuated mode
``a``     float64, theta for gates, sqrt(transmission) for attenuators
``b``     float64, phi for gates (ignored for attenuators)
"""
import os

from . import _kernels_numpy

_FLAG = "LOOPMESH_DISABLE_NUMBA"


def _numba_disabled() -> bool:
    return os.environ.get(_FLAG, "").strip().lower() not in ("", "0", "false", "no")


if _numba_disabled():
    _impl = _kernels_numpy
    BACKEND = "numpy"
else:
    try:
        from . import _kernels_numba as _impl
        BACKEND = "numba"
    except ImportError:  # pragma: no cover - numba is a declared dependency
        _impl = _kernels_numpy
        BACKEND = "numpy"

apply_elements = _impl.apply_elements
reck_null = _impl.reck_null
mzi_entries = _impl.mzi_entries
canonical_angle = _kernels_numpy.canonical_angle


def backends():
    """Return ``{name: module}`` for every importable backend."""
    out = {"numpy": _kernels_numpy}
    try:
        from . import _kernels_numba
        out["numba"] = _kernels_numba
    except ImportError:  # pragma: no cover
        pass
    return out
