"""Both kernel backends must agree; the reference backend is the numpy one."""
import numpy as np
import pytest

from loopmesh import kernels
from loopmesh.architectures import ArchitectureConfig, build_diagram
from loopmesh.mesh import decompose_reck
from loopmesh.numerics import RandomSource, haar_unitary

BACKENDS = kernels.backends()


def test_both_backends_available():
    assert set(BACKENDS) == {"numpy", "numba"}
    assert kernels.BACKEND in BACKENDS


@pytest.mark.parametrize("n", [2, 5, 11])
def test_reck_null_agrees(n):
    u = haar_unitary(n, RandomSource(n))
    out = {name: mod.reck_null(u.copy()) for name, mod in BACKENDS.items()}
    for a, b in zip(out["numpy"], out["numba"]):
        assert np.allclose(a, b, atol=1e-13)


@pytest.mark.parametrize("kind", ["chain_loop", "dual_loop"])
def test_apply_elements_agrees(kind):
    cfg = ArchitectureConfig(kind, 0.9, 0.8, 0.7, 0.95)
    diagram = build_diagram(decompose_reck(haar_unitary(7, RandomSource(1))), cfg)
    arrays = diagram.element_arrays()
    res = {name: mod.apply_elements(np.eye(7, dtype=complex), *arrays) for name, mod in BACKENDS.items()}
    assert np.allclose(res["numpy"], res["numba"], atol=1e-14)


@pytest.mark.parametrize("alpha", [0.0, 0.5 * np.pi, np.pi, 1.5 * np.pi])
def test_quarter_turns_exact(alpha):
    for mod in BACKENDS.values():
        assert mod.expi(alpha) == np.round(np.exp(1j * alpha))


def test_env_flag_selects_numpy(monkeypatch):
    import importlib

    monkeypatch.setenv("LOOPMESH_DISABLE_NUMBA", "1")
    try:
        mod = importlib.reload(kernels)
        assert mod.BACKEND == "numpy"
        assert mod.apply_elements is BACKENDS["numpy"].apply_elements
    finally:
        monkeypatch.delenv("LOOPMESH_DISABLE_NUMBA")
        importlib.reload(kernels)
