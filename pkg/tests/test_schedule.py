from collections import Counter

import numpy as np
import pytest

from loopmesh.errors import InvalidTimingError
from loopmesh.mesh import CROSS, decompose_reck
from loopmesh.numerics import RandomSource, haar_unitary
from loopmesh.schedule import DUAL_LOOP_MZI, DUAL_LOOP_SWITCH_IN, DUAL_LOOP_SWITCH_OUT, control_schedule


def _mesh(n, seed=0):
    return decompose_reck(haar_unitary(n, RandomSource(seed)))


def test_chain_loop_n4_example():
    mesh = _mesh(4)
    s = control_schedule(mesh, "chain_loop", 1e-9, 0.0)
    assert len(s.events) == 15
    assert sorted(Counter(e.device for e in s.events).items()) == [(1, 5), (2, 5), (3, 5)]
    ev = [e for e in s.for_device(2) if e.step == 2][0]
    assert ev.time == pytest.approx(4e-9, abs=1e-21)
    assert ev.role == "interaction"
    assert ev.params == mesh.gate(2, 2).params


def test_chain_loop_n2_smallest():
    s = control_schedule(_mesh(2), "cl", 1.0, 0.25)
    assert [(e.role, e.time) for e in s.events] == [("push_in", 1.0), ("interaction", 2.0), ("push_out", 3.0)]


def test_chain_loop_uses_d_between_devices():
    s = control_schedule(_mesh(4), "chain_loop", 1.0, 0.1)
    firsts = [s.for_device(k)[0].time for k in (1, 2, 3)]
    assert firsts == pytest.approx([1.0, 2.1, 3.2])


def test_dual_loop_n4_example():
    s = control_schedule(_mesh(4), "dual_loop", 1e-8)
    layer2 = [e for e in s.for_device(DUAL_LOOP_MZI) if e.layer == 2]
    assert layer2[0].time == pytest.approx(5e-8) and layer2[0].role == "push_in"
    assert layer2[-1].time == pytest.approx(9e-8) and layer2[-1].role == "push_out"
    last_out = [e for e in s.for_device(DUAL_LOOP_SWITCH_OUT) if e.layer == 3 and e.step == 4]
    assert len(last_out) == 1 and last_out[0].routing == "to_output"


def test_dual_loop_routing():
    n = 5
    s = control_schedule(_mesh(n), "dl", 1.0)
    ins = s.for_device(DUAL_LOOP_SWITCH_IN)
    outs = s.for_device(DUAL_LOOP_SWITCH_OUT)
    assert len(ins) == len(outs) == n * (n - 1)
    assert {e.routing for e in ins if e.layer == 1} == {"from_input"}
    assert {e.routing for e in ins if e.layer > 1} == {"from_outer"}
    assert {e.routing for e in outs if e.layer < n - 1} == {"to_outer"}
    assert {e.routing for e in outs if e.layer == n - 1} == {"to_output"}
    # switch out fires one slot after switch in for the same bin
    for a, b in zip(ins, outs):
        assert (a.layer, a.step) == (b.layer, b.step)
        assert b.time - a.time == pytest.approx(1.0)


@pytest.mark.parametrize("arch", ["chain_loop", "dual_loop"])
@pytest.mark.parametrize("n", [2, 3, 6])
def test_completeness_and_order(arch, n):
    mesh = _mesh(n, n)
    s = control_schedule(mesh, arch, 2e-9, 1e-11)
    mzi = [e for e in s.events if e.params is not None]
    assert len(mzi) == (n - 1) * (n + 1)
    inter = s.interactions()
    assert sorted((e.layer, e.step) for e in inter) == sorted((g.layer, g.pair) for g in mesh.gates)
    for e in inter:
        assert e.params == mesh.gate(e.layer, e.step).params
    for e in mzi:
        if e.role in ("push_in", "push_out"):
            assert e.params == CROSS
    keys = [(e.time, e.device) for e in s.events]
    assert keys == sorted(keys)
    devices = {e.device for e in mzi}
    for dev in devices:
        times = [e.time for e in s.for_device(dev)]
        assert np.allclose(np.diff(times), 2e-9)


def test_csv_deterministic_and_shaped():
    mesh = _mesh(4, 9)
    a = control_schedule(mesh, "chain_loop", 1e-9).to_csv()
    b = control_schedule(decompose_reck(haar_unitary(4, RandomSource(9))), "chain_loop", 1e-9).to_csv()
    assert a == b
    lines = a.splitlines()
    assert lines[0] == "device,time,role,theta,phi,routing"
    assert len(lines) == 16


def test_invalid_timing():
    with pytest.raises(InvalidTimingError):
        control_schedule(_mesh(3), "chain_loop", 0.0)
    with pytest.raises(InvalidTimingError):
        control_schedule(_mesh(3), "chain_loop", 1.0, -1.0)
