"""Time-ordered control sequences for the loop architectures.

Chain loop: MZI device ``k`` (1..N-1) runs layer ``k``. Its ``N+1`` settings
are applied at ``t = (s + k) tau + (k - 1) d`` for ``s = 0..N``: ``s = 0``
pushes the first bin into the loop (cross), ``s = j`` interacts bins ``j`` and
``j+1`` with the gate at (layer k, pair j), ``s = N`` pushes the last bin out
(cross).

Dual loop: a single MZI (device 0) runs every layer ``l``, its ``N+1``
settings spaced by ``tau`` starting at ``(l-1)(N+1) tau``. Switch 1 routes bin
``b`` in (from the input on layer 1, from the outer loop after) at
``((l-1)(N+1) + b - 1) tau``; switch 2 routes it out one slot later, to the
outer loop or, after the last layer, to the output.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .errors import InvalidInputError, InvalidTimingError
from .mesh import CROSS, GateParams, MeshDecomposition

ROLES = ("push_in", "interaction", "push_out", "route_in", "route_out")
ROUTINGS = ("from_input", "from_outer", "to_outer", "to_output")
CSV_COLUMNS = ("device", "time", "role", "theta", "phi", "routing")

DUAL_LOOP_MZI = 0
DUAL_LOOP_SWITCH_IN = 1
DUAL_LOOP_SWITCH_OUT = 2


@dataclass(frozen=True)
class ScheduleEvent:
    device: int
    time: float
    role: str
    params: GateParams | None = None
    routing: str | None = None
    layer: int = 0
    # MZI events: step s in 0..N; switch events: bin index b in 1..N
    step: int = 0


@dataclass(frozen=True)
class ControlSchedule:
    architecture: str
    n: int
    tau: float
    d: float
    events: tuple[ScheduleEvent, ...]

    def for_device(self, device: int) -> list[ScheduleEvent]:
        return [e for e in self.events if e.device == device]

    def interactions(self) -> list[ScheduleEvent]:
        return [e for e in self.events if e.role == "interaction"]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for e in self.events:
            theta = repr(e.params.theta) if e.params is not None else ""
            phi = repr(e.params.phi) if e.params is not None else ""
            w.writerow([e.device, repr(e.time), e.role, theta, phi, e.routing or ""])
        return buf.getvalue()


def _layer_events(mesh, layer, device, time_of):
    n = mesh.n
    out = [ScheduleEvent(device, time_of(0), "push_in", CROSS, layer=layer, step=0)]
    for j in range(1, n):
        g = mesh.gate(layer, j)
        out.append(ScheduleEvent(device, time_of(j), "interaction", g.params, layer=layer, step=j))
    out.append(ScheduleEvent(device, time_of(n), "push_out", CROSS, layer=layer, step=n))
    return out


def control_schedule(mesh: MeshDecomposition, architecture: str, tau: float, d: float = 0.0) -> ControlSchedule:
    """Compile the per-device event list realizing ``mesh``.

    ``architecture`` is ``"chain_loop"`` or ``"dual_loop"`` (``"cl"``/``"dl"``
    accepted). ``d`` is the delay between neighbouring chain-loop MZIs and is
    unused for the dual loop.
    """
    arch = {"cl": "chain_loop", "dl": "dual_loop"}.get(architecture, architecture)
    if arch not in ("chain_loop", "dual_loop"):
        raise InvalidInputError(f"unknown architecture {architecture!r}; expected chain_loop or dual_loop")
    if not tau > 0:
        raise InvalidTimingError(f"tau must be > 0, got {tau}")
    if not d >= 0:
        raise InvalidTimingError(f"d must be >= 0, got {d}")
    n = mesh.n

    events: list[ScheduleEvent] = []
    if arch == "chain_loop":
        for k in range(1, n):
            events += _layer_events(mesh, k, k, lambda s, k=k: (s + k) * tau + (k - 1) * d)
    else:
        for layer in range(1, n):
            start = (layer - 1) * (n + 1)
            events += _layer_events(mesh, layer, DUAL_LOOP_MZI, lambda s, start=start: (start + s) * tau)
            src = "from_input" if layer == 1 else "from_outer"
            dst = "to_output" if layer == n - 1 else "to_outer"
            for b in range(1, n + 1):
                events.append(ScheduleEvent(DUAL_LOOP_SWITCH_IN, (start + b - 1) * tau, "route_in",
                                            routing=src, layer=layer, step=b))
                events.append(ScheduleEvent(DUAL_LOOP_SWITCH_OUT, (start + b) * tau, "route_out",
                                            routing=dst, layer=layer, step=b))
    events.sort(key=lambda e: (e.time, e.device))
    return ControlSchedule(arch, n, float(tau), float(d), tuple(events))
