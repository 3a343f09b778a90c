"""Loss diagrams: the padded mesh with single-mode attenuators inserted.

Every layer is emitted as the same block, in time-bin order:

    extra_gate(1), inner(1),
    for j = 1..N-1:  G(l, j), gate(j), gate(j+1), [inner(j+1) if j < N-1]
    inner(N), extra_gate(N)

so each mode line collects two gate-type losses and one inner-loop loss per
layer. The dual loop adds a switch loss on every mode at entry and exit, and
``switch, outer, switch`` on every mode between consecutive layers. The outer
loop transmission is ``outer_base ** N``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import InvalidDimensionError, InvalidInputError, UnsupportedDiagramError
from .mesh import MeshDecomposition, PlacedGate

KINDS = ("spatial", "dual_loop", "chain_loop")
ATTENUATOR_KINDS = ("gate", "extra_gate", "inner", "switch", "outer")


def _check_transmission(name, value):
    if value is None:
        return
    if not (0.0 < value <= 1.0):
        raise InvalidInputError(f"{name} must be in (0, 1], got {value}")


@dataclass(frozen=True)
class ArchitectureConfig:
    kind: str
    eta_gate: float
    eta_inner: float | None = None
    eta_switch: float | None = None
    outer_base: float | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidInputError(f"unknown architecture kind {self.kind!r}; expected one of {KINDS}")
        for name in ("eta_gate", "eta_inner", "eta_switch", "outer_base"):
            _check_transmission(name, getattr(self, name))
        if self.kind != "spatial" and self.eta_inner is None:
            raise InvalidInputError(f"{self.kind} requires eta_inner")
        if self.kind == "dual_loop" and (self.eta_switch is None or self.outer_base is None):
            raise InvalidInputError("dual_loop requires eta_switch and outer_base")

    def eta_outer(self, n: int) -> float:
        if self.outer_base is None:
            raise InvalidInputError(f"{self.kind} has no outer loop")
        return self.outer_base ** n


@dataclass(frozen=True)
class Attenuator:
    mode: int
    factor: float
    kind: str


@dataclass(frozen=True)
class LossDiagram:
    n: int
    elements: tuple  # of PlacedGate | Attenuator, in application order
    architecture: str = ""

    def gates(self) -> list[PlacedGate]:
        return [e for e in self.elements if isinstance(e, PlacedGate)]

    def attenuators(self) -> list[Attenuator]:
        return [e for e in self.elements if isinstance(e, Attenuator)]

    def element_arrays(self):
        """Kernel element stream (see ``kernels``); attenuators carry sqrt(factor)."""
        m = len(self.elements)
        kind = np.empty(m, dtype=np.int8)
        mode = np.empty(m, dtype=np.int64)
        a = np.empty(m, dtype=np.float64)
        b = np.zeros(m, dtype=np.float64)
        for k, e in enumerate(self.elements):
            if isinstance(e, PlacedGate):
                kind[k] = 0
                mode[k] = e.pair - 1
                a[k] = e.params.theta
                b[k] = e.params.phi
            else:
                kind[k] = 1
                mode[k] = e.mode - 1
                a[k] = np.sqrt(e.factor)
        return kind, mode, a, b

    def dump(self) -> str:
        """Stable text listing, one element per line: index, type, mode(s), factor, kind."""
        lines = []
        for k, e in enumerate(self.elements):
            if isinstance(e, PlacedGate):
                tag = "padding" if e.is_padding else "real"
                lines.append(f"{k}\tgate\t{e.pair},{e.pair + 1}\t-\t{tag}"
                             f"\tlayer={e.layer} theta={e.params.theta!r} phi={e.params.phi!r}")
            else:
                lines.append(f"{k}\tattenuator\t{e.mode}\t{float(e.factor)!r}\t{e.kind}")
        return "\n".join(lines) + "\n"


def _layer_block(mesh, layer, eta_g, eta_i):
    n = mesh.n
    out = [Attenuator(1, eta_g, "extra_gate"), Attenuator(1, eta_i, "inner")]
    for j in range(1, n):
        out.append(mesh.gate(layer, j))
        out.append(Attenuator(j, eta_g, "gate"))
        out.append(Attenuator(j + 1, eta_g, "gate"))
        if j < n - 1:
            out.append(Attenuator(j + 1, eta_i, "inner"))
    out.append(Attenuator(n, eta_i, "inner"))
    out.append(Attenuator(n, eta_g, "extra_gate"))
    return out


def build_diagram(mesh: MeshDecomposition, config: ArchitectureConfig) -> LossDiagram:
    if config.kind == "spatial":
        raise UnsupportedDiagramError("spatial encoding has no loss diagram; use heuristics.eta_spatial")
    n = mesh.n
    if n < 2:
        raise InvalidDimensionError(f"diagram needs N >= 2, got {n}")
    if len(mesh.gates) != (n - 1) ** 2:
        raise InvalidInputError(f"mesh must be padded to {(n - 1) ** 2} gates, has {len(mesh.gates)}")

    dual = config.kind == "dual_loop"
    elements: list = []
    if dual:
        eta_s = config.eta_switch
        eta_o = config.eta_outer(n)
        elements += [Attenuator(m, eta_s, "switch") for m in range(1, n + 1)]
    for layer in range(1, n):
        if dual and layer > 1:
            for m in range(1, n + 1):
                elements += [Attenuator(m, eta_s, "switch"), Attenuator(m, eta_o, "outer"),
                             Attenuator(m, eta_s, "switch")]
        elements += _layer_block(mesh, layer, config.eta_gate, config.eta_inner)
    if dual:
        elements += [Attenuator(m, eta_s, "switch") for m in range(1, n + 1)]
    return LossDiagram(n, tuple(elements), config.kind)


def mode_line_transmissions(diagram: LossDiagram) -> np.ndarray:
    out = np.ones(diagram.n)
    for e in diagram.attenuators():
        out[e.mode - 1] *= e.factor
    return out


def audit_counts(diagram: LossDiagram) -> dict[str, int]:
    c = Counter(e.kind for e in diagram.attenuators())
    counts = {"gates": len(diagram.gates())}
    counts.update({k: c.get(k, 0) for k in ATTENUATOR_KINDS})
    return counts


def expected_counts(n: int, kind: str) -> dict[str, int]:
    dual = kind == "dual_loop"
    return {
        "gates": (n - 1) ** 2,
        "gate": 2 * (n - 1) ** 2,
        "extra_gate": 2 * (n - 1),
        "inner": n * (n - 1),
        "switch": 2 * n * (n - 1) if dual else 0,
        "outer": n * (n - 2) if dual else 0,
    }
