"""Seeded Haar Monte-Carlo sweeps and catalog comparisons.

Trial ``t`` at every ``N`` draws its unitary from stream ``t`` of the sweep
seed, so results are independent of how trials are scheduled across workers.
"""
from __future__ import annotations

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import heuristics
from .architectures import ArchitectureConfig, build_diagram
from .channel import LossMetrics, loss_metrics, process_matrix
from .errors import InvalidInputError, TrialError
from .mesh import decompose_reck
from .numerics import RandomSource, haar_unitary

log = logging.getLogger(__name__)

DEFAULT_MAX_N = 64
CONFIG_KEYS = {"architecture", "transmissions", "n_values", "trials", "seed", "output"}
TRANSMISSION_KEYS = {"gate", "switch", "inner", "outer_base"}


@dataclass(frozen=True)
class SweepConfig:
    architecture: ArchitectureConfig
    n_values: tuple[int, ...]
    trials: int = 50
    base_seed: int = 0
    output_path: Path | None = None
    max_n: int = DEFAULT_MAX_N

    def __post_init__(self):
        object.__setattr__(self, "n_values", tuple(int(n) for n in self.n_values))
        if self.architecture.kind == "spatial":
            raise InvalidInputError("Haar sweeps need a loop architecture (dual_loop or chain_loop)")
        if self.trials < 1:
            raise InvalidInputError(f"trials must be >= 1, got {self.trials}")
        if not self.n_values:
            raise InvalidInputError("n_values is empty")
        for n in self.n_values:
            if not 2 <= n <= self.max_n:
                raise InvalidInputError(f"N={n} outside the supported range 2..{self.max_n}")


@dataclass(frozen=True)
class SweepRow:
    N: int
    eta_heuristic: float
    avg_eta_bar: float
    avg_eta_max: float
    avg_eta_min: float
    avg_delta_eta: float
    trials: int
    base_seed: int


@dataclass(frozen=True)
class ComparisonRow:
    N: int
    name: str
    eta_heuristic: float
    avg_eta_bar: float | None = field(default=None)


def heuristic_for(config: ArchitectureConfig, n: int) -> float:
    if config.kind == "chain_loop":
        return heuristics.eta_chain_loop(config.eta_gate, config.eta_inner, n)
    if config.kind == "dual_loop":
        return heuristics.eta_dual_loop(config.eta_gate, config.eta_switch, config.eta_inner, config.outer_base, n)
    return heuristics.eta_spatial(config.eta_gate, n)


def run_trial(config: ArchitectureConfig, n: int, source: RandomSource) -> LossMetrics:
    u = haar_unitary(n, source)
    mesh = decompose_reck(u)
    return loss_metrics(process_matrix(build_diagram(mesh, config)))


def _trial_or_raise(config, n, source):
    try:
        return run_trial(config, n, source)
    except Exception as exc:
        raise TrialError(n, source.stream_index, exc) from exc


def run_haar_sweep(config: SweepConfig, workers: int = 1) -> list[SweepRow]:
    rows = []
    root = RandomSource(config.base_seed)
    for n in config.n_values:
        sources = [root.stream(t) for t in range(config.trials)]
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                metrics = list(pool.map(lambda s: _trial_or_raise(config.architecture, n, s), sources))
        else:
            metrics = [_trial_or_raise(config.architecture, n, s) for s in sources]
        # trial order is fixed by ``sources``; the averages are therefore reproducible
        stats = np.array([[m.eta_bar, m.eta_max, m.eta_min, m.delta_eta] for m in metrics])
        avg = stats.mean(axis=0)
        rows.append(SweepRow(
            N=n,
            eta_heuristic=heuristic_for(config.architecture, n),
            avg_eta_bar=float(avg[0]),
            avg_eta_max=float(avg[1]),
            avg_eta_min=float(avg[2]),
            avg_delta_eta=float(avg[3]),
            trials=config.trials,
            base_seed=config.base_seed,
        ))
        log.debug("N=%d done: %s", n, rows[-1])
    return rows


def run_comparison(n_values, include, with_haar: bool = False, trials: int = 50, base_seed: int = 0,
                   workers: int = 1) -> list[ComparisonRow]:
    """Heuristic (and optionally Haar-averaged) transmission per catalog entry and N.

    Spatial entries never get a Haar column.
    """
    entries = [heuristics.catalog_entry(name) for name in include]
    haar = {}
    if with_haar:
        for e in entries:
            if e.kind == "spatial":
                continue
            sweep = SweepConfig(e.architecture(), tuple(n_values), trials, base_seed)
            for row in run_haar_sweep(sweep, workers):
                haar[(row.N, e.name)] = row.avg_eta_bar
    rows = []
    for n in n_values:
        for e in entries:
            rows.append(ComparisonRow(int(n), e.name, e.heuristic(int(n)), haar.get((int(n), e.name))))
    return rows


def load_sweep_config(path) -> SweepConfig:
    """Read a sweep configuration document (JSON). Unknown keys are rejected."""
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise InvalidInputError(f"{path}: top level must be an object")
    unknown = set(doc) - CONFIG_KEYS
    if unknown:
        raise InvalidInputError(f"{path}: unknown keys {sorted(unknown)}")
    missing = {"architecture", "transmissions", "n_values"} - set(doc)
    if missing:
        raise InvalidInputError(f"{path}: missing keys {sorted(missing)}")
    tr = doc["transmissions"]
    unknown = set(tr) - TRANSMISSION_KEYS
    if unknown:
        raise InvalidInputError(f"{path}: unknown transmission keys {sorted(unknown)}")
    arch = ArchitectureConfig(
        kind=doc["architecture"],
        eta_gate=tr.get("gate"),
        eta_inner=tr.get("inner"),
        eta_switch=tr.get("switch") if doc["architecture"] == "dual_loop" else None,
        outer_base=tr.get("outer_base") if doc["architecture"] == "dual_loop" else None,
    )
    output = doc.get("output")
    if output is not None:
        output = Path(output)
        if not output.is_absolute():
            output = path.parent / output
    return SweepConfig(arch, tuple(doc["n_values"]), int(doc.get("trials", 50)), int(doc.get("seed", 0)), output)
