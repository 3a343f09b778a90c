"""Loss analysis and control compilation for time-bin loop interferometers."""
from .architectures import ArchitectureConfig, LossDiagram, audit_counts, build_diagram, mode_line_transmissions
from .channel import LossMetrics, loss_metrics, process_matrix
from .errors import LoopMeshError
from .heuristics import (bs_feasibility, catalog, chain_competitive_threshold, eta_chain_loop, eta_dual_loop,
                         eta_spatial, loop_length, per_layer_ratio, transmission_from_loss)
from .kernels import BACKEND
from .mesh import GateParams, MeshDecomposition, PlacedGate, decompose_reck, mzi_matrix, reconstruct
from .numerics import RandomSource, frobenius_distance, haar_unitary, svd_values
from .runner import SweepConfig, run_comparison, run_haar_sweep
from .schedule import ControlSchedule, control_schedule

__version__ = "0.1.0"
