"""Command-line interface: ``loopmesh <command> ...`` / ``python -m loopmesh``."""
from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path

import numpy as np

from . import heuristics, runner
from .architectures import build_diagram
from .emit import emit_csv, emit_svg, to_csv
from .errors import InvalidInputError, LoopMeshError
from .mesh import decompose_reck
from .numerics import RandomSource, haar_unitary
from .schedule import control_schedule

ARCH_ALIASES = {"dl": "dual_loop", "cl": "chain_loop", "dual_loop": "dual_loop", "chain_loop": "chain_loop"}


def read_matrix_csv(path) -> np.ndarray:
    """Complex matrix from CSV cells such as ``0.5+0.1j`` or ``-1j``."""
    rows = []
    with open(path, encoding="utf-8", newline="") as fh:
        for rec in csv.reader(fh):
            if not rec or all(not c.strip() for c in rec):
                continue
            try:
                rows.append([complex(c.strip().replace(" ", "")) for c in rec])
            except ValueError as exc:
                raise InvalidInputError(f"{path}: bad matrix entry ({exc})") from None
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise InvalidInputError(f"{path}: matrix rows are empty or ragged")
    return np.array(rows, dtype=np.complex128)


def _write(text, path):
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _ints(s):
    return [int(x) for x in s.split(",") if x.strip()]


def _gates_csv(mesh):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["layer", "pair", "theta", "phi", "is_padding"])
    for g in mesh.gates:
        w.writerow([g.layer, g.pair, repr(g.params.theta), repr(g.params.phi), int(g.is_padding)])
    return buf.getvalue()


def _phases_csv(mesh):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["mode", "re", "im", "angle"])
    for k, p in enumerate(mesh.output_phases, start=1):
        w.writerow([k, repr(float(p.real)), repr(float(p.imag)), repr(float(np.angle(p)))])
    return buf.getvalue()


def _mesh_from_args(args):
    if args.matrix is not None:
        return decompose_reck(read_matrix_csv(args.matrix))
    if args.n is None:
        raise InvalidInputError("give a matrix file or --n for a Haar-random unitary")
    return decompose_reck(haar_unitary(args.n, RandomSource(args.seed)))


def cmd_decompose(args):
    mesh = decompose_reck(read_matrix_csv(args.matrix))
    if args.output is None and args.phases is None:
        sys.stdout.write(_gates_csv(mesh) + "\n" + _phases_csv(mesh))
        return
    _write(_gates_csv(mesh), args.output)
    phases = args.phases
    if phases is None:
        out = Path(args.output)
        phases = out.with_name(out.stem + "_phases.csv")
    _write(_phases_csv(mesh), phases)


def cmd_schedule(args):
    sched = control_schedule(_mesh_from_args(args), ARCH_ALIASES[args.arch], args.tau, args.d)
    _write(sched.to_csv(), args.output)


def cmd_diagram(args):
    mesh = _mesh_from_args(args)
    entry = heuristics.catalog_entry(args.config)
    _write(build_diagram(mesh, entry.architecture()).dump(), args.output)


def cmd_sweep(args):
    cfg = runner.load_sweep_config(args.config)
    rows = runner.run_haar_sweep(cfg, workers=args.workers)
    if cfg.output_path is None:
        sys.stdout.write(to_csv(rows))
    else:
        emit_csv(rows, cfg.output_path)
    if args.svg:
        xs = [r.N for r in rows]
        series = [(name, xs, [getattr(r, attr) for r in rows]) for name, attr in (
            ("heuristic", "eta_heuristic"), ("<eta_bar>", "avg_eta_bar"),
            ("<eta_max>", "avg_eta_max"), ("<eta_min>", "avg_eta_min"))]
        emit_svg(series, args.svg, log_y=True, title=cfg.architecture.kind)


def cmd_compare(args):
    names = [s.strip() for s in args.configs.split(",") if s.strip()]
    rows = runner.run_comparison(_ints(args.n), names, args.haar, args.trials, args.seed, args.workers)
    if args.output is None:
        sys.stdout.write(to_csv(rows))
    else:
        emit_csv(rows, args.output)
    if args.svg:
        series = []
        for name in names:
            mine = [r for r in rows if r.name == name]
            series.append((name, [r.N for r in mine], [r.eta_heuristic for r in mine]))
            if args.haar and mine[0].avg_eta_bar is not None:
                series.append((name + " <eta_bar>", [r.N for r in mine], [r.avg_eta_bar for r in mine]))
        emit_svg(series, args.svg, log_y=True, title="overall transmission")


def cmd_catalog(args):
    _write(heuristics.catalog_csv(), args.output)


def cmd_feasibility(args):
    print(heuristics.bs_feasibility(args.eta, args.n).value)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="loopmesh", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("decompose", help="Reck-decompose a unitary given as CSV of re+imj entries")
    s.add_argument("matrix")
    s.add_argument("-o", "--output", help="gate CSV (default: stdout, followed by the phase table)")
    s.add_argument("--phases", help="output-phase CSV (default: <output stem>_phases.csv)")
    s.set_defaults(func=cmd_decompose)

    def mesh_source(sp):
        sp.add_argument("--matrix", help="unitary CSV; otherwise a Haar-random unitary is drawn")
        sp.add_argument("--n", type=int, help="mode count for the Haar-random unitary")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("-o", "--output")

    s = sub.add_parser("schedule", help="emit the control event list")
    s.add_argument("--arch", choices=sorted(ARCH_ALIASES), required=True)
    s.add_argument("--tau", type=float, required=True)
    s.add_argument("--d", type=float, default=0.0)
    mesh_source(s)
    s.set_defaults(func=cmd_schedule)

    s = sub.add_parser("diagram", help="dump the loss diagram for a catalog platform")
    s.add_argument("--config", required=True, help="catalog name, e.g. CL_INT_CURRENT")
    mesh_source(s)
    s.set_defaults(func=cmd_diagram)

    s = sub.add_parser("sweep", help="Haar Monte-Carlo sweep from a JSON config")
    s.add_argument("--config", required=True)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--svg")
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("compare", help="compare catalog platforms over N")
    s.add_argument("--n", required=True, help="comma-separated mode counts")
    s.add_argument("--configs", required=True, help="comma-separated catalog names")
    s.add_argument("--haar", action="store_true")
    s.add_argument("--trials", type=int, default=50)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--svg")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_compare)

    s = sub.add_parser("catalog", help="print the component catalog as CSV")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("feasibility", help="boson-sampling advantage check")
    s.add_argument("--eta", type=float, required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_feasibility)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (LoopMeshError, OSError, ValueError) as exc:
        msg = " ".join(str(exc).split())
        print(f"loopmesh {args.command}: error: {msg}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
