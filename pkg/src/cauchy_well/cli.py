"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 regression
tolerance failure. Data goes to stdout or to the requested files; diagnostics
go to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import __version__
from .analysis import (
    Tolerances,
    compare,
    compare_degree_500,
    dumps_report,
    dumps_solution,
    emit,
    load_solution,
    solution_residual,
)
from .errors import CauchyWellError, NumericalFailure, UsageError
from .operators import WeightedPolynomial, apply_AD_closed, boundary_value
from .parity import Parity
from .quadrature import apply_AD_numeric
from .reference import reference_table
from .residual import chebyshev_grid
from .series import eigenvalue_from_series
from .solver import degree_to_n, solve_state
from .trial import expand_trial, make_trial, sweep, trial_residual

EXIT_OK, EXIT_USAGE, EXIT_NUMERICAL, EXIT_REGRESSION = 0, 1, 2, 3
PRECISION_ENV = "CAUCHY_WELL_PRECISION_BITS"

log = logging.getLogger("cauchy_well.cli")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _precision(value) -> int:
    try:
        bits = int(value)
    except (TypeError, ValueError):
        raise UsageError(f"precision bits must be an integer, got {value!r}") from None
    if bits != 0 and not 64 <= bits <= 4096:
        raise UsageError(f"precision bits must be 0 or lie in [64, 4096], got {bits}")
    return bits


def _positive_int(minimum):
    def parse(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
        if v < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {v}")
        return v

    return parse


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--config", type=Path, help="INI file overriding the built-in tolerances and defaults")
    p.add_argument("--precision-bits", help=f"0 for binary64, else 64..4096 (env {PRECISION_ENV})")
    p.add_argument("--imag-tol", type=float, help="max imaginary part accepted as a real solution")
    p.add_argument("--grid-points", type=_positive_int(2), help="residual grid size (>= 2)")
    p.add_argument("--workers", type=_positive_int(1), default=1, help="worker threads for sweep and tables")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="cauchy-well", description="Eigenpairs of the Cauchy operator on (-1, 1).")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", parents=[common], help="solve for one eigenpair")
    p.add_argument("--parity", required=True, choices=["even", "odd"])
    p.add_argument("--degree", required=True, type=int, help="polynomial degree (2n even, 2n+1 odd)")
    p.add_argument("--rank", type=_positive_int(1), default=1)
    p.add_argument("--json", type=Path, help="write the solution document here instead of stdout")
    p.add_argument("--csv", type=Path, help="also write the residual grid here")

    p = sub.add_parser("apply", parents=[common], help="closed-form image of a weighted polynomial")
    p.add_argument("--coeffs", required=True, help="comma-separated alphas, or a file with one per line")
    p.add_argument("--parity", required=True, choices=["even", "odd"])
    p.add_argument("--norm", type=float, help="normalization constant C (default 1)")

    for name, help_text in (("trial", "analyse one trial state"), ("sweep", "scan the trial parameter")):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--kind", required=True, choices=["ground", "excited"])
        if name == "trial":
            p.add_argument("--theta", required=True, type=int, help="numerator of theta in units of pi/4096")
            p.add_argument("--csv", type=Path, help="write the residual grid here")
        else:
            p.add_argument("--theta-from", required=True, type=int)
            p.add_argument("--theta-to", required=True, type=int)
        p.add_argument("--terms", type=_positive_int(1), help="number of series terms kept")
        p.add_argument("--E", dest="energy", required=True, type=float, help="eigenvalue used in the residual")

    p = sub.add_parser("residual", parents=[common], help="residual of a stored solution")
    p.add_argument("--solution", required=True, type=Path)
    p.add_argument("--csv", type=Path, help="write the residual grid here")

    p = sub.add_parser("tables", parents=[common], help="regression against the published tables")
    p.add_argument("--max-degree", type=int, default=100)
    p.add_argument("--table", choices=["I", "II", "III", "all"], default="all")

    p = sub.add_parser("oracle-check", parents=[common], help="closed form against PV quadrature")
    p.add_argument("--degree", type=_positive_int(0), default=20, help="maximum polynomial degree")
    p.add_argument("--points", type=_positive_int(1), default=25)
    p.add_argument("--count", type=_positive_int(1), default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-7)
    return parser


class Settings:
    """Resolved configuration: flag > environment > config file."""

    def __init__(self, args):
        self.tolerances = Tolerances.load(args.config)
        cfg = self.tolerances.cli_default
        if args.precision_bits is not None:
            bits = args.precision_bits
        elif os.environ.get(PRECISION_ENV):
            bits = os.environ[PRECISION_ENV]
        else:
            bits = cfg("precision_bits", int)
        self.precision_bits = _precision(bits if bits is not None else 0)
        self.imag_tol = args.imag_tol if args.imag_tol is not None else cfg("imag_tol")
        self.grid_points = args.grid_points or cfg("grid_points", int)
        if self.grid_points is None or self.grid_points < 2:
            raise UsageError("grid_points must be >= 2")
        self.gamma_terms = getattr(args, "terms", None) or cfg("gamma_terms", int)
        self.workers = args.workers


def _out(text: str) -> None:
    sys.stdout.write(text)


def _json(doc) -> None:
    _out(json.dumps(doc, indent=2) + "\n")


def _report_summary(report) -> dict:
    return {
        "E_used": report.E_used,
        "grid_points": report.grid_points,
        "sup": report.sup,
        "argsup": report.argsup,
        "boundary_limit": report.boundary_limit,
    }


def cmd_solve(args, cfg: Settings) -> int:
    parity = Parity.coerce(args.parity)
    degree_to_n(parity, args.degree)
    sol = solve_state(parity, args.degree, args.rank, cfg.precision_bits, cfg.imag_tol)
    if args.json:
        emit(sol, "json", args.json)
    else:
        _out(dumps_solution(sol))
    if args.csv:
        emit(solution_residual(sol, cfg.grid_points), "csv", args.csv)
    return EXIT_OK


def _read_coeffs(spec: str) -> np.ndarray:
    path = Path(spec)
    text = path.read_text(encoding="utf-8") if path.is_file() else spec
    try:
        values = [float(v) for v in text.replace(",", " ").split()]
    except ValueError as exc:
        raise UsageError(f"cannot parse coefficients: {exc}") from None
    if not values:
        raise UsageError("no coefficients given")
    return np.array(values)


def cmd_apply(args, cfg: Settings) -> int:
    psi = WeightedPolynomial(args.parity, _read_coeffs(args.coeffs), args.norm)
    image = psi.scale * apply_AD_closed(psi)
    _json({
        "parity": psi.parity.value,
        "degree": psi.degree,
        "image_coeffs": image.coeffs.tolist(),
        "boundary_value": boundary_value(image),
    })
    return EXIT_OK


def cmd_trial(args, cfg: Settings) -> int:
    trial = make_trial(args.kind, args.theta, cfg.gamma_terms)
    coeffs = expand_trial(trial)
    series = eigenvalue_from_series(coeffs[:10], trial.parity)
    report = trial_residual(trial, args.energy, cfg.grid_points)
    doc = {
        "kind": trial.kind.value,
        "theta_num": trial.theta_num,
        "gamma_terms": trial.gamma_terms,
        "C": trial.norm_c,
        "taylor_coeffs": coeffs.tolist(),
        "series_E": series.value,
        "series_E_last_increment": series.last_increment,
    }
    doc.update(_report_summary(report))
    _json(doc)
    if args.csv:
        emit(report, "csv", args.csv)
    return EXIT_OK


def cmd_sweep(args, cfg: Settings) -> int:
    result = sweep(args.kind, args.theta_from, args.theta_to, args.energy, cfg.grid_points,
                   cfg.gamma_terms, workers=cfg.workers)
    _json({
        "kind": args.kind,
        "E_used": args.energy,
        "points": [[t, s] for t, s in result.points],
        "argmin": result.argmin,
        "minimum": result.minimum,
    })
    return EXIT_OK


def cmd_residual(args, cfg: Settings) -> int:
    report = solution_residual(load_solution(args.solution), cfg.grid_points)
    _json(_report_summary(report))
    if args.csv:
        emit(report, "csv", args.csv)
    return EXIT_OK


def cmd_tables(args, cfg: Settings) -> int:
    table = reference_table()
    wanted = None if args.table in ("all", "II") else args.table
    entries = [] if args.table == "II" else table.select(wanted, args.max_degree)
    want_500 = args.table in ("all", "II") and args.max_degree >= 500

    def run(entry):
        sol = solve_state(entry.parity, entry.degree, entry.rank, cfg.precision_bits, cfg.imag_tol)
        return compare(sol, table, cfg.tolerances, entry.table)

    with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
        records = list(pool.map(run, entries))
    if want_500:
        records.append(compare_degree_500(solve_state("even", 500, 1, cfg.precision_bits, cfg.imag_tol),
                                          cfg.tolerances))

    failed = 0
    _out("table\trow\tparity\tdegree\trank\tfield\texpected\tcomputed\tdeviation\ttolerance\tstatus\n")
    for rec in records:
        e = rec.entry
        for r in rec.rows:
            status = "ok" if r.passed else "FAIL"
            if r.note:
                status += f" ({r.note})"
            failed += not r.passed
            _out(f"{e.table}\t{e.row}\t{e.parity.value}\t{e.degree}\t{e.rank}\t{r.field}\t{r.expected}\t"
                 f"{r.computed:.10g}\t{r.deviation:.3e}\t{r.tolerance:.1e}\t{status}\n")
    print(f"{len(records)} rows compared, {failed} field(s) out of tolerance", file=sys.stderr)
    return EXIT_REGRESSION if failed else EXIT_OK


def cmd_oracle_check(args, cfg: Settings) -> int:
    rng = np.random.default_rng(args.seed)
    x = chebyshev_grid(args.points)
    worst = 0.0
    for _ in range(args.count):
        parity = Parity.EVEN if rng.integers(2) == 0 else Parity.ODD
        top = max(0, (args.degree - parity.offset) // 2)
        alphas = rng.standard_normal(int(rng.integers(0, top + 1)) + 1)
        psi = WeightedPolynomial(parity, alphas)
        closed = apply_AD_closed(psi)(x)
        numeric = np.array([apply_AD_numeric(psi, xi) for xi in x])
        worst = max(worst, float(np.max(np.abs(closed - numeric))))
    passed = worst <= args.tol
    _json({"count": args.count, "points": args.points, "seed": args.seed,
           "max_abs_error": worst, "tolerance": args.tol, "passed": passed})
    return EXIT_OK if passed else EXIT_REGRESSION


COMMANDS = {
    "solve": cmd_solve,
    "apply": cmd_apply,
    "trial": cmd_trial,
    "sweep": cmd_sweep,
    "residual": cmd_residual,
    "tables": cmd_tables,
    "oracle-check": cmd_oracle_check,
}


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
        return COMMANDS[args.command](args, Settings(args))
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalFailure as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (CauchyWellError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv=None) -> None:
    sys.exit(run(argv))
