"""Regression against published values, residuals of solved states, and file output."""

from __future__ import annotations

import configparser
import csv
import io
import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional, Union

import numpy as np

from .errors import UsageError
from .operators import apply_AD_closed, boundary_value
from .parity import Parity
from .reference import ReferenceEntry, ReferenceTable, degree_500_alphas, reference_table
from .residual import ResidualReport, residual_report
from .solver import SpectralSolution

SCHEMA_VERSION = 1
CSV_COLUMNS = ("x", "psi", "ad_psi", "residual")


def tool_version() -> str:
    from . import __version__

    return __version__


class Tolerances:
    """Tolerance lookup backed by an INI file; see data/tolerances.ini."""

    def __init__(self, parser: configparser.ConfigParser):
        self._parser = parser

    @classmethod
    def load(cls, path: Union[str, Path, None] = None) -> "Tolerances":
        parser = configparser.ConfigParser()
        default = resources.files("cauchy_well").joinpath("data/tolerances.ini").read_text()
        parser.read_string(default)
        if path is not None:
            try:
                with open(path, encoding="utf-8") as fh:
                    parser.read_file(fh)
            except OSError as exc:
                raise UsageError(f"cannot read config {path}: {exc}") from exc
        return cls(parser)

    def _sections(self, table: str, degree: Optional[int]):
        if degree is not None:
            yield f"{table}:{degree}"
        yield table
        yield "default"

    def get(self, table: str, degree: Optional[int], name: str) -> float:
        for sec in self._sections(table, degree):
            if self._parser.has_option(sec, name):
                return self._parser.getfloat(sec, name)
        raise UsageError(f"no tolerance configured for {name!r}")

    def flag(self, table: str, degree: Optional[int]) -> Optional[str]:
        sec = f"{table}:{degree}"
        return self._parser.get(sec, "flag", fallback=None) if self._parser.has_section(sec) else None

    def cli_default(self, name: str, kind=float):
        raw = self._parser.get("cli", name, fallback=None)
        return None if raw is None else kind(raw)


@dataclass(frozen=True)
class Deviation:
    field: str
    expected: str
    computed: float
    deviation: float
    tolerance: float
    note: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.deviation <= self.tolerance


@dataclass(frozen=True)
class ComparisonRecord:
    entry: ReferenceEntry
    rows: tuple = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    @property
    def flagged(self) -> tuple:
        return tuple(r for r in self.rows if r.note)


def _row(name, expected: str, computed: float, tol: float, note=None) -> Deviation:
    return Deviation(name, expected, float(computed), abs(float(expected) - float(computed)), tol, note)


def compare(solution: SpectralSolution, table: Optional[ReferenceTable] = None,
            tolerances: Optional[Tolerances] = None, table_id: Optional[str] = None) -> ComparisonRecord:
    """Deviations of E, C and each printed coefficient from the matching reference row."""
    table = table or reference_table()
    tolerances = tolerances or Tolerances.load()
    entry = table.lookup(solution.parity, solution.degree, solution.rank, table_id)
    t, d = entry.table, entry.degree
    rows = [_row("E", entry.E, solution.E, tolerances.get(t, d, "E"))]
    if entry.C is not None:
        if solution.norm_c is None:
            raise UsageError("solution is not normalized")
        rows.append(_row("C", entry.C, solution.norm_c, tolerances.get(t, d, "C"), tolerances.flag(t, d)))
    for i, printed in enumerate(entry.alphas, start=1):
        label = f"alpha_{entry.parity.exponent(i)}"
        rows.append(_row(label, printed, solution.alphas[i], tolerances.get(t, d, "alpha")))
    return ComparisonRecord(entry, tuple(rows))


def compare_degree_500(solution: SpectralSolution, tolerances: Optional[Tolerances] = None) -> ComparisonRecord:
    """Loose check of the printed degree-500 coefficient list up to the configured index."""
    if solution.parity is not Parity.EVEN or solution.degree != 500 or solution.rank != 1:
        raise UsageError("the coefficient list refers to the even degree-500 ground state")
    tolerances = tolerances or Tolerances.load()
    tol = tolerances.get("II", None, "alpha")
    max_index = int(tolerances.get("II", None, "max_index"))
    rows = tuple(_row(f"alpha_{2 * i}", printed, solution.alphas[i], tol)
                 for i, printed in enumerate(degree_500_alphas(), start=1) if 2 * i <= max_index)
    entry = ReferenceEntry("II", Parity.EVEN, 500, 1, "nan", row="w500 coefficients")
    return ComparisonRecord(entry, rows)


def solution_residual(solution: SpectralSolution, grid_points: int) -> ResidualReport:
    """|A_D psi - E psi| for a normalized solution, via the closed-form image."""
    if solution.norm_c is None:
        raise UsageError("solution must be normalized")
    psi = solution.psi
    image = psi.scale * apply_AD_closed(psi)
    return residual_report(psi, image, solution.E, grid_points, abs(boundary_value(image)))


# --- serialization -----------------------------------------------------------


def solution_document(solution: SpectralSolution) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "parity": solution.parity.value,
        "degree": solution.degree,
        "rank": solution.rank,
        "E": float(solution.E),
        "C": None if solution.norm_c is None else float(solution.norm_c),
        "alphas": [float(a) for a in solution.alphas],
        "imag_residue": float(solution.imag_residue),
        "precision_bits": int(solution.precision_bits),
        "tool_version": tool_version(),
    }


def dumps_solution(solution: SpectralSolution) -> str:
    return json.dumps(solution_document(solution), indent=2) + "\n"


def loads_solution(text: str) -> SpectralSolution:
    doc = json.loads(text)
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise UsageError(f"unsupported solution schema version {version!r}")
    try:
        return SpectralSolution(
            parity=Parity.coerce(doc["parity"]),
            rank=int(doc["rank"]),
            degree=int(doc["degree"]),
            E=float(doc["E"]),
            alphas=np.asarray(doc["alphas"], dtype=float),
            norm_c=None if doc["C"] is None else float(doc["C"]),
            imag_residue=float(doc.get("imag_residue", 0.0)),
            precision_bits=int(doc.get("precision_bits", 0)),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed solution document: {exc}") from exc


def load_solution(path: Union[str, Path]) -> SpectralSolution:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read solution {path}: {exc}") from exc
    return loads_solution(text)


def report_rows(report: ResidualReport):
    """Grid rows followed by the boundary row; nothing at all for an empty grid."""
    for row in zip(report.x, report.psi, report.ad_psi, report.residual):
        yield tuple(float(v) for v in row)
    if report.x.size:
        yield (1.0, 0.0, report.boundary_limit, report.boundary_limit)


def dumps_report(report: ResidualReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    writer.writerows((repr(v) for v in row) for row in report_rows(report))
    return buf.getvalue()


def emit(item: Union[ResidualReport, SpectralSolution], fmt: str, destination) -> None:
    """Write a report as CSV or a solution as JSON.

    ``destination`` is a path or an open text stream.
    """
    fmt = fmt.lower()
    if fmt == "csv" and isinstance(item, ResidualReport):
        text = dumps_report(item)
    elif fmt == "json" and isinstance(item, SpectralSolution):
        text = dumps_solution(item)
    else:
        raise UsageError(f"cannot emit {type(item).__name__} as {fmt}")
    if hasattr(destination, "write"):
        destination.write(text)
        return
    path = Path(destination)
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OSError(exc.errno, f"cannot write {path}: {exc.strerror}") from exc


def read_report_csv(path: Union[str, Path]) -> np.ndarray:
    """Parse an emitted CSV back into an (rows, 4) array."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if tuple(header) != CSV_COLUMNS:
            raise UsageError(f"unexpected CSV header {header}")
        rows = [[float(v) for v in r] for r in reader]
    return np.array(rows, dtype=float).reshape(-1, 4)

