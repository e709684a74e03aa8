"""Batch experiment driver: fixture discovery, sweeps over bond length and
prescreening budget, CSV emission with a stable schema.

Per-run outputs are independent files merged deterministically by sorted
key, so runs may execute in parallel without changing any byte of output.
"""

from __future__ import annotations

import json
import os
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .ansatz import build_ansatz
from .eigensolvers import (
    PAPER_SSVQE_BASIS,
    PenaltyConfig,
    SolveConfig,
    SolveResult,
    WeightProfile,
    default_weights,
    exact_spectrum,
    prescreen_then_solve,
    state_assignment,
)
from .errors import ConfigError, FixtureError
from .fermion import ucc_generators
from .hamfile import HamiltonianMetadata, parse_hamiltonian_file
from .optimize import OptimizerConfig
from .pauli import expectation_structure_check

RESULTS_HEADER = "molecule,bond_length,prescreen_iters,state_index,energy,exact_energy,log10_abs_error"
SUMMARY_HEADER = (
    "molecule,bond_length,prescreen_iters,n_under_1e-2,n_under_1e-3,"
    "max_log10_abs_error,median_log10_abs_error"
)
OUTPUT_ROOT_ENV = "VQSPECTRA_OUTPUT_ROOT"


@dataclass(frozen=True)
class ExperimentConfig:
    hamiltonian: str = ""
    molecule: str = ""
    bond_lengths: tuple[float, ...] = ()  # empty = every discovered fixture
    depth: int = 2
    prescreen_iters: tuple[int, ...] = (0, 5, 500)
    vqse_iters: int = 500
    ssvqe_basis: tuple[str, ...] = PAPER_SSVQE_BASIS
    weights: tuple[float, ...] = ()  # empty = default profile
    optimizer: str = "nelder_mead"
    initial_step: float = 0.5
    tolerance: float = 1e-10
    fd_step: float = 1e-5
    deflation_weight: float = 1.0
    seed: int = 0
    output_dir: str = "out"
    workers: int = 1

    def __post_init__(self):
        if self.depth < 1:
            raise ConfigError("depth must be at least 1")
        if any(b <= 0 for b in self.bond_lengths):
            raise ConfigError("bond lengths must be positive")
        if any(p < 0 for p in self.prescreen_iters) or self.vqse_iters < 0:
            raise ConfigError("iteration budgets must be non-negative")
        if self.workers < 1:
            raise ConfigError("workers must be at least 1")

    def resolved_output_dir(self) -> Path:
        out = Path(self.output_dir)
        root = os.environ.get(OUTPUT_ROOT_ENV)
        if root and not out.is_absolute():
            out = Path(root) / out
        return out


_BOOL_KEYS: set[str] = set()
_INT_KEYS = {"depth", "vqse_iters", "seed", "workers"}
_FLOAT_KEYS = {"initial_step", "tolerance", "fd_step", "deflation_weight"}
_LIST_FLOAT_KEYS = {"bond_lengths", "weights"}
_LIST_INT_KEYS = {"prescreen_iters"}
_LIST_STR_KEYS = {"ssvqe_basis"}
_STR_KEYS = {"hamiltonian", "molecule", "optimizer", "output_dir"}


def _coerce(key: str, value: str):
    try:
        if key in _INT_KEYS:
            return int(value)
        if key in _FLOAT_KEYS:
            return float(value)
        if key in _LIST_FLOAT_KEYS:
            return tuple(float(v) for v in value.split(",") if v.strip())
        if key in _LIST_INT_KEYS:
            return tuple(int(v) for v in value.split(",") if v.strip())
        if key in _LIST_STR_KEYS:
            return tuple(v.strip() for v in value.split(",") if v.strip())
        if key in _STR_KEYS:
            return value
    except ValueError:
        raise ConfigError(f"malformed value {value!r} for config key {key!r}") from None
    raise ConfigError(f"unknown config key {key!r}")


def load_config(path: str | Path, overrides: dict[str, str] | None = None) -> ExperimentConfig:
    """Plain-text ``key value`` config file; later lines and overrides win."""
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file not found: {path}")
    values: dict[str, object] = {}
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(None, 1)
        if len(parts) != 2:
            raise ConfigError(f"{path}:{lineno}: expected 'key value'")
        values[parts[0]] = _coerce(parts[0], parts[1].strip())
    for key, value in (overrides or {}).items():
        values[key] = _coerce(key, value)
    try:
        return ExperimentConfig(**values)  # type: ignore[arg-type]
    except TypeError as exc:
        raise ConfigError(str(exc)) from None


def config_from_overrides(overrides: dict[str, str]) -> ExperimentConfig:
    values = {key: _coerce(key, value) for key, value in overrides.items()}
    return ExperimentConfig(**values)  # type: ignore[arg-type]


@dataclass
class RunRecord:
    """Final per-state results of one (bond length, prescreening budget) run."""

    molecule: str
    bond_length: float
    prescreen_iters: int
    energies: tuple[float, ...]
    exact_energies: tuple[float, ...]
    log10_abs_errors: tuple[float, ...]
    fixture_path: str
    fixture_checksum: str
    solve: SolveResult

    def sort_key(self):
        return (self.molecule, self.bond_length, self.prescreen_iters)

    def csv_rows(self) -> list[str]:
        rows = []
        for j, (e, x, err) in enumerate(zip(self.energies, self.exact_energies, self.log10_abs_errors)):
            rows.append(
                f"{self.molecule},{self.bond_length!r},{self.prescreen_iters},{j},{e!r},{x!r},{err!r}"
            )
        return rows


@dataclass(frozen=True)
class SummaryRow:
    molecule: str
    bond_length: float
    prescreen_iters: int
    n_under_1e2: int
    n_under_1e3: int
    max_log10_abs_error: float
    median_log10_abs_error: float

    def csv_row(self) -> str:
        return (
            f"{self.molecule},{self.bond_length!r},{self.prescreen_iters},"
            f"{self.n_under_1e2},{self.n_under_1e3},"
            f"{self.max_log10_abs_error!r},{self.median_log10_abs_error!r}"
        )


def summarize(records: Sequence[RunRecord]) -> list[SummaryRow]:
    """Convergence counts under 0.01 and 0.001 Hartree plus log-error stats.

    Counts compare the sorted calculated energies against the ascending exact
    levels (level-wise, the form the convergence claims are stated in); the
    log-error statistics summarize the per-state by-index errors stored in
    the record rows.
    """
    if not records:
        raise ValueError("no records to summarize")
    rows = []
    for record in sorted(records, key=RunRecord.sort_key):
        level_energies = sorted(record.energies)
        abs_errors = [abs(e - x) for e, x in zip(level_energies, record.exact_energies)]
        rows.append(
            SummaryRow(
                molecule=record.molecule,
                bond_length=record.bond_length,
                prescreen_iters=record.prescreen_iters,
                n_under_1e2=sum(err < 1e-2 for err in abs_errors),
                n_under_1e3=sum(err < 1e-3 for err in abs_errors),
                max_log10_abs_error=max(record.log10_abs_errors),
                median_log10_abs_error=float(statistics.median(record.log10_abs_errors)),
            )
        )
    return rows


def _atomic_write(path: Path, text: str) -> None:
    tmp = path.with_name(f"{path.name}.tmp{os.getpid()}")
    tmp.write_text(text, encoding="utf-8")
    os.replace(tmp, path)


def discover_fixtures(config: ExperimentConfig) -> list[tuple[Path, HamiltonianMetadata]]:
    """Fixture files matching the configured molecule and bond grid."""
    if not config.hamiltonian:
        raise ConfigError("config must name a hamiltonian file or directory")
    root = Path(config.hamiltonian)
    if root.is_file():
        candidates = [root]
    elif root.is_dir():
        candidates = sorted(root.glob("*.txt"))
    else:
        raise FixtureError(f"hamiltonian path does not exist: {root}")
    if not candidates:
        raise FixtureError(f"no fixture files under {root}")

    entries = []
    for path in candidates:
        _, meta = parse_hamiltonian_file(path)
        if config.molecule and meta.molecule != config.molecule:
            continue
        entries.append((path, meta))
    if not entries:
        raise FixtureError(f"no fixtures for molecule {config.molecule!r} under {root}")

    if config.bond_lengths:
        by_bond: list[tuple[Path, HamiltonianMetadata]] = []
        for wanted in config.bond_lengths:
            matches = [
                (p, m)
                for p, m in entries
                if m.bond_length_angstrom is not None
                and abs(m.bond_length_angstrom - wanted) < 1e-9
            ]
            if not matches:
                raise FixtureError(f"no fixture at bond length {wanted} for {config.molecule!r}")
            by_bond.append(matches[0])
        entries = by_bond

    entries.sort(key=lambda item: (item[1].bond_length_angstrom or 0.0, str(item[0])))
    return entries


@dataclass(frozen=True)
class _RunSpec:
    fixture_path: str
    prescreen_iters: int
    config: ExperimentConfig


def run_single(fixture_path: str | Path, prescreen_iters: int, config: ExperimentConfig) -> RunRecord:
    """One full prescreen-then-solve run against one fixture file."""
    h, meta = parse_hamiltonian_file(fixture_path)
    n_electrons = meta.n_electrons if meta.n_electrons is not None else h.n_qubits // 2
    if 0 < n_electrons < h.n_qubits:
        generators = ucc_generators(h.n_qubits, n_electrons)
    else:
        generators = []
    circuit = build_ansatz(h, generators, config.depth)

    weights = WeightProfile(config.weights) if config.weights else default_weights(1 << h.n_qubits)
    solve_config = SolveConfig(
        weights=weights,
        ssvqe_basis=config.ssvqe_basis,
        penalties=PenaltyConfig(deflation_weight=config.deflation_weight),
        optimizer=OptimizerConfig(
            method=config.optimizer,
            max_iterations=config.vqse_iters,
            initial_step=config.initial_step,
            tolerance=config.tolerance,
            fd_step=config.fd_step,
            seed=config.seed,
        ),
    )
    solve = prescreen_then_solve(h, circuit, prescreen_iters, config.vqse_iters, solve_config)
    spectrum = exact_spectrum(h)
    assignments = state_assignment(solve.final_report.energies, spectrum)

    solve.provenance.update(
        {
            "molecule": meta.molecule,
            "bond_length_angstrom": meta.bond_length_angstrom,
            "fixture_checksum": meta.checksum,
            "fixture_path": str(fixture_path),
            "n_electrons": n_electrons,
            "depth": config.depth,
            "circuit": circuit.summary(),
            "hamiltonian_terms": expectation_structure_check(h).term_count,
        }
    )
    return RunRecord(
        molecule=meta.molecule,
        bond_length=float(meta.bond_length_angstrom or 0.0),
        prescreen_iters=prescreen_iters,
        energies=solve.final_report.energies,
        exact_energies=tuple(float(v) for v in spectrum.eigenvalues),
        log10_abs_errors=tuple(a.log10_abs_error for a in assignments),
        fixture_path=str(fixture_path),
        fixture_checksum=meta.checksum,
        solve=solve,
    )


def _execute_spec(spec: _RunSpec) -> RunRecord:
    return run_single(spec.fixture_path, spec.prescreen_iters, spec.config)


def _run_dir_name(record: RunRecord) -> str:
    return f"{record.molecule}_r{record.bond_length!r}_p{record.prescreen_iters}"


def _write_run_outputs(record: RunRecord, out_dir: Path) -> None:
    run_dir = out_dir / "runs" / _run_dir_name(record)
    run_dir.mkdir(parents=True, exist_ok=True)
    _atomic_write(run_dir / "record.csv", "\n".join([RESULTS_HEADER] + record.csv_rows()) + "\n")
    _atomic_write(run_dir / "prescreen_trace.csv", record.solve.prescreen_trace.to_csv_text())
    _atomic_write(run_dir / "vqse_trace.csv", record.solve.vqse_trace.to_csv_text())
    _atomic_write(
        run_dir / "provenance.json",
        json.dumps(record.solve.provenance, sort_keys=True, indent=2) + "\n",
    )


def run_sweep(config: ExperimentConfig) -> list[RunRecord]:
    """Every (bond length, prescreening budget) combination, plus merged CSVs."""
    fixtures = discover_fixtures(config)
    specs = [
        _RunSpec(str(path), prescreen, config)
        for path, _ in fixtures
        for prescreen in config.prescreen_iters
    ]
    if config.workers > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            records = list(pool.map(_execute_spec, specs))
    else:
        records = [_execute_spec(spec) for spec in specs]

    out_dir = config.resolved_output_dir()
    out_dir.mkdir(parents=True, exist_ok=True)
    for record in records:
        _write_run_outputs(record, out_dir)

    records_sorted = sorted(records, key=RunRecord.sort_key)
    merged = [RESULTS_HEADER]
    for record in records_sorted:
        merged.extend(record.csv_rows())
    _atomic_write(out_dir / "results.csv", "\n".join(merged) + "\n")

    summary_rows = [SUMMARY_HEADER] + [row.csv_row() for row in summarize(records_sorted)]
    _atomic_write(out_dir / "summary.csv", "\n".join(summary_rows) + "\n")
    return records_sorted
