"""Command-line entry points: run, spectrum, validate.

Exit codes: 0 success, 2 config error, 3 fixture error, 4 numerical abort.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .eigensolvers import exact_spectrum
from .errors import ConfigError, FixtureError, NumericalAbortError
from .hamfile import parse_hamiltonian_file, parse_hamiltonian_text, render_hamiltonian
from .runner import config_from_overrides, load_config, run_sweep, summarize

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_FIXTURE = 3
EXIT_NUMERICAL = 4

_OVERRIDE_FLAGS = [
    ("--hamiltonian", "hamiltonian", "fixture file or directory"),
    ("--molecule", "molecule", "molecule label filter"),
    ("--bond-lengths", "bond_lengths", "comma-separated bond lengths (Angstrom)"),
    ("--depth", "depth", "ansatz depth"),
    ("--prescreen-iters", "prescreen_iters", "comma-separated prescreening budgets"),
    ("--vqse-iters", "vqse_iters", "full-register iteration budget"),
    ("--ssvqe-basis", "ssvqe_basis", "comma-separated prescreening basis states"),
    ("--weights", "weights", "comma-separated weight profile override"),
    ("--optimizer", "optimizer", "nelder_mead or finite_diff_gradient_descent"),
    ("--initial-step", "initial_step", "simplex edge or learning rate"),
    ("--tolerance", "tolerance", "optimizer convergence tolerance"),
    ("--fd-step", "fd_step", "finite-difference step"),
    ("--deflation-weight", "deflation_weight", "overlap penalty weight"),
    ("--seed", "seed", "deterministic seed recorded in provenance"),
    ("--output-dir", "output_dir", "output directory"),
    ("--workers", "workers", "parallel run workers"),
]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vqspectra")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a sweep from a config file")
    run.add_argument("config", nargs="?", help="plain-text key-value config file")
    for flag, dest, help_text in _OVERRIDE_FLAGS:
        run.add_argument(flag, dest=dest, default=None, help=help_text)

    spectrum = sub.add_parser("spectrum", help="exact diagonalization of one fixture")
    spectrum.add_argument("file")

    validate = sub.add_parser("validate", help="lint fixture files")
    validate.add_argument("paths", nargs="+")
    return parser


def _cmd_run(args: argparse.Namespace) -> int:
    overrides = {
        dest: str(getattr(args, dest))
        for _, dest, _ in _OVERRIDE_FLAGS
        if getattr(args, dest) is not None
    }
    if args.config:
        config = load_config(args.config, overrides)
    else:
        config = config_from_overrides(overrides)
    records = run_sweep(config)
    for row in summarize(records):
        print(
            f"{row.molecule} r={row.bond_length} prescreen={row.prescreen_iters}: "
            f"{row.n_under_1e2}/{len(records[0].energies)} levels under 0.01 Hartree"
        )
    print(f"results written to {config.resolved_output_dir()}")
    return EXIT_OK


def _cmd_spectrum(args: argparse.Namespace) -> int:
    h, meta = parse_hamiltonian_file(args.file)
    spectrum = exact_spectrum(h)
    payload = {
        "path": meta.path,
        "molecule": meta.molecule,
        "bond_length_angstrom": meta.bond_length_angstrom,
        "n_qubits": meta.n_qubits,
        "checksum": meta.checksum,
        "eigenvalues": [float(v) for v in spectrum.eigenvalues],
    }
    print(json.dumps(payload, sort_keys=True, indent=2))
    return EXIT_OK


def _validate_one(path: Path) -> list[str]:
    problems: list[str] = []
    try:
        h, meta = parse_hamiltonian_file(path)
    except FixtureError as exc:
        return [str(exc)]
    if not h.is_hermitian:
        problems.append(f"{path}: non-Hermitian coefficients")
    if meta.n_qubits > 12:
        problems.append(f"{path}: n_qubits {meta.n_qubits} exceeds the dense-oracle limit")
    if len(h) == 0:
        problems.append(f"{path}: no terms after canonicalization")
    rendered = render_hamiltonian(h, meta.extra)
    h2, _ = parse_hamiltonian_text(rendered, f"{path} (round-trip)")
    if h2 != h:
        problems.append(f"{path}: parse/render round-trip changed the operator")
    return problems


def _cmd_validate(args: argparse.Namespace) -> int:
    files: list[Path] = []
    for raw in args.paths:
        path = Path(raw)
        if path.is_dir():
            files.extend(sorted(path.glob("*.txt")))
        else:
            files.append(path)
    if not files:
        raise FixtureError("no fixture files to validate")
    failures = 0
    for path in files:
        problems = _validate_one(path)
        if problems:
            failures += 1
            for problem in problems:
                print(f"FAIL {problem}")
        else:
            print(f"OK   {path}")
    if failures:
        raise FixtureError(f"{failures} fixture file(s) failed validation")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "spectrum":
            return _cmd_spectrum(args)
        return _cmd_validate(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except FixtureError as exc:
        print(f"fixture error: {exc}", file=sys.stderr)
        return EXIT_FIXTURE
    except NumericalAbortError as exc:
        print(f"numerical abort: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
