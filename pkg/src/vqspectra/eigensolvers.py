"""Weighted-cost eigensolvers: full-register weighted minimization, a
subspace objective with constraint and deflation penalties, the
subspace-prescreening pipeline, and the dense diagonalization oracle.

The weighted cost drives one shared unitary so that basis state ``j``
(weight rank ``j``) lands on the ``j``-th ascending eigenvector; its global
minimum is the descending-weights / ascending-eigenvalues pairing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .ansatz import AnsatzCircuit, _apply_array
from .errors import ConfigError
from .optimize import IterationTrace, OptimizerConfig, minimize
from .pauli import PauliSum, to_dense
from .statevector import _expectations_batch, basis_index

LOG_ERROR_FLOOR = -16.0
PAPER_SSVQE_BASIS = ("1000", "1100", "0110", "0010")

MODE_VQSE = "vqse"
MODE_SSVQE = "ssvqe"


@dataclass(frozen=True)
class WeightProfile:
    """Strictly decreasing positive weights, one per tracked state."""

    weights: tuple[float, ...]

    def __post_init__(self):
        if not self.weights:
            raise ValueError("weight profile must not be empty")
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")
        if any(b >= a for a, b in zip(self.weights, self.weights[1:])):
            raise ValueError("weights must be strictly decreasing")

    def __len__(self) -> int:
        return len(self.weights)

    def head(self, n: int) -> "WeightProfile":
        return WeightProfile(self.weights[:n])


def default_weights(n_states: int) -> WeightProfile:
    """The (N - j) / (N + 1) profile, j = 0..N-1."""
    if n_states < 1:
        raise ValueError("n_states must be at least 1")
    n = n_states
    return WeightProfile(tuple((n - j) / (n + 1) for j in range(n)))


@dataclass(frozen=True)
class ObjectiveReport:
    """Per-state decomposition of one objective evaluation."""

    mode: str
    weights: tuple[float, ...]
    energies: tuple[float, ...]
    constraint_penalties: tuple[float, ...]
    deflation_penalties: tuple[float, ...]
    total: float


@dataclass(frozen=True)
class ConstraintPenalty:
    """Quadratic penalty pinning an observable to per-state targets."""

    observable: PauliSum
    weight: float
    targets: tuple[float, ...]

    def __post_init__(self):
        if self.weight < 0:
            raise ValueError("constraint penalty weight must be non-negative")


@dataclass(frozen=True)
class PenaltyConfig:
    """Constraint and deflation settings for the subspace objective.

    Constraint penalties default to none; the deflation term is computed
    even though it vanishes for a shared unitary, as a live unitarity check.
    """

    constraints: tuple[ConstraintPenalty, ...] = ()
    deflation_weight: float = 1.0

    def __post_init__(self):
        if self.deflation_weight < 0:
            raise ValueError("deflation weight must be non-negative")


def all_basis_strings(n_qubits: int) -> tuple[str, ...]:
    """All computational basis states in index order, qubit 0 leftmost."""
    return tuple(
        "".join("1" if (j >> q) & 1 else "0" for q in range(n_qubits))
        for j in range(1 << n_qubits)
    )


def _evolved_rows(circuit: AnsatzCircuit, theta: np.ndarray, indices: Sequence[int]) -> np.ndarray:
    """Rows of amplitudes for the circuit applied to the given basis indices."""
    dim = 1 << circuit.n_qubits
    rows = np.zeros((len(indices), dim), dtype=complex)
    for r, j in enumerate(indices):
        rows[r, j] = 1.0
    return _apply_array(circuit, np.asarray(theta, dtype=float), rows)


def vqse_cost(h: PauliSum, circuit: AnsatzCircuit, theta: np.ndarray, weights: WeightProfile) -> ObjectiveReport:
    """Weighted sum of energies of every evolved computational basis state.

    ``weights`` must cover all 2^n states; state ``j`` pairs with weight ``j``.
    """
    dim = 1 << h.n_qubits
    if h.n_qubits != circuit.n_qubits:
        raise ValueError("qubit-count mismatch between Hamiltonian and circuit")
    if len(weights) != dim:
        raise ValueError(f"weight profile length {len(weights)} != 2^n = {dim}")
    rows = _evolved_rows(circuit, theta, range(dim))
    energies = _expectations_batch(rows, h)
    total = 0.0
    for w, e in zip(weights.weights, energies):
        total += w * e
    zeros = (0.0,) * dim
    return ObjectiveReport(
        mode=MODE_VQSE,
        weights=weights.weights,
        energies=tuple(float(e) for e in energies),
        constraint_penalties=zeros,
        deflation_penalties=zeros,
        total=total,
    )


def ssvqe_objective(
    h: PauliSum,
    circuit: AnsatzCircuit,
    theta: np.ndarray,
    weights: WeightProfile,
    init_states: Sequence[str],
    penalties: PenaltyConfig,
) -> ObjectiveReport:
    """Weighted subspace objective with constraint and deflation terms.

    ``init_states`` are distinct computational basis strings; per-state cost
    is energy plus quadratic constraint penalties plus the weighted sum of
    squared overlaps with earlier states.
    """
    if h.n_qubits != circuit.n_qubits:
        raise ValueError("qubit-count mismatch between Hamiltonian and circuit")
    n_states = len(init_states)
    if len(weights) != n_states:
        raise ValueError(f"weight profile length {len(weights)} != {n_states} initial states")
    indices = [basis_index(h.n_qubits, bits) for bits in init_states]
    if len(set(indices)) != n_states:
        raise ValueError("initial states must be orthonormal (distinct basis states)")
    for c in penalties.constraints:
        if len(c.targets) != n_states:
            raise ValueError("constraint targets must match the number of states")

    rows = _evolved_rows(circuit, theta, indices)
    energies = _expectations_batch(rows, h)

    constraint = np.zeros(n_states)
    for c in penalties.constraints:
        if c.weight == 0.0:
            continue
        observed = _expectations_batch(rows, c.observable)
        constraint += c.weight * (observed - np.asarray(c.targets)) ** 2

    gram = rows.conj() @ rows.T
    overlap_sq = np.abs(gram) ** 2
    deflation = np.zeros(n_states)
    for j in range(n_states):
        acc = 0.0
        for i in range(j):
            acc += overlap_sq[i, j]
        deflation[j] = penalties.deflation_weight * acc

    total = 0.0
    for j in range(n_states):
        total += weights.weights[j] * (float(energies[j]) + float(constraint[j]) + float(deflation[j]))
    return ObjectiveReport(
        mode=MODE_SSVQE,
        weights=weights.weights,
        energies=tuple(float(e) for e in energies),
        constraint_penalties=tuple(float(c) for c in constraint),
        deflation_penalties=tuple(float(d) for d in deflation),
        total=total,
    )


@dataclass(frozen=True)
class SolveConfig:
    """Settings shared by the prescreening and full-register phases."""

    weights: WeightProfile | None = None  # full 2^n profile; default (N-j)/(N+1)
    ssvqe_basis: tuple[str, ...] = PAPER_SSVQE_BASIS
    penalties: PenaltyConfig = field(default_factory=PenaltyConfig)
    optimizer: OptimizerConfig = field(default_factory=OptimizerConfig)
    initial_theta: tuple[float, ...] | None = None  # default all zeros


@dataclass
class SolveResult:
    """Both optimization phases of one prescreened run."""

    theta_initial: np.ndarray
    theta_prescreened: np.ndarray
    theta_final: np.ndarray
    prescreen_trace: IterationTrace
    vqse_trace: IterationTrace
    prescreen_report: ObjectiveReport
    final_report: ObjectiveReport
    provenance: dict


def prescreen_then_solve(
    h: PauliSum,
    circuit: AnsatzCircuit,
    prescreen_iters: int,
    vqse_iters: int,
    config: SolveConfig | None = None,
) -> SolveResult:
    """Minimize the subspace objective, then the full weighted cost.

    The prescreening basis must be a subset of the full-register basis, and
    both phases share the same circuit object, so the number of variables is
    identical by construction. ``prescreen_iters = 0`` reduces to a plain
    weighted run from the configured initial theta.
    """
    if prescreen_iters < 0 or vqse_iters < 0:
        raise ConfigError("iteration budgets must be non-negative")
    config = config or SolveConfig()
    dim = 1 << h.n_qubits
    weights = config.weights or default_weights(dim)
    if len(weights) != dim:
        raise ConfigError(f"weight profile length {len(weights)} != 2^n = {dim}")

    full_basis = set(all_basis_strings(h.n_qubits))
    for bits in config.ssvqe_basis:
        if bits not in full_basis:
            raise ConfigError(
                f"prescreening basis state {bits!r} is not part of the full-register basis"
            )
    if len(set(config.ssvqe_basis)) != len(config.ssvqe_basis):
        raise ConfigError("prescreening basis states must be distinct")

    if config.initial_theta is None:
        theta0 = np.zeros(circuit.parameter_count)
    else:
        theta0 = np.asarray(config.initial_theta, dtype=float)
        if theta0.shape != (circuit.parameter_count,):
            raise ConfigError("initial theta length does not match the circuit")

    subset_weights = weights.head(len(config.ssvqe_basis))

    def prescreen_objective(theta: np.ndarray) -> float:
        return ssvqe_objective(h, circuit, theta, subset_weights, config.ssvqe_basis, config.penalties).total

    def full_objective(theta: np.ndarray) -> float:
        return vqse_cost(h, circuit, theta, weights).total

    phase1_config = OptimizerConfig(
        method=config.optimizer.method,
        max_iterations=prescreen_iters,
        initial_step=config.optimizer.initial_step,
        tolerance=config.optimizer.tolerance,
        fd_step=config.optimizer.fd_step,
        seed=config.optimizer.seed,
    )
    theta_pre, trace_pre = minimize(prescreen_objective, theta0, phase1_config)

    phase2_config = OptimizerConfig(
        method=config.optimizer.method,
        max_iterations=vqse_iters,
        initial_step=config.optimizer.initial_step,
        tolerance=config.optimizer.tolerance,
        fd_step=config.optimizer.fd_step,
        seed=config.optimizer.seed,
    )
    theta_final, trace_full = minimize(full_objective, theta_pre, phase2_config)

    prescreen_report = ssvqe_objective(
        h, circuit, theta_pre, subset_weights, config.ssvqe_basis, config.penalties
    )
    final_report = vqse_cost(h, circuit, theta_final, weights)

    provenance = {
        "weights": list(weights.weights),
        "ssvqe_basis": list(config.ssvqe_basis),
        "prescreen_iterations": prescreen_iters,
        "vqse_iterations": vqse_iters,
        "deflation_weight": config.penalties.deflation_weight,
        "constraint_weights": {
            c.observable.label or f"constraint_{i}": c.weight
            for i, c in enumerate(config.penalties.constraints)
        },
        "optimizer": {
            "method": config.optimizer.method,
            "initial_step": config.optimizer.initial_step,
            "tolerance": config.optimizer.tolerance,
            "fd_step": config.optimizer.fd_step,
            "seed": config.optimizer.seed,
        },
        "iteration_unit": "one simplex transformation or one gradient step",
        "initial_theta": "zeros" if config.initial_theta is None else list(config.initial_theta),
        "objective_evaluations": {
            "prescreen": trace_pre.n_evaluations,
            "vqse": trace_full.n_evaluations,
        },
    }
    return SolveResult(
        theta_initial=theta0,
        theta_prescreened=theta_pre,
        theta_final=theta_final,
        prescreen_trace=trace_pre,
        vqse_trace=trace_full,
        prescreen_report=prescreen_report,
        final_report=final_report,
        provenance=provenance,
    )


@dataclass(frozen=True)
class ExactSpectrum:
    """Ascending eigenpairs of the dense Hamiltonian."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # column i pairs with eigenvalues[i]


def exact_spectrum(h: PauliSum) -> ExactSpectrum:
    """Dense diagonalization reference with a residual guarantee of 1e-9."""
    matrix = to_dense(h)
    eigenvalues, eigenvectors = np.linalg.eigh(matrix)
    residual = np.max(np.abs(matrix @ eigenvectors - eigenvectors * eigenvalues))
    if residual > 1e-9:
        raise RuntimeError(f"eigendecomposition residual {residual!r} exceeds 1e-9")
    return ExactSpectrum(eigenvalues=eigenvalues, eigenvectors=eigenvectors)


@dataclass(frozen=True)
class StateAssignment:
    """Comparison of one weighted state against the exact spectrum."""

    state_index: int
    energy: float
    exact_energy: float  # by-index pairing (primary comparison)
    log10_abs_error: float
    nearest_level: int  # diagnostic only
    nearest_abs_error: float


def log10_abs_error(energy: float, exact: float) -> float:
    err = abs(energy - exact)
    if err == 0.0:
        return LOG_ERROR_FLOOR
    return max(math.log10(err), LOG_ERROR_FLOOR)


def state_assignment(energies: Sequence[float], spectrum: ExactSpectrum) -> list[StateAssignment]:
    """By-index comparison of weight-ordered energies to ascending exact levels."""
    exact = np.asarray(spectrum.eigenvalues, dtype=float)
    if len(energies) != exact.size:
        raise ValueError("energy count does not match the exact spectrum size")
    out = []
    for j, energy in enumerate(energies):
        nearest = int(np.argmin(np.abs(exact - energy)))
        out.append(
            StateAssignment(
                state_index=j,
                energy=float(energy),
                exact_energy=float(exact[j]),
                log10_abs_error=log10_abs_error(float(energy), float(exact[j])),
                nearest_level=nearest,
                nearest_abs_error=float(abs(exact[nearest] - energy)),
            )
        )
    return out
