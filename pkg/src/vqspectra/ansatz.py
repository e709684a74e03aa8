"""Parameterized circuits built from grouped Pauli exponentials.

A circuit is an ordered list of parameter groups; group ``l`` realizes
``prod_k exp(-i * theta_l * c_k * P_k)`` with the products taken in stored
order (first-order Trotter within the group). One layer consists of one
group per non-identity Hamiltonian word followed by one group per cluster
generator; ``depth`` layers are stacked with independent parameters.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fermion import ExcitationGenerator
from .pauli import PauliSum, PauliTerm
from .statevector import StateVector, _apply_pauli_exp_array, _check_norm

COEFF_IMAG_TOL = 1e-10

ORIGIN_HAMILTONIAN = "hamiltonian_layer"
ORIGIN_UCC_SINGLE = "ucc_single"
ORIGIN_UCC_DOUBLE = "ucc_double"


@dataclass(frozen=True)
class ParameterGroup:
    """Exponentials sharing one variational parameter.

    ``terms`` holds (real coefficient, unit-coefficient Pauli word) pairs.
    """

    origin: str
    terms: tuple[tuple[float, PauliTerm], ...]

    def __post_init__(self):
        counts = {word.n_qubits for _, word in self.terms}
        if len(counts) > 1:
            raise ValueError("all words in a group must share one qubit count")


@dataclass(frozen=True)
class AnsatzCircuit:
    """Immutable ordered collection of parameter groups."""

    n_qubits: int
    groups: tuple[ParameterGroup, ...]
    depth: int

    @property
    def parameter_count(self) -> int:
        return len(self.groups)

    def summary(self) -> dict:
        """Provenance-friendly structure dump."""
        origins: dict[str, int] = {}
        for g in self.groups:
            origins[g.origin] = origins.get(g.origin, 0) + 1
        return {
            "n_qubits": self.n_qubits,
            "depth": self.depth,
            "parameter_count": self.parameter_count,
            "group_origins": origins,
            "term_counts": [len(g.terms) for g in self.groups],
        }


def _ucc_group(generator: ExcitationGenerator, image: PauliSum) -> ParameterGroup:
    # The generator G = T - T^dag maps to sum_k (i m_k) P_k with real m_k;
    # exp(theta*G) is realized as products exp(-i theta (-m_k) P_k).
    terms = []
    for term in image.terms:
        if abs(term.coefficient.real) > COEFF_IMAG_TOL:
            raise ValueError(f"generator image not anti-Hermitian: {term!r}")
        terms.append((-term.coefficient.imag, term.with_coefficient(1.0)))
    origin = ORIGIN_UCC_SINGLE if generator.kind == "single" else ORIGIN_UCC_DOUBLE
    return ParameterGroup(origin, tuple(terms))


def build_ansatz(
    h: PauliSum,
    generators: list[tuple[ExcitationGenerator, PauliSum]],
    depth: int,
) -> AnsatzCircuit:
    """Layered circuit: Hamiltonian-word groups then cluster groups, repeated.

    Each non-identity Hamiltonian word becomes its own group with the word's
    real coefficient folded in; the identity word is dropped (global phase).
    Parameter count is depth * (non-identity words + generators).
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    if not h.is_hermitian:
        raise ValueError("ansatz requires a Hermitian Hamiltonian")
    h_words = h.non_identity_terms()
    if not h_words:
        raise ValueError("Hamiltonian has no non-identity terms")
    layer: list[ParameterGroup] = []
    for term in h_words:
        layer.append(ParameterGroup(ORIGIN_HAMILTONIAN, ((term.coefficient.real, term.with_coefficient(1.0)),)))
    for generator, image in generators:
        if image.n_qubits != h.n_qubits:
            raise ValueError("generator qubit count differs from Hamiltonian")
        layer.append(_ucc_group(generator, image))
    return AnsatzCircuit(h.n_qubits, tuple(layer) * depth, depth)


def _apply_array(circuit: AnsatzCircuit, theta: np.ndarray, amplitudes: np.ndarray) -> np.ndarray:
    """Raw-amplitude circuit application; supports batched leading axes."""
    if theta.shape != (circuit.parameter_count,):
        raise ValueError(
            f"theta length {theta.shape} does not match parameter count {circuit.parameter_count}"
        )
    out = amplitudes
    for angle, group in zip(theta, circuit.groups):
        for coeff, word in group.terms:
            out = _apply_pauli_exp_array(out, circuit.n_qubits, word.x, word.z, float(angle) * coeff)
    return out


def apply(circuit: AnsatzCircuit, theta: np.ndarray, state: StateVector) -> StateVector:
    """Apply the circuit at parameter vector ``theta`` to ``state``."""
    if circuit.n_qubits != state.n_qubits:
        raise ValueError("qubit-count mismatch between circuit and state")
    theta = np.asarray(theta, dtype=float)
    out = _apply_array(circuit, theta, state.amplitudes)
    if out is state.amplitudes:
        out = out.copy()
    _check_norm(out)
    return StateVector(state.n_qubits, out)
