"""Dense n-qubit statevectors with Pauli-exponential kernels and exact overlaps.

Basis-state indexing follows the package convention: qubit ``q`` is bit ``q``
of the index, so the string ``"1000"`` (qubit 0 set) is index 1 on 4 qubits.
Overlaps are exact inner products, the infinite-shot value of a swap-test.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .pauli import PauliSum, PauliTerm

NORM_TOL = 1e-10
UNIT_COEFF_TOL = 1e-12


@dataclass(frozen=True)
class StateVector:
    """Amplitudes over the computational basis; treated as immutable."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.amplitudes.shape != (1 << self.n_qubits,):
            raise ValueError("amplitude length must be 2**n_qubits")

    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))


def _check_norm(amplitudes: np.ndarray) -> None:
    norm_sq = float(np.sum(np.abs(amplitudes) ** 2))
    if abs(norm_sq - 1.0) > NORM_TOL:
        raise RuntimeError(f"statevector norm drifted: |psi|^2 = {norm_sq!r}")


def basis_state(n_qubits: int, bits: str) -> StateVector:
    """Computational basis state from a bit string, qubit 0 leftmost."""
    if len(bits) != n_qubits:
        raise ValueError(f"bit string length {len(bits)} != n_qubits {n_qubits}")
    index = 0
    for q, b in enumerate(bits):
        if b == "1":
            index |= 1 << q
        elif b != "0":
            raise ValueError(f"invalid bit {b!r} in basis-state string")
    amplitudes = np.zeros(1 << n_qubits, dtype=complex)
    amplitudes[index] = 1.0
    return StateVector(n_qubits, amplitudes)


def basis_index(n_qubits: int, bits: str) -> int:
    """Index of a basis-state string under the qubit-0-low convention."""
    return int(np.argmax(np.abs(basis_state(n_qubits, bits).amplitudes)))


def from_amplitudes(n_qubits: int, amplitudes: np.ndarray) -> StateVector:
    amplitudes = np.asarray(amplitudes, dtype=complex)
    state = StateVector(n_qubits, amplitudes.copy())
    _check_norm(state.amplitudes)
    return state


@lru_cache(maxsize=4096)
def _word_kernel(n_qubits: int, x: int, z: int) -> tuple[np.ndarray, np.ndarray]:
    """Permutation and phase arrays realizing one Pauli word.

    For a word W with masks (x, z):  (W s)[j] = phase[j] * s[j ^ x], where
    phase[j] = i^{|Y|} * (-1)^{popcount((j ^ x) & z)}.
    """
    dim = 1 << n_qubits
    idx = np.arange(dim, dtype=np.uint64)
    perm = idx ^ np.uint64(x)
    v = perm & np.uint64(z)
    v ^= v >> np.uint64(32)
    v ^= v >> np.uint64(16)
    v ^= v >> np.uint64(8)
    v ^= v >> np.uint64(4)
    v ^= v >> np.uint64(2)
    v ^= v >> np.uint64(1)
    signs = 1.0 - 2.0 * (v & np.uint64(1)).astype(np.float64)
    global_phase = (1j) ** ((x & z).bit_count() % 4)
    phase = (global_phase * signs).astype(complex)
    perm = perm.astype(np.intp)
    perm.setflags(write=False)
    phase.setflags(write=False)
    return perm, phase


def _apply_word(amplitudes: np.ndarray, n_qubits: int, x: int, z: int) -> np.ndarray:
    """W @ amplitudes for one Pauli word, batched over leading axes."""
    perm, phase = _word_kernel(n_qubits, x, z)
    return phase * amplitudes[..., perm]


def _apply_pauli_exp_array(amplitudes: np.ndarray, n_qubits: int, x: int, z: int, angle: float) -> np.ndarray:
    """exp(-i * angle * W) applied to raw amplitudes (supports batched rows)."""
    if angle == 0.0:
        return amplitudes
    if x == 0 and z == 0:
        # Identity word: a pure global phase.
        return np.exp(-1j * angle) * amplitudes
    w_amps = _apply_word(amplitudes, n_qubits, x, z)
    return np.cos(angle) * amplitudes - 1j * np.sin(angle) * w_amps


def apply_pauli_exp(state: StateVector, p: PauliTerm, angle: float) -> StateVector:
    """Apply exp(-i * angle * P) for a unit-coefficient Hermitian Pauli word P.

    A non-unit coefficient is rejected; callers fold real coefficients into
    the angle.
    """
    if p.n_qubits != state.n_qubits:
        raise ValueError("qubit-count mismatch between state and Pauli word")
    if abs(p.coefficient - 1.0) > UNIT_COEFF_TOL:
        raise ValueError(f"Pauli exponential requires unit coefficient, got {p.coefficient!r}")
    out = _apply_pauli_exp_array(state.amplitudes, state.n_qubits, p.x, p.z, float(angle))
    _check_norm(out)
    return StateVector(state.n_qubits, out)


def expectation(state: StateVector, h: PauliSum) -> float:
    """<s|H|s> in Hartree for a Hermitian PauliSum, summed in canonical term order."""
    if h.n_qubits != state.n_qubits:
        raise ValueError("qubit-count mismatch between state and operator")
    if not h.is_hermitian:
        raise ValueError("expectation requires a Hermitian PauliSum")
    total = 0.0 + 0.0j
    s = state.amplitudes
    for term in h.terms:
        total += term.coefficient * np.vdot(s, _apply_word(s, h.n_qubits, term.x, term.z))
    if abs(total.imag) > 1e-10:
        raise RuntimeError(f"expectation of Hermitian operator has imaginary residue {total.imag!r}")
    return float(total.real)


def overlap_sq(a: StateVector, b: StateVector) -> float:
    """|<a|b>|^2, the swap-test value at infinite shots."""
    if a.n_qubits != b.n_qubits:
        raise ValueError("qubit-count mismatch between states")
    return float(abs(np.vdot(a.amplitudes, b.amplitudes)) ** 2)


def _expectations_batch(rows: np.ndarray, h: PauliSum) -> np.ndarray:
    """Real expectation of H for each row of a (m, dim) amplitude matrix.

    Identical math to per-state ``expectation`` with a fixed term order.
    """
    if not h.is_hermitian:
        raise ValueError("expectation requires a Hermitian PauliSum")
    totals = np.zeros(rows.shape[0], dtype=complex)
    for term in h.terms:
        w_rows = _apply_word(rows, h.n_qubits, term.x, term.z)
        totals += term.coefficient * np.sum(np.conj(rows) * w_rows, axis=1)
    residue = float(np.max(np.abs(totals.imag))) if totals.size else 0.0
    if residue > 1e-10:
        raise RuntimeError(f"batched expectation has imaginary residue {residue!r}")
    return totals.real.copy()
