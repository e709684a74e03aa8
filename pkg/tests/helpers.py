"""Shared test oracles, independent of the library code paths they check."""

from __future__ import annotations

import numpy as np
from scipy.linalg import expm

from vqspectra.ansatz import AnsatzCircuit
from vqspectra.pauli import PauliSum, PauliTerm, term_to_dense


def random_pauli_term(rng: np.random.Generator, n_qubits: int, complex_coeff: bool = True) -> PauliTerm:
    x = int(rng.integers(0, 1 << n_qubits))
    z = int(rng.integers(0, 1 << n_qubits))
    if complex_coeff:
        coeff = complex(rng.normal(), rng.normal())
    else:
        coeff = complex(rng.normal(), 0.0)
    return PauliTerm(n_qubits, x, z, coeff)


def random_hermitian_sum(rng: np.random.Generator, n_qubits: int, n_terms: int) -> PauliSum:
    terms = [random_pauli_term(rng, n_qubits, complex_coeff=False) for _ in range(n_terms)]
    return PauliSum(n_qubits, tuple(terms), label="random")


def random_state(rng: np.random.Generator, n_qubits: int) -> np.ndarray:
    amps = rng.normal(size=1 << n_qubits) + 1j * rng.normal(size=1 << n_qubits)
    return amps / np.linalg.norm(amps)


def circuit_dense_unitary(circuit: AnsatzCircuit, theta: np.ndarray) -> np.ndarray:
    """Ordered product of dense matrix exponentials, via scipy.linalg.expm.

    Groups act on the state in stored order, so later groups multiply from
    the left.
    """
    dim = 1 << circuit.n_qubits
    unitary = np.eye(dim, dtype=complex)
    for angle, group in zip(theta, circuit.groups):
        for coeff, word in group.terms:
            dense = term_to_dense(word)
            unitary = expm(-1j * float(angle) * coeff * dense) @ unitary
    return unitary


def jacobi_eigenvalues(hermitian: np.ndarray, sweeps: int = 100, tol: float = 1e-14) -> np.ndarray:
    """Textbook cyclic Jacobi diagonalization, via a real-symmetric embedding.

    A Hermitian H = A + iB embeds as the real symmetric [[A, -B], [B, A]],
    whose spectrum is that of H with every eigenvalue doubled.
    """
    a = np.asarray(hermitian)
    real = np.block([[a.real, -a.imag], [a.imag, a.real]])
    m = real.copy()
    n = m.shape[0]
    for _ in range(sweeps):
        off = np.sqrt(np.sum(np.tril(m, -1) ** 2))
        if off < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(m[p, q]) < tol / n:
                    continue
                # Classic 2x2 rotation zeroing m[p, q].
                theta_val = (m[q, q] - m[p, p]) / (2.0 * m[p, q])
                t = np.sign(theta_val) / (abs(theta_val) + np.sqrt(theta_val**2 + 1.0))
                if theta_val == 0.0:
                    t = 1.0
                c = 1.0 / np.sqrt(t**2 + 1.0)
                s = t * c
                rot = np.eye(n)
                rot[p, p] = c
                rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                m = rot.T @ m @ rot
    doubled = np.sort(np.diag(m))
    # Every eigenvalue of H appears twice in the embedding.
    return doubled[::2]
