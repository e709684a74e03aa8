"""Restricted Hartree-Fock over precomputed integral tables."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import Molecule
from .integrals import integral_tables


class ScfConvergenceError(RuntimeError):
    pass


@dataclass
class ScfResult:
    energy_total: float
    energy_electronic: float
    nuclear_repulsion: float
    mo_coefficients: np.ndarray  # AO x MO
    mo_energies: np.ndarray
    h_core: np.ndarray
    eri: np.ndarray  # chemist (uv|ls) in the AO basis
    n_occupied: int


def run_rhf(
    mol: Molecule,
    max_iterations: int = 200,
    energy_tol: float = 1e-10,
    density_tol: float = 1e-8,
) -> ScfResult:
    if mol.n_electrons % 2 != 0:
        raise ValueError("restricted SCF requires an even electron count")
    n_occ = mol.n_electrons // 2
    s, t, v, eri = integral_tables(mol)
    h_core = t + v

    # Symmetric orthogonalization.
    s_vals, s_vecs = np.linalg.eigh(s)
    if np.min(s_vals) < 1e-10:
        raise ScfConvergenceError("near-singular overlap matrix")
    x = s_vecs @ np.diag(s_vals**-0.5) @ s_vecs.T

    def solve_fock(fock: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        f_ortho = x.T @ fock @ x
        energies, vectors = np.linalg.eigh(f_ortho)
        return energies, x @ vectors

    def density_of(coeffs: np.ndarray) -> np.ndarray:
        occ = coeffs[:, :n_occ]
        return 2.0 * occ @ occ.T

    def fock_of(density: np.ndarray) -> np.ndarray:
        coulomb = np.einsum("uvls,ls->uv", eri, density)
        exchange = np.einsum("ulsv,ls->uv", eri, density)
        return h_core + coulomb - 0.5 * exchange

    for damping in (0.0, 0.5, 0.8):
        mo_energies, coeffs = solve_fock(h_core)
        density = density_of(coeffs)
        energy = 0.0
        for _ in range(max_iterations):
            fock = fock_of(density)
            new_energy = 0.5 * float(np.sum(density * (h_core + fock)))
            mo_energies, coeffs = solve_fock(fock)
            new_density = density_of(coeffs)
            if damping > 0.0:
                new_density = (1.0 - damping) * new_density + damping * density
            delta_e = abs(new_energy - energy)
            delta_d = float(np.max(np.abs(new_density - density)))
            density, energy = new_density, new_energy
            if delta_e < energy_tol and delta_d < density_tol:
                nuclear = mol.nuclear_repulsion()
                return ScfResult(
                    energy_total=energy + nuclear,
                    energy_electronic=energy,
                    nuclear_repulsion=nuclear,
                    mo_coefficients=coeffs,
                    mo_energies=mo_energies,
                    h_core=h_core,
                    eri=eri,
                    n_occupied=n_occ,
                )
    raise ScfConvergenceError(f"SCF failed to converge after damping retries ({max_iterations} iterations)")
