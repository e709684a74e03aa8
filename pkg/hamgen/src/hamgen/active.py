"""Molecular-orbital integrals, frozen-core folding, and active-space selection."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .scf import ScfResult


@dataclass
class SpatialIntegrals:
    """Spatial-orbital integrals for the retained (active) orbitals."""

    constant: float  # nuclear repulsion plus frozen-core energy
    one_body: np.ndarray  # h'_pq over active orbitals
    two_body: np.ndarray  # chemist (pq|rs) over active orbitals
    n_electrons: int
    frozen: tuple[int, ...]
    active: tuple[int, ...]


def mo_integrals(scf: ScfResult) -> tuple[np.ndarray, np.ndarray]:
    c = scf.mo_coefficients
    h_mo = c.T @ scf.h_core @ c
    eri_mo = np.einsum("up,uvls->pvls", c, scf.eri, optimize=True)
    eri_mo = np.einsum("vq,pvls->pqls", c, eri_mo, optimize=True)
    eri_mo = np.einsum("lr,pqls->pqrs", c, eri_mo, optimize=True)
    eri_mo = np.einsum("st,pqrs->pqrt", c, eri_mo, optimize=True)
    return h_mo, eri_mo


def select_active_space(
    scf: ScfResult,
    nuclear_repulsion: float,
    n_active_electrons: int | None = None,
    n_active_orbitals: int | None = None,
) -> SpatialIntegrals:
    """Freeze the lowest orbitals and keep an electron/orbital window.

    Defaults keep everything. The active window is centered on the occupied
    frontier: frozen pairs fill from the bottom.
    """
    h_mo, eri_mo = mo_integrals(scf)
    n_mo = h_mo.shape[0]
    total_electrons = 2 * scf.n_occupied
    if n_active_electrons is None or n_active_orbitals is None:
        frozen: tuple[int, ...] = ()
        active = tuple(range(n_mo))
        n_electrons = total_electrons
    else:
        if n_active_electrons % 2 != 0:
            raise ValueError("active electron count must be even for a closed-shell core")
        n_frozen = (total_electrons - n_active_electrons) // 2
        frozen = tuple(range(n_frozen))
        active = tuple(range(n_frozen, n_frozen + n_active_orbitals))
        if active and active[-1] >= n_mo:
            raise ValueError("active window exceeds the orbital count")
        n_electrons = n_active_electrons

    core = 0.0
    for i in frozen:
        core += 2.0 * h_mo[i, i]
        for j in frozen:
            core += 2.0 * eri_mo[i, i, j, j] - eri_mo[i, j, j, i]

    n_act = len(active)
    one_body = np.zeros((n_act, n_act))
    for a, p in enumerate(active):
        for b, q in enumerate(active):
            value = h_mo[p, q]
            for i in frozen:
                value += 2.0 * eri_mo[p, q, i, i] - eri_mo[p, i, i, q]
            one_body[a, b] = value

    idx = np.ix_(active, active, active, active)
    two_body = eri_mo[idx].copy()

    return SpatialIntegrals(
        constant=nuclear_repulsion + core,
        one_body=one_body,
        two_body=two_body,
        n_electrons=n_electrons,
        frozen=frozen,
        active=active,
    )
