"""Fermionic ladder-operator mapping and excitation machinery.

Spin-orbital layout: even qubit index = alpha spin, odd = beta spin, spatial
orbitals ascending, so the two-electron reference determinant is ``|1100...>``.
The Jordan-Wigner image of a_p^dag is (X_p - iY_p)/2 times a Z string on all
qubits with index below p.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .pauli import PauliSum, PauliTerm

LadderOp = tuple[int, bool]  # (spin-orbital index, is_creation)


@dataclass(frozen=True)
class ExcitationGenerator:
    """A single or double excitation between occupied and virtual spin-orbitals."""

    kind: str  # "single" | "double"
    occupied: tuple[int, ...]
    virtual: tuple[int, ...]
    label: str


@dataclass(frozen=True)
class SymmetryObservable:
    """A conserved-quantity observable realized as a Hermitian PauliSum."""

    kind: str  # "particle_number" | "s_z" | "s_squared"
    operator: PauliSum


def _ladder_pauli(index: int, creation: bool, n_qubits: int) -> PauliSum:
    if not 0 <= index < n_qubits:
        raise ValueError(f"spin-orbital index {index} out of range for {n_qubits} qubits")
    parity = (1 << index) - 1  # Z string below the mode
    x_term = PauliTerm(n_qubits, 1 << index, parity, 0.5)
    y_sign = -0.5j if creation else 0.5j
    y_term = PauliTerm(n_qubits, 1 << index, parity | (1 << index), y_sign)
    return PauliSum(n_qubits, (x_term, y_term))


def jordan_wigner(ops: Sequence[LadderOp], n_qubits: int, coefficient: complex = 1.0) -> PauliSum:
    """Map a product of creation/annihilation operators to a PauliSum.

    ``ops`` is applied right-to-left as an operator product: the first entry
    is the leftmost factor.
    """
    result = PauliSum(n_qubits, (PauliTerm.identity(n_qubits, coefficient),))
    for index, creation in ops:
        result = result @ _ladder_pauli(index, creation, n_qubits)
    return result


def number_operator(n_qubits: int) -> PauliSum:
    total = PauliSum(n_qubits)
    for p in range(n_qubits):
        total = total + jordan_wigner([(p, True), (p, False)], n_qubits)
    return total


def spin(index: int) -> int:
    """+1 for alpha (even index), -1 for beta (odd index)."""
    return 1 if index % 2 == 0 else -1


def ucc_generators(n_qubits: int, n_electrons: int) -> list[tuple[ExcitationGenerator, PauliSum]]:
    """All spin-preserving singles and doubles from the lowest-filled reference.

    Each entry pairs the excitation descriptor with the Jordan-Wigner image of
    (T - T^dag), an anti-Hermitian PauliSum whose terms share one variational
    parameter. Ordering is deterministic: singles by (occupied, virtual), then
    doubles by (occ pair, virt pair).

    Degenerate registers with no spin-preserving excitation at all (a single
    spatial orbital) fall back to treating the modes as spinless, so the toy
    two-qubit problem still carries its one single excitation.
    """
    if not 0 < n_electrons < n_qubits:
        raise ValueError(f"infeasible electron count {n_electrons} for {n_qubits} spin-orbitals")
    occ = range(n_electrons)
    virt = range(n_electrons, n_qubits)

    def build(spin_preserving: bool) -> list[tuple[ExcitationGenerator, PauliSum]]:
        out: list[tuple[ExcitationGenerator, PauliSum]] = []
        for p in occ:
            for q in virt:
                if spin_preserving and spin(p) != spin(q):
                    continue
                gen = ExcitationGenerator("single", (p,), (q,), f"s:{p}->{q}")
                t = jordan_wigner([(q, True), (p, False)], n_qubits)
                t_dag = jordan_wigner([(p, True), (q, False)], n_qubits)
                out.append((gen, t - t_dag))
        for i, p in enumerate(occ):
            for q in list(occ)[i + 1 :]:
                for j, r in enumerate(virt):
                    for s in list(virt)[j + 1 :]:
                        if spin_preserving and spin(p) + spin(q) != spin(r) + spin(s):
                            continue
                        gen = ExcitationGenerator("double", (p, q), (r, s), f"d:{p}{q}->{r}{s}")
                        t = jordan_wigner([(r, True), (s, True), (q, False), (p, False)], n_qubits)
                        t_dag = jordan_wigner([(p, True), (q, True), (s, False), (r, False)], n_qubits)
                        out.append((gen, t - t_dag))
        return out

    generators = build(spin_preserving=True)
    if not generators:
        generators = build(spin_preserving=False)
    return generators


def symmetry_observables(n_qubits: int) -> dict[str, SymmetryObservable]:
    """Particle number, S_z and S^2 as Hermitian PauliSums.

    Requires an even qubit count (alternating alpha/beta spin-orbitals).
    S^2 is expanded as S_z^2 + (S+S- + S-S+)/2.
    """
    if n_qubits % 2 != 0:
        raise ValueError("symmetry observables require an even qubit count")
    n_op = number_operator(n_qubits)

    sz = PauliSum(n_qubits)
    for p in range(n_qubits):
        sz = sz + jordan_wigner([(p, True), (p, False)], n_qubits, 0.5 * spin(p))

    s_plus = PauliSum(n_qubits)
    for orbital in range(n_qubits // 2):
        s_plus = s_plus + jordan_wigner([(2 * orbital, True), (2 * orbital + 1, False)], n_qubits)
    s_minus = PauliSum(n_qubits)
    for orbital in range(n_qubits // 2):
        s_minus = s_minus + jordan_wigner([(2 * orbital + 1, True), (2 * orbital, False)], n_qubits)

    s_squared = (sz @ sz) + ((s_plus @ s_minus) + (s_minus @ s_plus)).scaled(0.5)

    return {
        "particle_number": SymmetryObservable("particle_number", n_op.with_label("N")),
        "s_z": SymmetryObservable("s_z", sz.with_label("S_z")),
        "s_squared": SymmetryObservable("s_squared", s_squared.with_label("S^2")),
    }
