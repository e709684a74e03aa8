"""Fixture generation driver: geometry sweep, SCF, active space, export."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path

from .active import select_active_space
from .basis import diatomic
from .emit import GENERATOR_STAMP, render_fixture, sha256_of, write_manifest
from .qubitop import build_qubit_hamiltonian, hartree_fock_energy
from .scf import ScfConvergenceError, run_rhf

log = logging.getLogger("hamgen")

MOLECULES = {
    "H2": ("H", "H"),
    "LiH": ("Li", "H"),
}

# LiH is reduced to two electrons in the two frontier orbitals around the
# frozen core, which keeps the register at four qubits.
ACTIVE_SPACE = {
    "H2": None,
    "LiH": (2, 2),
}


@dataclass
class GenerationSpec:
    molecule: str
    bond_lengths: tuple[float, ...]
    output_dir: Path
    basis: str = "STO-3G"
    active_space: tuple[int, int] | None = field(default=None)

    def __post_init__(self):
        if self.molecule not in MOLECULES:
            raise ValueError(f"unsupported molecule {self.molecule!r}")
        if self.basis != "STO-3G":
            raise ValueError("only STO-3G is supported")
        if any(b <= 0 for b in self.bond_lengths):
            raise ValueError("bond lengths must be positive")
        if self.active_space is None:
            self.active_space = ACTIVE_SPACE[self.molecule]


def generate_one(molecule: str, bond_angstrom: float, active_space: tuple[int, int] | None) -> tuple[str, dict]:
    """Fixture text and manifest entry for one geometry."""
    symbol_a, symbol_b = MOLECULES[molecule]
    mol = diatomic(symbol_a, symbol_b, bond_angstrom)
    scf = run_rhf(mol)
    if active_space is None:
        integrals = select_active_space(scf, scf.nuclear_repulsion)
        space_label = "full"
    else:
        n_e, n_o = active_space
        integrals = select_active_space(scf, scf.nuclear_repulsion, n_e, n_o)
        space_label = f"{n_e}e{n_o}o_frozen_{len(integrals.frozen)}"

    operator, n_qubits = build_qubit_hamiltonian(integrals)
    hf_check = hartree_fock_energy(operator, n_qubits, integrals.n_electrons)

    metadata = {
        "molecule": molecule,
        "bond_length_angstrom": repr(float(bond_angstrom)),
        "n_electrons": integrals.n_electrons,
        "basis": "STO-3G",
        "active_space": space_label,
        "generator": GENERATOR_STAMP,
        "scf_energy_hartree": repr(float(scf.energy_total)),
        "nuclear_repulsion_hartree": repr(float(scf.nuclear_repulsion)),
    }
    text = render_fixture(operator, n_qubits, metadata)
    entry = {
        "molecule": molecule,
        "bond_length_angstrom": float(bond_angstrom),
        "n_qubits": n_qubits,
        "n_terms": len(operator),
        "scf_energy_hartree": float(scf.energy_total),
        "reference_determinant_energy_hartree": float(hf_check),
    }
    return text, entry


def fixture_name(molecule: str, bond_angstrom: float) -> str:
    return f"{molecule.lower()}_sto3g_r{bond_angstrom:.2f}.txt"


def generate(spec: GenerationSpec) -> list[Path]:
    """Write one fixture per bond length; skip geometries whose SCF diverges."""
    out_dir = Path(spec.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    entries: list[dict] = []
    for bond in spec.bond_lengths:
        try:
            text, entry = generate_one(spec.molecule, bond, spec.active_space)
        except ScfConvergenceError as exc:
            log.warning("skipping %s at r=%s: %s", spec.molecule, bond, exc)
            continue
        path = out_dir / fixture_name(spec.molecule, bond)
        path.write_text(text, encoding="utf-8")
        entry["path"] = path.name
        entry["sha256"] = sha256_of(path)
        entries.append(entry)
        written.append(path)
        log.info("wrote %s (%d terms)", path, entry["n_terms"])
    write_manifest(out_dir / "manifest.json", entries)
    return written
