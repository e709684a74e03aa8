"""Contract tests against the committed molecular fixture files."""

import json

import numpy as np
import pytest

from vqspectra.ansatz import build_ansatz
from vqspectra.eigensolvers import exact_spectrum
from vqspectra.fermion import symmetry_observables, ucc_generators
from vqspectra.hamfile import parse_hamiltonian_file
from vqspectra.pauli import expectation_structure_check, to_dense
from vqspectra.statevector import basis_state, expectation


@pytest.fixture(scope="module")
def h2_equilibrium(h2_equilibrium_path):
    return parse_hamiltonian_file(h2_equilibrium_path)


class TestH2Fixture:
    def test_fifteen_distinct_words(self, h2_equilibrium):
        h, _ = h2_equilibrium
        report = expectation_structure_check(h)
        assert report.term_count == 15
        assert report.is_hermitian

    def test_metadata(self, h2_equilibrium):
        _, meta = h2_equilibrium
        assert meta.molecule == "H2"
        assert meta.n_qubits == 4
        assert meta.n_electrons == 2
        assert meta.bond_length_angstrom == 0.74

    def test_ansatz_parameter_count(self, h2_equilibrium):
        h, _ = h2_equilibrium
        circuit = build_ansatz(h, ucc_generators(4, 2), depth=2)
        assert circuit.parameter_count == 2 * (14 + 3) == 34

    def test_ground_energy_matches_committed_reference(self, h2_equilibrium, fixtures_dir):
        h, meta = h2_equilibrium
        reference = json.loads((fixtures_dir / "reference.json").read_text())["h2_r0.74"]
        assert meta.checksum == reference["checksum"]
        spectrum = exact_spectrum(h)
        assert abs(spectrum.eigenvalues[0] - reference["ground_energy_hartree"]) < 1e-9
        np.testing.assert_allclose(
            spectrum.eigenvalues, reference["eigenvalues_hartree"], atol=1e-9
        )

    def test_lowest_eigenvalue_consistent_with_dense(self, h2_equilibrium):
        h, _ = h2_equilibrium
        spectrum = exact_spectrum(h)
        dense_min = float(np.min(np.linalg.eigvalsh(to_dense(h))))
        assert spectrum.eigenvalues[0] == dense_min

    def test_symmetry_commutators_vanish(self, h2_equilibrium):
        h, _ = h2_equilibrium
        h_dense = to_dense(h)
        for item in symmetry_observables(4).values():
            o_dense = to_dense(item.operator)
            commutator = h_dense @ o_dense - o_dense @ h_dense
            assert np.max(np.abs(commutator)) < 1e-8, item.kind

    def test_reference_determinant_matches_scf_metadata(self, h2_equilibrium):
        h, meta = h2_equilibrium
        scf_energy = float(meta.extra["scf_energy_hartree"])
        assert abs(expectation(basis_state(4, "1100"), h) - scf_energy) < 1e-10

    def test_coefficient_sum_equals_vacuum_expectation(self, h2_equilibrium):
        h, _ = h2_equilibrium
        total = sum(t.coefficient.real for t in h.terms)
        assert abs(total - expectation(basis_state(4, "0000"), h)) < 1e-12


class TestFixtureSets:
    def test_h2_sweep_complete(self, h2_dir):
        files = sorted(h2_dir.glob("*.txt"))
        bonds = []
        for path in files:
            _, meta = parse_hamiltonian_file(path)
            assert meta.molecule == "H2"
            assert meta.n_qubits == 4
            bonds.append(meta.bond_length_angstrom)
        expected = {round(0.1 * k, 2) for k in range(1, 26)} | {0.74}
        assert set(bonds) == expected
        assert len(files) == 26

    def test_lih_fixtures_are_four_qubit(self, lih_dir):
        files = sorted(lih_dir.glob("*.txt"))
        assert files, "LiH fixture set is empty"
        for path in files:
            h, meta = parse_hamiltonian_file(path)
            assert meta.molecule == "LiH"
            assert meta.n_qubits == 4
            assert meta.n_electrons == 2
            assert h.is_hermitian
            assert "active_space" in meta.extra

    def test_every_fixture_has_manifest_checksum(self, fixtures_dir):
        for sub in ("h2", "lih"):
            manifest = json.loads((fixtures_dir / sub / "manifest.json").read_text())
            listed = {entry["path"]: entry["sha256"] for entry in manifest["files"]}
            for path in sorted((fixtures_dir / sub).glob("*.txt")):
                _, meta = parse_hamiltonian_file(path)
                assert listed[path.name] == meta.checksum

    def test_render_parse_round_trip_every_fixture(self, fixtures_dir):
        from vqspectra.hamfile import parse_hamiltonian_text, render_hamiltonian

        for sub in ("h2", "lih"):
            for path in sorted((fixtures_dir / sub).glob("*.txt")):
                h1, meta1 = parse_hamiltonian_file(path)
                rendered = render_hamiltonian(h1, meta1.extra)
                h2, meta2 = parse_hamiltonian_text(rendered, str(path))
                assert h2.terms == h1.terms
                assert render_hamiltonian(h2, meta2.extra) == rendered
