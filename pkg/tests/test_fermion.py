import itertools

import numpy as np
import pytest

from vqspectra.fermion import jordan_wigner, spin, symmetry_observables, ucc_generators
from vqspectra.pauli import PauliSum, PauliTerm, to_dense
from vqspectra.statevector import basis_state, expectation


def dense_ladder(index, creation, n_qubits):
    return to_dense(jordan_wigner([(index, creation)], n_qubits))


class TestJordanWigner:
    def test_number_operator_single_mode(self):
        image = jordan_wigner([(0, True), (0, False)], 1)
        expected = PauliSum(1, (PauliTerm.identity(1, 0.5), PauliTerm.from_ops(1, {0: "Z"}, -0.5)))
        assert image.terms == expected.terms

    def test_hopping_pair(self):
        image = jordan_wigner([(0, True), (1, False)], 2) + jordan_wigner([(1, True), (0, False)], 2)
        expected = PauliSum(
            2,
            (
                PauliTerm.from_ops(2, {0: "X", 1: "X"}, 0.5),
                PauliTerm.from_ops(2, {0: "Y", 1: "Y"}, 0.5),
            ),
        )
        assert image.terms == expected.terms

    def test_index_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            jordan_wigner([(4, True)], 4)

    def test_canonical_anticommutation(self):
        n = 4
        identity = np.eye(1 << n)
        for p in range(n):
            for q in range(n):
                a_p = dense_ladder(p, False, n)
                adag_q = dense_ladder(q, True, n)
                anti = a_p @ adag_q + adag_q @ a_p
                expected = identity if p == q else np.zeros_like(identity)
                assert np.max(np.abs(anti - expected)) < 1e-12

    def test_distinct_mode_annihilators_anticommute(self):
        n = 4
        for p, q in itertools.combinations(range(n), 2):
            a_p = dense_ladder(p, False, n)
            a_q = dense_ladder(q, False, n)
            assert np.max(np.abs(a_p @ a_q + a_q @ a_p)) < 1e-12


class TestUccGenerators:
    def test_counts_match_enumeration(self):
        # Independent enumeration: spin-preserving singles and doubles out of
        # the lowest-filled reference determinant.
        n_qubits, n_electrons = 4, 2
        occ = list(range(n_electrons))
        virt = list(range(n_electrons, n_qubits))
        singles = [(p, q) for p in occ for q in virt if spin(p) == spin(q)]
        doubles = [
            (p, q, r, s)
            for p, q in itertools.combinations(occ, 2)
            for r, s in itertools.combinations(virt, 2)
            if spin(p) + spin(q) == spin(r) + spin(s)
        ]
        generators = ucc_generators(n_qubits, n_electrons)
        assert len(generators) == len(singles) + len(doubles) == 3
        kinds = [g.kind for g, _ in generators]
        assert kinds == ["single", "single", "double"]
        assert [g.label for g, _ in generators] == ["s:0->2", "s:1->3", "d:01->23"]

    def test_two_qubit_one_electron(self):
        generators = ucc_generators(2, 1)
        assert len(generators) == 1
        assert generators[0][0].kind == "single"

    def test_images_anti_hermitian(self):
        for _, image in ucc_generators(4, 2):
            dense = to_dense(image)
            assert np.max(np.abs(dense + dense.conj().T)) < 1e-12
            assert max(abs(t.coefficient.real) for t in image.terms) < 1e-12

    def test_six_qubit_counts(self):
        n_qubits, n_electrons = 6, 2
        occ = list(range(n_electrons))
        virt = list(range(n_electrons, n_qubits))
        singles = [(p, q) for p in occ for q in virt if spin(p) == spin(q)]
        doubles = [
            (p, q, r, s)
            for p, q in itertools.combinations(occ, 2)
            for r, s in itertools.combinations(virt, 2)
            if spin(p) + spin(q) == spin(r) + spin(s)
        ]
        assert len(ucc_generators(n_qubits, n_electrons)) == len(singles) + len(doubles)

    def test_deterministic_ordering(self):
        first = ucc_generators(4, 2)
        second = ucc_generators(4, 2)
        assert [g.label for g, _ in first] == [g.label for g, _ in second]
        for (_, a), (_, b) in zip(first, second):
            assert a.terms == b.terms

    def test_infeasible_electron_count(self):
        with pytest.raises(ValueError, match="infeasible"):
            ucc_generators(4, 4)
        with pytest.raises(ValueError, match="infeasible"):
            ucc_generators(4, 0)


class TestSymmetryObservables:
    def test_vacuum_and_reference_counts(self):
        obs = symmetry_observables(4)
        n_op = obs["particle_number"].operator
        assert expectation(basis_state(4, "0000"), n_op) == pytest.approx(0.0, abs=1e-12)
        assert expectation(basis_state(4, "1100"), n_op) == pytest.approx(2.0, abs=1e-12)

    def test_all_observables_hermitian(self):
        for item in symmetry_observables(4).values():
            assert item.operator.is_hermitian

    def test_sz_values(self):
        obs = symmetry_observables(4)
        sz = obs["s_z"].operator
        assert expectation(basis_state(4, "1010"), sz) == pytest.approx(1.0, abs=1e-12)
        assert expectation(basis_state(4, "0101"), sz) == pytest.approx(-1.0, abs=1e-12)
        assert expectation(basis_state(4, "1100"), sz) == pytest.approx(0.0, abs=1e-12)

    def test_s_squared_block_spectrum(self):
        # Dense oracle: restrict S^2 to the two-electron, S_z = 0 block.
        obs = symmetry_observables(4)
        dense = to_dense(obs["s_squared"].operator)
        block_indices = [
            j
            for j in range(16)
            if bin(j).count("1") == 2
            and sum(1 for q in (0, 2) if j >> q & 1) == sum(1 for q in (1, 3) if j >> q & 1)
        ]
        block = dense[np.ix_(block_indices, block_indices)]
        eigenvalues = np.linalg.eigvalsh(block)
        np.testing.assert_allclose(eigenvalues, [0.0, 0.0, 0.0, 2.0], atol=1e-10)

    def test_odd_qubit_count_rejected(self):
        with pytest.raises(ValueError, match="even"):
            symmetry_observables(3)
