import numpy as np
import pytest

from helpers import random_pauli_term
from vqspectra.pauli import (
    PauliSum,
    PauliTerm,
    expectation_structure_check,
    multiply,
    term_to_dense,
    to_dense,
)


def term(n, ops, coeff=1.0):
    return PauliTerm.from_ops(n, ops, coeff)


class TestMultiply:
    def test_x_times_y_is_i_z(self):
        product = multiply(term(1, {0: "X"}), term(1, {0: "Y"}))
        assert product.word_str() == "Z0"
        assert product.coefficient == 1j

    def test_identity_is_neutral(self):
        t = term(3, {0: "X", 2: "Z"}, 0.25 - 0.5j)
        identity = PauliTerm.identity(3)
        assert multiply(identity, t) == t
        assert multiply(t, identity) == t

    def test_z0x1_times_x0x1_matches_dense_oracle(self):
        a = term(2, {0: "Z", 1: "X"})
        b = term(2, {0: "X", 1: "X"})
        product = multiply(a, b)
        # Frozen from the 4x4 dense matrix product: Z.X = iY on qubit 0.
        assert product.word_str() == "Y0"
        assert product.coefficient == 1j
        dense_product = term_to_dense(a) @ term_to_dense(b)
        np.testing.assert_allclose(term_to_dense(product), dense_product, atol=1e-14)

    def test_qubit_count_mismatch_rejected(self):
        with pytest.raises(ValueError, match="mismatch"):
            multiply(term(1, {0: "X"}), term(2, {0: "X"}))

    def test_closure_phase_and_magnitude(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            n = int(rng.integers(1, 7))
            a = random_pauli_term(rng, n)
            b = random_pauli_term(rng, n)
            product = multiply(a, b)
            base = a.coefficient * b.coefficient
            if abs(base) < 1e-300:
                continue
            phase = product.coefficient / base
            assert min(abs(phase - p) for p in (1, 1j, -1, -1j)) < 1e-12
            assert abs(abs(product.coefficient) - abs(a.coefficient) * abs(b.coefficient)) < 1e-12

    def test_dense_homomorphism(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            n = int(rng.integers(1, 5))
            a = random_pauli_term(rng, n)
            b = random_pauli_term(rng, n)
            lhs = term_to_dense(multiply(a, b))
            rhs = term_to_dense(a) @ term_to_dense(b)
            np.testing.assert_allclose(lhs, rhs, atol=1e-12)


class TestPauliSum:
    def test_canonicalization_combines_and_prunes(self):
        t = term(2, {0: "X"}, 0.5)
        s = PauliSum(2, (t, t, term(2, {1: "Z"}, 1e-15)))
        assert len(s) == 1
        assert s.terms[0].coefficient == 1.0

    def test_canonicalization_idempotent(self):
        rng = np.random.default_rng(3)
        terms = tuple(random_pauli_term(rng, 3) for _ in range(20))
        once = PauliSum(3, terms)
        twice = PauliSum(3, once.terms)
        assert once.terms == twice.terms

    def test_hermitian_flag(self):
        assert PauliSum(2, (term(2, {0: "Z"}, 1.0),)).is_hermitian
        assert not PauliSum(2, (term(2, {0: "Y"}, 1.0j),)).is_hermitian

    def test_sum_product_matches_dense(self):
        rng = np.random.default_rng(5)
        a = PauliSum(2, tuple(random_pauli_term(rng, 2) for _ in range(4)))
        b = PauliSum(2, tuple(random_pauli_term(rng, 2) for _ in range(4)))
        np.testing.assert_allclose(to_dense(a @ b), to_dense(a) @ to_dense(b), atol=1e-12)

    def test_mismatched_term_size_rejected(self):
        with pytest.raises(ValueError):
            PauliSum(2, (term(3, {0: "X"}),))


class TestToDense:
    def test_z0_single_qubit(self):
        np.testing.assert_array_equal(
            to_dense(PauliSum(1, (term(1, {0: "Z"}),))), np.diag([1.0 + 0j, -1.0 + 0j])
        )

    def test_half_x0_single_qubit(self):
        np.testing.assert_array_equal(
            to_dense(PauliSum(1, (term(1, {0: "X"}, 0.5),))),
            np.array([[0.0, 0.5], [0.5, 0.0]], dtype=complex),
        )

    def test_qubit_zero_is_low_bit(self):
        # Z on qubit 0 of 2 flips sign with bit 0 of the index.
        dense = to_dense(PauliSum(2, (term(2, {0: "Z"}),)))
        np.testing.assert_array_equal(np.diag(dense), [1, -1, 1, -1])

    def test_hermitian_input_gives_hermitian_matrix(self):
        rng = np.random.default_rng(9)
        terms = tuple(random_pauli_term(rng, 3, complex_coeff=False) for _ in range(10))
        dense = to_dense(PauliSum(3, terms))
        assert np.max(np.abs(dense - dense.conj().T)) < 1e-12

    def test_size_limit(self):
        with pytest.raises(ValueError, match="limited"):
            to_dense(PauliSum(13, (PauliTerm.identity(13),)))


class TestStructureCheck:
    def test_empty_sum(self):
        report = expectation_structure_check(PauliSum(2))
        assert report.term_count == 0
        assert report.is_hermitian

    def test_imaginary_coefficient_flags_non_hermitian(self):
        report = expectation_structure_check(PauliSum(1, (term(1, {0: "Y"}, 0.3j),)))
        assert not report.is_hermitian
        assert report.max_abs_imag_coefficient == pytest.approx(0.3)

    def test_locality_histogram(self):
        s = PauliSum(
            3,
            (
                PauliTerm.identity(3, 2.0),
                term(3, {0: "Z"}, 1.0),
                term(3, {1: "Z"}, 1.0),
                term(3, {0: "X", 2: "Y"}, 0.5),
            ),
        )
        report = expectation_structure_check(s)
        assert report.locality_histogram == {0: 1, 1: 2, 2: 1}
