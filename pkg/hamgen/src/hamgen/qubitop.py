"""Second quantization of spatial integrals and Jordan-Wigner export.

Spin-orbital convention: spatial orbital p with alpha spin sits on qubit 2p,
beta on qubit 2p+1. Jordan-Wigner strings put Z on every qubit below the
mode. Pauli words here are letter tuples, kept deliberately simple.
"""

from __future__ import annotations

from .active import SpatialIntegrals

PRUNE_TOL = 1e-12

# letter products: (phase, letter)
_LETTER_PRODUCT = {
    ("I", "I"): (1.0, "I"),
    ("I", "X"): (1.0, "X"),
    ("I", "Y"): (1.0, "Y"),
    ("I", "Z"): (1.0, "Z"),
    ("X", "I"): (1.0, "X"),
    ("Y", "I"): (1.0, "Y"),
    ("Z", "I"): (1.0, "Z"),
    ("X", "X"): (1.0, "I"),
    ("Y", "Y"): (1.0, "I"),
    ("Z", "Z"): (1.0, "I"),
    ("X", "Y"): (1.0j, "Z"),
    ("Y", "X"): (-1.0j, "Z"),
    ("Y", "Z"): (1.0j, "X"),
    ("Z", "Y"): (-1.0j, "X"),
    ("Z", "X"): (1.0j, "Y"),
    ("X", "Z"): (-1.0j, "Y"),
}

Word = tuple[str, ...]
PauliDict = dict[Word, complex]


def _multiply_words(a: Word, b: Word) -> tuple[complex, Word]:
    phase = 1.0 + 0.0j
    letters = []
    for la, lb in zip(a, b):
        f, letter = _LETTER_PRODUCT[(la, lb)]
        phase *= f
        letters.append(letter)
    return phase, tuple(letters)


def _add(target: PauliDict, word: Word, coeff: complex) -> None:
    target[word] = target.get(word, 0.0 + 0.0j) + coeff


def _multiply_dicts(a: PauliDict, b: PauliDict) -> PauliDict:
    out: PauliDict = {}
    for word_a, coeff_a in a.items():
        for word_b, coeff_b in b.items():
            phase, word = _multiply_words(word_a, word_b)
            _add(out, word, coeff_a * coeff_b * phase)
    return out


def _ladder(mode: int, creation: bool, n_qubits: int) -> PauliDict:
    prefix = ["Z"] * mode
    x_word = tuple(prefix + ["X"] + ["I"] * (n_qubits - mode - 1))
    y_word = tuple(prefix + ["Y"] + ["I"] * (n_qubits - mode - 1))
    y_coeff = -0.5j if creation else 0.5j
    return {x_word: 0.5 + 0.0j, y_word: y_coeff}


def _ladder_product(modes: list[tuple[int, bool]], n_qubits: int, coeff: complex) -> PauliDict:
    identity: Word = tuple(["I"] * n_qubits)
    out: PauliDict = {identity: coeff}
    for mode, creation in modes:
        out = _multiply_dicts(out, _ladder(mode, creation, n_qubits))
    return out


def build_qubit_hamiltonian(integrals: SpatialIntegrals) -> tuple[PauliDict, int]:
    """Interleaved-spin Jordan-Wigner image of the active-space Hamiltonian."""
    n_spatial = integrals.one_body.shape[0]
    n_qubits = 2 * n_spatial
    identity: Word = tuple(["I"] * n_qubits)
    total: PauliDict = {identity: complex(integrals.constant)}

    h = integrals.one_body
    for p in range(n_spatial):
        for q in range(n_spatial):
            if abs(h[p, q]) < PRUNE_TOL:
                continue
            for sigma in (0, 1):
                term = _ladder_product(
                    [(2 * p + sigma, True), (2 * q + sigma, False)], n_qubits, complex(h[p, q])
                )
                for word, coeff in term.items():
                    _add(total, word, coeff)

    g = integrals.two_body
    for p in range(n_spatial):
        for q in range(n_spatial):
            for r in range(n_spatial):
                for s in range(n_spatial):
                    value = g[p, q, r, s]
                    if abs(value) < PRUNE_TOL:
                        continue
                    for sigma in (0, 1):
                        for tau in (0, 1):
                            modes = [
                                (2 * p + sigma, True),
                                (2 * r + tau, True),
                                (2 * s + tau, False),
                                (2 * q + sigma, False),
                            ]
                            term = _ladder_product(modes, n_qubits, 0.5 * complex(value))
                            for word, coeff in term.items():
                                _add(total, word, coeff)

    cleaned: PauliDict = {}
    for word, coeff in total.items():
        if abs(coeff) < PRUNE_TOL:
            continue
        if abs(coeff.imag) > 1e-10:
            raise RuntimeError(f"non-real coefficient {coeff!r} for word {word!r}")
        cleaned[word] = complex(coeff.real)
    return cleaned, n_qubits


def hartree_fock_energy(operator: PauliDict, n_qubits: int, n_electrons: int) -> float:
    """Diagonal expectation in the lowest-filled determinant, for cross-checks."""
    occupied = set(range(n_electrons))
    energy = 0.0
    for word, coeff in operator.items():
        value = coeff.real
        for qubit, letter in enumerate(word):
            if letter in ("X", "Y"):
                value = 0.0
                break
            if letter == "Z" and qubit in occupied:
                value = -value
        energy += value
    return energy
