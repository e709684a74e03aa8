"""Pauli-string algebra on bit-mask pairs, with dense realization for small registers.

Conventions used throughout the package:

- A Pauli word on ``n`` qubits is stored as two integer masks ``(x, z)``:
  bit ``q`` of ``x`` set means the word acts with X or Y on qubit ``q``,
  bit ``q`` of ``z`` set means Z or Y.  ``(0, 0)`` is I, ``(1, 0)`` X,
  ``(1, 1)`` Y, ``(0, 1)`` Z.
- Qubit 0 is the leftmost letter in string renderings and the lowest bit
  in computational-basis indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

PRUNE_TOL = 1e-12
HERMITIAN_TOL = 1e-12
MAX_DENSE_QUBITS = 12

_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_BITS_LETTER = {bits: letter for letter, bits in _LETTER_BITS.items()}

_SINGLE_QUBIT_DENSE = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    "Y": np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    "Z": np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
}


@dataclass(frozen=True)
class PauliTerm:
    """A single Pauli word with a complex coefficient.

    Immutable; products and dense realizations return new objects.
    """

    n_qubits: int
    x: int
    z: int
    coefficient: complex = 1.0

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("n_qubits must be positive")
        mask = (1 << self.n_qubits) - 1
        if self.x & ~mask or self.z & ~mask:
            raise ValueError("bit mask exceeds qubit count")

    @classmethod
    def identity(cls, n_qubits: int, coefficient: complex = 1.0) -> "PauliTerm":
        return cls(n_qubits, 0, 0, coefficient)

    @classmethod
    def from_ops(cls, n_qubits: int, ops: Mapping[int, str], coefficient: complex = 1.0) -> "PauliTerm":
        """Build a term from ``{qubit: letter}``; omitted qubits are identity."""
        x = z = 0
        for qubit, letter in ops.items():
            if not 0 <= qubit < n_qubits:
                raise ValueError(f"qubit index {qubit} out of range for {n_qubits} qubits")
            try:
                xb, zb = _LETTER_BITS[letter]
            except KeyError:
                raise ValueError(f"unknown Pauli letter {letter!r}") from None
            x |= xb << qubit
            z |= zb << qubit
        return cls(n_qubits, x, z, coefficient)

    def letter(self, qubit: int) -> str:
        return _BITS_LETTER[((self.x >> qubit) & 1, (self.z >> qubit) & 1)]

    def letters(self) -> str:
        """All letters, qubit 0 first (leftmost)."""
        return "".join(self.letter(q) for q in range(self.n_qubits))

    @property
    def word(self) -> tuple[int, int]:
        """The coefficient-free Pauli word as an ``(x, z)`` mask pair."""
        return (self.x, self.z)

    @property
    def is_identity_word(self) -> bool:
        return self.x == 0 and self.z == 0

    def weight(self) -> int:
        """Number of non-identity letters."""
        return (self.x | self.z).bit_count()

    def with_coefficient(self, coefficient: complex) -> "PauliTerm":
        return PauliTerm(self.n_qubits, self.x, self.z, coefficient)

    def word_str(self) -> str:
        """Render the word as space-separated ``<letter><index>`` tokens, ``I`` if identity."""
        if self.is_identity_word:
            return "I"
        parts = []
        for q in range(self.n_qubits):
            letter = self.letter(q)
            if letter != "I":
                parts.append(f"{letter}{q}")
        return " ".join(parts)

    def __mul__(self, other: "PauliTerm") -> "PauliTerm":
        return multiply(self, other)

    def __repr__(self) -> str:
        return f"PauliTerm({self.coefficient!r} * {self.word_str()!r}, n={self.n_qubits})"


def multiply(a: PauliTerm, b: PauliTerm) -> PauliTerm:
    """Canonical product ``a @ b`` (matrix-product order) with accumulated phase.

    The resulting phase relative to the product of the input coefficients is
    always one of {1, i, -1, -i}.
    """
    if a.n_qubits != b.n_qubits:
        raise ValueError(f"qubit-count mismatch: {a.n_qubits} vs {b.n_qubits}")
    x3 = a.x ^ b.x
    z3 = a.z ^ b.z
    # Per-qubit letter(x,z) = i^{xz} X^x Z^z; commuting X^{xb} past Z^{za}
    # contributes (-1)^{za & xb}.  Summed as a power of i via popcounts.
    e = (
        (a.x & a.z).bit_count()
        + (b.x & b.z).bit_count()
        - (x3 & z3).bit_count()
        + 2 * (a.z & b.x).bit_count()
    ) % 4
    phase = (1j) ** e
    return PauliTerm(a.n_qubits, x3, z3, a.coefficient * b.coefficient * phase)


def _term_key(term: PauliTerm) -> tuple[int, int]:
    return (term.x, term.z)


@dataclass(frozen=True)
class PauliSum:
    """A canonicalized weighted sum of Pauli words over a common register.

    Construction canonicalizes: coefficients of equal words are combined,
    terms with |coefficient| < PRUNE_TOL are dropped, and terms are sorted
    by their ``(x, z)`` masks (identity first).
    """

    n_qubits: int
    terms: tuple[PauliTerm, ...] = ()
    label: str = ""

    def __post_init__(self):
        combined: dict[tuple[int, int], complex] = {}
        for term in self.terms:
            if term.n_qubits != self.n_qubits:
                raise ValueError("all terms must share the sum's qubit count")
            key = _term_key(term)
            combined[key] = combined.get(key, 0.0) + complex(term.coefficient)
        canon = tuple(
            PauliTerm(self.n_qubits, x, z, c)
            for (x, z), c in sorted(combined.items())
            if abs(c) >= PRUNE_TOL
        )
        object.__setattr__(self, "terms", canon)

    @classmethod
    def from_terms(cls, terms: Iterable[PauliTerm], n_qubits: int | None = None, label: str = "") -> "PauliSum":
        terms = tuple(terms)
        if n_qubits is None:
            if not terms:
                raise ValueError("cannot infer qubit count from an empty term list")
            n_qubits = terms[0].n_qubits
        return cls(n_qubits, terms, label)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def is_hermitian(self) -> bool:
        """True when every canonical coefficient is real to within HERMITIAN_TOL."""
        return all(abs(t.coefficient.imag) <= HERMITIAN_TOL for t in self.terms)

    @property
    def identity_coefficient(self) -> complex:
        for t in self.terms:
            if t.is_identity_word:
                return t.coefficient
        return 0.0

    def non_identity_terms(self) -> tuple[PauliTerm, ...]:
        return tuple(t for t in self.terms if not t.is_identity_word)

    def scaled(self, factor: complex) -> "PauliSum":
        return PauliSum(
            self.n_qubits,
            tuple(t.with_coefficient(t.coefficient * factor) for t in self.terms),
            self.label,
        )

    def with_label(self, label: str) -> "PauliSum":
        return PauliSum(self.n_qubits, self.terms, label)

    def __add__(self, other: "PauliSum") -> "PauliSum":
        if self.n_qubits != other.n_qubits:
            raise ValueError("qubit-count mismatch in sum")
        return PauliSum(self.n_qubits, self.terms + other.terms, self.label or other.label)

    def __sub__(self, other: "PauliSum") -> "PauliSum":
        return self + other.scaled(-1.0)

    def __matmul__(self, other: "PauliSum") -> "PauliSum":
        """Operator product, expanded termwise and re-canonicalized."""
        if self.n_qubits != other.n_qubits:
            raise ValueError("qubit-count mismatch in product")
        products = [multiply(a, b) for a in self.terms for b in other.terms]
        return PauliSum(self.n_qubits, tuple(products))

    def __repr__(self) -> str:
        body = " + ".join(f"{t.coefficient!r}*{t.word_str()}" for t in self.terms[:6])
        more = f" + ... ({len(self.terms)} terms)" if len(self.terms) > 6 else ""
        return f"PauliSum[{self.label or 'unlabeled'}: {body}{more}]"


def term_to_dense(term: PauliTerm) -> np.ndarray:
    """Dense matrix of one term via an explicit Kronecker chain.

    Qubit 0 occupies the lowest bit of the basis index, so the chain runs
    from the highest qubit down.
    """
    if term.n_qubits > MAX_DENSE_QUBITS:
        raise ValueError(f"dense realization limited to {MAX_DENSE_QUBITS} qubits")
    mat = np.array([[1.0 + 0.0j]])
    for q in range(term.n_qubits - 1, -1, -1):
        mat = np.kron(mat, _SINGLE_QUBIT_DENSE[term.letter(q)])
    return term.coefficient * mat


def to_dense(h: PauliSum) -> np.ndarray:
    """Dense 2^n x 2^n matrix of a PauliSum. Limited to MAX_DENSE_QUBITS qubits."""
    if h.n_qubits > MAX_DENSE_QUBITS:
        raise ValueError(f"dense realization limited to {MAX_DENSE_QUBITS} qubits")
    dim = 1 << h.n_qubits
    out = np.zeros((dim, dim), dtype=complex)
    for term in h.terms:
        out += term_to_dense(term)
    return out


@dataclass(frozen=True)
class StructureReport:
    """Diagnostic summary of a PauliSum: size, Hermiticity, locality profile."""

    term_count: int
    is_hermitian: bool
    locality_histogram: dict[int, int] = field(default_factory=dict)
    max_abs_imag_coefficient: float = 0.0
    label: str = ""


def expectation_structure_check(h: PauliSum) -> StructureReport:
    hist: dict[int, int] = {}
    for term in h.terms:
        w = term.weight()
        hist[w] = hist.get(w, 0) + 1
    max_imag = max((abs(t.coefficient.imag) for t in h.terms), default=0.0)
    return StructureReport(
        term_count=len(h.terms),
        is_hermitian=h.is_hermitian,
        locality_histogram=hist,
        max_abs_imag_coefficient=max_imag,
        label=h.label,
    )
