"""On-disk Hamiltonian text format.

UTF-8 text; ``#`` lines carry ``key value`` metadata pairs, data lines are
``<decimal coefficient> <pauli word>`` where the word is space-separated
``<letter><index>`` tokens or the single token ``I``. The ``n_qubits``
metadata line must precede the first data line.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from pathlib import Path

from .errors import FixtureError
from .pauli import PauliSum, PauliTerm

_KNOWN_LETTERS = set("IXYZ")


@dataclass(frozen=True)
class HamiltonianMetadata:
    n_qubits: int
    molecule: str = ""
    bond_length_angstrom: float | None = None
    n_electrons: int | None = None
    checksum: str = ""
    path: str = ""
    extra: dict[str, str] = field(default_factory=dict)


def _parse_word(tokens: list[str], n_qubits: int, lineno: int, path: str) -> tuple[int, int]:
    if tokens == ["I"]:
        return 0, 0
    x = z = 0
    seen: set[int] = set()
    for token in tokens:
        letter, index_text = token[:1], token[1:]
        if letter not in _KNOWN_LETTERS or letter == "I" or not index_text.isdigit():
            raise FixtureError(f"{path}:{lineno}: malformed Pauli token {token!r}")
        qubit = int(index_text)
        if qubit >= n_qubits:
            raise FixtureError(f"{path}:{lineno}: qubit index {qubit} >= n_qubits {n_qubits}")
        if qubit in seen:
            raise FixtureError(f"{path}:{lineno}: duplicate qubit {qubit} in one word")
        seen.add(qubit)
        if letter in "XY":
            x |= 1 << qubit
        if letter in "ZY":
            z |= 1 << qubit
    return x, z


def parse_hamiltonian_text(text: str, path: str = "<memory>") -> tuple[PauliSum, HamiltonianMetadata]:
    metadata: dict[str, str] = {}
    n_qubits: int | None = None
    terms: list[PauliTerm] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].strip().split(None, 1)
            if not parts:
                continue
            key = parts[0]
            value = parts[1].strip() if len(parts) > 1 else ""
            metadata[key] = value
            if key == "n_qubits":
                try:
                    n_qubits = int(value)
                except ValueError:
                    raise FixtureError(f"{path}:{lineno}: n_qubits must be an integer") from None
                if not 1 <= n_qubits:
                    raise FixtureError(f"{path}:{lineno}: n_qubits must be positive")
            continue
        if n_qubits is None:
            raise FixtureError(f"{path}:{lineno}: data line before '# n_qubits' metadata")
        tokens = line.split()
        try:
            coefficient = float(tokens[0])
        except ValueError:
            raise FixtureError(f"{path}:{lineno}: malformed coefficient {tokens[0]!r}") from None
        if not math.isfinite(coefficient):
            raise FixtureError(f"{path}:{lineno}: non-finite coefficient")
        if len(tokens) < 2:
            raise FixtureError(f"{path}:{lineno}: missing Pauli word")
        x, z = _parse_word(tokens[1:], n_qubits, lineno, path)
        terms.append(PauliTerm(n_qubits, x, z, coefficient))
    if n_qubits is None:
        raise FixtureError(f"{path}: missing '# n_qubits' metadata line")

    molecule = metadata.get("molecule", "")
    bond = None
    if "bond_length_angstrom" in metadata:
        try:
            bond = float(metadata["bond_length_angstrom"])
        except ValueError:
            raise FixtureError(f"{path}: malformed bond_length_angstrom") from None
    n_electrons = None
    if "n_electrons" in metadata:
        try:
            n_electrons = int(metadata["n_electrons"])
        except ValueError:
            raise FixtureError(f"{path}: malformed n_electrons") from None

    label = molecule if bond is None else f"{molecule} r={bond}"
    h = PauliSum(n_qubits, tuple(terms), label=label)
    if not h.is_hermitian:
        raise FixtureError(f"{path}: non-Hermitian coefficients after canonicalization")
    meta = HamiltonianMetadata(
        n_qubits=n_qubits,
        molecule=molecule,
        bond_length_angstrom=bond,
        n_electrons=n_electrons,
        checksum=hashlib.sha256(text.encode("utf-8")).hexdigest(),
        path=path,
        extra={k: v for k, v in metadata.items()},
    )
    return h, meta


def parse_hamiltonian_file(path: str | Path) -> tuple[PauliSum, HamiltonianMetadata]:
    path = Path(path)
    if not path.is_file():
        raise FixtureError(f"Hamiltonian file not found: {path}")
    return parse_hamiltonian_text(path.read_text(encoding="utf-8"), str(path))


def render_term_line(term: PauliTerm) -> str:
    """``<coeff> <word>`` with a real coefficient in round-trip repr form."""
    if abs(term.coefficient.imag) > 1e-12:
        raise ValueError("on-disk format requires real coefficients")
    return f"{term.coefficient.real!r} {term.word_str()}"


def render_hamiltonian(h: PauliSum, metadata: dict[str, str]) -> str:
    """Canonical text form: metadata lines (n_qubits first), then sorted terms."""
    lines = [f"# n_qubits {h.n_qubits}"]
    for key in sorted(k for k in metadata if k != "n_qubits"):
        value = metadata[key]
        lines.append(f"# {key} {value}".rstrip())
    lines.extend(render_term_line(term) for term in h.terms)
    return "\n".join(lines) + "\n"
