"""STO-3G basis data and contracted Cartesian Gaussians.

Exponents and contraction coefficients are the standard published STO-3G
parameters. Primitives are normalized individually and the contracted
function is re-normalized to unit self-overlap.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

ANGSTROM_TO_BOHR = 1.8897259886

# shell -> (exponents, contraction coefficients)
STO3G = {
    "H": {
        "1s": (
            [3.425250914, 0.6239137298, 0.1688554040],
            [0.1543289673, 0.5353281423, 0.4446345422],
        ),
    },
    "Li": {
        "1s": (
            [16.11957475, 2.936200663, 0.794650487],
            [0.1543289673, 0.5353281423, 0.4446345422],
        ),
        "2s": (
            [0.6362897469, 0.1478600533, 0.0480886784],
            [-0.09996722919, 0.3995128261, 0.7001154689],
        ),
        "2p": (
            [0.6362897469, 0.1478600533, 0.0480886784],
            [0.1559162750, 0.6076837186, 0.3919573931],
        ),
    },
}

ATOMIC_NUMBER = {"H": 1, "Li": 3}


def _double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def primitive_norm(alpha: float, lmn: tuple[int, int, int]) -> float:
    l, m, n = lmn
    total = l + m + n
    pref = (2.0 * alpha / np.pi) ** 0.75 * (4.0 * alpha) ** (total / 2.0)
    denom = np.sqrt(
        _double_factorial(2 * l - 1) * _double_factorial(2 * m - 1) * _double_factorial(2 * n - 1)
    )
    return pref / denom


@dataclass
class ContractedGaussian:
    """Fixed-center contracted Cartesian Gaussian basis function."""

    center: np.ndarray
    lmn: tuple[int, int, int]
    exponents: np.ndarray
    coefficients: np.ndarray  # contraction coefficients times primitive norms

    @classmethod
    def build(cls, center, lmn, exponents, contraction) -> "ContractedGaussian":
        exponents = np.asarray(exponents, dtype=float)
        contraction = np.asarray(contraction, dtype=float)
        coefficients = contraction * np.array([primitive_norm(a, lmn) for a in exponents])
        return cls(np.asarray(center, dtype=float), tuple(lmn), exponents, coefficients)


@dataclass
class Molecule:
    """Atoms, charges and the STO-3G basis functions built over them."""

    symbols: list[str]
    coords_bohr: np.ndarray  # (n_atoms, 3)
    basis: list[ContractedGaussian]
    n_electrons: int

    @property
    def charges(self) -> list[int]:
        return [ATOMIC_NUMBER[s] for s in self.symbols]

    def nuclear_repulsion(self) -> float:
        energy = 0.0
        for i in range(len(self.symbols)):
            for j in range(i + 1, len(self.symbols)):
                r = np.linalg.norm(self.coords_bohr[i] - self.coords_bohr[j])
                energy += self.charges[i] * self.charges[j] / r
        return energy


def build_molecule(symbols: list[str], coords_angstrom: np.ndarray) -> Molecule:
    coords = np.asarray(coords_angstrom, dtype=float) * ANGSTROM_TO_BOHR
    basis: list[ContractedGaussian] = []
    for symbol, center in zip(symbols, coords):
        shells = STO3G[symbol]
        for shell_name, (exponents, contraction) in shells.items():
            if shell_name.endswith("s"):
                basis.append(ContractedGaussian.build(center, (0, 0, 0), exponents, contraction))
            elif shell_name.endswith("p"):
                for lmn in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
                    basis.append(ContractedGaussian.build(center, lmn, exponents, contraction))
            else:
                raise ValueError(f"unsupported shell {shell_name}")
    n_electrons = sum(ATOMIC_NUMBER[s] for s in symbols)
    return Molecule(list(symbols), coords, basis, n_electrons)


def diatomic(symbol_a: str, symbol_b: str, bond_angstrom: float) -> Molecule:
    coords = np.array([[0.0, 0.0, 0.0], [0.0, 0.0, bond_angstrom]])
    return build_molecule([symbol_a, symbol_b], coords)
