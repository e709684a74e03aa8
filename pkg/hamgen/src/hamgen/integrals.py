"""One- and two-electron integrals over contracted Cartesian Gaussians,
via Hermite expansion (McMurchie-Davidson) and the Boys function."""

from __future__ import annotations

import numpy as np
from scipy.special import hyp1f1

from .basis import ContractedGaussian, Molecule


def boys(n: int, t: float) -> float:
    return float(hyp1f1(n + 0.5, n + 1.5, -t)) / (2.0 * n + 1.0)


def hermite_expansion(i: int, j: int, t: int, q_dist: float, a: float, b: float) -> float:
    p = a + b
    mu = a * b / p
    if t < 0 or t > i + j:
        return 0.0
    if i == j == t == 0:
        return float(np.exp(-mu * q_dist * q_dist))
    if j == 0:
        return (
            (1.0 / (2.0 * p)) * hermite_expansion(i - 1, j, t - 1, q_dist, a, b)
            - (mu * q_dist / a) * hermite_expansion(i - 1, j, t, q_dist, a, b)
            + (t + 1) * hermite_expansion(i - 1, j, t + 1, q_dist, a, b)
        )
    return (
        (1.0 / (2.0 * p)) * hermite_expansion(i, j - 1, t - 1, q_dist, a, b)
        + (mu * q_dist / b) * hermite_expansion(i, j - 1, t, q_dist, a, b)
        + (t + 1) * hermite_expansion(i, j - 1, t + 1, q_dist, a, b)
    )


def _overlap_prim(a, lmn1, center_a, b, lmn2, center_b) -> float:
    value = (np.pi / (a + b)) ** 1.5
    for axis in range(3):
        value *= hermite_expansion(
            lmn1[axis], lmn2[axis], 0, center_a[axis] - center_b[axis], a, b
        )
    return float(value)


def _kinetic_prim(a, lmn1, center_a, b, lmn2, center_b) -> float:
    l2, m2, n2 = lmn2
    term0 = b * (2 * (l2 + m2 + n2) + 3) * _overlap_prim(a, lmn1, center_a, b, lmn2, center_b)
    term1 = -2.0 * b**2 * (
        _overlap_prim(a, lmn1, center_a, b, (l2 + 2, m2, n2), center_b)
        + _overlap_prim(a, lmn1, center_a, b, (l2, m2 + 2, n2), center_b)
        + _overlap_prim(a, lmn1, center_a, b, (l2, m2, n2 + 2), center_b)
    )
    term2 = -0.5 * (
        l2 * (l2 - 1) * _overlap_prim(a, lmn1, center_a, b, (l2 - 2, m2, n2), center_b)
        + m2 * (m2 - 1) * _overlap_prim(a, lmn1, center_a, b, (l2, m2 - 2, n2), center_b)
        + n2 * (n2 - 1) * _overlap_prim(a, lmn1, center_a, b, (l2, m2, n2 - 2), center_b)
    )
    return float(term0 + term1 + term2)


def _hermite_coulomb(t: int, u: int, v: int, n: int, p: float, pc: np.ndarray, rpc: float) -> float:
    if t == u == v == 0:
        return float((-2.0 * p) ** n * boys(n, p * rpc * rpc))
    if t == u == 0:
        value = 0.0
        if v > 1:
            value += (v - 1) * _hermite_coulomb(t, u, v - 2, n + 1, p, pc, rpc)
        value += pc[2] * _hermite_coulomb(t, u, v - 1, n + 1, p, pc, rpc)
        return value
    if t == 0:
        value = 0.0
        if u > 1:
            value += (u - 1) * _hermite_coulomb(t, u - 2, v, n + 1, p, pc, rpc)
        value += pc[1] * _hermite_coulomb(t, u - 1, v, n + 1, p, pc, rpc)
        return value
    value = 0.0
    if t > 1:
        value += (t - 1) * _hermite_coulomb(t - 2, u, v, n + 1, p, pc, rpc)
    value += pc[0] * _hermite_coulomb(t - 1, u, v, n + 1, p, pc, rpc)
    return value


def _nuclear_prim(a, lmn1, center_a, b, lmn2, center_b, nucleus) -> float:
    p = a + b
    product_center = (a * center_a + b * center_b) / p
    pc = product_center - nucleus
    rpc = float(np.linalg.norm(pc))
    value = 0.0
    for t in range(lmn1[0] + lmn2[0] + 1):
        for u in range(lmn1[1] + lmn2[1] + 1):
            for v in range(lmn1[2] + lmn2[2] + 1):
                value += (
                    hermite_expansion(lmn1[0], lmn2[0], t, center_a[0] - center_b[0], a, b)
                    * hermite_expansion(lmn1[1], lmn2[1], u, center_a[1] - center_b[1], a, b)
                    * hermite_expansion(lmn1[2], lmn2[2], v, center_a[2] - center_b[2], a, b)
                    * _hermite_coulomb(t, u, v, 0, p, pc, rpc)
                )
    return float(value * 2.0 * np.pi / p)


def _eri_prim(a, lmn1, ca, b, lmn2, cb, c, lmn3, cc, d, lmn4, cd) -> float:
    p = a + b
    q = c + d
    alpha = p * q / (p + q)
    center_p = (a * ca + b * cb) / p
    center_q = (c * cc + d * cd) / q
    pq = center_p - center_q
    rpq = float(np.linalg.norm(pq))
    value = 0.0
    for t in range(lmn1[0] + lmn2[0] + 1):
        for u in range(lmn1[1] + lmn2[1] + 1):
            for v in range(lmn1[2] + lmn2[2] + 1):
                e_bra = (
                    hermite_expansion(lmn1[0], lmn2[0], t, ca[0] - cb[0], a, b)
                    * hermite_expansion(lmn1[1], lmn2[1], u, ca[1] - cb[1], a, b)
                    * hermite_expansion(lmn1[2], lmn2[2], v, ca[2] - cb[2], a, b)
                )
                if e_bra == 0.0:
                    continue
                for tau in range(lmn3[0] + lmn4[0] + 1):
                    for nu in range(lmn3[1] + lmn4[1] + 1):
                        for phi in range(lmn3[2] + lmn4[2] + 1):
                            e_ket = (
                                hermite_expansion(lmn3[0], lmn4[0], tau, cc[0] - cd[0], c, d)
                                * hermite_expansion(lmn3[1], lmn4[1], nu, cc[1] - cd[1], c, d)
                                * hermite_expansion(lmn3[2], lmn4[2], phi, cc[2] - cd[2], c, d)
                            )
                            if e_ket == 0.0:
                                continue
                            value += (
                                e_bra
                                * e_ket
                                * (-1.0) ** (tau + nu + phi)
                                * _hermite_coulomb(t + tau, u + nu, v + phi, 0, alpha, pq, rpq)
                            )
    return float(value * 2.0 * np.pi**2.5 / (p * q * np.sqrt(p + q)))


def _contracted(op, *functions: ContractedGaussian) -> float:
    """Sum an integral primitive over every primitive combination."""
    value = 0.0
    if len(functions) == 2:
        f1, f2 = functions
        for a, ca in zip(f1.exponents, f1.coefficients):
            for b, cb in zip(f2.exponents, f2.coefficients):
                value += ca * cb * op(a, f1.lmn, f1.center, b, f2.lmn, f2.center)
        return value
    f1, f2, f3, f4 = functions
    for a, ca in zip(f1.exponents, f1.coefficients):
        for b, cb in zip(f2.exponents, f2.coefficients):
            for c, cc in zip(f3.exponents, f3.coefficients):
                for d, cd in zip(f4.exponents, f4.coefficients):
                    value += ca * cb * cc * cd * op(
                        a, f1.lmn, f1.center, b, f2.lmn, f2.center,
                        c, f3.lmn, f3.center, d, f4.lmn, f4.center,
                    )
    return value


def overlap(f1: ContractedGaussian, f2: ContractedGaussian) -> float:
    return _contracted(_overlap_prim, f1, f2)


def kinetic(f1: ContractedGaussian, f2: ContractedGaussian) -> float:
    return _contracted(_kinetic_prim, f1, f2)


def nuclear_attraction(f1: ContractedGaussian, f2: ContractedGaussian, nucleus: np.ndarray) -> float:
    def op(a, lmn1, ca, b, lmn2, cb):
        return _nuclear_prim(a, lmn1, ca, b, lmn2, cb, nucleus)

    return _contracted(op, f1, f2)


def electron_repulsion(f1, f2, f3, f4) -> float:
    """Chemist-notation (12|34): functions 1, 2 share electron one."""
    return _contracted(_eri_prim, f1, f2, f3, f4)


def normalize_contracted(functions: list[ContractedGaussian]) -> None:
    for f in functions:
        self_overlap = overlap(f, f)
        f.coefficients = f.coefficients / np.sqrt(self_overlap)


def integral_tables(mol: Molecule) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Overlap, kinetic, nuclear-attraction matrices and the chemist ERI tensor."""
    normalize_contracted(mol.basis)
    n = len(mol.basis)
    s = np.zeros((n, n))
    t = np.zeros((n, n))
    v = np.zeros((n, n))
    for i in range(n):
        for j in range(i, n):
            s[i, j] = s[j, i] = overlap(mol.basis[i], mol.basis[j])
            t[i, j] = t[j, i] = kinetic(mol.basis[i], mol.basis[j])
            attraction = 0.0
            for charge, nucleus in zip(mol.charges, mol.coords_bohr):
                attraction -= charge * nuclear_attraction(mol.basis[i], mol.basis[j], nucleus)
            v[i, j] = v[j, i] = attraction

    eri = np.zeros((n, n, n, n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1)]
    for idx_ij, (i, j) in enumerate(pairs):
        for k, l in pairs[: idx_ij + 1]:
            value = electron_repulsion(mol.basis[i], mol.basis[j], mol.basis[k], mol.basis[l])
            for a, b in ((i, j), (j, i)):
                for c, d in ((k, l), (l, k)):
                    eri[a, b, c, d] = value
                    eri[c, d, a, b] = value
    return s, t, v, eri
