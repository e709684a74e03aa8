"""STO-3G qubit-Hamiltonian fixture generator."""

from .generate import GenerationSpec, generate, generate_one

__version__ = "0.1.0"
