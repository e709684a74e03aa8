"""Statevector workbench for weighted variational eigensolvers on small
molecular Hamiltonians, with an exact-diagonalization oracle and a batch
sweep runner."""

from .ansatz import AnsatzCircuit, ParameterGroup, apply, build_ansatz
from .eigensolvers import (
    ConstraintPenalty,
    ExactSpectrum,
    ObjectiveReport,
    PenaltyConfig,
    SolveConfig,
    SolveResult,
    StateAssignment,
    WeightProfile,
    all_basis_strings,
    default_weights,
    exact_spectrum,
    prescreen_then_solve,
    ssvqe_objective,
    state_assignment,
    vqse_cost,
)
from .errors import ConfigError, FixtureError, NumericalAbortError
from .fermion import (
    ExcitationGenerator,
    SymmetryObservable,
    jordan_wigner,
    symmetry_observables,
    ucc_generators,
)
from .hamfile import (
    HamiltonianMetadata,
    parse_hamiltonian_file,
    parse_hamiltonian_text,
    render_hamiltonian,
)
from .optimize import IterationTrace, OptimizerConfig, finite_diff_gradient, minimize
from .pauli import (
    PauliSum,
    PauliTerm,
    StructureReport,
    expectation_structure_check,
    multiply,
    term_to_dense,
    to_dense,
)
from .runner import (
    ExperimentConfig,
    RunRecord,
    SummaryRow,
    load_config,
    run_single,
    run_sweep,
    summarize,
)
from .statevector import (
    StateVector,
    apply_pauli_exp,
    basis_index,
    basis_state,
    expectation,
    from_amplitudes,
    overlap_sq,
)

__version__ = "0.1.0"
