"""Classical minimizers with pinned per-iteration accounting.

One "iteration" is one simplex transformation (Nelder-Mead) or one gradient
step (finite-difference descent). Traces record the objective at every
iteration including iteration 0, so comparisons by iteration count are
internally consistent across runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import NumericalAbortError

Objective = Callable[[np.ndarray], float]

METHOD_NELDER_MEAD = "nelder_mead"
METHOD_FD_GRADIENT_DESCENT = "finite_diff_gradient_descent"


@dataclass(frozen=True)
class OptimizerConfig:
    method: str = METHOD_NELDER_MEAD
    max_iterations: int = 500
    initial_step: float = 0.5  # simplex edge (rad) or learning rate
    tolerance: float = 1e-10  # on objective change; effectively off by default
    fd_step: float = 1e-5  # central-difference step for the gradient method
    seed: int = 0

    def __post_init__(self):
        if self.method not in (METHOD_NELDER_MEAD, METHOD_FD_GRADIENT_DESCENT):
            raise ValueError(f"unknown optimizer method {self.method!r}")
        if self.max_iterations < 0:
            raise ValueError("max_iterations must be >= 0")
        if self.tolerance <= 0 or self.initial_step <= 0 or self.fd_step <= 0:
            raise ValueError("steps and tolerances must be positive")


@dataclass
class IterationTrace:
    """Objective value and theta snapshot per iteration, plus eval accounting."""

    values: list[float] = field(default_factory=list)
    thetas: list[np.ndarray] = field(default_factory=list)
    n_evaluations: int = 0
    converged_early: bool = False

    def record(self, value: float, theta: np.ndarray) -> None:
        self.values.append(float(value))
        self.thetas.append(np.array(theta, dtype=float))

    def __len__(self) -> int:
        return len(self.values)

    def to_csv_text(self) -> str:
        lines = ["iteration,objective"]
        lines.extend(f"{i},{v!r}" for i, v in enumerate(self.values))
        return "\n".join(lines) + "\n"


class _CountingObjective:
    def __init__(self, objective: Objective):
        self.objective = objective
        self.count = 0

    def __call__(self, theta: np.ndarray) -> float:
        value = float(self.objective(theta))
        self.count += 1
        if not math.isfinite(value):
            raise NumericalAbortError(
                f"objective returned non-finite value {value!r} at theta={theta.tolist()!r}"
            )
        return value


def finite_diff_gradient(objective: Objective, theta: np.ndarray, step: float) -> np.ndarray:
    """Central-difference gradient, one coordinate at a time."""
    if step <= 0:
        raise ValueError("finite-difference step must be positive")
    theta = np.asarray(theta, dtype=float)
    grad = np.zeros_like(theta)
    for i in range(theta.size):
        shift = np.zeros_like(theta)
        shift[i] = step
        hi = float(objective(theta + shift))
        lo = float(objective(theta - shift))
        if not (math.isfinite(hi) and math.isfinite(lo)):
            raise NumericalAbortError(f"non-finite objective in gradient at coordinate {i}")
        grad[i] = (hi - lo) / (2.0 * step)
    return grad


def minimize(objective: Objective, theta0: Sequence[float], config: OptimizerConfig) -> tuple[np.ndarray, IterationTrace]:
    """Run the configured method for exactly ``max_iterations`` steps.

    Returns the best theta seen and the full trace. Early convergence on the
    tolerance is flagged in the trace rather than silently absorbed.
    """
    theta0 = np.asarray(theta0, dtype=float)
    if not np.all(np.isfinite(theta0)):
        raise NumericalAbortError("initial theta contains non-finite entries")
    if config.method == METHOD_NELDER_MEAD:
        return _nelder_mead(objective, theta0, config)
    return _fd_gradient_descent(objective, theta0, config)


def _nelder_mead(objective: Objective, theta0: np.ndarray, config: OptimizerConfig) -> tuple[np.ndarray, IterationTrace]:
    # Standard coefficients: reflection 1, expansion 2, contraction 0.5, shrink 0.5.
    alpha, gamma, rho, sigma = 1.0, 2.0, 0.5, 0.5
    f = _CountingObjective(objective)
    trace = IterationTrace()

    f0 = f(theta0)
    trace.record(f0, theta0)
    best_theta, best_value = theta0.copy(), f0

    n = theta0.size
    if n == 0 or config.max_iterations == 0:
        trace.n_evaluations = f.count
        return best_theta, trace

    simplex = [theta0.copy()]
    values = [f0]
    for i in range(n):
        vertex = theta0.copy()
        vertex[i] += config.initial_step
        simplex.append(vertex)
        values.append(f(vertex))

    def sort_simplex():
        order = np.argsort(np.asarray(values), kind="stable")
        return [simplex[i] for i in order], [values[i] for i in order]

    for _ in range(config.max_iterations):
        simplex, values = sort_simplex()
        if values[0] < best_value:
            best_theta, best_value = simplex[0].copy(), values[0]

        if abs(values[-1] - values[0]) < config.tolerance:
            trace.converged_early = True
            break

        centroid = np.mean(simplex[:-1], axis=0)
        reflected = centroid + alpha * (centroid - simplex[-1])
        f_reflected = f(reflected)

        if values[0] <= f_reflected < values[-2]:
            simplex[-1], values[-1] = reflected, f_reflected
        elif f_reflected < values[0]:
            expanded = centroid + gamma * (centroid - simplex[-1])
            f_expanded = f(expanded)
            if f_expanded < f_reflected:
                simplex[-1], values[-1] = expanded, f_expanded
            else:
                simplex[-1], values[-1] = reflected, f_reflected
        else:
            contracted = centroid + rho * (simplex[-1] - centroid)
            f_contracted = f(contracted)
            if f_contracted < values[-1]:
                simplex[-1], values[-1] = contracted, f_contracted
            else:
                for i in range(1, len(simplex)):
                    simplex[i] = simplex[0] + sigma * (simplex[i] - simplex[0])
                    values[i] = f(simplex[i])

        iter_best = int(np.argmin(values))
        if values[iter_best] < best_value:
            best_theta, best_value = simplex[iter_best].copy(), values[iter_best]
        trace.record(values[iter_best], simplex[iter_best])

    trace.n_evaluations = f.count
    return best_theta, trace


def _fd_gradient_descent(objective: Objective, theta0: np.ndarray, config: OptimizerConfig) -> tuple[np.ndarray, IterationTrace]:
    f = _CountingObjective(objective)
    trace = IterationTrace()

    theta = theta0.copy()
    value = f(theta)
    trace.record(value, theta)
    best_theta, best_value = theta.copy(), value

    for _ in range(config.max_iterations):
        grad = finite_diff_gradient(f, theta, config.fd_step)
        theta = theta - config.initial_step * grad
        new_value = f(theta)
        trace.record(new_value, theta)
        if new_value < best_value:
            best_theta, best_value = theta.copy(), new_value
        if abs(new_value - value) < config.tolerance:
            trace.converged_early = True
            value = new_value
            break
        value = new_value

    trace.n_evaluations = f.count
    return best_theta, trace
