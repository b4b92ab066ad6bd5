"""Shared domain types: search spaces, individuals, random streams, run configuration."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class EvaluationError(RuntimeError):
    """An objective produced a non-finite value; carries the offending position."""

    def __init__(self, message: str, position) -> None:
        super().__init__(message)
        self.position = np.asarray(position, dtype=float)


@dataclass(frozen=True)
class SearchSpace:
    """Axis-aligned box bounds, one (lower, upper) pair per dimension."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self) -> None:
        lower = np.atleast_1d(np.asarray(self.lower, dtype=float))
        upper = np.atleast_1d(np.asarray(self.upper, dtype=float))
        if lower.ndim != 1 or upper.shape != lower.shape:
            raise ValueError("lower and upper must be 1-d arrays of equal length")
        if not np.all(lower < upper):
            raise ValueError("each lower bound must be strictly below its upper bound")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @property
    def dim(self) -> int:
        return self.lower.size

    @property
    def width(self) -> np.ndarray:
        return self.upper - self.lower

    @classmethod
    def symmetric(cls, half_width: float, dim: int) -> "SearchSpace":
        """Box ``[-half_width, half_width]`` replicated over ``dim`` dimensions."""
        return cls(np.full(dim, -float(half_width)), np.full(dim, float(half_width)))

    def contains(self, position) -> bool:
        position = np.asarray(position, dtype=float)
        return bool(np.all(position >= self.lower) and np.all(position <= self.upper))

    def sample(self, rng: "RngStream") -> np.ndarray:
        """Uniform random position, one independent draw per dimension."""
        return self.lower + rng.uniform(size=self.dim) * self.width


@dataclass(frozen=True)
class Individual:
    """A position vector with its cached objective value (minimization)."""

    position: np.ndarray
    fitness: float

    def __post_init__(self) -> None:
        position = np.asarray(self.position, dtype=float)
        object.__setattr__(self, "position", position)
        object.__setattr__(self, "fitness", float(self.fitness))
        if not math.isfinite(self.fitness):
            raise ValueError(f"individual fitness must be finite, got {self.fitness!r}")


class RngStream:
    """Seeded random stream; every stochastic step in the library draws from one.

    A stream is single-owner: one run owns one stream, and identical seeds
    with identical call sequences reproduce identical outputs bit for bit.
    The three primitives below are the only randomness the optimizers use,
    which keeps runs replayable from a recorded tape of draws.
    """

    def __init__(self, seed: int) -> None:
        self.seed = int(seed)
        self._gen = np.random.Generator(np.random.PCG64(self.seed))

    def uniform(self, size=None):
        """Uniform draw(s) from [0, 1)."""
        return self._gen.random(size)

    def normal(self, size=None):
        """Standard normal draw(s), mean 0 and standard deviation 1."""
        return self._gen.standard_normal(size)

    def integers(self, low: int, high: int, size=None):
        """Uniform integer draw(s) from [low, high)."""
        out = self._gen.integers(low, high, size=size)
        return int(out) if size is None else out

    def __repr__(self) -> str:  # pragma: no cover
        return f"RngStream(seed={self.seed})"


@dataclass(frozen=True)
class RunConfig:
    """Run protocol knobs shared by every algorithm.

    ``population_size`` is the number of fireworks M. ``xi`` is the tiny
    constant that keeps the intensity exponent finite when all fitnesses
    coincide; it defaults to machine epsilon. ``gaussian_sparks_per_generation``
    of ``None`` means one mutant per firework (M total).

    ``scalar_beta`` switches the displacement step from one uniform draw per
    dimension (default) to a single shared draw per spark, for comparison
    against the whole-vector-displacement reading.
    """

    population_size: int = 5
    max_iterations: int = 1000
    tolerance: float = 1e-5
    seed: int = 0
    gaussian_sparks_per_generation: int | None = None
    xi: float = float(np.finfo(np.float64).eps)
    scalar_beta: bool = False

    def __post_init__(self) -> None:
        if self.population_size < 2:
            raise ValueError("population_size must be at least 2")
        if self.max_iterations < 0:
            raise ValueError("max_iterations must be nonnegative")
        if self.tolerance < 0:
            raise ValueError("tolerance must be nonnegative")
        if self.xi <= 0:
            raise ValueError("xi must be positive")
        if (
            self.gaussian_sparks_per_generation is not None
            and self.gaussian_sparks_per_generation < 1
        ):
            raise ValueError("gaussian_sparks_per_generation must be positive")

    @property
    def gaussian_spark_count(self) -> int:
        if self.gaussian_sparks_per_generation is None:
            return self.population_size
        return self.gaussian_sparks_per_generation


@dataclass(frozen=True)
class RunRecord:
    """Outcome of one optimization run under the shared protocol.

    ``trajectory`` holds the best-so-far fitness at initialization and after
    each iteration, so its length is ``max_iterations + 1``.
    """

    algorithm: str
    objective: str
    seed: int
    trajectory: np.ndarray
    final_best: Individual
    evaluations_used: int

    def __post_init__(self) -> None:
        trajectory = np.asarray(self.trajectory, dtype=float)
        object.__setattr__(self, "trajectory", trajectory)
        if trajectory.ndim != 1 or trajectory.size == 0:
            raise ValueError("trajectory must be a non-empty 1-d array")
        if np.any(np.diff(trajectory) > 0):
            raise ValueError("best-so-far trajectory must be non-increasing")
        if trajectory[-1] != self.final_best.fitness:
            raise ValueError("final_best.fitness must equal the last trajectory entry")
