"""Reduced-parameter fireworks optimizer with history-guided explosion radii.

One generation runs, in order: explosion intensities from relative fitness,
their mean, a per-firework radius vector (pointing at the slot's historical
best for weak exploders, at the core firework for strong ones), displacement
sparks, multiplicative Gaussian mutants, bounds mapping, Elite-Random
selection, and finally the per-slot history update. The only algorithm
parameters beyond the run protocol are the population size and the mutant
budget; explosion amplitudes adapt from the population's own history instead
of a preset maximum radius.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .benchmarks import Objective
from .core import Individual, RngStream, RunConfig, RunRecord, SearchSpace

__all__ = [
    "LfwaState",
    "SparkSet",
    "GenerationTrace",
    "explosion_intensity",
    "average_intensity",
    "explosion_radius",
    "generate_explosion_sparks",
    "gaussian_mutation",
    "map_into_bounds",
    "map_batch_into_bounds",
    "select_next_generation",
    "initialize_state",
    "lfwa_step",
    "lfwa_run",
]


@dataclass(frozen=True)
class LfwaState:
    """Population state at a generation boundary.

    ``pbest[i]`` is the best individual that ever occupied slot i, and
    ``core`` is the best among all pbest entries. ``best_so_far`` tracks the
    minimum fitness over everything evaluated since initialization.
    """

    fireworks: tuple[Individual, ...]
    pbest: tuple[Individual, ...]
    core: Individual
    iteration: int
    best_so_far: Individual


@dataclass(frozen=True)
class SparkSet:
    """All sparks of one generation, already bounds-mapped and evaluated."""

    explosion_sparks: tuple[Individual, ...]
    gaussian_sparks: tuple[Individual, ...]
    spark_counts: np.ndarray

    def __post_init__(self) -> None:
        counts = np.asarray(self.spark_counts, dtype=int)
        object.__setattr__(self, "spark_counts", counts)
        if len(self.explosion_sparks) != int(counts.sum()):
            raise ValueError("explosion spark list does not match the per-firework counts")


@dataclass
class GenerationTrace:
    """Optional record of one generation's intermediate quantities.

    Filled by ``lfwa_step`` when passed in; used for step-by-step
    verification against an independent transcription of the update rules.
    """

    spark_counts: np.ndarray | None = None
    mean_intensity: float | None = None
    radii: list[np.ndarray] = field(default_factory=list)
    explosion_sparks_raw: list[np.ndarray] = field(default_factory=list)
    explosion_sparks_mapped: list[np.ndarray] = field(default_factory=list)
    gaussian_parents: list[int] = field(default_factory=list)
    gaussian_sparks_raw: list[np.ndarray] = field(default_factory=list)
    gaussian_sparks_mapped: list[np.ndarray] = field(default_factory=list)
    selected: tuple[Individual, ...] = ()


def explosion_intensity(fitnesses, population_size: int, xi: float) -> np.ndarray:
    """Spark count per firework from its normalized fitness gap.

    Count i is ceil(M ** ((f_max - f_i) / (f_max - f_min + xi))): the worst
    firework gets ceil(M**0) = 1 spark and the best approaches M. The
    ceiling keeps every count in [1, M], and xi keeps the exponent finite
    when all fitnesses coincide.
    """
    fitnesses = np.asarray(fitnesses, dtype=float)
    if population_size < 1:
        raise ValueError("population_size must be at least 1")
    if xi <= 0:
        raise ValueError("xi must be positive")
    if not np.all(np.isfinite(fitnesses)):
        raise ValueError("all fitnesses must be finite")
    f_max = fitnesses.max()
    f_min = fitnesses.min()
    exponents = (f_max - fitnesses) / (f_max - f_min + xi)
    return np.ceil(np.power(float(population_size), exponents)).astype(int)


def average_intensity(spark_counts) -> float:
    """Mean spark count, kept as a real number (no truncation)."""
    return float(np.mean(np.asarray(spark_counts, dtype=float)))


def explosion_radius(
    x_i: np.ndarray,
    pbest_i: np.ndarray,
    core: np.ndarray,
    s_i: int,
    s_avg: float,
) -> np.ndarray:
    """Radius vector for one firework, chosen by its intensity.

    Below-average exploders step toward their own slot's historical best;
    the rest (s_i >= s_avg) step toward the core firework.
    """
    x_i = np.asarray(x_i, dtype=float)
    if s_i < s_avg:
        return np.asarray(pbest_i, dtype=float) - x_i
    return np.asarray(core, dtype=float) - x_i


def generate_explosion_sparks(
    x_i: np.ndarray,
    radius: np.ndarray,
    count: int,
    rng: RngStream,
    scalar_beta: bool = False,
) -> np.ndarray:
    """Displace a firework ``count`` times along its radius vector.

    Each spark is x_i + beta * radius with beta uniform in [0, 1), drawn
    independently per dimension (or once per spark with ``scalar_beta``).
    Positions are returned unmapped; bounds handling happens later.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    x_i = np.asarray(x_i, dtype=float)
    radius = np.asarray(radius, dtype=float)
    if scalar_beta:
        beta = np.asarray(rng.uniform(size=count), dtype=float)[:, None]
    else:
        beta = np.asarray(rng.uniform(size=(count, x_i.size)), dtype=float)
    return x_i[None, :] + beta * radius[None, :]


def _sample_without_replacement(n: int, k: int, rng: RngStream) -> list[int]:
    """First k entries of a partial Fisher-Yates shuffle of range(n)."""
    idx = list(range(n))
    for j in range(k):
        swap = rng.integers(j, n)
        idx[j], idx[swap] = idx[swap], idx[j]
    return idx[:k]


def gaussian_mutation(x_i: np.ndarray, rng: RngStream) -> np.ndarray:
    """Multiplicative Gaussian mutant of a firework.

    Picks n uniformly from {1..d}, then n distinct dimensions, and scales
    the selected coordinates by one shared (N(0,1) + 1) factor, the
    original fireworks-mutation convention; a single small factor can
    contract every selected coordinate at once. Zero coordinates are fixed
    points of this mutation; that is a documented property, not a bug.
    """
    x_i = np.asarray(x_i, dtype=float)
    d = x_i.size
    n = rng.integers(1, d + 1)
    dims = _sample_without_replacement(d, n, rng)
    out = x_i.copy()
    factor = float(rng.normal()) + 1.0
    out[dims] = out[dims] * factor
    return out


def map_into_bounds(position: np.ndarray, space: SearchSpace, rng: RngStream) -> np.ndarray:
    """Re-place out-of-bounds coordinates uniformly inside the box.

    Only violating dimensions are redrawn (lower + beta * width, beta fresh
    per violated dimension in dimension order); in-bounds coordinates pass
    through unchanged.
    """
    position = np.array(position, dtype=float)
    mask = (position < space.lower) | (position > space.upper)
    k = int(np.count_nonzero(mask))
    if k:
        beta = np.asarray(rng.uniform(size=k), dtype=float)
        position[mask] = space.lower[mask] + beta * space.width[mask]
    return position


def map_batch_into_bounds(positions: np.ndarray, space: SearchSpace, rng: RngStream) -> np.ndarray:
    """Vectorized mapping for a (n, d) batch; draw order is row-major."""
    positions = np.array(positions, dtype=float)
    mask = (positions < space.lower) | (positions > space.upper)
    k = int(np.count_nonzero(mask))
    if k:
        beta = np.asarray(rng.uniform(size=k), dtype=float)
        lower = np.broadcast_to(space.lower, positions.shape)
        width = np.broadcast_to(space.width, positions.shape)
        positions[mask] = lower[mask] + beta * width[mask]
    return positions


def select_next_generation(
    fireworks,
    pbest,
    core: Individual,
    sparks: SparkSet,
    population_size: int,
    rng: RngStream,
) -> list[Individual]:
    """Elite-Random selection over the full candidate set.

    The candidate set is fireworks + pbest + core + all sparks. The single
    best candidate (strictly-less comparison, first found wins ties) fills
    slot 0; the remaining slots are drawn uniformly at random without
    replacement from the rest. Should the pool ever be too small, the
    remainder is sampled with replacement.
    """
    candidates: list[Individual] = (
        list(fireworks)
        + list(pbest)
        + [core]
        + list(sparks.explosion_sparks)
        + list(sparks.gaussian_sparks)
    )
    fitnesses = np.array([c.fitness for c in candidates])
    elite_idx = int(np.argmin(fitnesses))
    selected = [candidates[elite_idx]]

    pool = [i for i in range(len(candidates)) if i != elite_idx]
    needed = population_size - 1
    if not pool:
        return selected * population_size
    if needed <= len(pool):
        picks = [pool[j] for j in _sample_without_replacement(len(pool), needed, rng)]
    else:
        picks = list(pool)
        for _ in range(needed - len(pool)):
            picks.append(pool[rng.integers(0, len(pool))])
    selected.extend(candidates[i] for i in picks)
    return selected


def lfwa_step(
    state: LfwaState,
    objective: Objective,
    config: RunConfig,
    rng: RngStream,
    trace: GenerationTrace | None = None,
) -> LfwaState:
    """Advance the population by one full generation."""
    m = config.population_size
    fitnesses = np.array([fw.fitness for fw in state.fireworks])
    counts = explosion_intensity(fitnesses, m, config.xi)
    s_avg = average_intensity(counts)

    radii: list[np.ndarray] = []
    raw_sparks: list[np.ndarray] = []
    for i, fw in enumerate(state.fireworks):
        r_i = explosion_radius(
            fw.position, state.pbest[i].position, state.core.position, int(counts[i]), s_avg
        )
        radii.append(r_i)
        raw_sparks.append(
            generate_explosion_sparks(fw.position, r_i, int(counts[i]), rng, config.scalar_beta)
        )

    gaussian_parents: list[int] = []
    raw_mutants: list[np.ndarray] = []
    for _ in range(config.gaussian_spark_count):
        parent = rng.integers(0, m)
        gaussian_parents.append(parent)
        raw_mutants.append(gaussian_mutation(state.fireworks[parent].position, rng))

    mapped_sparks = [
        map_into_bounds(row, objective.space, rng) for block in raw_sparks for row in block
    ]
    mapped_mutants = [map_into_bounds(pos, objective.space, rng) for pos in raw_mutants]

    new_positions = np.asarray(mapped_sparks + mapped_mutants)
    values = objective.evaluate_many(new_positions)
    n_explosion = len(mapped_sparks)
    explosion = tuple(
        Individual(new_positions[i], values[i]) for i in range(n_explosion)
    )
    gaussian = tuple(
        Individual(new_positions[n_explosion + i], values[n_explosion + i])
        for i in range(len(mapped_mutants))
    )
    sparks = SparkSet(explosion, gaussian, counts)

    selected = select_next_generation(state.fireworks, state.pbest, state.core, sparks, m, rng)

    new_pbest = tuple(
        selected[i] if selected[i].fitness < state.pbest[i].fitness else state.pbest[i]
        for i in range(m)
    )
    core_idx = int(np.argmin([p.fitness for p in new_pbest]))
    core = new_pbest[core_idx]
    best = selected[0] if selected[0].fitness < state.best_so_far.fitness else state.best_so_far

    if trace is not None:
        trace.spark_counts = counts
        trace.mean_intensity = s_avg
        trace.radii = radii
        trace.explosion_sparks_raw = [row for block in raw_sparks for row in block]
        trace.explosion_sparks_mapped = mapped_sparks
        trace.gaussian_parents = gaussian_parents
        trace.gaussian_sparks_raw = raw_mutants
        trace.gaussian_sparks_mapped = mapped_mutants
        trace.selected = tuple(selected)

    return LfwaState(
        fireworks=tuple(selected),
        pbest=new_pbest,
        core=core,
        iteration=state.iteration + 1,
        best_so_far=best,
    )


def initialize_state(objective: Objective, config: RunConfig, rng: RngStream) -> LfwaState:
    """Uniform random population; each slot starts as its own historical best."""
    positions = np.asarray([objective.space.sample(rng) for _ in range(config.population_size)])
    values = objective.evaluate_many(positions)
    fireworks = tuple(Individual(positions[i], values[i]) for i in range(config.population_size))
    core = fireworks[int(np.argmin(values))]
    return LfwaState(
        fireworks=fireworks,
        pbest=fireworks,
        core=core,
        iteration=0,
        best_so_far=core,
    )


def lfwa_run(objective: Objective, config: RunConfig) -> RunRecord:
    """Run the optimizer for the configured number of generations."""
    rng = RngStream(config.seed)
    evals_before = objective.eval_count
    state = initialize_state(objective, config, rng)
    trajectory = [state.best_so_far.fitness]
    for _ in range(config.max_iterations):
        state = lfwa_step(state, objective, config, rng)
        trajectory.append(state.best_so_far.fitness)
    return RunRecord(
        algorithm="lfwa",
        objective=objective.name,
        seed=config.seed,
        trajectory=np.asarray(trajectory),
        final_best=state.best_so_far,
        evaluations_used=objective.eval_count - evals_before,
    )
