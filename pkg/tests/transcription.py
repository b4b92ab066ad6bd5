"""Independent straight-line transcription of one optimizer generation.

Everything here is recomputed with plain scalar Python (math module, no
vectorized shortcuts) for the 1-d case, consuming random draws from a
recorded tape in the engine's documented order:

  1. per firework i: the uniform beta block for its spark displacements
  2. per Gaussian mutant: parent index, n, dimension picks, one normal
  3. per explosion spark then per mutant: mapping betas for violations
  4. selection: the partial-shuffle integer draws

The result is a dictionary of every intermediate quantity, compared by the
tests against the engine's GenerationTrace.
"""

import math


def straight_line_generation(fireworks, pbest, core, evaluate, lower, upper, config, rng):
    """One generation for dimension 1, transcribed directly from the update
    rules. ``fireworks``/``pbest`` are lists of (position, fitness) scalar
    pairs, ``core`` one such pair; ``rng`` replays a recorded tape."""
    m = len(fireworks)
    xi = config.xi

    # explosion intensity: ceil(M ** ((f_max - f_i) / (f_max - f_min + xi)))
    fits = [f for (_, f) in fireworks]
    f_max = max(fits)
    f_min = min(fits)
    counts = [math.ceil(m ** ((f_max - f) / (f_max - f_min + xi))) for f in fits]

    # average intensity
    s_avg = sum(counts) / m

    # explosion radius: below-average intensity follows the slot's best,
    # the rest follow the core firework
    radii = []
    for i in range(m):
        if counts[i] < s_avg:
            radii.append(pbest[i][0] - fireworks[i][0])
        else:
            radii.append(core[0] - fireworks[i][0])

    # displacement: one uniform block per firework, spark = x + beta * radius
    raw_sparks = []
    for i in range(m):
        if config.scalar_beta:
            betas = rng.uniform(size=counts[i])
        else:
            betas = rng.uniform(size=(counts[i], 1))
        for j in range(counts[i]):
            beta = float(betas[j]) if config.scalar_beta else float(betas[j][0])
            raw_sparks.append(fireworks[i][0] + beta * radii[i])

    # Gaussian mutants: parent pick, n = 1 (single dimension), dimension
    # shuffle, then one shared factor
    parents = []
    raw_mutants = []
    for _ in range(config.gaussian_spark_count):
        parent = rng.integers(0, m)
        parents.append(parent)
        n = rng.integers(1, 2)
        assert n == 1
        rng.integers(0, 1)  # the single-dimension shuffle draw
        factor = rng.normal() + 1.0
        raw_mutants.append(fireworks[parent][0] * factor)

    # mapping: violated coordinates are redrawn as lower + beta * width
    def mapped(value):
        if value < lower or value > upper:
            beta = float(rng.uniform(size=1)[0])
            return lower + beta * (upper - lower)
        return value

    mapped_sparks = [mapped(s) for s in raw_sparks]
    mapped_mutants = [mapped(g) for g in raw_mutants]

    # candidate set in order: fireworks, pbest, core, sparks, mutants
    candidates = (
        list(fireworks)
        + list(pbest)
        + [core]
        + [(s, evaluate(s)) for s in mapped_sparks]
        + [(g, evaluate(g)) for g in mapped_mutants]
    )

    # Elite-Random selection: strict-minimum elite first, the rest drawn
    # without replacement via a partial Fisher-Yates shuffle
    elite = 0
    for i in range(1, len(candidates)):
        if candidates[i][1] < candidates[elite][1]:
            elite = i
    pool = [i for i in range(len(candidates)) if i != elite]
    for j in range(m - 1):
        swap = rng.integers(j, len(pool))
        pool[j], pool[swap] = pool[swap], pool[j]
    selected = [candidates[elite]] + [candidates[i] for i in pool[: m - 1]]

    # per-slot history update, then the core as the best history entry
    new_pbest = [
        selected[i] if selected[i][1] < pbest[i][1] else pbest[i] for i in range(m)
    ]
    core_idx = 0
    for i in range(1, m):
        if new_pbest[i][1] < new_pbest[core_idx][1]:
            core_idx = i

    return {
        "spark_counts": counts,
        "mean_intensity": s_avg,
        "radii": radii,
        "raw_sparks": raw_sparks,
        "mapped_sparks": mapped_sparks,
        "gaussian_parents": parents,
        "raw_mutants": raw_mutants,
        "mapped_mutants": mapped_mutants,
        "selected": selected,
        "pbest": new_pbest,
        "core": new_pbest[core_idx],
    }
