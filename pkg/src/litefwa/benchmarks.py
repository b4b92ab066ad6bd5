"""Benchmark objective registry: nine classic test functions, f1 through f9.

The registry reproduces a widely used nine-function comparison suite.
Several circulated statements of that suite contain transcription errors
that contradict their own declared optima (a linear Sphere, an unsquared
Rosenbrock coupling, a 3.1*x1**6 camel-back coefficient, and so on); those
entries are registered here in their standard textbook forms, and every
reconciliation is recorded in the objective's ``formula_note`` so reports
can print which form was actually evaluated.

The one entry that cannot be reconciled is f6: the formula
``sum(-x*sin(sqrt(|x|)))`` is kept exactly as circulated, its declared
optimum of 0 is kept for success-rate bookkeeping, and the contradiction
(its true minimum on the domain is about -1909) is flagged via
``optimum_inconsistent``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .core import EvaluationError, SearchSpace

__all__ = ["Objective", "ObjectiveLookupError", "make_objective", "objective_names"]


class ObjectiveLookupError(KeyError):
    """Requested benchmark name is not registered."""


@dataclass
class Objective:
    """A benchmark function plus the metadata used for success bookkeeping.

    ``declared_optimum`` is the target value a run is judged against.
    ``known_minimizer`` is a point attaining it (absent for f6, where no
    such point exists on the domain). ``eval_count`` tallies every
    evaluation performed through this instance; callers that need
    per-run counts construct one instance per run.
    """

    name: str
    label: str
    dim: int
    space: SearchSpace
    declared_optimum: float
    known_minimizer: np.ndarray | None
    func: Callable[[np.ndarray], np.ndarray]
    formula_note: str = ""
    source_label: str | None = None
    standard_form: bool = True
    optimum_inconsistent: bool = False
    eval_count: int = 0

    def evaluate(self, position) -> float:
        """Evaluate one position, incrementing the evaluation counter by 1."""
        values = self.evaluate_many(np.asarray(position, dtype=float)[None, :])
        return float(values[0])

    def evaluate_many(self, positions) -> np.ndarray:
        """Evaluate a batch of positions, one counter increment per row."""
        positions = np.asarray(positions, dtype=float)
        if positions.ndim != 2 or positions.shape[1] != self.dim:
            raise ValueError(
                f"{self.name} expects positions of dimension {self.dim}, "
                f"got array of shape {positions.shape}"
            )
        values = np.asarray(self.func(positions), dtype=float)
        self.eval_count += len(positions)
        bad = ~np.isfinite(values)
        if np.any(bad):
            i = int(np.flatnonzero(bad)[0])
            raise EvaluationError(
                f"{self.name} returned non-finite value {values[i]!r}", positions[i]
            )
        return values

    @property
    def metadata(self) -> dict:
        """Registry metadata as plain values, for reports and provenance files."""
        return {
            "name": self.name,
            "label": self.label,
            "dim": self.dim,
            "lower": float(self.space.lower[0]),
            "upper": float(self.space.upper[0]),
            "declared_optimum": self.declared_optimum,
            "formula_note": self.formula_note,
            "source_label": self.source_label,
            "standard_form": self.standard_form,
            "optimum_inconsistent": self.optimum_inconsistent,
        }


def _sphere(x: np.ndarray) -> np.ndarray:
    return np.sum(x * x, axis=1)


def _rosenbrock(x: np.ndarray) -> np.ndarray:
    return np.sum(100.0 * (x[:, 1:] - x[:, :-1] ** 2) ** 2 + (x[:, :-1] - 1.0) ** 2, axis=1)


def _rastrigin(x: np.ndarray) -> np.ndarray:
    return np.sum(x * x - 10.0 * np.cos(2.0 * np.pi * x) + 10.0, axis=1)


def _griewank(x: np.ndarray) -> np.ndarray:
    i = np.arange(1, x.shape[1] + 1, dtype=float)
    return np.sum(x * x, axis=1) / 4000.0 - np.prod(np.cos(x / np.sqrt(i)), axis=1) + 1.0


def _ackley(x: np.ndarray) -> np.ndarray:
    # Term order matters at convergence: evaluated left to right this form
    # bottoms out at a few ulps of e instead of exactly 0.
    return (
        -20.0 * np.exp(-0.2 * np.sqrt(np.mean(x * x, axis=1)))
        - np.exp(np.mean(np.cos(2.0 * np.pi * x), axis=1))
        + 20.0
        + np.e
    )


def _schwefel_as_circulated(x: np.ndarray) -> np.ndarray:
    return np.sum(-x * np.sin(np.sqrt(np.abs(x))), axis=1)


def _six_hump_camel_back(x: np.ndarray) -> np.ndarray:
    x1, x2 = x[:, 0], x[:, 1]
    return 4.0 * x1**2 - 2.1 * x1**4 + x1**6 / 3.0 + x1 * x2 - 4.0 * x2**2 + 4.0 * x2**4


def _goldstein_price(x: np.ndarray) -> np.ndarray:
    x1, x2 = x[:, 0], x[:, 1]
    a = 1.0 + (x1 + x2 + 1.0) ** 2 * (
        19.0 - 14.0 * x1 + 3.0 * x1**2 - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2**2
    )
    b = 30.0 + (2.0 * x1 - 3.0 * x2) ** 2 * (
        18.0 - 32.0 * x1 + 12.0 * x1**2 + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2**2
    )
    return a * b


def _schaffer_f6(x: np.ndarray) -> np.ndarray:
    rr = x[:, 0] ** 2 + x[:, 1] ** 2
    return 0.5 + (np.sin(np.sqrt(rr)) ** 2 - 0.5) / (1.0 + 0.001 * rr) ** 2


_REGISTRY: dict[str, dict] = {
    "f1": dict(
        label="Sphere",
        dim=30,
        half_width=100.0,
        declared_optimum=0.0,
        minimizer=0.0,
        func=_sphere,
        formula_note=(
            "standard sum of squares; the linear-sum variant sometimes circulated "
            "for this suite attains -3000 on the domain, contradicting optimum 0"
        ),
    ),
    "f2": dict(
        label="Rosenbrock",
        dim=30,
        half_width=10.0,
        declared_optimum=0.0,
        minimizer=1.0,
        func=_rosenbrock,
        formula_note=(
            "standard form with squared coupling 100*(x[i+1]-x[i]**2)**2; the "
            "unsquared variant has no minimum of 0 at the all-ones point"
        ),
    ),
    "f3": dict(
        label="Rastrigin",
        dim=30,
        half_width=5.12,
        declared_optimum=0.0,
        minimizer=0.0,
        func=_rastrigin,
        formula_note="standard Rastrigin; the formula is authoritative over the label",
        source_label="Rosenbrock",
    ),
    "f4": dict(
        label="Griewank",
        dim=30,
        half_width=600.0,
        declared_optimum=0.0,
        minimizer=0.0,
        func=_griewank,
        formula_note="",
    ),
    "f5": dict(
        label="Ackley",
        dim=30,
        half_width=32.0,
        declared_optimum=0.0,
        minimizer=0.0,
        func=_ackley,
        formula_note=(
            "standard averaged form; variants omitting the 1/n factors do not "
            "attain the declared 0 at the origin"
        ),
    ),
    "f6": dict(
        label="Schwefel (as circulated)",
        dim=30,
        half_width=100.0,
        declared_optimum=0.0,
        minimizer=None,
        func=_schwefel_as_circulated,
        formula_note=(
            "kept exactly as circulated: sum(-x*sin(sqrt(|x|))); its true minimum "
            "on [-100,100]^30 is about -1909, so the declared optimum 0 is "
            "unreachable bookkeeping only"
        ),
        standard_form=False,
        optimum_inconsistent=True,
    ),
    "f7": dict(
        label="Six-Hump Camel-Back",
        dim=2,
        half_width=5.0,
        declared_optimum=-1.0316285,
        minimizer=np.array([0.089842, -0.712656]),
        func=_six_hump_camel_back,
        formula_note=(
            "standard x1**6/3 coefficient; a circulated 3.1*x1**6 variant cannot "
            "reach the declared -1.0316285"
        ),
    ),
    "f8": dict(
        label="Goldstein-Price",
        dim=2,
        half_width=2.0,
        declared_optimum=3.0,
        minimizer=np.array([0.0, -1.0]),
        func=_goldstein_price,
        formula_note=(
            "standard bracket constants with 3*x2**2 in the first factor; the "
            "3*x2**4 variant does not have minimum 3 at (0, -1)"
        ),
    ),
    "f9": dict(
        label="Schaffer F6",
        dim=2,
        half_width=100.0,
        declared_optimum=0.0,
        minimizer=0.0,
        func=_schaffer_f6,
        formula_note="",
    ),
}


def objective_names() -> list[str]:
    """Registered benchmark names in suite order."""
    return list(_REGISTRY)


def make_objective(name: str) -> Objective:
    """Build a fresh objective (its evaluation counter starts at zero).

    Raises ObjectiveLookupError for unknown names, listing the valid ones.
    """
    try:
        entry = _REGISTRY[name]
    except KeyError:
        valid = ", ".join(_REGISTRY)
        raise ObjectiveLookupError(
            f"unknown objective {name!r}; valid names: {valid}"
        ) from None
    minimizer = entry["minimizer"]
    if minimizer is not None:
        minimizer = np.full(entry["dim"], float(minimizer)) if np.ndim(minimizer) == 0 else np.asarray(minimizer, dtype=float)
    return Objective(
        name=name,
        label=entry["label"],
        dim=entry["dim"],
        space=SearchSpace.symmetric(entry["half_width"], entry["dim"]),
        declared_optimum=float(entry["declared_optimum"]),
        known_minimizer=minimizer,
        func=entry["func"],
        formula_note=entry["formula_note"],
        source_label=entry.get("source_label"),
        standard_form=entry.get("standard_form", True),
        optimum_inconsistent=entry.get("optimum_inconsistent", False),
    )
