import numpy as np
import pytest

from litefwa.core import (
    EvaluationError,
    Individual,
    RngStream,
    RunConfig,
    RunRecord,
    SearchSpace,
)


def test_search_space_validation():
    with pytest.raises(ValueError):
        SearchSpace(np.array([0.0, 0.0]), np.array([1.0]))
    with pytest.raises(ValueError):
        SearchSpace(np.array([1.0]), np.array([1.0]))
    space = SearchSpace.symmetric(100.0, 30)
    assert space.dim == 30
    assert np.all(space.width == 200.0)


def test_search_space_contains_and_sample():
    space = SearchSpace.symmetric(5.0, 3)
    assert space.contains([0.0, 5.0, -5.0])
    assert not space.contains([0.0, 5.0001, 0.0])
    rng = RngStream(7)
    for _ in range(100):
        assert space.contains(space.sample(rng))


def test_individual_rejects_non_finite_fitness():
    with pytest.raises(ValueError):
        Individual(np.zeros(2), float("nan"))
    with pytest.raises(ValueError):
        Individual(np.zeros(2), float("inf"))
    ind = Individual([1.0, 2.0], 3)
    assert ind.fitness == 3.0
    assert ind.position.dtype == np.float64


def test_rng_stream_determinism():
    a = RngStream(123)
    b = RngStream(123)
    assert a.uniform() == b.uniform()
    assert np.array_equal(a.uniform(size=(3, 2)), b.uniform(size=(3, 2)))
    assert a.normal() == b.normal()
    assert a.integers(0, 10) == b.integers(0, 10)
    c = RngStream(124)
    assert RngStream(123).uniform() != c.uniform()


def test_rng_stream_ranges():
    rng = RngStream(5)
    u = rng.uniform(size=10_000)
    assert np.all((u >= 0.0) & (u < 1.0))
    ints = np.array([rng.integers(2, 5) for _ in range(500)])
    assert set(ints) == {2, 3, 4}


def test_run_config_defaults_and_validation():
    config = RunConfig()
    assert config.population_size == 5
    assert config.max_iterations == 1000
    assert config.tolerance == 1e-5
    assert config.xi == np.finfo(np.float64).eps
    assert config.gaussian_spark_count == 5

    assert RunConfig(gaussian_sparks_per_generation=3).gaussian_spark_count == 3
    assert RunConfig(population_size=8).gaussian_spark_count == 8

    with pytest.raises(ValueError):
        RunConfig(population_size=1)
    with pytest.raises(ValueError):
        RunConfig(tolerance=-1.0)
    with pytest.raises(ValueError):
        RunConfig(xi=0.0)
    with pytest.raises(ValueError):
        RunConfig(max_iterations=-1)
    with pytest.raises(ValueError):
        RunConfig(gaussian_sparks_per_generation=0)


def test_run_record_validation():
    good = RunRecord(
        algorithm="lfwa",
        objective="f1",
        seed=0,
        trajectory=[3.0, 2.0, 2.0],
        final_best=Individual(np.zeros(2), 2.0),
        evaluations_used=10,
    )
    assert good.trajectory.dtype == np.float64
    with pytest.raises(ValueError):
        RunRecord("lfwa", "f1", 0, [1.0, 2.0], Individual(np.zeros(2), 2.0), 1)
    with pytest.raises(ValueError):
        RunRecord("lfwa", "f1", 0, [2.0, 1.0], Individual(np.zeros(2), 0.5), 1)


def test_evaluation_error_carries_position():
    err = EvaluationError("bad", [1.0, 2.0])
    assert np.array_equal(err.position, [1.0, 2.0])
