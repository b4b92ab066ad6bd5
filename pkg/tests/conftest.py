import numpy as np
import pytest


class ConstantRng:
    """Stand-in stream returning fixed values; lets tests pin beta or the
    normal draw exactly (including values like 1.0 that a real [0,1)
    stream never produces)."""

    def __init__(self, uniform_value=0.5, normal_value=0.0, integer_value=0):
        self.uniform_value = uniform_value
        self.normal_value = normal_value
        self.integer_value = integer_value

    def uniform(self, size=None):
        if size is None:
            return float(self.uniform_value)
        return np.full(size, float(self.uniform_value))

    def normal(self, size=None):
        if size is None:
            return float(self.normal_value)
        return np.full(size, float(self.normal_value))

    def integers(self, low, high, size=None):
        value = min(max(self.integer_value, low), high - 1)
        if size is None:
            return int(value)
        return np.full(size, int(value))


class RecordingRng:
    """Wraps a real stream and keeps a tape of every draw."""

    def __init__(self, inner):
        self.inner = inner
        self.tape = []

    def _record(self, kind, size, value):
        stored = value if np.isscalar(value) else np.array(value, copy=True)
        self.tape.append((kind, size, stored))
        return value

    def uniform(self, size=None):
        return self._record("uniform", size, self.inner.uniform(size))

    def normal(self, size=None):
        return self._record("normal", size, self.inner.normal(size))

    def integers(self, low, high, size=None):
        return self._record("integers", size, self.inner.integers(low, high, size))


class ReplayRng:
    """Plays a RecordingRng tape back, checking the call sequence matches."""

    def __init__(self, tape):
        self._tape = list(tape)
        self._pos = 0

    def _next(self, kind, size):
        if self._pos >= len(self._tape):
            raise AssertionError(f"tape exhausted at call {kind}(size={size})")
        got_kind, got_size, value = self._tape[self._pos]
        assert got_kind == kind and got_size == size, (
            f"call {self._pos}: expected {got_kind}(size={got_size}), "
            f"replayed {kind}(size={size})"
        )
        self._pos += 1
        return value if np.isscalar(value) else np.array(value, copy=True)

    def uniform(self, size=None):
        return self._next("uniform", size)

    def normal(self, size=None):
        return self._next("normal", size)

    def integers(self, low, high, size=None):
        return self._next("integers", size)

    def assert_exhausted(self):
        assert self._pos == len(self._tape), (
            f"{len(self._tape) - self._pos} recorded draws were never replayed"
        )


@pytest.fixture
def constant_rng():
    return ConstantRng
