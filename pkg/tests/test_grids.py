import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fbox.grids import Band, FunctionalSample, Grid, band_of, fence, inflate, uniform_grid

GRID2 = Grid([0.0, 1.0])


def sample_of(rows):
    return FunctionalSample(GRID2, rows)


def test_grid_validation():
    g = uniform_grid(101)
    assert g.size == 101
    assert g.points[0] == 0.0 and g.points[-1] == 1.0
    assert abs(g.weights.sum() - 1.0) < 1e-12
    with pytest.raises(ValueError):
        Grid([0.5])
    with pytest.raises(ValueError):
        Grid([0.0, 0.0])
    with pytest.raises(ValueError):
        Grid([0.2, 0.1])
    with pytest.raises(ValueError):
        Grid([-0.1, 0.5])
    with pytest.raises(ValueError):
        Grid([0.0, 1.2])
    with pytest.raises(ValueError):
        Grid([0.0, 1.0], weights=[0.7, 0.7])
    with pytest.raises(ValueError):
        Grid([0.0, 1.0], weights=[-0.5, 1.5])


def test_sample_validation():
    with pytest.raises(ValueError):
        FunctionalSample(GRID2, [[1.0, np.inf]])
    with pytest.raises(ValueError):
        FunctionalSample(GRID2, [[1.0, 2.0, 3.0]])
    s = sample_of([[1.0, 2.0]])
    assert s.n_functions == 1
    with pytest.raises(ValueError):
        s.values[0, 0] = 3.0


def test_band_of_examples():
    s = sample_of([[0, 0], [2, 2]])
    b = band_of(s, [0, 1])
    assert np.array_equal(b.lower, [0, 0]) and np.array_equal(b.upper, [2, 2])
    single = band_of(sample_of([[1, 3]]), [0])
    assert np.array_equal(single.lower, [1, 3]) and np.array_equal(single.upper, [1, 3])
    crossing = band_of(sample_of([[0, 2], [2, 0]]), [0, 1])
    assert np.array_equal(crossing.lower, [0, 0]) and np.array_equal(crossing.upper, [2, 2])


def test_band_of_errors():
    s = sample_of([[0, 0], [2, 2]])
    with pytest.raises(ValueError, match="empty band"):
        band_of(s, [])
    with pytest.raises(IndexError):
        band_of(s, [2])
    with pytest.raises(IndexError):
        band_of(s, [-1])


def test_contains_examples():
    b = Band(GRID2, [0.0, 0.0], [2.0, 2.0])
    assert b.contains([1.0, 1.0])
    assert b.contains([0.0, 2.0])
    assert not b.contains([1.0, 3.0])
    with pytest.raises(ValueError):
        b.contains([1.0, 1.0, 1.0])


def test_width_examples():
    assert Band(GRID2, [0.0, 0.0], [2.0, 2.0]).mean_width() == 2.0
    assert Band(GRID2, [0.0, 1.0], [2.0, 1.0]).mean_width() == 1.0
    assert Band(GRID2, [1.0, 1.0], [1.0, 1.0]).mean_width() == 0.0
    unbounded = Band(GRID2, [-np.inf, 0.0], [0.0, np.inf])
    with pytest.raises(ValueError, match="unbounded band"):
        unbounded.mean_width()


def test_band_envelope_order_enforced():
    with pytest.raises(ValueError):
        Band(GRID2, [1.0, 0.0], [0.0, 1.0])


def test_inflate_examples():
    b = Band(GRID2, [0.0, 0.0], [2.0, 2.0])
    m = np.array([1.0, 1.0])
    out = inflate(b, m, 4.0)
    assert np.array_equal(out.lower, [-3.0, -3.0])
    assert np.array_equal(out.upper, [5.0, 5.0])
    assert inflate(b, m, 1.0) is b
    wide = inflate(Band(GRID2, [0.0, 0.0], [3.0, 3.0]), m, 2.0)
    assert np.array_equal(wide.lower, [-1.0, -1.0])
    assert np.array_equal(wide.upper, [5.0, 5.0])


def test_inflate_errors():
    b = Band(GRID2, [0.0, 0.0], [2.0, 2.0])
    with pytest.raises(ValueError, match="median outside band"):
        inflate(b, np.array([3.0, 1.0]), 2.0)
    with pytest.raises(ValueError):
        inflate(b, np.array([1.0, 1.0]), 0.5)


def test_fence_matches_inflate_for_centered_median():
    b = Band(GRID2, [0.0, 1.0], [2.0, 3.0])
    centered = fence(b, 4.0)
    anchored = inflate(b, np.array([1.0, 2.0]), 4.0)
    assert np.allclose(centered.lower, anchored.lower)
    assert np.allclose(centered.upper, anchored.upper)


matrices = st.integers(2, 6).flatmap(
    lambda m: st.integers(1, 7).flatmap(
        lambda n: st.lists(
            st.lists(st.floats(-100, 100, allow_nan=False, width=32), min_size=m, max_size=m),
            min_size=n,
            max_size=n,
        )
    )
)


@given(matrices, st.data())
@settings(max_examples=60, deadline=None)
def test_band_monotone_and_idempotent(rows, data):
    values = np.asarray(rows, dtype=float)
    n, m = values.shape
    sample = FunctionalSample(uniform_grid(m), values)
    small = data.draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=n))
    big = small | data.draw(st.sets(st.integers(0, n - 1), min_size=0, max_size=n))
    inner, outer = band_of(sample, sorted(small)), band_of(sample, sorted(big))
    assert np.all(outer.lower <= inner.lower)
    assert np.all(inner.upper <= outer.upper)
    for i in small:
        assert inner.contains(values[i])


@given(matrices, st.floats(1.0, 8.0), st.floats(1.0, 8.0))
@settings(max_examples=60, deadline=None)
def test_inflate_nested_and_width_scales(rows, c1, c2):
    values = np.asarray(rows, dtype=float)
    sample = FunctionalSample(uniform_grid(values.shape[1]), values)
    band = band_of(sample, range(values.shape[0]))
    median = 0.5 * (band.lower + band.upper)
    lo, hi = min(c1, c2), max(c1, c2)
    inner, outer = inflate(band, median, lo), inflate(band, median, hi)
    assert np.all(outer.lower <= inner.lower + 1e-9)
    assert np.all(inner.upper <= outer.upper + 1e-9)
    got = inflate(band, median, hi).mean_width()
    assert got == pytest.approx(hi * band.mean_width(), rel=1e-12, abs=1e-9)
