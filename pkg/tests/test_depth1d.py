import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fbox.depth1d import (
    UnivariateSample,
    check_md,
    halfspace_depth,
    median_set,
    probe_points,
    simplicial_depth,
)

# Dyadic lattice values keep affine transforms exact in binary floats.
lattice_values = st.lists(
    st.integers(-800, 800).map(lambda k: k / 16.0), min_size=1, max_size=12
)


def simplicial_pair_oracle(u, values):
    """Enumerate all ordered pairs drawn with replacement."""
    n = len(values)
    hits = sum(
        1 for a in values for b in values if min(a, b) <= u <= max(a, b)
    )
    return hits / (n * n)


def test_halfspace_examples():
    q = [1.0, 2.0, 3.0]
    assert halfspace_depth(2.0, q) == 2 / 3
    assert halfspace_depth(1.0, q) == 1 / 3
    assert halfspace_depth(4.0, q) == 0.0


def test_simplicial_examples():
    q = [1.0, 2.0, 3.0]
    assert simplicial_depth(2.0, q) == 7 / 9
    assert simplicial_depth(1.0, q) == 5 / 9
    assert simplicial_depth(0.0, q) == 0.0


def test_median_set_examples():
    assert median_set([1, 2, 3]) == (2.0, 2.0)
    assert median_set([1, 3]) == (1.0, 3.0)
    assert median_set([5]) == (5.0, 5.0)


def test_sample_validation():
    with pytest.raises(ValueError):
        UnivariateSample([])
    with pytest.raises(ValueError):
        UnivariateSample([1.0, np.nan])


def test_check_md_examples():
    assert check_md("halfspace", [1, 2, 3], 0.5)
    assert check_md("halfspace", [1, 3], 0.5)
    with pytest.raises(ValueError):
        check_md("halfspace", [1, 2], 0.0)
    with pytest.raises(ValueError):
        check_md("unknown", [1, 2], 0.5)


def test_simplicial_oracle_exhaustive_small_lattice():
    # Every multiset over {0, 1, 2} up to size 8, checked on all probes.
    for size in range(1, 9):
        for combo in itertools.combinations_with_replacement((0.0, 1.0, 2.0), size):
            q = UnivariateSample(combo)
            for u in probe_points(q):
                assert simplicial_depth(float(u), q) == simplicial_pair_oracle(float(u), combo)


@given(lattice_values, st.sampled_from([-4.0, -2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 4.0]),
       st.integers(-40, 40).map(lambda k: k / 4.0))
@settings(max_examples=120, deadline=None)
def test_affine_invariance_exact(values, a, b):
    q = UnivariateSample(values)
    q2 = UnivariateSample([a * v + b for v in values])
    for u in probe_points(q):
        u = float(u)
        assert halfspace_depth(u, q) == halfspace_depth(a * u + b, q2)
        assert simplicial_depth(u, q) == simplicial_depth(a * u + b, q2)


@given(lattice_values)
@settings(max_examples=100, deadline=None)
def test_vanishing_outside_range_and_bounds(values):
    q = UnivariateSample(values)
    lo, hi = min(values), max(values)
    assert halfspace_depth(hi + 1.0, q) == 0.0
    assert halfspace_depth(lo - 1.0, q) == 0.0
    assert simplicial_depth(hi + 1.0, q) == 0.0
    assert simplicial_depth(lo - 1.0, q) == 0.0
    for u in probe_points(q):
        for depth in (halfspace_depth, simplicial_depth):
            assert 0.0 <= depth(float(u), q) <= 1.0


@given(lattice_values)
@settings(max_examples=100, deadline=None)
def test_halfspace_unimodal_and_maximal_on_median(values):
    q = UnivariateSample(values)
    probes = probe_points(q)
    depths = np.array([halfspace_depth(float(u), q) for u in probes])
    lo, hi = median_set(q)
    in_median = (probes >= lo) & (probes <= hi)
    argmax = depths == depths.max()
    assert np.array_equal(argmax, in_median)
    peak = int(np.flatnonzero(argmax)[0])
    assert np.all(np.diff(depths[: peak + 1]) >= 0)
    last = int(np.flatnonzero(argmax)[-1])
    assert np.all(np.diff(depths[last:]) <= 0)


@given(lattice_values)
@settings(max_examples=100, deadline=None)
def test_halfspace_md_holds_with_half(values):
    assert check_md("halfspace", UnivariateSample(values), 0.5)


@given(lattice_values)
@settings(max_examples=100, deadline=None)
def test_median_set_characterization(values):
    q = UnivariateSample(values)
    v = np.asarray(q.values)
    n = v.size
    lo, hi = median_set(q)
    assert lo <= hi
    for u in probe_points(q):
        cdf_at = np.count_nonzero(v <= u) / n
        cdf_below = np.count_nonzero(v < u) / n
        assert (cdf_below <= 0.5 <= cdf_at) == (lo <= u <= hi)
