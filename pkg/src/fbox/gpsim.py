"""Seeded sampling of centered Gaussian processes on a grid.

The covariance is squared-exponential, ``exp(-(s - t)^2 / h)``, with the
bandwidth ``h`` controlling smoothness: small ``h`` gives rough paths,
large ``h`` nearly constant ones.  Draws are ``L z`` with ``L`` the lower
Cholesky factor of the jittered covariance and ``z`` standard normal.

Randomness is fully reproducible across platforms: the bit stream comes
from the counter-based Philox generator and normals are produced by the
inverse CDF applied to open-interval uniforms ``(k + 1/2) / 2^53``.
Independent streams for parallel work are derived with
:func:`stream_key` from a base seed and an index path.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri

from .grids import FunctionalSample, Grid

__all__ = ["GPModel", "covariance", "sample", "stream_key"]

_MAX_JITTER = 1e-6
_MIN_JITTER = 1e-10


@dataclass(frozen=True, eq=False)
class GPModel:
    """Centered Gaussian process with squared-exponential covariance."""

    h: float
    grid: Grid
    jitter: float = _MIN_JITTER

    def __post_init__(self):
        if not self.h > 0.0:
            raise ValueError("bandwidth h must be positive")
        if self.jitter < 0.0:
            raise ValueError("jitter must be nonnegative")


def covariance(model: GPModel) -> np.ndarray:
    """Covariance matrix on the grid, jitter added to the diagonal."""
    t = model.grid.points
    diff = t[:, np.newaxis] - t[np.newaxis, :]
    cov = np.exp(-(diff * diff) / model.h)
    if model.jitter > 0.0:
        cov = cov + model.jitter * np.eye(t.size)
    return cov


def _factor(model: GPModel) -> np.ndarray:
    t = model.grid.points
    diff = t[:, np.newaxis] - t[np.newaxis, :]
    kernel = np.exp(-(diff * diff) / model.h)
    eye = np.eye(t.size)
    jitter = max(model.jitter, _MIN_JITTER)
    while jitter <= _MAX_JITTER:
        try:
            return np.linalg.cholesky(kernel + jitter * eye)
        except np.linalg.LinAlgError:
            jitter *= 10.0
    raise RuntimeError("covariance not PD")


def stream_key(base_seed: int, *path: int) -> np.ndarray:
    """Derive an independent Philox key from a base seed and an index path."""
    seq = np.random.SeedSequence(int(base_seed), spawn_key=tuple(int(p) for p in path))
    return seq.generate_state(2, dtype=np.uint64)


def _open_uniforms(key, shape) -> np.ndarray:
    """Open-interval (0, 1) uniforms from a Philox stream.

    The top 53 bits of each raw 64-bit word give ``k``; the uniform is
    ``(k + 1/2) / 2^53``, which never hits 0 or 1.
    """
    rng = np.random.Generator(np.random.Philox(key=key))
    raw = rng.integers(0, 2**64, size=shape, dtype=np.uint64)
    k = (raw >> np.uint64(11)).astype(np.float64)
    return (k + 0.5) * (1.0 / (1 << 53))


def sample(model: GPModel, n: int, seed) -> FunctionalSample:
    """Draw ``n`` independent paths of the process on its grid.

    ``seed`` is either a plain integer or a key from :func:`stream_key`.
    Fixed inputs give bitwise-identical output.
    """
    if n < 1:
        raise ValueError("need at least one path")
    factor = _factor(model)
    z = ndtri(_open_uniforms(seed, (n, model.grid.size)))
    return FunctionalSample(model.grid, z @ factor.T)
