"""Ant colony optimization for continuous domains (ACO_R).

A sorted archive of the ``k`` best solutions defines a Gaussian kernel
per member. New ants pick a guide by rank weight and sample around it
with a spread proportional to the guide's mean distance to the rest of
the archive.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ConfigError
from .base import check_positive, clip_unit


@dataclass
class SolutionArchive:
    x: np.ndarray  # sorted best-first
    fitness: np.ndarray


def rank_weights(k: int, q: float) -> np.ndarray:
    """Selection probabilities of archive ranks 1..k (Gaussian in the rank)."""
    ranks = np.arange(k)
    w = np.exp(-(ranks**2) / (2.0 * (q * k) ** 2))
    return w / w.sum()


def aco_r_sample(
    archive: SolutionArchive,
    rng: np.random.Generator,
    q: float = 0.1,
    xi: float = 0.85,
    n: int | None = None,
) -> np.ndarray:
    """Sample ``n`` candidates (one if ``n`` is None) from the archive kernels.

    Draw order: guide draws (n), then standard normals (n x d).
    """
    k, d = archive.x.shape
    if k < 2:
        raise ConfigError("ACO_R archive needs at least 2 solutions")
    m = 1 if n is None else n
    u = rng.random(m)
    z = rng.standard_normal((m, d))
    cdf = np.cumsum(rank_weights(k, q))
    guides = np.minimum(np.searchsorted(cdf, u * cdf[-1], side="right"), k - 1)
    mu = archive.x[guides]
    sigma = xi * np.abs(archive.x[None, :, :] - mu[:, None, :]).sum(axis=1) / (k - 1)
    out = clip_unit(mu + sigma * z)
    return out[0] if n is None else out


class AcoR:
    def __init__(self, q: float = 0.1, xi: float = 0.85, archive_size: int | None = None):
        check_positive("q", q, allow_zero=False)
        check_positive("xi", xi)
        if archive_size is not None and archive_size < 2:
            raise ConfigError("archive_size must be >= 2")
        self.q, self.xi, self.archive_size = q, xi, archive_size

    def initialize(self, positions, fitness, rng) -> SolutionArchive:
        k = self.archive_size or len(positions)
        self.n_ants = len(positions)
        order = np.argsort(-fitness, kind="stable")[:k]
        return SolutionArchive(positions[order].copy(), fitness[order].copy())

    def propose(self, state: SolutionArchive, rng) -> np.ndarray:
        return aco_r_sample(state, rng, self.q, self.xi, n=self.n_ants)

    def select(self, state: SolutionArchive, candidates, fitness) -> None:
        k = len(state.fitness)
        x = np.vstack([state.x, candidates])
        f = np.concatenate([state.fitness, fitness])
        order = np.argsort(-f, kind="stable")[:k]
        state.x, state.fitness = x[order], f[order]
