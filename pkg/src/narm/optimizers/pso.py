"""Particle swarm optimization with inertia weight, bounded to the unit box."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .base import check_positive, clip_unit


@dataclass
class SwarmState:
    x: np.ndarray
    v: np.ndarray
    pbest: np.ndarray
    pbest_f: np.ndarray

    @property
    def gbest(self) -> np.ndarray:
        return self.pbest[int(np.argmax(self.pbest_f))]


def pso_step(
    state: SwarmState,
    rng: np.random.Generator,
    w: float = 0.7,
    c1: float = 1.5,
    c2: float = 1.5,
    vmax: float = 0.5,
) -> SwarmState:
    """Move every particle once; personal bests are left untouched."""
    n, d = state.x.shape
    r1 = rng.random((n, d))
    r2 = rng.random((n, d))
    v = w * state.v + c1 * r1 * (state.pbest - state.x) + c2 * r2 * (state.gbest - state.x)
    v = np.clip(v, -vmax, vmax)
    return SwarmState(clip_unit(state.x + v), v, state.pbest, state.pbest_f)


class ParticleSwarm:
    def __init__(self, w: float = 0.7, c1: float = 1.5, c2: float = 1.5, vmax: float = 0.5):
        for name, value in (("w", w), ("c1", c1), ("c2", c2)):
            check_positive(name, value)
        check_positive("vmax", vmax, allow_zero=False)
        self.w, self.c1, self.c2, self.vmax = w, c1, c2, vmax

    def initialize(self, positions, fitness, rng) -> SwarmState:
        return SwarmState(positions.copy(), np.zeros_like(positions), positions.copy(), fitness.copy())

    def propose(self, state: SwarmState, rng) -> np.ndarray:
        self._moved = pso_step(state, rng, self.w, self.c1, self.c2, self.vmax)
        return self._moved.x

    def select(self, state: SwarmState, candidates, fitness) -> None:
        # a truncated last batch moves only the evaluated particles
        k = len(fitness)
        state.x[:k] = self._moved.x[:k]
        state.v[:k] = self._moved.v[:k]
        better = fitness > state.pbest_f[:k]
        idx = np.flatnonzero(better)
        state.pbest[idx] = candidates[idx]
        state.pbest_f[idx] = fitness[idx]
