"""Bat algorithm: frequency-tuned velocities plus a loudness-scaled local walk."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .base import check_positive, clip_unit


@dataclass
class BatState:
    x: np.ndarray
    v: np.ndarray
    fitness: np.ndarray
    loudness: np.ndarray
    pulse_rate: np.ndarray
    best: np.ndarray
    best_f: float
    generation: int = 0


@dataclass
class BatMove:
    """Candidates of one generation plus the pre-drawn acceptance numbers."""

    candidates: np.ndarray
    velocities: np.ndarray
    accept_draws: np.ndarray


def bat_step(
    state: BatState,
    rng: np.random.Generator,
    f_min: float = 0.0,
    f_max: float = 2.0,
    vmax: float = 1.0,
    walk_scale: float = 0.01,
) -> BatMove:
    """Generate one candidate per bat.

    Draw order per generation: frequencies (n), walk gates (n), walk
    steps (n x d), acceptance draws (n).
    """
    n, d = state.x.shape
    freq = f_min + (f_max - f_min) * rng.random(n)
    gate = rng.random(n)
    eps = rng.uniform(-1.0, 1.0, (n, d))
    accept = rng.random(n)

    v = np.clip(state.v + (state.x - state.best) * freq[:, None], -vmax, vmax)
    cand = clip_unit(state.x + v)
    walk = gate > state.pulse_rate
    if walk.any():
        cand[walk] = clip_unit(state.best + walk_scale * eps[walk] * state.loudness.mean())
    return BatMove(cand, v, accept)


class BatAlgorithm:
    def __init__(
        self,
        f_min: float = 0.0,
        f_max: float = 2.0,
        loudness: float = 1.0,
        pulse_rate: float = 0.5,
        alpha: float = 0.9,
        gamma: float = 0.9,
        vmax: float = 1.0,
        walk_scale: float = 0.01,
    ):
        if f_min > f_max:
            raise ValueError("f_min > f_max")
        for name, value in (("loudness", loudness), ("pulse_rate", pulse_rate), ("alpha", alpha), ("gamma", gamma)):
            check_positive(name, value)
        check_positive("vmax", vmax, allow_zero=False)
        check_positive("walk_scale", walk_scale)
        self.walk_scale = walk_scale
        self.f_min, self.f_max = f_min, f_max
        self.loudness0, self.pulse_rate0 = loudness, pulse_rate
        self.alpha, self.gamma, self.vmax = alpha, gamma, vmax

    def initialize(self, positions, fitness, rng) -> BatState:
        n = len(positions)
        i = int(np.argmax(fitness))
        return BatState(
            x=positions.copy(),
            v=np.zeros_like(positions),
            fitness=fitness.copy(),
            loudness=np.full(n, float(self.loudness0)),
            # r_i(t) = r0 (1 - exp(-gamma t)) starts at 0
            pulse_rate=np.zeros(n),
            best=positions[i].copy(),
            best_f=float(fitness[i]),
        )

    def propose(self, state: BatState, rng) -> np.ndarray:
        self._move = bat_step(state, rng, self.f_min, self.f_max, self.vmax, self.walk_scale)
        return self._move.candidates

    def select(self, state: BatState, candidates, fitness) -> None:
        move = self._move
        k = len(fitness)
        state.generation += 1
        state.v[:k] = move.velocities[:k]
        accepted = (fitness >= state.fitness[:k]) & (move.accept_draws[:k] < state.loudness[:k])
        idx = np.flatnonzero(accepted)
        state.x[idx] = candidates[idx]
        state.fitness[idx] = fitness[idx]
        state.loudness[idx] *= self.alpha
        state.pulse_rate[idx] = self.pulse_rate0 * (1.0 - np.exp(-self.gamma * state.generation))
        i = int(np.argmax(fitness))
        if fitness[i] > state.best_f:
            state.best = candidates[i].copy()
            state.best_f = float(fitness[i])
