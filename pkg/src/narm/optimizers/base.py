"""Generic population loop shared by all search strategies.

The loop is the usual nature-inspired skeleton: random initial
population, evaluate, then repeat modify / evaluate / select until the
evaluation budget is spent. Strategies plug in the modify and select
steps. All random numbers for a generation are drawn in ``propose``
before any evaluation, so evaluating a batch on several threads cannot
change the stream.
"""

from __future__ import annotations

import csv
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Protocol

import numpy as np

from ..errors import ConfigError, EvaluationError

Objective = Callable[[np.ndarray], float]
Observer = Callable[[np.ndarray, np.ndarray], None]


class Algorithm(str, Enum):
    PSO = "pso"
    BAT = "bat"
    ACOR = "acor"


@dataclass(frozen=True)
class SearchSpace:
    dimension: int

    def __post_init__(self):
        if self.dimension < 1:
            raise ConfigError("search space dimension must be >= 1")

    @property
    def lower(self) -> np.ndarray:
        return np.zeros(self.dimension)

    @property
    def upper(self) -> np.ndarray:
        return np.ones(self.dimension)


@dataclass(frozen=True)
class OptimizerConfig:
    population_size: int
    max_evaluations: int
    seed: int = 0
    algorithm: Algorithm = Algorithm.PSO
    algorithm_params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "algorithm", Algorithm(self.algorithm))
        if self.population_size < 2:
            raise ConfigError("population_size must be >= 2")
        if self.max_evaluations < self.population_size:
            raise ConfigError("max_evaluations must be >= population_size")


@dataclass
class RunTrace:
    best_fitness_by_generation: list[float] = field(default_factory=list)
    evaluations_by_generation: list[int] = field(default_factory=list)
    evaluations_used: int = 0
    wall_time: float = 0.0

    def to_csv(self, path: str | Path) -> None:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["generation", "best_fitness", "evaluations"])
            for g, (best, evals) in enumerate(zip(self.best_fitness_by_generation, self.evaluations_by_generation)):
                writer.writerow([g, repr(best), evals])


class Strategy(Protocol):
    def initialize(self, positions: np.ndarray, fitness: np.ndarray, rng: np.random.Generator) -> Any: ...

    def propose(self, state: Any, rng: np.random.Generator) -> np.ndarray: ...

    def select(self, state: Any, candidates: np.ndarray, fitness: np.ndarray) -> None: ...


def clip_unit(x: np.ndarray) -> np.ndarray:
    return np.clip(x, 0.0, 1.0)


class _Evaluator:
    def __init__(self, objective: Objective, threads: int):
        self.objective = objective
        self.pool = ThreadPoolExecutor(threads) if threads > 1 else None

    def __call__(self, points: np.ndarray) -> np.ndarray:
        rows = [np.array(p) for p in points]
        if self.pool is None:
            values = [self.objective(r) for r in rows]
        else:
            values = list(self.pool.map(self.objective, rows))
        out = np.asarray(values, dtype=np.float64)
        if not np.all(np.isfinite(out)):
            bad = int(np.flatnonzero(~np.isfinite(out))[0])
            raise EvaluationError(f"objective returned {out[bad]!r} at {rows[bad].tolist()}")
        return out

    def close(self):
        if self.pool is not None:
            self.pool.shutdown()


def make_strategy(config: OptimizerConfig) -> Strategy:
    from .acor import AcoR
    from .bat import BatAlgorithm
    from .pso import ParticleSwarm

    cls = {Algorithm.PSO: ParticleSwarm, Algorithm.BAT: BatAlgorithm, Algorithm.ACOR: AcoR}[config.algorithm]
    try:
        return cls(**config.algorithm_params)
    except TypeError as exc:
        raise ConfigError(f"bad parameters for {config.algorithm.value}: {exc}") from None


def run(
    space: SearchSpace,
    objective: Objective,
    config: OptimizerConfig,
    *,
    threads: int = 1,
    observer: Observer | None = None,
) -> tuple[np.ndarray, RunTrace]:
    """Maximize ``objective`` over the unit box of ``space``.

    Returns the best genotype ever evaluated and the run trace. The
    result depends only on ``(seed, config, objective)``; ``threads`` only
    changes how a generation's evaluations are scheduled. ``observer`` is
    called sequentially with every evaluated batch, in generation order.
    """
    if threads < 1:
        raise ConfigError("threads must be >= 1")
    strategy = make_strategy(config)
    rng = np.random.default_rng(config.seed)
    evaluate = _Evaluator(objective, threads)
    trace = RunTrace()
    start = time.perf_counter()
    try:
        positions = rng.random((config.population_size, space.dimension))
        fitness = evaluate(positions)
        used = len(fitness)
        if observer is not None:
            observer(positions, fitness)
        state = strategy.initialize(positions, fitness, rng)
        best_x, best_f = _best_of(positions, fitness)
        trace.best_fitness_by_generation.append(best_f)
        trace.evaluations_by_generation.append(used)

        while used < config.max_evaluations:
            candidates = strategy.propose(state, rng)
            candidates = candidates[: config.max_evaluations - used]
            values = evaluate(candidates)
            used += len(values)
            if observer is not None:
                observer(candidates, values)
            strategy.select(state, candidates, values)
            cand_x, cand_f = _best_of(candidates, values)
            if cand_f > best_f:
                best_x, best_f = cand_x, cand_f
            trace.best_fitness_by_generation.append(best_f)
            trace.evaluations_by_generation.append(used)
    finally:
        evaluate.close()
    trace.evaluations_used = used
    trace.wall_time = time.perf_counter() - start
    return best_x, trace


def _best_of(points: np.ndarray, values: np.ndarray) -> tuple[np.ndarray, float]:
    i = int(np.argmax(values))
    return points[i].copy(), float(values[i])


def check_positive(name: str, value: float, allow_zero: bool = True) -> None:
    if not math.isfinite(value) or value < 0 or (value == 0 and not allow_zero):
        raise ConfigError(f"{name} must be {'>= 0' if allow_zero else '> 0'}, got {value}")
