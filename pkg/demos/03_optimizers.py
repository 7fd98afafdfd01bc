"""The three swarm optimizers on a known landscape.

Before trusting an optimizer with rule mining it is worth watching it
climb something whose optimum we know: a negated quadratic bowl in five
dimensions with its peak (value 0) at a fixed point inside the box.
"""

import numpy as np

from narm.optimizers import Algorithm, OptimizerConfig, SearchSpace, run

centre = np.array([0.3, 0.6, 0.45, 0.7, 0.2])


def bowl(x):
    return -float(np.sum((x - centre) ** 2))


for algorithm in Algorithm:
    config = OptimizerConfig(population_size=20, max_evaluations=10_000, seed=0, algorithm=algorithm)
    best, trace = run(SearchSpace(5), bowl, config)
    curve = trace.best_fitness_by_generation
    checkpoints = [curve[i] for i in (0, len(curve) // 10, len(curve) // 2, -1)]
    print(f"{algorithm.value:5s} best {curve[-1]: .2e} after {trace.evaluations_used} evaluations")
    print(f"      progress: {'  '.join(f'{v: .1e}' for v in checkpoints)}")
    print(f"      distance to optimum: {np.linalg.norm(best - centre):.1e}")

# A run depends only on its seed; the thread count only changes scheduling.
config = OptimizerConfig(20, 2_000, seed=7, algorithm="bat")
a, _ = run(SearchSpace(5), bowl, config)
b, _ = run(SearchSpace(5), bowl, config, threads=4)
print(f"\nsame seed, 1 vs 4 threads, identical result: {np.array_equal(a, b)}")
