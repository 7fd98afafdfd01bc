from .acor import AcoR, SolutionArchive, aco_r_sample, rank_weights
from .base import Algorithm, OptimizerConfig, RunTrace, SearchSpace, run
from .bat import BatAlgorithm, BatMove, BatState, bat_step
from .pso import ParticleSwarm, SwarmState, pso_step

__all__ = [
    "Algorithm",
    "AcoR",
    "BatAlgorithm",
    "BatMove",
    "BatState",
    "OptimizerConfig",
    "ParticleSwarm",
    "RunTrace",
    "SearchSpace",
    "SolutionArchive",
    "SwarmState",
    "aco_r_sample",
    "bat_step",
    "pso_step",
    "rank_weights",
    "run",
]
