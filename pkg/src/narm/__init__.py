"""Discretization-free numerical association rule mining with swarm optimizers."""

__version__ = "0.1.0"

from .dataset import Attribute, CoverageCounts, Dataset, Kind, coverage, load_csv, load_schema
from .encoding import DecodeOutcome, Reason, Scheme, decode, dimension
from .errors import ConfigError, DimensionError, EvaluationError, FormatError, NarmError
from .fitness import InsertResult, Objective, ObjectiveVector, ParetoArchive, dominates, parse_objectives, weighted_sum
from .miner import MiningConfig, MoMode, RuleSet, dedup, generate_planted, mine
from .optimizers import Algorithm, OptimizerConfig, RunTrace, SearchSpace, run
from .rule import CategoricalCondition, Metrics, NumericCondition, Rule, evaluate, format_rule

__all__ = [
    "Algorithm",
    "Attribute",
    "CategoricalCondition",
    "ConfigError",
    "CoverageCounts",
    "Dataset",
    "DecodeOutcome",
    "DimensionError",
    "EvaluationError",
    "FormatError",
    "InsertResult",
    "Kind",
    "Metrics",
    "MiningConfig",
    "MoMode",
    "NarmError",
    "NumericCondition",
    "Objective",
    "ObjectiveVector",
    "OptimizerConfig",
    "ParetoArchive",
    "Reason",
    "Rule",
    "RuleSet",
    "RunTrace",
    "Scheme",
    "SearchSpace",
    "coverage",
    "decode",
    "dimension",
    "dedup",
    "dominates",
    "evaluate",
    "format_rule",
    "generate_planted",
    "load_csv",
    "load_schema",
    "mine",
    "parse_objectives",
    "run",
    "weighted_sum",
]
