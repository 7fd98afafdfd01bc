"""Mining runs: wire decoding, measures and fitness into an optimizer."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .dataset import Dataset
from .encoding import Scheme, decode, dimension
from .errors import ConfigError
from .fitness import Objective, ObjectiveVector, ParetoArchive, parse_objectives, weighted_sum
from .optimizers import OptimizerConfig, RunTrace, SearchSpace, run
from .rule import INTERESTINGNESS_VARIANTS, Metrics, NumericCondition, Rule, canonical_key, evaluate, rule_to_dict


class MoMode(str, Enum):
    WEIGHTED = "weighted"
    PARETO = "pareto"


@dataclass(frozen=True)
class MiningConfig:
    """Everything a mining run needs besides the data.

    In Pareto mode ``weights`` is optional; it only shapes the scalar the
    optimizer climbs (equal weights by default), while the archive keeps
    the full front.
    """

    optimizer: OptimizerConfig
    scheme: Scheme = Scheme.TRIPLET
    objectives: tuple[Objective, ...] = field(default_factory=lambda: parse_objectives("support,confidence"))
    mode: MoMode = MoMode.WEIGHTED
    weights: tuple[float, ...] | None = None
    min_support: float = 0.0
    min_confidence: float = 0.0
    interestingness: str = "normalized"
    archive_capacity: int | None = 100

    def __post_init__(self):
        object.__setattr__(self, "scheme", Scheme(self.scheme))
        object.__setattr__(self, "mode", MoMode(self.mode))
        if isinstance(self.objectives, str):
            object.__setattr__(self, "objectives", parse_objectives(self.objectives))
        object.__setattr__(self, "objectives", tuple(self.objectives))
        if not self.objectives:
            raise ConfigError("at least one objective is required")
        if self.weights is None:
            if self.mode is MoMode.WEIGHTED:
                raise ConfigError("weighted mode needs weights")
        else:
            object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))
            if len(self.weights) != len(self.objectives):
                raise ConfigError(f"{len(self.weights)} weights for {len(self.objectives)} objectives")
            if any(not np.isfinite(w) or w < 0 for w in self.weights):
                raise ConfigError("weights must be finite and non-negative")
        for name in ("min_support", "min_confidence"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ConfigError(f"{name} must lie in [0, 1]")
        if self.interestingness not in INTERESTINGNESS_VARIANTS:
            raise ConfigError(f"interestingness variant must be one of {INTERESTINGNESS_VARIANTS}")

    @property
    def objective_ids(self) -> tuple[str, ...]:
        return tuple(o.name for o in self.objectives)

    @property
    def driving_weights(self) -> tuple[float, ...]:
        if self.weights is not None:
            return self.weights
        return tuple(1.0 / len(self.objectives) for _ in self.objectives)

    def describe(self) -> dict:
        return {
            "algorithm": self.optimizer.algorithm.value,
            "encoding": self.scheme.value,
            "objectives": list(self.objective_ids),
            "mo": self.mode.value,
            "weights": None if self.weights is None else list(self.weights),
            "population_size": self.optimizer.population_size,
            "max_evaluations": self.optimizer.max_evaluations,
            "seed": self.optimizer.seed,
            "algorithm_params": dict(sorted(self.optimizer.algorithm_params.items())),
            "min_support": self.min_support,
            "min_confidence": self.min_confidence,
            "interestingness": self.interestingness,
            "archive_capacity": self.archive_capacity,
        }


@dataclass(frozen=True)
class Evaluation:
    rule: Rule
    metrics: Metrics
    objectives: ObjectiveVector
    score: float


@dataclass
class RuleSet:
    rules: list[tuple[Rule, Metrics]]
    provenance: dict
    scores: list[float] | None = None
    trace: RunTrace | None = field(default=None, repr=False)

    def __len__(self) -> int:
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def to_dict(self, dataset: Dataset) -> dict:
        records = []
        for i, (rule, metrics) in enumerate(self.rules):
            rec = rule_to_dict(rule, dataset, metrics)
            if self.scores is not None:
                rec["score"] = self.scores[i]
            records.append(rec)
        return {"provenance": self.provenance, "rules": records}

    def to_json(self, path: str | Path, dataset: Dataset) -> None:
        text = json.dumps(self.to_dict(dataset), indent=2, ensure_ascii=False)
        Path(path).write_text(text + "\n", encoding="utf-8")

    def to_csv(self, path: str | Path, dataset: Dataset) -> None:
        from .rule import MEASURES, format_condition

        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["antecedent", "consequent", *MEASURES])
            for rule, metrics in self.rules:
                writer.writerow(
                    [
                        " & ".join(format_condition(c, dataset) for c in rule.antecedent),
                        " & ".join(format_condition(c, dataset) for c in rule.consequent),
                        *(repr(metrics[m]) for m in MEASURES),
                    ]
                )


def dedup(rules: Iterable[tuple[Rule, Metrics]]) -> list[tuple[Rule, Metrics]]:
    """Collapse rules with the same canonical key, keeping the higher-support one.

    First-occurrence order is preserved.
    """
    kept: dict[str, tuple[Rule, Metrics]] = {}
    for rule, metrics in rules:
        key = canonical_key(rule)
        if key not in kept or metrics.support > kept[key][1].support:
            kept[key] = (rule, metrics)
    return list(kept.values())


class RuleEvaluator:
    """Pure genotype -> fitness map for one dataset and configuration.

    Infeasible decodes score 0. ``pending`` holds the latest
    :class:`Evaluation` per genotype so a sequential observer can pick
    them up after a (possibly threaded) batch.
    """

    def __init__(self, dataset: Dataset, config: MiningConfig):
        self.dataset = dataset
        self.config = config
        self.pending: dict[bytes, Evaluation | None] = {}

    def evaluate(self, g: np.ndarray) -> Evaluation | None:
        outcome = decode(self.config.scheme, g, self.dataset)
        if not outcome.ok:
            return None
        metrics = evaluate(outcome.rule, self.dataset, self.config.interestingness)
        objectives = ObjectiveVector.from_metrics(metrics, self.config.objectives)
        score = weighted_sum(objectives, self.config.driving_weights)
        return Evaluation(outcome.rule, metrics, objectives, score)

    def __call__(self, g: np.ndarray) -> float:
        result = self.evaluate(g)
        self.pending[g.tobytes()] = result
        return 0.0 if result is None else result.score

    def take(self, g: np.ndarray) -> Evaluation | None:
        key = g.tobytes()
        if key in self.pending:
            return self.pending.pop(key)
        return self.evaluate(g)


def _passes(metrics: Metrics, config: MiningConfig) -> bool:
    return metrics.support >= config.min_support and metrics.confidence >= config.min_confidence


def mine(dataset: Dataset, config: MiningConfig, threads: int = 1) -> RuleSet:
    """Run one mining search and return the harvested rules.

    Weighted mode keeps every distinct feasible rule evaluated during the
    run that meets the thresholds, ranked by weighted score. Pareto mode
    returns the final non-dominated archive, ranked by support then
    confidence.
    """
    if dataset.n_attributes < 2:
        raise ConfigError("mining needs at least 2 attributes")
    evaluator = RuleEvaluator(dataset, config)
    harvest: dict[str, Evaluation] = {}
    archive = ParetoArchive(config.objective_ids, config.archive_capacity, key=lambda ev: canonical_key(ev.rule))

    def observe(points: np.ndarray, values: np.ndarray) -> None:
        for g in points:
            ev = evaluator.take(g)
            if ev is None:
                continue
            if config.mode is MoMode.PARETO:
                archive.insert(ev, ev.objectives)
            elif _passes(ev.metrics, config):
                _remember(harvest, ev)

    space = SearchSpace(dimension(config.scheme, dataset.n_attributes))
    _, trace = run(space, evaluator, config.optimizer, threads=threads, observer=observe)

    if config.mode is MoMode.WEIGHTED:
        chosen = sorted(harvest.items(), key=lambda kv: (-kv[1].score, kv[0]))
        rules = [(ev.rule, ev.metrics) for _, ev in chosen]
        scores = [ev.score for _, ev in chosen]
    else:
        entries = [(canonical_key(ev.rule), ev) for ev, _ in archive.entries if _passes(ev.metrics, config)]
        entries.sort(key=lambda kv: (-kv[1].metrics.support, -kv[1].metrics.confidence, kv[0]))
        rules = [(ev.rule, ev.metrics) for _, ev in entries]
        scores = None

    provenance = {"config": config.describe(), "dataset_fingerprint": dataset.fingerprint()}
    return RuleSet(rules, provenance, scores, trace)


def _remember(harvest: dict[str, Evaluation], ev: Evaluation) -> None:
    key = canonical_key(ev.rule)
    old = harvest.get(key)
    if old is None or ev.metrics.support > old.metrics.support:
        harvest[key] = ev


def generate_planted(
    n_attributes: int,
    m: int,
    planted_frequency: float,
    seed: int,
    contamination: float = 0.1,
) -> tuple[Dataset, Rule]:
    """Synthetic numeric data with one planted implication.

    A ``planted_frequency`` share of the rows has ``a0`` in [0, 0.5] and
    ``a1`` in [0.5, 1]. Of the remaining rows, a ``contamination`` share
    are counter-examples (``a0`` in [0, 0.5], ``a1`` in [0, 0.5)); the rest
    have ``a0`` in (0.5, 1] and uniform ``a1``. Other attributes are
    uniform noise. Returns the dataset and the planted rule
    ``a0 in [0, 0.5] => a1 in [0.5, 1]`` clipped to the observed domains.
    """
    if n_attributes < 2:
        raise ConfigError("n_attributes must be >= 2")
    if m < 20:
        raise ConfigError("m must be >= 20")
    if not 0.0 < planted_frequency < 1.0:
        raise ConfigError("planted_frequency must lie in (0, 1)")
    if not 0.0 <= contamination <= 1.0:
        raise ConfigError("contamination must lie in [0, 1]")

    rng = np.random.default_rng(seed)
    data = rng.random((m, n_attributes))
    n_planted = int(round(planted_frequency * m))
    rest = m - n_planted
    n_counter = int(round(contamination * rest))
    kind = np.zeros(m, dtype=np.int64)  # 0 planted, 1 counter-example, 2 background
    kind[n_planted : n_planted + n_counter] = 1
    kind[n_planted + n_counter :] = 2
    kind = rng.permutation(kind)

    low_a0 = kind < 2
    data[low_a0, 0] = 0.5 * data[low_a0, 0]
    data[~low_a0, 0] = 1.0 - 0.5 * data[~low_a0, 0]  # (0.5, 1]
    data[kind == 0, 1] = 0.5 + 0.5 * data[kind == 0, 1]
    data[kind == 1, 1] = 0.5 * data[kind == 1, 1]

    dataset = Dataset.from_columns([f"a{j}" for j in range(n_attributes)], [data[:, j] for j in range(n_attributes)])
    a0, a1 = dataset.attributes[0], dataset.attributes[1]
    truth = Rule(
        (NumericCondition(0, max(a0.min, 0.0), min(a0.max, 0.5)),),
        (NumericCondition(1, max(a1.min, 0.5), min(a1.max, 1.0)),),
    )
    return dataset, truth


# Algorithm/encoding/objective pairings of the published methods.
PRESETS: dict[str, dict] = {
    "rpsoa": {
        "algorithm": "pso",
        "encoding": "aeav",
        "objectives": "support,confidence,amplitude",
        "mo": "weighted",
        "weights": (1.0, 1.0, 1.0),
    },
    "mopar": {
        "algorithm": "pso",
        "encoding": "triplet",
        "objectives": "confidence,interestingness,comprehensibility",
        "mo": "pareto",
        "weights": None,
    },
    "acor": {
        "algorithm": "acor",
        "encoding": "gaussian",
        "objectives": "support,confidence,interestingness,amplitude",
        "mo": "weighted",
        "weights": (1.0, 1.0, 1.0, 1.0),
    },
    "mob-arm": {
        "algorithm": "bat",
        "encoding": "cutpoint",
        "objectives": "0.5*support+0.5*confidence,0.5*interestingness+0.5*comprehensibility",
        "mo": "pareto",
        "weights": None,
    },
}


def preset_config(name: str, population_size: int = 30, max_evaluations: int = 5000, seed: int = 0) -> MiningConfig:
    try:
        p = PRESETS[name]
    except KeyError:
        raise ConfigError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}") from None
    return MiningConfig(
        optimizer=OptimizerConfig(population_size, max_evaluations, seed, p["algorithm"]),
        scheme=p["encoding"],
        objectives=parse_objectives(p["objectives"]),
        mode=p["mo"],
        weights=p["weights"],
    )


def with_seed(config: MiningConfig, seed: int) -> MiningConfig:
    return replace(config, optimizer=replace(config.optimizer, seed=seed))


def ruleset_from_records(records: Sequence[dict], dataset: Dataset) -> list[Rule]:
    from .rule import rule_from_dict

    return [rule_from_dict(r, dataset, f"rules[{i}]") for i, r in enumerate(records)]
