"""Association rules and their quality measures.

A rule ``X => Y`` is a pair of condition lists. Five measures are
provided: support, confidence, comprehensibility, interestingness and
amplitude. All of them are maximized.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Sequence, Union

from .dataset import CoverageCounts, Dataset, coverage
from .errors import FormatError

MEASURES = ("support", "confidence", "comprehensibility", "interestingness", "amplitude")
INTERESTINGNESS_VARIANTS = ("normalized", "literal")


@dataclass(frozen=True)
class NumericCondition:
    attribute_index: int
    lb: float
    ub: float

    is_numeric = True

    def __post_init__(self):
        if not self.lb <= self.ub:
            raise ValueError(f"interval [{self.lb}, {self.ub}] has lb > ub")


@dataclass(frozen=True)
class CategoricalCondition:
    attribute_index: int
    category_index: int

    is_numeric = False

    def __post_init__(self):
        if self.category_index < 0:
            raise ValueError("negative category index")


Condition = Union[NumericCondition, CategoricalCondition]


@dataclass(frozen=True)
class Rule:
    antecedent: tuple[Condition, ...]
    consequent: tuple[Condition, ...]

    def __post_init__(self):
        object.__setattr__(self, "antecedent", tuple(self.antecedent))
        object.__setattr__(self, "consequent", tuple(self.consequent))
        if not self.antecedent or not self.consequent:
            raise ValueError("rule needs a non-empty antecedent and consequent")
        seen = [c.attribute_index for c in self.conditions]
        if len(seen) != len(set(seen)):
            raise ValueError(f"attribute used more than once: {seen}")

    @property
    def conditions(self) -> tuple[Condition, ...]:
        return self.antecedent + self.consequent

    def antecedent_attributes(self) -> frozenset[int]:
        return frozenset(c.attribute_index for c in self.antecedent)

    def consequent_attributes(self) -> frozenset[int]:
        return frozenset(c.attribute_index for c in self.consequent)

    def validate(self, dataset: Dataset) -> None:
        """Raise ``ValueError``/``IndexError`` unless every condition fits the dataset."""
        for c in self.conditions:
            if not 0 <= c.attribute_index < dataset.n_attributes:
                raise IndexError(f"attribute index {c.attribute_index} out of range")
            attr = dataset.attributes[c.attribute_index]
            if c.is_numeric != attr.is_numeric:
                raise ValueError(f"condition kind does not match attribute {attr.name!r}")
            if c.is_numeric:
                if c.lb < attr.min or c.ub > attr.max:
                    raise ValueError(
                        f"interval [{c.lb}, {c.ub}] outside domain [{attr.min}, {attr.max}] of {attr.name!r}"
                    )
            elif c.category_index >= len(attr.categories):
                raise ValueError(f"category index {c.category_index} out of range for {attr.name!r}")


@dataclass(frozen=True)
class Metrics:
    support: float
    confidence: float
    comprehensibility: float
    interestingness: float
    amplitude: float

    def as_dict(self) -> dict[str, float]:
        return asdict(self)

    def __getitem__(self, name: str) -> float:
        return getattr(self, name)


def support(counts: CoverageCounts, m: int) -> float:
    return counts.both_count / m


def confidence(counts: CoverageCounts) -> float:
    """Fraction of antecedent matches that also match the consequent (0 if none match)."""
    if counts.antecedent_count == 0:
        return 0.0
    return counts.both_count / counts.antecedent_count


def comprehensibility(rule: Rule) -> float:
    """``log(1 + |consequent|) / log(1 + |all conditions|)``, by condition count."""
    return math.log1p(len(rule.consequent)) / math.log1p(len(rule.conditions))


def interestingness(counts: CoverageCounts, m: int, variant: str = "normalized") -> float:
    """Product of the two conditional ratios and a rarity term.

    ``"normalized"`` uses ``1 - supp`` as the last factor; ``"literal"``
    uses ``1 - supp / m``.
    """
    if counts.antecedent_count == 0 or counts.consequent_count == 0:
        return 0.0
    s_xy = counts.both_count / m
    s_x = counts.antecedent_count / m
    s_y = counts.consequent_count / m
    if variant == "normalized":
        rarity = 1.0 - s_xy
    elif variant == "literal":
        rarity = 1.0 - s_xy / m
    else:
        raise ValueError(f"unknown interestingness variant {variant!r}")
    return (s_xy / s_y) * (s_xy / s_x) * rarity


def width_ratio(cond: Condition, dataset: Dataset) -> float:
    if not cond.is_numeric:
        return 0.0
    attr = dataset.attributes[cond.attribute_index]
    if attr.range == 0:
        return 0.0
    return (cond.ub - cond.lb) / attr.range


def amplitude(rule: Rule, dataset: Dataset) -> float:
    """One minus the mean relative interval width over all conditions."""
    conds = rule.conditions
    return 1.0 - sum(width_ratio(c, dataset) for c in conds) / len(conds)


def evaluate(rule: Rule, dataset: Dataset, variant: str = "normalized") -> Metrics:
    counts = coverage(dataset, rule)
    m = dataset.n_transactions
    return Metrics(
        support=support(counts, m),
        confidence=confidence(counts),
        comprehensibility=comprehensibility(rule),
        interestingness=interestingness(counts, m, variant),
        amplitude=amplitude(rule, dataset),
    )


# --- serialization ---------------------------------------------------------


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def format_condition(cond: Condition, dataset: Dataset) -> str:
    attr = dataset.attributes[cond.attribute_index]
    if cond.is_numeric:
        return f"{attr.name}∈[{_fmt(cond.lb)},{_fmt(cond.ub)}]"
    return f"{attr.name}={attr.categories[cond.category_index]}"


def format_rule(rule: Rule, dataset: Dataset, metrics: Metrics | None = None) -> str:
    """Human-readable one-line form ``A: ... => C: ... | supp=..., ...``."""
    ante = ", ".join(format_condition(c, dataset) for c in rule.antecedent)
    cons = ", ".join(format_condition(c, dataset) for c in rule.consequent)
    line = f"A: {ante} => C: {cons}"
    if metrics is not None:
        line += (
            f" | supp={metrics.support:.4f}, conf={metrics.confidence:.4f},"
            f" comp={metrics.comprehensibility:.4f}, int={metrics.interestingness:.4f},"
            f" ampl={metrics.amplitude:.4f}"
        )
    return line


def canonical_key(rule: Rule) -> str:
    """Dedup key: conditions sorted by attribute, endpoints rounded to 6 decimals."""

    def side(conds: Sequence[Condition]) -> str:
        parts = []
        for c in sorted(conds, key=lambda c: c.attribute_index):
            if c.is_numeric:
                parts.append(f"{c.attribute_index}:[{round(c.lb, 6):.6f},{round(c.ub, 6):.6f}]")
            else:
                parts.append(f"{c.attribute_index}:={c.category_index}")
        return ";".join(parts)

    return f"{side(rule.antecedent)}=>{side(rule.consequent)}"


def condition_to_dict(cond: Condition, dataset: Dataset) -> dict:
    attr = dataset.attributes[cond.attribute_index]
    if cond.is_numeric:
        return {"attribute": attr.name, "type": "numeric", "lb": cond.lb, "ub": cond.ub}
    return {"attribute": attr.name, "type": "categorical", "value": attr.categories[cond.category_index]}


def rule_to_dict(rule: Rule, dataset: Dataset, metrics: Metrics | None = None) -> dict:
    record = {
        "antecedent": [condition_to_dict(c, dataset) for c in rule.antecedent],
        "consequent": [condition_to_dict(c, dataset) for c in rule.consequent],
        "text": format_rule(rule, dataset),
    }
    if metrics is not None:
        record["metrics"] = metrics.as_dict()
    return record


def condition_from_dict(record: dict, dataset: Dataset, where: str = "") -> Condition:
    if not isinstance(record, dict):
        raise FormatError(f"{where}: condition must be an object")
    name = record.get("attribute")
    try:
        idx = dataset.index_of(name)
    except KeyError:
        raise FormatError(f"{where}.attribute: unknown attribute {name!r}") from None
    attr = dataset.attributes[idx]
    kind = record.get("type")
    if kind == "numeric":
        if not attr.is_numeric:
            raise FormatError(f"{where}.type: attribute {name!r} is categorical")
        try:
            lb, ub = float(record["lb"]), float(record["ub"])
            return NumericCondition(idx, lb, ub)
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"{where}: bad interval ({exc})") from None
    if kind == "categorical":
        if attr.is_numeric:
            raise FormatError(f"{where}.type: attribute {name!r} is numeric")
        value = str(record.get("value"))
        if value not in attr.categories:
            raise FormatError(f"{where}.value: unknown category {value!r} for {name!r}")
        return CategoricalCondition(idx, attr.categories.index(value))
    raise FormatError(f"{where}.type: expected 'numeric' or 'categorical', got {kind!r}")


def rule_from_dict(record: dict, dataset: Dataset, where: str = "rule") -> Rule:
    if not isinstance(record, dict):
        raise FormatError(f"{where}: rule must be an object")
    sides = []
    for side in ("antecedent", "consequent"):
        conds = record.get(side)
        if not isinstance(conds, list):
            raise FormatError(f"{where}.{side}: expected a list")
        sides.append([condition_from_dict(c, dataset, f"{where}.{side}[{i}]") for i, c in enumerate(conds)])
    try:
        rule = Rule(tuple(sides[0]), tuple(sides[1]))
        rule.validate(dataset)
    except (ValueError, IndexError) as exc:
        raise FormatError(f"{where}: {exc}") from None
    return rule
