"""Genotype to rule decoders.

Every scheme maps a real vector in the unit box onto a :class:`Rule`.
Decoding is total: any vector in ``[0, 1]^d`` yields either a rule or an
infeasibility reason, never an exception.

Schemes
-------
triplet
    ``(role, a, b)`` per attribute. ``role <= 1/3`` puts the attribute in
    the antecedent, ``1/3 < role <= 2/3`` in the consequent, otherwise it
    is left out. The interval is ``[min(a, b), max(a, b)]`` scaled to the
    attribute domain.
aeav
    ``(existence, a, b)`` per attribute. ``existence <= 0.5`` includes the
    attribute; the included attribute with the largest existence value
    becomes the consequent, the others the antecedent.
gaussian
    ``(role, centre, spread)`` per attribute, interval ``centre +/- spread``
    clipped to the domain (``spread`` is the half-width as a fraction of
    half the domain).
cutpoint
    ``(cut, p_1, ..., p_n)``: each ``p_i`` selects attribute
    ``floor(p_i * (n + 1)) - 1`` (or nothing when the index is 0), repeats
    are dropped, and ``cut`` decides how many of the selected attributes
    go to the antecedent. Numeric attributes get their full domain.

For categorical attributes the first value component (``a``, ``centre``,
or the fractional part of ``p_i`` for cutpoint) picks a category by
uniform binning.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from .dataset import Attribute, Dataset
from .errors import DimensionError
from .rule import CategoricalCondition, Condition, NumericCondition, Rule


class Scheme(str, Enum):
    TRIPLET = "triplet"
    AEAV = "aeav"
    GAUSSIAN = "gaussian"
    CUTPOINT = "cutpoint"


class Reason(str, Enum):
    OK = "ok"
    EMPTY_ANTECEDENT = "empty_antecedent"
    EMPTY_CONSEQUENT = "empty_consequent"


class Role(Enum):
    ANTECEDENT = "A"
    CONSEQUENT = "C"
    ABSENT = "N"


@dataclass(frozen=True)
class DecodeOutcome:
    rule: Rule | None
    reason: Reason

    @property
    def ok(self) -> bool:
        return self.reason is Reason.OK


def dimension(scheme: Scheme | str, n_attributes: int) -> int:
    scheme = Scheme(scheme)
    if scheme is Scheme.CUTPOINT:
        return n_attributes + 1
    return 3 * n_attributes


def acn_role(value: float) -> Role:
    if value <= 1 / 3:
        return Role.ANTECEDENT
    if value <= 2 / 3:
        return Role.CONSEQUENT
    return Role.ABSENT


def _scale(attr: Attribute, u: float) -> float:
    # clamp so that u=0/1 hit the observed extrema exactly despite rounding
    if u <= 0.0:
        return attr.min
    if u >= 1.0:
        return attr.max
    return min(attr.max, max(attr.min, attr.min + u * attr.range))


def _category(attr: Attribute, u: float) -> int:
    k = len(attr.categories)
    return min(k - 1, max(0, int(np.floor(u * k))))


def interval_condition(j: int, attr: Attribute, a: float, b: float) -> Condition:
    """Condition from two unit-interval components (swapped if out of order)."""
    if not attr.is_numeric:
        return CategoricalCondition(j, _category(attr, a))
    lo, hi = (a, b) if a <= b else (b, a)
    return NumericCondition(j, _scale(attr, lo), _scale(attr, hi))


def gaussian_condition(j: int, attr: Attribute, centre: float, spread: float) -> Condition:
    if not attr.is_numeric:
        return CategoricalCondition(j, _category(attr, centre))
    c = _scale(attr, centre)
    h = min(max(spread, 0.0), 1.0) * attr.range / 2
    return NumericCondition(j, max(attr.min, c - h), min(attr.max, c + h))


def _check(g, expected: int, scheme: Scheme) -> np.ndarray:
    g = np.asarray(g, dtype=np.float64)
    if g.ndim != 1 or g.shape[0] != expected:
        raise DimensionError(f"{scheme.value} genotype needs length {expected}, got {g.shape}")
    return g


def _outcome(antecedent: list[Condition], consequent: list[Condition]) -> DecodeOutcome:
    if not antecedent:
        return DecodeOutcome(None, Reason.EMPTY_ANTECEDENT)
    if not consequent:
        return DecodeOutcome(None, Reason.EMPTY_CONSEQUENT)
    return DecodeOutcome(Rule(tuple(antecedent), tuple(consequent)), Reason.OK)


def _decode_roles(g: np.ndarray, dataset: Dataset, make: Callable) -> DecodeOutcome:
    ante, cons = [], []
    for j, attr in enumerate(dataset.attributes):
        role = acn_role(g[3 * j])
        if role is Role.ABSENT:
            continue
        cond = make(j, attr, g[3 * j + 1], g[3 * j + 2])
        (ante if role is Role.ANTECEDENT else cons).append(cond)
    return _outcome(ante, cons)


def decode_triplet(g, dataset: Dataset) -> DecodeOutcome:
    g = _check(g, 3 * dataset.n_attributes, Scheme.TRIPLET)
    return _decode_roles(g, dataset, interval_condition)


def decode_gaussian(g, dataset: Dataset) -> DecodeOutcome:
    g = _check(g, 3 * dataset.n_attributes, Scheme.GAUSSIAN)
    return _decode_roles(g, dataset, gaussian_condition)


def decode_ae_av(g, dataset: Dataset) -> DecodeOutcome:
    g = _check(g, 3 * dataset.n_attributes, Scheme.AEAV)
    included = [j for j in range(dataset.n_attributes) if g[3 * j] <= 0.5]
    if len(included) < 2:
        return DecodeOutcome(None, Reason.EMPTY_ANTECEDENT)
    # ties go to the lowest attribute index
    head = max(included, key=lambda j: (g[3 * j], -j))
    ante, cons = [], []
    for j in included:
        cond = interval_condition(j, dataset.attributes[j], g[3 * j + 1], g[3 * j + 2])
        (cons if j == head else ante).append(cond)
    return _outcome(ante, cons)


def decode_cutpoint(g, dataset: Dataset) -> DecodeOutcome:
    n = dataset.n_attributes
    g = _check(g, n + 1, Scheme.CUTPOINT)
    selected: list[tuple[int, float]] = []
    seen = set()
    for u in g[1:]:
        pos = u * (n + 1)
        idx = min(n, max(0, int(np.floor(pos))))
        if idx == 0 or idx in seen:
            continue
        seen.add(idx)
        # fractional remainder drives the category choice
        selected.append((idx - 1, min(1.0, max(0.0, pos - idx))))
    k = len(selected)
    if k < 2:
        return DecodeOutcome(None, Reason.EMPTY_ANTECEDENT if k == 0 else Reason.EMPTY_CONSEQUENT)
    cut = 1 + min(k - 2, int(np.floor(g[0] * (k - 1))))
    conds = []
    for j, frac in selected:
        attr = dataset.attributes[j]
        if attr.is_numeric:
            conds.append(NumericCondition(j, attr.min, attr.max))
        else:
            conds.append(CategoricalCondition(j, _category(attr, frac)))
    return _outcome(conds[:cut], conds[cut:])


DECODERS: dict[Scheme, Callable[[np.ndarray, Dataset], DecodeOutcome]] = {
    Scheme.TRIPLET: decode_triplet,
    Scheme.AEAV: decode_ae_av,
    Scheme.GAUSSIAN: decode_gaussian,
    Scheme.CUTPOINT: decode_cutpoint,
}


def decode(scheme: Scheme | str, g, dataset: Dataset) -> DecodeOutcome:
    return DECODERS[Scheme(scheme)](g, dataset)
