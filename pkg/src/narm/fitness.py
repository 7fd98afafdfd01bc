"""Objective aggregation: weighted sums, Pareto dominance, non-dominated archive."""

from __future__ import annotations

import csv
import json
import math
import re
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Hashable, Sequence

import numpy as np

from .errors import ConfigError, DimensionError
from .rule import MEASURES, Metrics


@dataclass(frozen=True)
class Objective:
    """A single maximized objective: one measure or a weighted group of measures.

    Grouped objectives let a multi-objective run pair measures, e.g.
    ``0.5*support+0.5*confidence`` as one axis of the front.
    """

    terms: tuple[tuple[str, float], ...]

    def __post_init__(self):
        if not self.terms:
            raise ConfigError("objective with no measures")
        for measure, weight in self.terms:
            if measure not in MEASURES:
                raise ConfigError(f"unknown measure {measure!r}; choose from {', '.join(MEASURES)}")
            if not (math.isfinite(weight) and weight >= 0):
                raise ConfigError(f"weight for {measure} must be finite and >= 0")

    @classmethod
    def single(cls, measure: str) -> "Objective":
        return cls(((measure, 1.0),))

    @property
    def name(self) -> str:
        if len(self.terms) == 1 and self.terms[0][1] == 1.0:
            return self.terms[0][0]
        return "+".join(f"{w:g}*{m}" for m, w in self.terms)

    def value(self, metrics: Metrics) -> float:
        return sum(w * metrics[m] for m, w in self.terms)


_TERM = re.compile(r"^\s*(?:([0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?)\s*\*\s*)?([a-z]+)\s*$")


def parse_objectives(text: str) -> tuple[Objective, ...]:
    """Parse ``"support,confidence"`` or ``"0.5*support+0.5*confidence,interestingness"``."""
    objectives = []
    for group in text.split(","):
        if not group.strip():
            raise ConfigError(f"empty objective in {text!r}")
        terms = []
        for term in group.split("+"):
            m = _TERM.match(term)
            if m is None:
                raise ConfigError(f"cannot parse objective term {term!r}")
            terms.append((m.group(2), float(m.group(1)) if m.group(1) else 1.0))
        objectives.append(Objective(tuple(terms)))
    return tuple(objectives)


@dataclass(frozen=True)
class ObjectiveVector:
    values: tuple[float, ...]
    objective_ids: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        object.__setattr__(self, "objective_ids", tuple(self.objective_ids))
        if len(self.values) != len(self.objective_ids):
            raise DimensionError("values and objective_ids differ in length")
        if not all(math.isfinite(v) for v in self.values):
            raise ValueError(f"non-finite objective value in {self.values}")

    @classmethod
    def from_metrics(cls, metrics: Metrics, objectives: Sequence[Objective]) -> "ObjectiveVector":
        return cls(tuple(o.value(metrics) for o in objectives), tuple(o.name for o in objectives))


def _values(v) -> np.ndarray:
    return np.asarray(v.values if isinstance(v, ObjectiveVector) else v, dtype=np.float64)


def weighted_sum(obj: ObjectiveVector | Sequence[float], weights: Sequence[float]) -> float:
    values = _values(obj)
    w = np.asarray(weights, dtype=np.float64)
    if w.shape != values.shape:
        raise DimensionError(f"{len(w)} weights for {len(values)} objectives")
    if np.any(w < 0):
        raise ConfigError("weights must be non-negative")
    return float(np.dot(w, values))


def dominates(a: ObjectiveVector | Sequence[float], b: ObjectiveVector | Sequence[float]) -> bool:
    """True if ``a`` is nowhere worse than ``b`` and strictly better somewhere."""
    if isinstance(a, ObjectiveVector) and isinstance(b, ObjectiveVector):
        if a.objective_ids != b.objective_ids:
            raise DimensionError(f"objective ids differ: {a.objective_ids} vs {b.objective_ids}")
    va, vb = _values(a), _values(b)
    if va.shape != vb.shape:
        raise DimensionError(f"cannot compare {va.shape} with {vb.shape}")
    return bool(np.all(va >= vb) and np.any(va > vb))


def crowding_distance(points: np.ndarray) -> np.ndarray:
    """Crowding distance of each row; extreme points in any objective get ``inf``."""
    n, m = points.shape
    dist = np.zeros(n)
    if n <= 2:
        dist[:] = np.inf
        return dist
    for k in range(m):
        order = np.argsort(points[:, k], kind="stable")
        col = points[order, k]
        dist[order[0]] = dist[order[-1]] = np.inf
        span = col[-1] - col[0]
        if span > 0:
            dist[order[1:-1]] += (col[2:] - col[:-2]) / span
    return dist


class InsertResult(str, Enum):
    INSERTED = "inserted"
    DOMINATED = "dominated"
    DUPLICATE = "duplicate"


class ParetoArchive:
    """Bounded set of mutually non-dominated ``(item, ObjectiveVector)`` entries.

    ``key`` maps an item to the identity used for duplicate detection
    (for rules, their canonical serialization). When the archive exceeds
    ``capacity`` the entry with the smallest crowding distance is evicted;
    boundary points are never evicted.
    """

    def __init__(
        self,
        objective_ids: Sequence[str],
        capacity: int | None = 100,
        key: Callable[[Any], Hashable] = repr,
    ):
        if capacity is not None and capacity < 1:
            raise ConfigError("archive capacity must be >= 1")
        self.objective_ids = tuple(objective_ids)
        self.capacity = capacity
        self.key = key
        self._items: list[Any] = []
        self._vectors: list[ObjectiveVector] = []
        self._keys: list[Hashable] = []
        self._points = np.empty((0, len(self.objective_ids)))

    def __len__(self) -> int:
        return len(self._items)

    @property
    def entries(self) -> list[tuple[Any, ObjectiveVector]]:
        return list(zip(self._items, self._vectors))

    @property
    def points(self) -> np.ndarray:
        return self._points.copy()

    def insert(self, item: Any, obj: ObjectiveVector) -> InsertResult:
        if obj.objective_ids != self.objective_ids:
            raise DimensionError(f"objective ids {obj.objective_ids} do not match archive {self.objective_ids}")
        p = np.asarray(obj.values)
        pts = self._points
        if len(pts):
            if np.any(np.all(pts >= p, axis=1) & np.any(pts > p, axis=1)):
                return InsertResult.DOMINATED
        k = self.key(item)
        if k in self._keys:
            return InsertResult.DUPLICATE
        if len(pts):
            keep = ~(np.all(p >= pts, axis=1) & np.any(p > pts, axis=1))
            if not keep.all():
                idx = np.flatnonzero(keep)
                self._items = [self._items[i] for i in idx]
                self._vectors = [self._vectors[i] for i in idx]
                self._keys = [self._keys[i] for i in idx]
                pts = pts[keep]
        self._items.append(item)
        self._vectors.append(obj)
        self._keys.append(k)
        self._points = np.vstack([pts, p[None, :]])
        if self.capacity is not None and len(self._items) > self.capacity:
            self._evict()
        return InsertResult.INSERTED

    def _evict(self) -> None:
        dist = crowding_distance(self._points)
        # first index among the minima keeps eviction deterministic
        i = int(np.argmin(dist))
        del self._items[i], self._vectors[i], self._keys[i]
        self._points = np.delete(self._points, i, axis=0)

    def to_records(self, describe: Callable[[Any], dict] | None = None) -> list[dict]:
        records = []
        for item, vec in self.entries:
            rec = describe(item) if describe else {"item": repr(item)}
            rec["objectives"] = dict(zip(vec.objective_ids, vec.values))
            records.append(rec)
        return records

    def to_json(self, path: str | Path, describe: Callable[[Any], dict] | None = None) -> None:
        payload = {"objective_ids": list(self.objective_ids), "entries": self.to_records(describe)}
        Path(path).write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")

    def to_csv(self, path: str | Path, describe: Callable[[Any], str] = repr) -> None:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["rule", *self.objective_ids])
            for item, vec in self.entries:
                writer.writerow([describe(item), *(repr(v) for v in vec.values)])

