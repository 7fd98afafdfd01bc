"""Transaction tables with typed attributes and rule coverage counting."""

from __future__ import annotations

import csv
import hashlib
import math
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Sequence

import numpy as np

from .errors import FormatError

if TYPE_CHECKING:
    from .rule import Condition, Rule


class Kind(str, Enum):
    NUMERIC = "numeric"
    CATEGORICAL = "categorical"


@dataclass(frozen=True)
class Attribute:
    """One column of the table.

    Numeric attributes carry observed ``min``/``max``; categorical ones an
    ordered tuple of distinct category labels.
    """

    name: str
    kind: Kind
    min: float = 0.0
    max: float = 0.0
    categories: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind is Kind.NUMERIC:
            if not (math.isfinite(self.min) and math.isfinite(self.max)):
                raise ValueError(f"attribute {self.name!r}: bounds must be finite")
            if self.min > self.max:
                raise ValueError(f"attribute {self.name!r}: min > max")
        else:
            if not self.categories:
                raise ValueError(f"attribute {self.name!r}: no categories")
            if len(set(self.categories)) != len(self.categories):
                raise ValueError(f"attribute {self.name!r}: duplicate categories")

    @property
    def is_numeric(self) -> bool:
        return self.kind is Kind.NUMERIC

    @property
    def range(self) -> float:
        return self.max - self.min


@dataclass(frozen=True)
class CoverageCounts:
    antecedent_count: int
    both_count: int
    consequent_count: int


@dataclass(frozen=True, eq=False)
class Dataset:
    """Immutable in-memory transaction table.

    Columns are stored as numpy arrays: float64 values for numeric
    attributes, int64 category codes (indices into
    ``Attribute.categories``) for categorical ones.
    """

    attributes: tuple[Attribute, ...]
    columns: tuple[np.ndarray, ...] = field(repr=False)

    def __post_init__(self):
        if len(self.attributes) != len(self.columns):
            raise FormatError("attribute/column count mismatch")
        if not self.columns:
            raise FormatError("dataset has no attributes")
        m = len(self.columns[0])
        if m < 1:
            raise FormatError("dataset has no transactions")
        for attr, col in zip(self.attributes, self.columns):
            if len(col) != m:
                raise FormatError(f"column {attr.name!r} has {len(col)} rows, expected {m}")
            col.setflags(write=False)

    @classmethod
    def from_columns(cls, names: Sequence[str], columns: Sequence[Sequence]) -> "Dataset":
        """Build a dataset from raw columns, inferring kinds and bounds.

        A column whose values are all finite reals becomes numeric; any
        other column is categorical with labels in first-occurrence order.
        """
        attrs, cols = [], []
        for name, values in zip(names, columns, strict=True):
            numeric = _as_numeric(values)
            if numeric is not None:
                attrs.append(Attribute(name, Kind.NUMERIC, float(numeric.min()), float(numeric.max())))
                cols.append(numeric)
            else:
                attr, codes = _categorical(name, [str(v) for v in values])
                attrs.append(attr)
                cols.append(codes)
        return cls(tuple(attrs), tuple(cols))

    @property
    def n_transactions(self) -> int:
        return len(self.columns[0])

    @property
    def n_attributes(self) -> int:
        return len(self.attributes)

    @property
    def names(self) -> list[str]:
        return [a.name for a in self.attributes]

    def index_of(self, name: str) -> int:
        for i, a in enumerate(self.attributes):
            if a.name == name:
                return i
        raise KeyError(name)

    @property
    def transactions(self) -> list[list]:
        """Rows as Python lists (categorical cells as their labels)."""
        decoded = []
        for attr, col in zip(self.attributes, self.columns):
            if attr.is_numeric:
                decoded.append(col.tolist())
            else:
                decoded.append([attr.categories[c] for c in col])
        return [list(row) for row in zip(*decoded)]

    def fingerprint(self) -> str:
        """SHA-256 over attribute schema and cell contents."""
        h = hashlib.sha256()
        for attr, col in zip(self.attributes, self.columns):
            h.update(attr.name.encode())
            h.update(attr.kind.value.encode())
            h.update("\x1f".join(attr.categories).encode())
            h.update(np.ascontiguousarray(col).tobytes())
        return h.hexdigest()

    def to_csv(self, path: str | Path, header: bool = True) -> None:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            if header:
                writer.writerow(self.names)
            for row in self.transactions:
                writer.writerow([repr(v) if isinstance(v, float) else v for v in row])


def _as_numeric(values: Iterable) -> np.ndarray | None:
    out = []
    for v in values:
        if isinstance(v, str):
            try:
                x = float(v)
            except ValueError:
                return None
        elif isinstance(v, (int, float, np.integer, np.floating)) and not isinstance(v, bool):
            x = float(v)
        else:
            return None
        if not math.isfinite(x):
            return None
        out.append(x)
    return np.asarray(out, dtype=np.float64)


def _categorical(name: str, labels: list[str]) -> tuple[Attribute, np.ndarray]:
    order: dict[str, int] = {}
    codes = np.empty(len(labels), dtype=np.int64)
    for i, lab in enumerate(labels):
        codes[i] = order.setdefault(lab, len(order))
    return Attribute(name, Kind.CATEGORICAL, categories=tuple(order)), codes


def load_schema(path: str | Path) -> list[tuple[str, Kind]]:
    """Read a ``name,kind`` override file (one line per column)."""
    schema = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            parts = [p.strip() for p in line.split(",")]
            if len(parts) != 2:
                raise FormatError(f"{path}:{lineno}: expected 'name,kind'")
            try:
                kind = Kind(parts[1].lower())
            except ValueError:
                raise FormatError(f"{path}:{lineno}: unknown kind {parts[1]!r}") from None
            schema.append((parts[0], kind))
    return schema


def load_csv(
    path: str | Path,
    header: bool = True,
    schema: Sequence[tuple[str, Kind]] | None = None,
) -> Dataset:
    """Load a comma-separated file into a :class:`Dataset`.

    Column kinds are inferred unless ``schema`` is given. Blank cells,
    ragged rows and files without data raise :class:`FormatError`;
    unreadable files propagate ``OSError``.
    """
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [[c.strip() for c in r] for r in csv.reader(fh) if r]

    if header:
        if not rows:
            raise FormatError(f"{path}: empty file")
        names, rows = rows[0], rows[1:]
    else:
        names = [f"x{j}" for j in range(len(rows[0]))] if rows else []
    if not rows:
        raise FormatError(f"{path}: no data rows")
    width = len(names)
    if width < 2:
        raise FormatError(f"{path}: need at least 2 columns, found {width}")
    for lineno, row in enumerate(rows, 2 if header else 1):
        if len(row) != width:
            raise FormatError(f"{path}:{lineno}: expected {width} cells, found {len(row)}")
        if any(c == "" for c in row):
            raise FormatError(f"{path}:{lineno}: blank cell (missing values are unsupported)")

    columns = [list(col) for col in zip(*rows)]
    if schema is None:
        return Dataset.from_columns(names, columns)

    if [s[0] for s in schema] != list(names):
        raise FormatError(f"schema columns {[s[0] for s in schema]} do not match header {names}")
    attrs, cols = [], []
    for (name, kind), values in zip(schema, columns):
        if kind is Kind.NUMERIC:
            arr = _as_numeric(values)
            if arr is None:
                raise FormatError(f"column {name!r} declared numeric but has non-numeric cells")
            attrs.append(Attribute(name, kind, float(arr.min()), float(arr.max())))
            cols.append(arr)
        else:
            attr, codes = _categorical(name, values)
            attrs.append(attr)
            cols.append(codes)
    return Dataset(tuple(attrs), tuple(cols))


def condition_mask(dataset: Dataset, cond: "Condition") -> np.ndarray:
    """Boolean mask of transactions satisfying a single condition."""
    idx = cond.attribute_index
    if not 0 <= idx < dataset.n_attributes:
        raise IndexError(f"attribute index {idx} out of range for {dataset.n_attributes} attributes")
    col = dataset.columns[idx]
    if cond.is_numeric:
        if not dataset.attributes[idx].is_numeric:
            raise ValueError(f"numeric condition on categorical attribute {idx}")
        return (col >= cond.lb) & (col <= cond.ub)
    if dataset.attributes[idx].is_numeric:
        raise ValueError(f"categorical condition on numeric attribute {idx}")
    return col == cond.category_index


def _side_mask(dataset: Dataset, conds: Sequence["Condition"]) -> np.ndarray:
    mask = np.ones(dataset.n_transactions, dtype=bool)
    for c in conds:
        mask &= condition_mask(dataset, c)
    return mask


def coverage(dataset: Dataset, rule: "Rule") -> CoverageCounts:
    """Count transactions matching the antecedent, consequent, and both.

    Numeric intervals are closed on both ends; categorical conditions
    match by exact category.
    """
    ante = _side_mask(dataset, rule.antecedent)
    cons = _side_mask(dataset, rule.consequent)
    return CoverageCounts(
        antecedent_count=int(ante.sum()),
        both_count=int((ante & cons).sum()),
        consequent_count=int(cons.sum()),
    )
