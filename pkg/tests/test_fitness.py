import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from narm.errors import ConfigError, DimensionError
from narm.fitness import (
    InsertResult,
    Objective,
    ObjectiveVector,
    ParetoArchive,
    crowding_distance,
    dominates,
    parse_objectives,
    weighted_sum,
)
from narm.rule import Metrics
from oracles import brute_nondominated

IDS2 = ("support", "confidence")


def vec(*values, ids=None):
    return ObjectiveVector(values, ids or tuple(f"f{i}" for i in range(len(values))))


def test_weighted_sum_examples():
    assert weighted_sum(vec(0.4, 0.8), (0.5, 0.5)) == pytest.approx(0.6)
    assert weighted_sum(vec(0.3, 0.9, 0.1), (1, 0, 0)) == 0.3
    assert weighted_sum(vec(0.3, 0.9), (0, 0)) == 0.0
    with pytest.raises(DimensionError):
        weighted_sum(vec(0.3, 0.9), (1,))
    with pytest.raises(ConfigError):
        weighted_sum(vec(0.3, 0.9), (1, -1))


def test_weighted_sum_linearity(rng):
    for _ in range(50):
        v1, v2, w1, w2 = rng.random((4, 3))
        a, b = rng.random(2)
        assert weighted_sum(v1, a * w1 + b * w2) == pytest.approx(a * weighted_sum(v1, w1) + b * weighted_sum(v1, w2))
        assert weighted_sum(a * v1 + b * v2, w1) == pytest.approx(a * weighted_sum(v1, w1) + b * weighted_sum(v2, w1))


def test_dominates_examples():
    assert dominates(vec(0.9, 0.9), vec(0.5, 0.9))
    assert not dominates(vec(0.9, 0.1), vec(0.1, 0.9))
    assert not dominates(vec(0.1, 0.9), vec(0.9, 0.1))
    assert not dominates(vec(0.5, 0.5), vec(0.5, 0.5))
    with pytest.raises(DimensionError):
        dominates(vec(1, 2), vec(1, 2, 3))
    with pytest.raises(DimensionError):
        dominates(vec(1, 2, ids=("a", "b")), vec(1, 2, ids=("a", "c")))


vectors = st.lists(st.sampled_from([0.0, 0.5, 1.0]), min_size=3, max_size=3)


@settings(max_examples=300)
@given(vectors, vectors, vectors)
def test_dominance_is_strict_partial_order(a, b, c):
    assert not dominates(a, a)
    if dominates(a, b):
        assert not dominates(b, a)
        if dominates(b, c):
            assert dominates(a, c)


def test_objective_parsing():
    objs = parse_objectives("support, 0.5*interestingness+0.5*comprehensibility")
    assert [o.name for o in objs] == ["support", "0.5*interestingness+0.5*comprehensibility"]
    m = Metrics(0.2, 0.4, 0.6, 0.8, 1.0)
    assert objs[1].value(m) == pytest.approx(0.7)
    for bad in ("", "lift", "support,,confidence", "-1*support", "2*"):
        with pytest.raises(ConfigError):
            parse_objectives(bad)


def test_archive_examples():
    arc = ParetoArchive(IDS2)
    assert arc.insert("r1", vec(0.5, 0.5, ids=IDS2)) is InsertResult.INSERTED
    assert len(arc) == 1
    assert arc.insert("r2", vec(0.4, 0.5, ids=IDS2)) is InsertResult.DOMINATED
    assert arc.insert("r1", vec(0.5, 0.5, ids=IDS2)) is InsertResult.DUPLICATE
    assert arc.insert("r3", vec(0.9, 0.9, ids=IDS2)) is InsertResult.INSERTED
    assert [item for item, _ in arc.entries] == ["r3"]
    with pytest.raises(DimensionError):
        arc.insert("r4", vec(0.9, 0.9))


def test_archive_equal_points_distinct_rules_both_kept():
    arc = ParetoArchive(IDS2)
    arc.insert("a", vec(1.0, 1.0, ids=IDS2))
    assert arc.insert("b", vec(1.0, 1.0, ids=IDS2)) is InsertResult.INSERTED
    assert len(arc) == 2


def test_crowding_distance_boundaries():
    pts = np.array([[0.0, 1.0], [0.5, 0.5], [0.6, 0.4], [1.0, 0.0]])
    d = crowding_distance(pts)
    assert np.isinf(d[0]) and np.isinf(d[3])
    assert d[2] < d[1]


def test_capacity_evicts_most_crowded_keeps_extremes():
    ids = ("f0", "f1")
    arc = ParetoArchive(ids, capacity=3)
    for name, p in [("a", (0.0, 1.0)), ("b", (1.0, 0.0)), ("c", (0.5, 0.5)), ("d", (0.52, 0.48))]:
        arc.insert(name, vec(*p, ids=ids))
    names = {item for item, _ in arc.entries}
    assert len(arc) == 3 and {"a", "b"} <= names


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5)), min_size=1, max_size=40))
def test_archive_matches_brute_force(points):
    arc = ParetoArchive(("a", "b", "c"), capacity=None)
    for i, p in enumerate(points):
        arc.insert(i, vec(*p, ids=("a", "b", "c")))
    expected = {i for i in brute_nondominated(points)}
    got = {i for i, _ in arc.entries}
    assert got == expected
    for i, a in arc.entries:
        for j, b in arc.entries:
            assert not dominates(a, b)


def test_archive_exports(tmp_path):
    arc = ParetoArchive(IDS2)
    arc.insert("r1", vec(0.5, 0.7, ids=IDS2))
    arc.insert("r2", vec(0.7, 0.5, ids=IDS2))
    arc.to_json(tmp_path / "a.json", describe=lambda s: {"rule": s})
    data = json.loads((tmp_path / "a.json").read_text())
    assert data["objective_ids"] == list(IDS2)
    assert data["entries"][0] == {"rule": "r1", "objectives": {"support": 0.5, "confidence": 0.7}}
    arc.to_csv(tmp_path / "a.csv", describe=str)
    lines = (tmp_path / "a.csv").read_text().splitlines()
    assert lines == ["rule,support,confidence", "r1,0.5,0.7", "r2,0.7,0.5"]
