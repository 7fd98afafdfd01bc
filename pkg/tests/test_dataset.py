import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from narm.dataset import Dataset, Kind, coverage, load_csv, load_schema
from narm.errors import FormatError
from narm.rule import CategoricalCondition, NumericCondition, Rule


def write(tmp_path, text, name="d.csv"):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_load_infers_kinds_and_bounds(tmp_path):
    ds = load_csv(write(tmp_path, "x,y\n1.0,a\n2.0,b\n3.0,a\n"))
    x, y = ds.attributes
    assert x.kind is Kind.NUMERIC and (x.min, x.max) == (1.0, 3.0)
    assert y.kind is Kind.CATEGORICAL and y.categories == ("a", "b")
    assert ds.n_transactions == 3
    assert ds.transactions == [[1.0, "a"], [2.0, "b"], [3.0, "a"]]


def test_non_numeric_cell_demotes_column(tmp_path):
    ds = load_csv(write(tmp_path, "x,y\n1,0\n2,0\nx,0\n"))
    assert ds.attributes[0].kind is Kind.CATEGORICAL
    assert ds.attributes[0].categories == ("1", "2", "x")
    assert ds.attributes[1].kind is Kind.NUMERIC


def test_headerless_names(tmp_path):
    ds = load_csv(write(tmp_path, "1,2\n3,4\n"), header=False)
    assert ds.names == ["x0", "x1"]
    assert ds.n_transactions == 2


@pytest.mark.parametrize(
    "text",
    [
        "x\n1\n2\n",  # single column
        "",  # empty
        "x,y\n",  # header only
        "x,y\n1,2\n3\n",  # ragged
        "x,y\n1,\n3,4\n",  # blank cell
    ],
)
def test_format_errors(tmp_path, text):
    with pytest.raises(FormatError):
        load_csv(write(tmp_path, text))


def test_missing_file_raises_oserror(tmp_path):
    with pytest.raises(OSError):
        load_csv(tmp_path / "missing.csv")


def test_schema_override(tmp_path):
    schema = load_schema(write(tmp_path, "x,categorical\ny,numeric\n", "s.txt"))
    ds = load_csv(write(tmp_path, "x,y\n1,2\n3,4\n"), schema=schema)
    assert ds.attributes[0].kind is Kind.CATEGORICAL
    assert ds.attributes[0].categories == ("1", "3")
    with pytest.raises(FormatError):
        load_csv(write(tmp_path, "x,y\n1,a\n3,b\n"), schema=schema)
    with pytest.raises(FormatError):
        load_schema(write(tmp_path, "x,weird\n", "bad.txt"))


def test_coverage_full_domain_covers_everything(small_dataset):
    a, b = small_dataset.attributes[:2]
    rule = Rule((NumericCondition(0, a.min, a.max),), (NumericCondition(1, b.min, b.max),))
    c = coverage(small_dataset, rule)
    assert c.antecedent_count == c.consequent_count == c.both_count == 4


def test_coverage_hand_counted(small_dataset):
    # a in [2, 3] matches rows 2 and 3; colour=blue matches rows 2 and 3
    rule = Rule((NumericCondition(0, 2.0, 3.0),), (CategoricalCondition(2, 1),))
    c = coverage(small_dataset, rule)
    assert (c.antecedent_count, c.both_count, c.consequent_count) == (2, 2, 2)


def test_coverage_point_interval_between_values():
    ds = Dataset.from_columns(["a", "b"], [[1.0, 3.0], [0.0, 1.0]])
    rule = Rule((NumericCondition(0, 2.0, 2.0),), (NumericCondition(1, 0.0, 1.0),))
    assert coverage(ds, rule).antecedent_count == 0


def test_coverage_bad_index(small_dataset):
    rule = Rule((NumericCondition(7, 0.0, 1.0),), (NumericCondition(0, 1.0, 2.0),))
    with pytest.raises(IndexError):
        coverage(small_dataset, rule)


def test_dataset_is_immutable(small_dataset):
    with pytest.raises(ValueError):
        small_dataset.columns[0][0] = 99.0


def test_fingerprint_stable_and_sensitive():
    a = Dataset.from_columns(["x", "y"], [[1.0, 2.0], [3.0, 4.0]])
    b = Dataset.from_columns(["x", "y"], [[1.0, 2.0], [3.0, 4.0]])
    c = Dataset.from_columns(["x", "y"], [[1.0, 2.0], [3.0, 5.0]])
    assert a.fingerprint() == b.fingerprint() != c.fingerprint()


def test_csv_round_trip(tmp_path, small_dataset):
    path = tmp_path / "out.csv"
    small_dataset.to_csv(path)
    back = load_csv(path)
    assert back.fingerprint() == small_dataset.fingerprint()


@st.composite
def dataset_and_rule(draw):
    m = draw(st.integers(1, 8))
    cols = [draw(st.lists(st.integers(0, 4), min_size=m, max_size=m)) for _ in range(2)]
    ds = Dataset.from_columns(["a", "b"], [[float(v) for v in c] for c in cols])

    def interval(j):
        attr = ds.attributes[j]
        lo = draw(st.floats(attr.min, attr.max))
        hi = draw(st.floats(lo, attr.max))
        return NumericCondition(j, lo, hi)

    return ds, Rule((interval(0),), (interval(1),))


@settings(max_examples=200, deadline=None)
@given(dataset_and_rule())
def test_coverage_count_relations(case):
    ds, rule = case
    c = coverage(ds, rule)
    assert 0 <= c.both_count <= min(c.antecedent_count, c.consequent_count) <= ds.n_transactions
    assert coverage(ds, rule) == c


@settings(max_examples=200, deadline=None)
@given(dataset_and_rule(), st.floats(0, 2), st.floats(0, 2))
def test_widening_antecedent_is_monotone(case, grow_lo, grow_hi):
    ds, rule = case
    attr = ds.attributes[0]
    cond = rule.antecedent[0]
    wider = NumericCondition(0, max(attr.min, cond.lb - grow_lo), min(attr.max, cond.ub + grow_hi))
    before = coverage(ds, rule)
    after = coverage(ds, Rule((wider,), rule.consequent))
    assert after.antecedent_count >= before.antecedent_count
    assert after.both_count >= before.both_count
