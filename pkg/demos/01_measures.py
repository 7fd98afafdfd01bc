"""Scoring a hand-written rule on a tiny table.

We build a six-row dataset, write the rule "temperature in [18, 24]
implies humidity in [40, 60]" by hand and look at every quality measure.
The interestingness measure comes in two readings; both are shown.
"""

from narm import Dataset, NumericCondition, Rule, coverage, evaluate, format_rule

ds = Dataset.from_columns(
    ["temperature", "humidity", "season"],
    [
        [17.0, 19.5, 22.0, 23.5, 26.0, 21.0],
        [55.0, 45.0, 50.0, 58.0, 70.0, 35.0],
        ["spring", "spring", "summer", "summer", "summer", "autumn"],
    ],
)
print(f"{ds.n_transactions} rows, attributes: {', '.join(ds.names)}\n")

rule = Rule(
    antecedent=(NumericCondition(0, 18.0, 24.0),),
    consequent=(NumericCondition(1, 40.0, 60.0),),
)

# Coverage counts are the raw material for support, confidence and interestingness.
counts = coverage(ds, rule)
print(f"rows matching the antecedent: {counts.antecedent_count}")
print(f"rows matching the consequent: {counts.consequent_count}")
print(f"rows matching both sides:     {counts.both_count}\n")

for variant in ("normalized", "literal"):
    metrics = evaluate(rule, ds, variant)
    print(f"[{variant}] {format_rule(rule, ds, metrics)}")

# Narrowing the humidity interval raises amplitude but loses a matching row.
narrow = Rule(rule.antecedent, (NumericCondition(1, 44.0, 52.0),))
print(f"\nnarrower consequent: {format_rule(narrow, ds, evaluate(narrow, ds))}")
