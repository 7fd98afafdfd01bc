"""Mining a dataset with a rule hidden in it.

generate_planted writes a table where a0 in [0, 0.5] usually implies
a1 in [0.5, 1]. We mine it with a weighted objective, then look at
where the planted rule lands among the results. The answer is a useful
warning: an interval spanning a whole attribute is satisfied by every
row, so support and confidence alone reward near-trivial rules over the
planted one.
"""

from narm import (
    MiningConfig,
    ObjectiveVector,
    OptimizerConfig,
    evaluate,
    format_rule,
    generate_planted,
    mine,
    weighted_sum,
)

ds, truth = generate_planted(n_attributes=4, m=1000, planted_frequency=0.6, seed=0)
print(f"planted: {format_rule(truth, ds, evaluate(truth, ds))}\n")

config = MiningConfig(
    optimizer=OptimizerConfig(population_size=30, max_evaluations=5000, seed=0, algorithm="acor"),
    scheme="triplet",
    objectives="support,confidence,amplitude",
    mode="weighted",
    weights=(1.0, 1.0, 0.5),
    min_support=0.3,
    min_confidence=0.8,
)
rules = mine(ds, config)
print(f"{len(rules)} distinct rules pass support >= 0.3 and confidence >= 0.8; top five:")
for (rule, metrics), score in list(zip(rules, rules.scores))[:5]:
    print(f"  {score:.3f}  {format_rule(rule, ds, metrics)}")

same_shape = [
    (rule, m) for rule, m in rules
    if rule.antecedent_attributes() == truth.antecedent_attributes()
    and rule.consequent_attributes() == truth.consequent_attributes()
]
print(f"\nrules over the planted attributes a0 => a1: {len(same_shape)}")
if same_shape:
    rule, metrics = same_shape[0]
    print(f"  best of them: {format_rule(rule, ds, metrics)}")

planted_score = weighted_sum(ObjectiveVector.from_metrics(evaluate(truth, ds), config.objectives), config.weights)
beaten = sum(score > planted_score for score in rules.scores)
print(f"planted rule would score {planted_score:.3f}; {beaten} mined rules score higher")
