"""Pareto mode: keeping trade-offs instead of one score.

With several objectives there is rarely a single best rule. Pareto mode
keeps the non-dominated archive found during the search. Note what
happens with support and confidence alone: a rule spanning every
attribute's full range scores 1 on both, so it dominates everything.
Adding amplitude (narrow intervals) brings back a real front.
"""

from narm import MiningConfig, OptimizerConfig, format_rule, generate_planted, mine

ds, _ = generate_planted(n_attributes=4, m=500, planted_frequency=0.6, seed=2)

for objectives in ("support,confidence", "support,confidence,amplitude"):
    config = MiningConfig(
        optimizer=OptimizerConfig(population_size=30, max_evaluations=6000, seed=1, algorithm="pso"),
        objectives=objectives,
        mode="pareto",
        archive_capacity=20,
    )
    front = mine(ds, config)
    print(f"== objectives {objectives}: {len(front)} non-dominated rules")
    for rule, metrics in front.rules[:6]:
        print(f"   {format_rule(rule, ds, metrics)}")
    print()
