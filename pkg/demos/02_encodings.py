"""From a real vector to a rule: the four genotype encodings.

An optimizer only ever sees points in the unit box. Each encoding turns
such a point into a rule over the dataset, or reports why it cannot
(empty antecedent or empty consequent). Here the same random draws are
pushed through every scheme.
"""

import numpy as np

from narm import Scheme, decode, dimension, generate_planted
from narm.rule import format_rule

ds, _ = generate_planted(n_attributes=4, m=200, planted_frequency=0.5, seed=1)
rng = np.random.default_rng(42)

for scheme in Scheme:
    d = dimension(scheme, ds.n_attributes)
    print(f"== {scheme.value}: genotype length {d}")
    for _ in range(3):
        g = rng.random(d)
        outcome = decode(scheme, g, ds)
        shown = format_rule(outcome.rule, ds) if outcome.ok else f"<infeasible: {outcome.reason.value}>"
        print(f"   {np.round(g, 2)} -> {shown}")
    # feasibility rate gives a feel for how much of the box is wasted
    ok = sum(decode(scheme, rng.random(d), ds).ok for _ in range(2000))
    print(f"   feasible share over 2000 draws: {ok / 2000:.2f}\n")
