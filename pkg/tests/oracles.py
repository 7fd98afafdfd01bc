"""Straight-line reference implementations used as test oracles.

Nothing here imports the measure or archive code under test; rules are
checked row by row against plain Python lists.
"""

import math


def holds(cond, row, categories):
    """cond: ('num', j, lb, ub) or ('cat', j, label)."""
    if cond[0] == "num":
        _, j, lb, ub = cond
        return lb <= row[j] <= ub
    _, j, label = cond
    return row[j] == label


def brute_measures(rows, antecedent, consequent, variant="normalized"):
    m = len(rows)
    n_x = n_y = n_xy = 0
    for row in rows:
        x = all(holds(c, row, None) for c in antecedent)
        y = all(holds(c, row, None) for c in consequent)
        n_x += x
        n_y += y
        n_xy += x and y
    supp = n_xy / m
    conf = n_xy / n_x if n_x else 0.0
    comp = math.log(1 + len(consequent)) / math.log(1 + len(antecedent) + len(consequent))
    if n_x == 0 or n_y == 0:
        inter = 0.0
    else:
        last = 1 - supp if variant == "normalized" else 1 - supp / m
        inter = (supp / (n_y / m)) * (supp / (n_x / m)) * last
    widths = []
    for c in antecedent + consequent:
        if c[0] == "cat":
            widths.append(0.0)
            continue
        col = [r[c[1]] for r in rows]
        span = max(col) - min(col)
        widths.append(0.0 if span == 0 else (c[3] - c[2]) / span)
    ampl = 1 - sum(widths) / len(widths)
    return {
        "support": supp,
        "confidence": conf,
        "comprehensibility": comp,
        "interestingness": inter,
        "amplitude": ampl,
        "counts": (n_x, n_xy, n_y),
    }


def brute_nondominated(points):
    """Indices of points no other point dominates (all objectives maximized)."""
    keep = []
    for i, p in enumerate(points):
        dominated = False
        for j, q in enumerate(points):
            if i == j:
                continue
            no_worse = all(qk >= pk for qk, pk in zip(q, p))
            better = any(qk > pk for qk, pk in zip(q, p))
            if no_worse and better:
                dominated = True
                break
        if not dominated:
            keep.append(i)
    return keep
