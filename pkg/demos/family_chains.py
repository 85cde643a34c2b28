"""Order the one-parameter subnorm families into monotone chains.

Each scan fixes the family's shape parameter a, sweeps the exponent, lets
the grid oracle fix the direction of every adjacent pair, and then certifies
that pair with a named criterion.
"""

from subnorms import IntervalGrid, family_monotonicity_scan

grid = IntervalGrid.uniform(101)

runs = [
    ("dombi_sub", {"a": 0.6}, [0.5, 1.0, 2.0, 4.0], "concavity"),
    ("ss_sub", {"a": 0.5}, [-3.0, -2.0, -1.0], "derivative_ratio"),
    ("log_sub", {"a": 0.5}, [1.0, 2.0], "ratio"),
]

for family, fixed, lambdas, criterion in runs:
    scan = family_monotonicity_scan(family, fixed, lambdas, criterion, grid)
    print(f"{family} (fixed {fixed}), lambda in {lambdas}:")
    print(f"  chain: {scan['chain']} in lambda, certified by {criterion}")
    for step in scan["steps"]:
        la, lb = step["pair"]
        x, y, lhs, rhs = step["oracle"].witnesses[0]
        print(f"  {la:g} -> {lb:g}: oracle {step['oracle'].relation}, "
              f"criterion {step['criterion'].verdict}, "
              f"strict witness at ({x:.2f}, {y:.2f}): "
              f"|{lhs:.4f} - {rhs:.4f}| > 1e-6")
    print()
