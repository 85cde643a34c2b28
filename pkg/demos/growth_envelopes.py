"""Asymptotic slopes and linear envelopes of composed generator maps.

For a dominated pair (S1 <= S2) the map h = s1 o s2^{-1} grows at most
linearly: its profile h(x)/x falls from the small-argument slope B to the
asymptotic slope A, and A*x <= h(x) <= B*x pins h between two lines.
"""

from subnorms import (
    FamilySpec,
    IntervalGrid,
    asymptotic_slope_A,
    compose,
    linear_envelope_check,
    make_family,
    section4_equivalences,
    small_slope_B,
)

grid = IntervalGrid.uniform(101)

pairs = [
    ("product vs hamacher0 (h = ln(u+1))",
     make_family(FamilySpec("product")),
     make_family(FamilySpec("hamacher0"))),
    ("rational a=0.5 vs a=0.7 (h = (3u+2)/5)",
     make_family(FamilySpec("rational", {"a": 0.5})),
     make_family(FamilySpec("rational", {"a": 0.7}))),
]

for title, S1, S2 in pairs:
    m = compose(S1.generator, S2.generator)
    A = asymptotic_slope_A(m, grid)
    B = small_slope_B(m, grid)
    print(title)
    print(f"  A = {A.value:.6g} ({A.note}), sample inf of h(x)/x = "
          f"{A.sample_infimum:.6g}")
    print(f"  B = {B.value:.6g} ({B.note})")
    env = linear_envelope_check(m, max(A.value, 0.0), B.value, grid)
    print(f"  envelope A*x <= h <= B*x: {env.verdict}")
    out = section4_equivalences(m, grid, pair=(S1, S2))
    for key, rep in out.items():
        print(f"  {key}: {rep.verdict} ({rep.notes})")
    print()
