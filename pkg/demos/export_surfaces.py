"""Export operator surfaces as deterministic CSV for external plotting.

Writes the incomparable pair from the ordering demos (xy/2 against the
nilpotent Yager t-norm) plus one parametric subnorm, then spot-checks the
rows. The same files come out of `subnorms surface <spec> --resolution N`.
"""

import csv
import pathlib

import numpy as np

from subnorms import FamilySpec, make_family, yager_fixture
from subnorms.cli import main

out_dir = pathlib.Path("surface_data")
out_dir.mkdir(exist_ok=True)

jobs = [
    ("half_product", "half_product.csv"),
    ("yager:l=2", "yager2.csv"),
    ("dombi:a=0.6,l=2", "dombi.csv"),
]

for spec, name in jobs:
    path = out_dir / name
    code = main(["surface", spec, "--resolution", "41", "--out", str(path)])
    assert code == 0
    print(f"wrote {path} ({path.stat().st_size} bytes)")

with open(out_dir / "yager2.csv") as fh:
    rows = list(csv.DictReader(fh))
zero = sum(1 for r in rows if float(r["z"]) == 0.0)
print(f"\nYager(2): {zero}/{len(rows)} grid points in the zero region "
      "(where (1-x)^2 + (1-y)^2 >= 1)")

S = make_family(FamilySpec("half_product"))
T = yager_fixture(2.0)
pts = np.array([[0.3, 0.3], [1.0, 1.0]])
for x, y in pts:
    print(f"xy/2 vs yager at ({x:g}, {y:g}): {S(x, y):.4f} vs {T(x, y):.4f}")
print("-> neither surface stays above the other: the pair is incomparable")
