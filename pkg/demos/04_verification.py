"""Numerical check of the bounds: functional maxima and joint samples."""

import numpy as np

from bicoeff.classbounds import ClassSpec, bound_sstar_sigma
from bicoeff.coeffsystem import (
    maximize_functional,
    printed_bound,
    sample_consistent_pairs,
)

# %% box maxima of the functionals behind the convex/starlike mixed bound
for fid in ("eq7", "eq8"):
    res = maximize_functional(fid, B1=2.0, B2=2.0, budget=20_000, seed=7)
    print(fid, "max", round(res.max_modulus, 9), "bound", round(printed_bound(fid, 0, 2, 2), 9),
          "sources", {k: round(v, 6) for k, v in res.sources.items()})

# %% when B2 < B1 two q1^2 terms partly cancel and the term-wise value is not reached
res = maximize_functional("eq19_1", B1=1.0, B2=-0.5, budget=20_000)
print("eq19_1 at (1, -0.5): max", round(res.max_modulus, 6),
      "term-wise value", printed_bound("eq19_1", 0, 1.0, -0.5))

# %% realized |a2| from pairs satisfying all four class relations
for B1, B2 in ((2.0, 2.0), (1.2, 2.0)):
    s = sample_consistent_pairs(ClassSpec("sstar_sigma"), B1, B2, 50_000, seed=0)
    rep = bound_sstar_sigma(B1, B2)
    print(f"(B1, B2)=({B1}, {B2}): max |a2| {np.abs(s.a2).max():.4f}, "
          f"bound {rep.a2_bound:.4f}, branches "
          + ", ".join(f"{v:.4f}" for v in rep.a2_branches.values()))
