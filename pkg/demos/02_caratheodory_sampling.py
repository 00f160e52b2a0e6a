"""Caratheodory coefficients, Schwarz coefficients and the tight (p1, p2) body."""

import numpy as np

from bicoeff.schwarz import (
    CaratheodoryCoeffs,
    caratheodory_from_schwarz,
    sample_caratheodory_batch,
    schwarz_from_caratheodory,
    tight_feasible,
)

# %% one extreme point: p(z) = (1 + x z)/(1 - x z) maps to r(z) = x z
x = np.exp(0.4j)
p = CaratheodoryCoeffs((2 * x, 2 * x**2, 2 * x**3))
print("r from single atom:", np.round(schwarz_from_caratheodory(p).r, 12))
print("round trip:", np.allclose(caratheodory_from_schwarz(schwarz_from_caratheodory(p)).p, p.p))

# %% Herglotz mixtures fill the tight body; the box |p2| <= 2 is strictly larger
s = sample_caratheodory_batch(50_000, atoms=3, K=2, seed=1)
print("all samples tight-feasible:", bool(tight_feasible(s[:, 0], s[:, 1]).all()))

rng = np.random.default_rng(0)
box = 2 * np.sqrt(rng.uniform(size=(50_000, 2))) * np.exp(2j * np.pi * rng.uniform(size=(50_000, 2)))
share = tight_feasible(box[:, 0], box[:, 1]).mean()
print(f"share of uniform box points that are tight-feasible: {share:.3f}")

# %% distance of |p2 - p1^2/2| from its upper limit 2 - |p1|^2/2 along samples
slack = (2 - np.abs(s[:, 0]) ** 2 / 2) - np.abs(s[:, 1] - s[:, 0] ** 2 / 2)
print("min slack", slack.min().round(12), "median slack", np.median(slack).round(4))
