"""Truncated power series and the inverse of a normalized function."""

import numpy as np

from bicoeff.powerseries import identity_series, normalized_series, ps_compose, ps_revert

# %% f(z) = z + a2 z^2 + a3 z^3 + a4 z^4, truncated at degree 8
a2, a3, a4 = 0.3, 0.2, 0.1
f = normalized_series([a2, a3, a4], order=8)
F = ps_revert(f)
print("inverse coefficients:", np.round(F.coeffs.real, 6))

# %% the first few inverse coefficients have closed forms
print("A2 = -a2        ", F.coeffs[2].real, -a2)
print("A3 = 2a2^2 - a3 ", F.coeffs[3].real, 2 * a2**2 - a3)
print("A4              ", F.coeffs[4].real, -(5 * a2**3 - 5 * a2 * a3 + a4))

# %% both compositions give back the identity up to rounding
for name, g in (("f(F(w))", ps_compose(f, F)), ("F(f(z))", ps_compose(F, f))):
    err = np.abs(g.coeffs - identity_series(8).coeffs).max()
    print(f"{name}: max deviation from identity {err:.1e}")

# %% Koebe function z/(1-z)^2 has inverse coefficients with alternating sign
koebe = normalized_series(np.arange(2, 9), order=8)
print("Koebe inverse:", np.round(ps_revert(koebe).coeffs.real, 3))
