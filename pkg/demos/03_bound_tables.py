"""Closed-form |a2|, |a3| bounds across classes and Ma-Minda families."""

from bicoeff.classbounds import ClassSpec, bounds_for
from bicoeff.maminda import parse_phi

families = ["beta:0", "beta:0.25", "beta:0.5", "alpha:0.5", "alpha:1", "janowski:1,0"]
classes = [ClassSpec("r_sigma", 1.0), ClassSpec("sstar_sigma"), ClassSpec("k_sigma"),
           ClassSpec("mixed_k_r"), ClassSpec("mixed_sstar_r"), ClassSpec("mixed_sstar_k")]

# %% a2 bound per class (rows) and family (columns)
print(f"{'class':15s}" + "".join(f"{f:>14s}" for f in families))
for spec in classes:
    vals = []
    for text in families:
        phi = parse_phi(text)
        vals.append(bounds_for(spec, phi.B1, phi.B2).a2_bound)
    print(f"{spec.kind:15s}" + "".join(f"{v:14.6f}" for v in vals))

# %% which branch of the bi-starlike a2 bound is active along the order-beta family
for b in (0.0, 0.25, 0.5, 0.75):
    phi = parse_phi(f"beta:{b}")
    rep = bounds_for(ClassSpec("sstar_sigma"), phi.B1, phi.B2)
    active = min(rep.a2_branches, key=rep.a2_branches.get)
    print(f"beta={b:<5} a2 <= {rep.a2_bound:.6f} via {active}")
