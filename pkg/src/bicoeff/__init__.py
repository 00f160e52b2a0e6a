"""Initial-coefficient bounds for bi-univalent function classes.

Closed-form |a2|, |a3| bounds for classes defined by subordination to a
Ma-Minda function, together with an independent numerical verifier that
maximizes the underlying coefficient functionals over Caratheodory
coefficient constraints.
"""

from .classbounds import (
    BoundReport,
    ClassSpec,
    bound_k_sigma,
    bound_mixed,
    bound_r_sigma,
    bound_sstar_sigma,
    bounds_for,
)
from .coeffsystem import (
    ExtremalResult,
    FunctionalId,
    functional_value,
    maximize_functional,
    solve_class_coefficients,
    subordination_expand,
)
from .maminda import MaMindaPhi, parse_phi, phi_coefficients
from .powerseries import PowerSeries, ps_compose, ps_mul, ps_revert
from .schwarz import (
    CaratheodoryCoeffs,
    SchwarzCoeffs,
    caratheodory_from_schwarz,
    sample_caratheodory,
    schwarz_from_caratheodory,
    validate_caratheodory,
)

__version__ = "0.1.0"
