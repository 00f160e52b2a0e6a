"""Coefficient equations, functionals and the extremal verifier."""

from .functionals import (
    CLASS_FUNCTIONALS,
    FUNCTIONAL_IDS,
    TRIANGLE_IDS,
    FunctionalId,
    QuadraticForm,
    functional_value,
    keogh_merkes_bound,
    printed_bound,
    quadratic_form,
    sstar_keogh_merkes_v,
)
from .search import ExtremalResult, alignment_maximum, circle_max, maximize_functional
from .system import (
    ClassCoefficients,
    JointSample,
    SideOperator,
    class_operators,
    q1_ratio,
    sample_consistent_pairs,
    solve_class_coefficients,
    subordination_expand,
)

__all__ = [
    "CLASS_FUNCTIONALS",
    "FUNCTIONAL_IDS",
    "TRIANGLE_IDS",
    "ClassCoefficients",
    "ExtremalResult",
    "alignment_maximum",
    "FunctionalId",
    "JointSample",
    "QuadraticForm",
    "SideOperator",
    "circle_max",
    "class_operators",
    "functional_value",
    "keogh_merkes_bound",
    "maximize_functional",
    "printed_bound",
    "q1_ratio",
    "quadratic_form",
    "sample_consistent_pairs",
    "solve_class_coefficients",
    "sstar_keogh_merkes_v",
    "subordination_expand",
]
