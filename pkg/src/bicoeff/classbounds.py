"""Closed-form |a2| and |a3| bounds for the bi-univalent classes.

Every bound takes ``(B1, B2)`` directly so arbitrary coefficient pairs can
be probed, not only catalogued Ma-Minda families.  A :class:`BoundReport`
keeps each expression entering a ``min`` next to the minimum itself.

Classes (``ClassSpec.kind``):

``r_sigma``        (1 - lam) f/z + lam f' and the same for F subordinate to phi
``sstar_sigma``    z f'/f and w F'/F subordinate to phi
``k_sigma``        1 + z f''/f' and 1 + w F''/F' subordinate to phi
``mixed_k_r``      f convex-type, F' subordinate to phi
``mixed_sstar_r``  f starlike-type, F' subordinate to phi
``mixed_sstar_k``  f starlike-type, F convex-type
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ValidationError

KINDS = ("r_sigma", "sstar_sigma", "k_sigma", "mixed_k_r", "mixed_sstar_r", "mixed_sstar_k")
MIXED = ("mixed_k_r", "mixed_sstar_r", "mixed_sstar_k")


@dataclass(frozen=True)
class ClassSpec:
    kind: str
    lam: float = 0.0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValidationError(f"unknown class {self.kind!r}; expected one of {KINDS}")
        if self.kind == "r_sigma" and not (self.lam >= 0):
            raise ValidationError(f"lambda must be >= 0, got {self.lam}")


@dataclass(frozen=True)
class BoundReport:
    """Bounds with the individual branch values they minimize over.

    ``a2_bound``/``a3_bound`` are ``None`` when no bound is claimed.
    """

    a2_bound: float | None
    a3_bound: float | None
    a2_branches: dict[str, float] = field(default_factory=dict)
    a3_branches: dict[str, float] = field(default_factory=dict)
    R_value: float | None = None

    def __post_init__(self):
        for bound, branches in ((self.a2_bound, self.a2_branches),
                                (self.a3_bound, self.a3_branches)):
            if bound is not None and bound != min(branches.values()):
                raise ValueError("bound is not the minimum of its branches")


def _check_B1(B1: float) -> None:
    if not (B1 > 0):
        raise ValidationError(f"B1 must be > 0, got {B1}")


def _T(B1: float, B2: float) -> float:
    return B1 + abs(B2 - B1)


def bound_r_sigma(lam: float, B1: float, B2: float) -> BoundReport:
    """|a2| <= sqrt((B1 + |B1 - B2|)/(1 + 2 lam)); no |a3| bound is claimed."""
    _check_B1(B1)
    if not (lam >= 0):
        raise ValidationError(f"lambda must be >= 0, got {lam}")
    a2 = math.sqrt(_T(B1, B2) / (1 + 2 * lam))
    return BoundReport(a2, None, {"sqrt(T/(1+2lam))": a2})


def sstar_R(B1: float, B2: float) -> float:
    """Keogh-Merkes bound on |a3| for the bi-starlike class."""
    return 0.25 * (B1 + 3 * B1 * max(1.0, abs((B1 - 4 * B2) / (3 * B1))))


def bound_sstar_sigma(B1: float, B2: float) -> BoundReport:
    _check_B1(B1)
    d = abs(B2 - B1)
    a2 = {
        "sqrt(B1+|B2-B1|)": math.sqrt(B1 + d),
        "sqrt((B1^2+B1+|B2-B1|)/2)": math.sqrt((B1 * B1 + B1 + d) / 2),
        "B1*sqrt(B1)/sqrt(B1^2+|B1-B2|)": B1 * math.sqrt(B1) / math.sqrt(B1 * B1 + d),
    }
    R = sstar_R(B1, B2)
    a3 = {
        "B1+|B2-B1|": B1 + d,
        "(B1^2+B1+|B2-B1|)/2": (B1 * B1 + B1 + d) / 2,
        "R": R,
    }
    return BoundReport(min(a2.values()), min(a3.values()), a2, a3, R)


def bound_k_sigma(B1: float, B2: float) -> BoundReport:
    _check_B1(B1)
    s = (B1 * B1 + B1 + abs(B2 - B1)) / 6
    a2 = {"sqrt((B1^2+B1+|B2-B1|)/6)": math.sqrt(s), "B1/2": B1 / 2}
    a3 = {"(B1^2+B1+|B2-B1|)/6": s, "B1(3B1+2)/12": B1 * (3 * B1 + 2) / 12}
    return BoundReport(min(a2.values()), min(a3.values()), a2, a3)


def bound_mixed(kind: str, B1: float, B2: float) -> BoundReport:
    """Bounds for the mixed hypotheses, all functions of ``T = B1 + |B2 - B1|``."""
    _check_B1(B1)
    T = _T(B1, B2)
    if kind == "mixed_k_r":
        a2, a3 = ("sqrt(3T/8)", math.sqrt(3 * T / 8)), ("5T/12", 5 * T / 12)
    elif kind == "mixed_sstar_r":
        a2, a3 = ("sqrt(5T)/3", math.sqrt(5 * T) / 3), ("7T/9", 7 * T / 9)
    elif kind == "mixed_sstar_k":
        a2, a3 = ("sqrt(T/2)", math.sqrt(T / 2)), ("T/2", T / 2)
    else:
        raise ValidationError(f"not a mixed class: {kind!r}")
    return BoundReport(a2[1], a3[1], dict([a2]), dict([a3]))


def bounds_for(spec: ClassSpec, B1: float, B2: float) -> BoundReport:
    if spec.kind == "r_sigma":
        return bound_r_sigma(spec.lam, B1, B2)
    if spec.kind == "sstar_sigma":
        return bound_sstar_sigma(B1, B2)
    if spec.kind == "k_sigma":
        return bound_k_sigma(B1, B2)
    return bound_mixed(spec.kind, B1, B2)


def sstar_discrepancies(B1: float, B2: float) -> dict[str, float]:
    """Printed vs rederived forms of two bi-starlike branches.

    ``a2_branch3_derived`` is the box maximum of
    ``4(B1^2 - B2 + B1) a2^2 = B1^3 (p2 + q2)``, i.e.
    ``sqrt(B1^3/|B1^2 + B1 - B2|)`` (``inf`` where the left factor vanishes).
    ``a3_branch2_derived`` is the term-wise triangle bound of the printed
    ``16 a3 = 2 B1^2 q1^2 + 4 B2 p2 + (B1 - B2)(p1^2 + q1^2)``.
    """
    _check_B1(B1)
    den = abs(B1 * B1 + B1 - B2)
    return {
        "a2_branch3_printed": B1 * math.sqrt(B1) / math.sqrt(B1 * B1 + abs(B1 - B2)),
        "a2_branch3_derived": math.sqrt(B1**3 / den) if den > 0 else math.inf,
        "a3_branch2_printed": (B1 * B1 + B1 + abs(B2 - B1)) / 2,
        "a3_branch2_derived": (B1 * B1 + abs(B2) + abs(B1 - B2)) / 2,
    }
