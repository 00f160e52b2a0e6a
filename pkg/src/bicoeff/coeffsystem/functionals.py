"""Coefficient functionals isolated in the bound derivations.

Each functional is a function of four complex numbers ``(p1, p2, q1, q2)``
and the real data ``(lam, B1, B2)``.  Every one of them has the shape::

    c_p2 * p2 + c_q2 * q2 + A * p1**2 + B * p1 * q1 + C * q1**2

which :func:`quadratic_form` recovers numerically; the extremal search
relies on that shape.

The ``a2`` functionals return ``a2**2``, the ``a3`` functionals return
``a3``; ``keogh_merkes`` returns ``p2 - v p1**2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from ..classbounds import (
    bound_k_sigma,
    bound_mixed,
    bound_r_sigma,
    bound_sstar_sigma,
)
from ..errors import ParameterError, ValidationError

FUNCTIONAL_IDS = (
    "eq17a", "eq19", "eq19_1", "eq19_10", "eq19_31", "eq19_33",
    "eq19_12", "eq19_32", "eq19_42", "eq7", "eq8", "teq7", "teq8",
    "te7", "te8", "keogh_merkes",
)

# Functionals whose printed bound follows from the triangle inequality alone.
TRIANGLE_IDS = ("eq17a", "eq19", "eq19_1", "eq19_12", "eq19_42",
                "eq7", "eq8", "teq7", "teq8", "te7", "te8")

_A2_SQUARED = {"eq17a", "eq19", "eq19_1", "eq19_10", "eq19_12", "eq7", "teq7", "te7"}


@dataclass(frozen=True)
class FunctionalId:
    """Functional identifier; ``v`` is used only by ``keogh_merkes``."""

    id: str
    v: complex = 0j

    def __post_init__(self):
        if self.id not in FUNCTIONAL_IDS:
            raise ParameterError(f"unknown functional {self.id!r}")
        object.__setattr__(self, "v", complex(self.v))

    @classmethod
    def parse(cls, text: str | FunctionalId) -> FunctionalId:
        """Accept ``eq19.10``, ``eq19_10`` or ``keogh_merkes:1.5``."""
        if isinstance(text, FunctionalId):
            return text
        name, _, arg = text.partition(":")
        name = name.replace(".", "_")
        if name == "keogh_merkes":
            return cls(name, complex(arg) if arg else 0j)
        if arg:
            raise ParameterError(f"functional {name!r} takes no argument")
        return cls(name)

    @property
    def target(self) -> str:
        if self.id == "keogh_merkes":
            return "p2-v*p1^2"
        return "a2^2" if self.id in _A2_SQUARED else "a3"

    def __str__(self) -> str:
        if self.id == "keogh_merkes":
            v = self.v.real if self.v.imag == 0 else self.v
            return f"keogh_merkes:{v:g}"
        return self.id


def functional_value(fid, lam, B1, B2, p1, p2, q1, q2):
    """Evaluate a functional; array inputs broadcast.

    Raises:
        ValidationError: if ``B1 <= 0`` or ``eq19_10`` is singular
            (``B2 = B1**2 + B1``).
        ParameterError: for an unknown id.
    """
    fid = FunctionalId.parse(fid)
    if not (B1 > 0):
        raise ValidationError(f"B1 must be > 0, got {B1}")
    d = B2 - B1
    s1 = p1 * p1 + q1 * q1
    name = fid.id
    if name == "eq17a":
        return (2 * (p2 + q2) * B1 + d * s1) / (8 * (1 + 2 * lam))
    if name == "eq19":
        return (2 * B1 * (p2 + q2) + d * s1) / 8
    if name == "eq19_1":
        return (2 * B1**2 * q1**2 + 2 * B1 * (p2 + q2) + d * s1) / 16
    if name == "eq19_10":
        den = 4 * (B1**2 - B2 + B1)
        if den == 0:
            raise ValidationError("eq19_10 is singular at B2 = B1^2 + B1")
        return B1**3 * (p2 + q2) / den
    if name == "eq19_31":
        return (2 * B1**2 * q1**2 + 4 * B2 * p2 - d * s1) / 16
    if name == "eq19_33":
        return (B1 * (3 * p2 + q2) / 2 + d * p1**2) / 4
    if name == "eq19_12":
        return (2 * B1**2 * p1**2 + 2 * B1 * (p2 + q2) + d * s1) / 48
    if name == "eq19_32":
        return -(2 * B1**2 * p1**2 - 4 * B2 * p2 - d * s1) / 48
    if name == "eq19_42":
        return -(B1 * (q2 - p2) / 2 - 3 * (p1 - q1) ** 2 * B1**2 / 16) / 12
    if name == "eq7":
        return (2 * (p2 + 2 * q2) * B1 + (p1**2 + 2 * q1**2) * d) / 32
    if name == "eq8":
        return (2 * (3 * p2 + 2 * q2) * B1 + (3 * p1**2 + 2 * q1**2) * d) / 48
    if name == "teq7":
        return (2 * (3 * p2 + 2 * q2) * B1 + (3 * p1**2 + 2 * q1**2) * d) / 36
    if name == "teq8":
        return (2 * (6 * p2 + q2) * B1 + (6 * p1**2 + q1**2) * d) / 36
    if name == "te7":
        return (2 * (2 * p2 + q2) * B1 + (2 * p1**2 + q1**2) * d) / 24
    if name == "te8":
        return (2 * (8 * p2 + q2) * B1 + (8 * p1**2 + q1**2) * d) / 72
    return p2 - fid.v * p1 * p1


class QuadraticForm(NamedTuple):
    """``c_p2 p2 + c_q2 q2 + A p1^2 + B p1 q1 + C q1^2``."""

    c_p2: complex
    c_q2: complex
    A: complex
    B: complex
    C: complex

    def __call__(self, p1, p2, q1, q2):
        return (self.c_p2 * p2 + self.c_q2 * q2 + self.A * p1 * p1
                + self.B * p1 * q1 + self.C * q1 * q1)


def quadratic_form(fid, lam: float, B1: float, B2: float) -> QuadraticForm:
    """Read the coefficients of a functional off basis evaluations."""
    f = lambda *x: complex(functional_value(fid, lam, B1, B2, *x))  # noqa: E731
    A = f(1, 0, 0, 0)
    C = f(0, 0, 1, 0)
    form = QuadraticForm(f(0, 1, 0, 0), f(0, 0, 0, 1), A, f(1, 0, 1, 0) - A - C, C)
    probe = (0.3 - 0.7j, -1.1 + 0.2j, 0.9 + 0.4j, 0.5 - 1.3j)
    if abs(form(*probe) - f(*probe)) > 1e-9 * (1 + abs(f(*probe))):
        raise ValueError(f"functional {fid} is not of quadratic-plus-linear shape")
    return form


def printed_bound(fid, lam: float, B1: float, B2: float) -> float:
    """Closed-form bound assigned to ``|functional|`` by its class.

    ``a2`` functionals are compared with the squared ``a2`` branch.
    """
    fid = FunctionalId.parse(fid)
    name = fid.id
    if name == "keogh_merkes":
        return keogh_merkes_bound(fid.v)
    if name == "eq17a":
        return bound_r_sigma(lam, B1, B2).a2_bound ** 2
    if name in ("eq19", "eq19_1", "eq19_10", "eq19_31", "eq19_33"):
        rep = bound_sstar_sigma(B1, B2)
        a2 = list(rep.a2_branches.values())
        a3 = list(rep.a3_branches.values())
        return {"eq19": a2[0] ** 2, "eq19_1": a2[1] ** 2, "eq19_10": a2[2] ** 2,
                "eq19_33": a3[0], "eq19_31": a3[1]}[name]
    if name in ("eq19_12", "eq19_32", "eq19_42"):
        rep = bound_k_sigma(B1, B2)
        a2 = list(rep.a2_branches.values())
        a3 = list(rep.a3_branches.values())
        return {"eq19_12": a2[0] ** 2, "eq19_32": a3[0], "eq19_42": a3[1]}[name]
    kind = {"eq7": "mixed_k_r", "eq8": "mixed_k_r", "teq7": "mixed_sstar_r",
            "teq8": "mixed_sstar_r", "te7": "mixed_sstar_k", "te8": "mixed_sstar_k"}[name]
    rep = bound_mixed(kind, B1, B2)
    return rep.a2_bound ** 2 if fid.target == "a2^2" else rep.a3_bound


def keogh_merkes_bound(v: complex) -> float:
    return 2 * max(1.0, abs(2 * complex(v) - 1))


# Functionals examined for each class by the verifier.
CLASS_FUNCTIONALS = {
    "r_sigma": ("eq17a",),
    "sstar_sigma": ("eq19", "eq19_1", "eq19_10", "eq19_33", "eq19_31"),
    "k_sigma": ("eq19_12", "eq19_32", "eq19_42"),
    "mixed_k_r": ("eq7", "eq8"),
    "mixed_sstar_r": ("teq7", "teq8"),
    "mixed_sstar_k": ("te7", "te8"),
}


def sstar_keogh_merkes_v(B1: float, B2: float) -> float:
    """``v`` for which the bi-starlike ``a3`` reduces to a Keogh-Merkes functional."""
    return 2 * (B1 - B2) / (3 * B1)

