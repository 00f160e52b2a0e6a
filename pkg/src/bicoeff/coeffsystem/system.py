"""Subordination expansion and the per-class coefficient equations.

For each class, the function ``f = z + a2 z^2 + a3 z^3 + ...`` and its
inverse ``F = w - a2 w^2 + (2 a2^2 - a3) w^3 + ...`` each pass through a
differential operator whose first two Taylor coefficients are matched with
``phi(r(z))`` (from ``p``) and ``phi(s(w))`` (from ``q``)::

    operator            z coeff      z^2 coeff
    (1-lam) g/z+lam g'  (1+lam) c2   (1+2lam) c3
    g'                  2 c2         3 c3
    z g'/g              c2           2 c3 - c2^2
    1 + z g''/g'        2 c2         6 c3 - 4 c2^2

with ``c2, c3`` the coefficients of ``g = f`` or ``g = F``.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from ..classbounds import ClassSpec
from ..errors import FeasibilityError, ParameterError, ValidationError
from ..powerseries import PowerSeries, normalized_series, ps_compose, ps_revert
from ..schwarz import (
    CHUNK,
    CaratheodoryCoeffs,
    schwarz_from_caratheodory,
    tight_feasible,
    validate_caratheodory,
)

CONSISTENCY_TOL = 1e-12


class SideOperator(NamedTuple):
    """``z`` coefficient ``k1 c2``; ``z^2`` coefficient ``k2 c3 + m c2^2``."""

    k1: float
    k2: float
    m: float

    def apply(self, c2, c3):
        return self.k1 * c2, self.k2 * c3 + self.m * c2 * c2


def class_operators(spec: ClassSpec) -> tuple[SideOperator, SideOperator]:
    """Operators applied to ``f`` and to ``F`` for ``spec``."""
    lam = spec.lam
    R_lam = SideOperator(1 + lam, 1 + 2 * lam, 0.0)
    R = SideOperator(2.0, 3.0, 0.0)
    S = SideOperator(1.0, 2.0, -1.0)
    K = SideOperator(2.0, 6.0, -4.0)
    return {
        "r_sigma": (R_lam, R_lam),
        "sstar_sigma": (S, S),
        "k_sigma": (K, K),
        "mixed_k_r": (K, R),
        "mixed_sstar_r": (S, R),
        "mixed_sstar_k": (S, K),
    }[spec.kind]


def q1_ratio(spec: ClassSpec) -> float:
    """``kappa`` with ``q1 = -kappa p1`` forced by the two linear relations."""
    f_op, g_op = class_operators(spec)
    return g_op.k1 / f_op.k1


def subordination_expand(phi: PowerSeries, p: CaratheodoryCoeffs) -> PowerSeries:
    """Taylor coefficients of ``phi((p - 1)/(p + 1))``.

    The result has order ``min(phi.order, len(p))`` and begins::

        1 + B1 p1/2 z + (B1 (p2 - p1^2/2)/2 + B2 p1^2/4) z^2 + ...

    Raises:
        FeasibilityError: if ``p`` is not box-feasible.
        ValidationError: if ``phi(0) != 1``.
    """
    if phi.coeffs[0] != 1:
        raise ValidationError(f"phi(0) must be 1, got {phi.coeffs[0]!r}")
    r = schwarz_from_caratheodory(p)
    n = min(phi.order, len(p))
    return ps_compose(phi.with_order(n), PowerSeries([0, *r.r], n))


class ClassCoefficients(NamedTuple):
    """``a2``, ``a3`` from the ``f`` side and how well the ``F`` side agrees.

    ``consistent`` checks only the linear ``F``-side relation
    (``q1 = -kappa p1``); ``residual`` is the ``F``-side second-order
    relation evaluated at the solved ``a2, a3`` (zero for a fully
    consistent pair).
    """

    a2: complex
    a3: complex
    consistent: bool
    residual: complex


def solve_class_coefficients(spec: ClassSpec, B1: float, B2: float,
                             p: CaratheodoryCoeffs, q: CaratheodoryCoeffs) -> ClassCoefficients:
    if not (B1 > 0):
        raise ValidationError(f"B1 must be > 0, got {B1}")
    for name, c in (("p", p), ("q", q)):
        if not validate_caratheodory(c, "box"):
            raise FeasibilityError(f"{name} is not box-feasible: {c.p}")
    phi = PowerSeries([1, B1, B2], 2)
    _, P1, P2 = subordination_expand(phi, p).coeffs[:3]
    _, Q1, Q2 = subordination_expand(phi, q).coeffs[:3]
    f_op, g_op = class_operators(spec)
    a2 = P1 / f_op.k1
    a3 = (P2 - f_op.m * a2 * a2) / f_op.k2
    F = ps_revert(normalized_series([a2, a3], order=3))
    G1, G2 = g_op.apply(F.coeffs[2], F.coeffs[3])
    consistent = abs(G1 - Q1) <= CONSISTENCY_TOL
    return ClassCoefficients(complex(a2), complex(a3), bool(consistent), complex(G2 - Q2))


def _tight_params(rng: np.random.Generator, n: int, t_max: float = 2.0):
    """Random points ``(p1, p2)`` of the tight body, biased towards its boundary."""
    u = rng.uniform(size=n)
    t = np.where(u < 0.15, t_max, t_max * np.sqrt(rng.uniform(size=n)))
    p1 = t * np.exp(2j * np.pi * rng.uniform(size=n))
    rho = np.where(rng.uniform(size=n) < 0.5, 1.0, np.sqrt(rng.uniform(size=n)))
    p2 = p1 * p1 / 2 + rho * (2 - t * t / 2) * np.exp(2j * np.pi * rng.uniform(size=n))
    return p1, p2


class JointSample(NamedTuple):
    p1: np.ndarray
    p2: np.ndarray
    q1: np.ndarray
    q2: np.ndarray
    a2: np.ndarray
    a3: np.ndarray
    drawn: int


def sample_consistent_pairs(spec: ClassSpec, B1: float, B2: float, n: int,
                            seed: int = 0, chunk: int = CHUNK,
                            max_draws: int | None = None) -> JointSample:
    """Tight-feasible ``(p, q)`` pairs satisfying all four class relations.

    ``p`` is drawn from the tight body; ``a2, a3`` follow from the ``f``
    side, which then fixes ``q1`` and ``q2`` through the ``F`` side.  The
    pair is kept only when ``q`` is tight-feasible.  ``|p1|`` is drawn up
    to ``2/kappa`` since larger values force ``|q1| > 2``.

    Chunk ``c`` uses ``default_rng([seed, c])``.
    """
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if not (B1 > 0):
        raise ValidationError(f"B1 must be > 0, got {B1}")
    f_op, g_op = class_operators(spec)
    t_max = min(2.0, 2.0 / q1_ratio(spec))
    max_draws = max_draws or 400 * n + 10 * chunk
    parts = []
    kept = drawn = c = 0
    while kept < n:
        if drawn >= max_draws:
            raise ParameterError(f"acceptance too low: {kept} of {drawn} draws kept")
        rng = np.random.default_rng([seed, c])
        c += 1
        p1, p2 = _tight_params(rng, chunk, t_max)
        drawn += chunk
        a2 = B1 * p1 / 2 / f_op.k1
        P2 = B1 * p2 / 2 + (B2 - B1) * p1 * p1 / 4
        a3 = (P2 - f_op.m * a2 * a2) / f_op.k2
        G1, G2 = g_op.apply(-a2, 2 * a2 * a2 - a3)
        q1 = 2 * G1 / B1
        q2 = 2 * (G2 - (B2 - B1) * q1 * q1 / 4) / B1
        ok = tight_feasible(q1, q2)
        parts.append(tuple(x[ok] for x in (p1, p2, q1, q2, a2, a3)))
        kept += int(ok.sum())
    cols = [np.concatenate(col)[:n] for col in zip(*parts)]
    return JointSample(*cols, drawn=drawn)
