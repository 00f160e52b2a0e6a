"""Ma-Minda functions ``phi(z) = 1 + B1 z + B2 z^2 + B3 z^3 + ...``.

Catalogued families:

=====================  ================================  ======================
family                 phi                               parameters
=====================  ================================  ======================
``janowski(A, B)``     (1 + A z)/(1 + B z)               -1 <= B < A <= 1
``order_beta(beta)``   (1 + (1 - 2 beta) z)/(1 - z)      0 <= beta < 1
``strongly_starlike``  ((1 + z)/(1 - z))**alpha          0 < alpha <= 1
``custom``             raw list B1, B2, ...              B1 > 0
=====================  ================================  ======================

Only ``B1`` and ``B2`` enter the coefficient bounds; ``B3`` is carried along.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .powerseries import DEFAULT_ORDER, PowerSeries, ps_compose

FAMILIES = ("janowski", "order_beta", "strongly_starlike", "custom")

_SYNTAX = {"janowski": "janowski", "beta": "order_beta", "alpha": "strongly_starlike",
           "custom": "custom"}


def _binom(alpha: float, k: int) -> float:
    out = 1.0
    for j in range(k):
        out *= (alpha - j) / (j + 1)
    return out


@dataclass(frozen=True)
class MaMindaPhi:
    """A catalogued (or custom) Ma-Minda function.

    Args:
        family: One of :data:`FAMILIES`.
        params: Family parameters: ``(A, B)``, ``(beta,)``, ``(alpha,)`` or the
            raw coefficient list ``(B1, B2, ...)`` for ``custom``.
    """

    family: str
    params: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(float(v) for v in self.params))
        _validate(self.family, self.params)

    @classmethod
    def janowski(cls, A: float, B: float) -> MaMindaPhi:
        return cls("janowski", (A, B))

    @classmethod
    def order_beta(cls, beta: float) -> MaMindaPhi:
        return cls("order_beta", (beta,))

    @classmethod
    def strongly_starlike(cls, alpha: float) -> MaMindaPhi:
        return cls("strongly_starlike", (alpha,))

    @classmethod
    def custom(cls, *B: float) -> MaMindaPhi:
        return cls("custom", tuple(B))

    @property
    def B1(self) -> float:
        return self._coeff(1)

    @property
    def B2(self) -> float:
        return self._coeff(2)

    @property
    def B3(self) -> float:
        return self._coeff(3)

    def _coeff(self, k: int) -> float:
        if self.family == "custom":
            return self.params[k - 1] if k <= len(self.params) else 0.0
        return float(phi_coefficients(self, max(k, 1)).coeffs[k].real)

    def label(self) -> str:
        key = {v: k for k, v in _SYNTAX.items()}[self.family]
        return f"{key}:" + ",".join(f"{v:g}" for v in self.params)


def _validate(family: str, params: tuple[float, ...]) -> None:
    if family == "janowski":
        if len(params) != 2:
            raise ValidationError("janowski needs two parameters A,B")
        A, B = params
        if not (-1 <= B < A <= 1):
            raise ValidationError(f"janowski requires -1 <= B < A <= 1, got A={A}, B={B}")
    elif family == "order_beta":
        if len(params) != 1 or not (0 <= params[0] < 1):
            raise ValidationError(f"order_beta requires 0 <= beta < 1, got {params}")
    elif family == "strongly_starlike":
        if len(params) != 1 or not (0 < params[0] <= 1):
            raise ValidationError(f"strongly_starlike requires 0 < alpha <= 1, got {params}")
    elif family == "custom":
        if len(params) < 2:
            raise ValidationError("custom family needs at least B1,B2")
    else:
        raise ValidationError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if not np.all(np.isfinite(params)):
        raise ValidationError(f"non-finite parameter in {params}")
    if family == "custom" and params[0] <= 0:
        raise ValidationError(f"B1 must be > 0, got {params[0]}")


def phi_coefficients(phi: MaMindaPhi, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Taylor series ``1 + B1 z + B2 z^2 + ...`` of ``phi`` to ``order``."""
    c = np.zeros(order + 1, dtype=np.complex128)
    c[0] = 1
    k = np.arange(1, order + 1)
    if phi.family == "janowski":
        A, B = phi.params
        c[1:] = (-B) ** (k - 1) * (A - B)
    elif phi.family == "order_beta":
        c[1:] = 2 * (1 - phi.params[0])
    elif phi.family == "strongly_starlike":
        # (1 + u)**alpha with u = 2z/(1 - z)
        alpha = phi.params[0]
        outer = PowerSeries([_binom(alpha, j) for j in range(order + 1)], order)
        u = PowerSeries([0, *([2.0] * order)], order)
        c = ps_compose(outer, u).coeffs.copy()
    else:
        B = phi.params[:order]
        c[1 : len(B) + 1] = B
    series = PowerSeries(c, order)
    if series.coeffs[1].real <= 0:
        raise ValidationError(f"B1 must be > 0, got {series.coeffs[1].real}")
    return series


def parse_phi(text: str) -> MaMindaPhi:
    """Parse ``janowski:A,B``, ``beta:b``, ``alpha:a`` or ``custom:B1,B2[,...]``.

    Raises:
        ValueError: on malformed syntax (the offending token is quoted).
        ValidationError: on out-of-range parameters.
    """
    name, sep, rest = text.partition(":")
    if not sep or name not in _SYNTAX:
        raise ValueError(f"bad family spec {text!r}: expected one of "
                         f"{', '.join(k + ':...' for k in _SYNTAX)}")
    values = []
    for tok in rest.split(","):
        try:
            values.append(float(tok))
        except ValueError:
            raise ValueError(f"bad number {tok!r} in family spec {text!r}") from None
    return MaMindaPhi(_SYNTAX[name], tuple(values))

