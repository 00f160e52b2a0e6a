"""Truncated complex power series.

A :class:`PowerSeries` of order ``N`` holds the Taylor coefficients
``c0, c1, ..., cN`` of a function about ``z = 0``; terms of degree above
``N`` are unknown, not zero.  All operations return new series of the same
order as their operands::

    >>> f = PowerSeries([0, 1, 0.5, 0.1])
    >>> F = ps_revert(f)
    >>> ps_compose(F, f).coeffs.round(12)
    array([0.+0.j, 1.+0.j, 0.+0.j, 0.+0.j])

Values are immutable and safe to share between threads.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .errors import CompositionDomainError, NormalizationError, OrderMismatchError

DEFAULT_ORDER = 8

__all__ = [
    "DEFAULT_ORDER",
    "PowerSeries",
    "ps_mul",
    "ps_inv",
    "ps_div",
    "ps_compose",
    "ps_derivative",
    "ps_revert",
    "identity_series",
    "normalized_series",
]


class PowerSeries:
    """Taylor coefficients ``c0..cN`` truncated at degree ``order = N``.

    Args:
        coeffs: Coefficients in increasing degree. Padded with zeros (or
            truncated) to ``order + 1`` entries when ``order`` is given.
        order: Truncation degree, at least 1. Defaults to ``len(coeffs) - 1``.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[complex], order: int | None = None):
        c = np.asarray(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs,
                       dtype=np.complex128).ravel()
        if order is None:
            order = c.size - 1
        if order < 1:
            raise ValueError(f"truncation order must be >= 1, got {order}")
        out = np.zeros(order + 1, dtype=np.complex128)
        n = min(c.size, order + 1)
        out[:n] = c[:n]
        out.flags.writeable = False
        self._c = out

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def order(self) -> int:
        return self._c.size - 1

    @property
    def normalized(self) -> bool:
        """True when c0 == 0 and c1 == 1 exactly (class A normalization)."""
        return self._c[0] == 0 and self._c[1] == 1

    def __getitem__(self, k):
        return self._c[k]

    def __len__(self) -> int:
        return self._c.size

    def __call__(self, z):
        """Evaluate the truncated polynomial at ``z``."""
        return np.polynomial.polynomial.polyval(z, self._c)

    def __repr__(self) -> str:
        return f"PowerSeries({self._c.tolist()!r}, order={self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and bool(np.array_equal(self._c, other._c))

    def __hash__(self) -> int:
        return hash((self.order, self._c.tobytes()))

    def allclose(self, other: PowerSeries, atol: float = 1e-12) -> bool:
        _check_orders(self, other)
        return bool(np.max(np.abs(self._c - other._c)) <= atol)

    def with_order(self, order: int) -> PowerSeries:
        return PowerSeries(self._c, order)


def _check_orders(a: PowerSeries, b: PowerSeries) -> None:
    if a.order != b.order:
        raise OrderMismatchError(f"orders differ: {a.order} != {b.order}")


def _mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.convolve(a, b)[: a.size]


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated at the shared order."""
    _check_orders(a, b)
    return PowerSeries(_mul(a.coeffs, b.coeffs))


def ps_inv(a: PowerSeries) -> PowerSeries:
    """Reciprocal ``1/a``; requires ``a.c0 != 0``."""
    c = a.coeffs
    if c[0] == 0:
        raise ZeroDivisionError("series with zero constant term has no reciprocal")
    out = np.zeros_like(c)
    out[0] = 1 / c[0]
    for k in range(1, c.size):
        out[k] = -np.dot(c[1 : k + 1], out[k - 1 :: -1][:k]) / c[0]
    return PowerSeries(out)


def ps_div(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    _check_orders(a, b)
    return ps_mul(a, ps_inv(b))


def ps_compose(outer: PowerSeries, inner: PowerSeries) -> PowerSeries:
    """Coefficients of ``outer(inner(z))`` to the shared truncation order.

    Raises:
        CompositionDomainError: if ``inner`` has a nonzero constant term.
    """
    _check_orders(outer, inner)
    if inner.coeffs[0] != 0:
        raise CompositionDomainError(
            f"inner series must vanish at 0, got c0={inner.coeffs[0]!r}")
    g = inner.coeffs
    acc = np.zeros_like(g)
    # Horner in the inner series; each multiply by g raises the valuation by 1.
    for ck in outer.coeffs[::-1]:
        acc = _mul(acc, g)
        acc[0] += ck
    return PowerSeries(acc)


def ps_derivative(a: PowerSeries) -> PowerSeries:
    """Term-wise derivative. The top coefficient is unknown and set to zero."""
    c = a.coeffs
    d = np.zeros_like(c)
    d[:-1] = c[1:] * np.arange(1, c.size)
    return PowerSeries(d)


def ps_revert(f: PowerSeries) -> PowerSeries:
    """Compositional inverse ``F`` of a normalized series ``f``.

    ``F`` satisfies ``f(F(w)) = w`` to the truncation order.  Coefficients
    are fixed one degree at a time: with ``F`` correct through degree
    ``k-1``, the degree-``k`` coefficient of ``f(F)`` is off by exactly
    ``b_k``, so it is read off and subtracted.

    Raises:
        NormalizationError: unless ``f.c0 == 0`` and ``f.c1 == 1``.
    """
    if not f.normalized:
        raise NormalizationError(
            f"series must have c0=0, c1=1; got c0={f.coeffs[0]!r}, c1={f.coeffs[1]!r}")
    n = f.order
    b = np.zeros(n + 1, dtype=np.complex128)
    b[1] = 1
    for k in range(2, n + 1):
        b[k] = -ps_compose(f, PowerSeries(b)).coeffs[k]
    return PowerSeries(b)


def identity_series(order: int = DEFAULT_ORDER) -> PowerSeries:
    return PowerSeries([0, 1], order)


def normalized_series(tail: Iterable[complex], order: int | None = None) -> PowerSeries:
    """Build ``z + a2 z^2 + a3 z^3 + ...`` from ``tail = (a2, a3, ...)``."""
    tail = list(tail)
    if order is None:
        order = max(len(tail) + 1, 1)
    return PowerSeries([0, 1, *tail], order)
