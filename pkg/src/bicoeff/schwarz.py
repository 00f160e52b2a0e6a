"""Caratheodory and Schwarz coefficient tuples.

A Caratheodory function ``p(z) = 1 + p1 z + p2 z^2 + ...`` has positive real
part on the unit disk; a Schwarz function ``r`` maps the disk into itself
with ``r(0) = 0``.  They correspond through ``p = (1 + r)/(1 - r)``.

Two feasibility notions are used:

* ``box``: ``|p_i| <= 2`` for every coefficient.
* ``tight``: box, plus ``|p2 - p1**2/2| <= 2 - |p1|**2/2``, which is the exact
  description of the attainable ``(p1, p2)`` pairs.

Random members of the class are drawn through the Herglotz representation,
as convex combinations of the extreme points ``(1 + x z)/(1 - x z)`` with
``|x| = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .errors import FeasibilityError, ParameterError
from .powerseries import PowerSeries, ps_div

FEAS_TOL = 1e-12
DEFAULT_K = 3
CHUNK = 4096

Mode = Literal["box", "tight"]

__all__ = [
    "CaratheodoryCoeffs",
    "SchwarzCoeffs",
    "schwarz_from_caratheodory",
    "caratheodory_from_schwarz",
    "validate_caratheodory",
    "herglotz_coefficients",
    "sample_caratheodory",
    "sample_caratheodory_batch",
    "tight_feasible",
]


def _as_tuple(values: Sequence[complex]) -> tuple[complex, ...]:
    return tuple(complex(v) for v in values)


@dataclass(frozen=True)
class CaratheodoryCoeffs:
    """Coefficients ``(p1, ..., pK)`` of ``p(z) = 1 + p1 z + ...``, ``K >= 2``."""

    p: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "p", _as_tuple(self.p))
        if len(self.p) < 2:
            raise ParameterError(f"need at least p1 and p2, got {len(self.p)} coefficients")

    @property
    def p1(self) -> complex:
        return self.p[0]

    @property
    def p2(self) -> complex:
        return self.p[1]

    def __len__(self) -> int:
        return len(self.p)

    def as_series(self, order: int | None = None) -> PowerSeries:
        return PowerSeries([1, *self.p], order or len(self.p))


@dataclass(frozen=True)
class SchwarzCoeffs:
    """Coefficients ``(r1, ..., rK)`` of a Schwarz function ``r(z) = r1 z + ...``."""

    r: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "r", _as_tuple(self.r))
        if len(self.r) < 1:
            raise ParameterError("need at least r1")

    def __len__(self) -> int:
        return len(self.r)

    def as_series(self, order: int | None = None) -> PowerSeries:
        return PowerSeries([0, *self.r], order or max(len(self.r), 1))


def tight_feasible(p1, p2, tol: float = FEAS_TOL):
    """Vectorized tight-mode test on the leading pair ``(p1, p2)``."""
    p1 = np.asarray(p1)
    p2 = np.asarray(p2)
    a = np.abs(p1)
    return (a <= 2 + tol) & (np.abs(p2) <= 2 + tol) & (
        np.abs(p2 - p1**2 / 2) <= 2 - a**2 / 2 + tol)


def validate_caratheodory(p: CaratheodoryCoeffs, mode: Mode = "box") -> bool:
    box = all(abs(c) <= 2 + FEAS_TOL for c in p.p)
    if mode == "box":
        return box
    if mode == "tight":
        return box and bool(tight_feasible(p.p1, p.p2))
    raise ParameterError(f"unknown feasibility mode {mode!r}")


def schwarz_from_caratheodory(p: CaratheodoryCoeffs) -> SchwarzCoeffs:
    """``r = (p - 1)/(p + 1)`` by series division.

    The first three coefficients are

    * ``r1 = p1/2``
    * ``r2 = (p2 - p1**2/2)/2``
    * ``r3 = (p3 + (p1/2)(p1**2/2 - p2) - p1 p2/2)/2``

    Raises:
        FeasibilityError: if ``p`` is not box-feasible.
    """
    if not validate_caratheodory(p, "box"):
        raise FeasibilityError(f"coefficients exceed |p_i| <= 2: {p.p}")
    n = len(p)
    num = PowerSeries([0, *p.p], n)
    den = PowerSeries([2, *p.p], n)
    return SchwarzCoeffs(tuple(ps_div(num, den).coeffs[1:]))


def caratheodory_from_schwarz(r: SchwarzCoeffs) -> CaratheodoryCoeffs:
    """``p = (1 + r)/(1 - r)``; inverse of :func:`schwarz_from_caratheodory`."""
    if abs(r.r[0]) > 1 + FEAS_TOL:
        raise FeasibilityError(f"|r1| must be <= 1, got {abs(r.r[0])}")
    n = max(len(r), 2)
    rs = np.zeros(n, dtype=np.complex128)
    rs[: len(r)] = r.r
    num = PowerSeries([1, *rs], n)
    den = PowerSeries([1, *(-rs)], n)
    return CaratheodoryCoeffs(tuple(ps_div(num, den).coeffs[1:]))


def herglotz_coefficients(weights, points, K: int = DEFAULT_K) -> CaratheodoryCoeffs:
    """``p_i = 2 sum_j w_j x_j**i`` for weights summing to 1 and ``|x_j| = 1``."""
    w = np.asarray(weights, dtype=float)
    x = np.asarray(points, dtype=np.complex128)
    if w.shape != x.shape or w.ndim != 1 or w.size == 0:
        raise ParameterError("weights and points must be equal-length 1-D arrays")
    if np.any(w < 0) or not np.isclose(w.sum(), 1.0, atol=1e-12):
        raise ParameterError("weights must be non-negative and sum to 1")
    if not np.allclose(np.abs(x), 1.0, atol=1e-12):
        raise ParameterError("points must lie on the unit circle")
    i = np.arange(1, K + 1)
    return CaratheodoryCoeffs(tuple(2 * (w[None, :] * x[None, :] ** i[:, None]).sum(axis=1)))


def _draw(rng: np.random.Generator, n: int, atoms: int, K: int) -> np.ndarray:
    w = rng.uniform(size=(n, atoms))
    w /= w.sum(axis=1, keepdims=True)
    x = np.exp(2j * np.pi * rng.uniform(size=(n, atoms)))
    i = np.arange(1, K + 1)
    return 2 * np.einsum("na,nak->nk", w, x[:, :, None] ** i[None, None, :])


def sample_caratheodory(atoms: int, K: int = DEFAULT_K, seed: int = 0) -> CaratheodoryCoeffs:
    """One random Caratheodory tuple with ``atoms`` Herglotz atoms.

    Deterministic in ``(atoms, K, seed)``.
    """
    if atoms < 1:
        raise ParameterError(f"atoms must be >= 1, got {atoms}")
    if K < 2:
        raise ParameterError(f"K must be >= 2, got {K}")
    rng = np.random.default_rng(seed)
    return CaratheodoryCoeffs(tuple(_draw(rng, 1, atoms, K)[0]))


def sample_caratheodory_batch(n: int, atoms: int, K: int = DEFAULT_K, seed: int = 0,
                              chunk: int = CHUNK) -> np.ndarray:
    """``(n, K)`` array of Herglotz samples.

    Chunk ``c`` draws from ``default_rng([seed, c])``, so any split of the
    chunks across workers reproduces the serial stream.
    """
    if atoms < 1:
        raise ParameterError(f"atoms must be >= 1, got {atoms}")
    if K < 2:
        raise ParameterError(f"K must be >= 2, got {K}")
    out = np.empty((n, K), dtype=np.complex128)
    for c, start in enumerate(range(0, n, chunk)):
        m = min(chunk, n - start)
        out[start : start + m] = _draw(np.random.default_rng([seed, c]), m, atoms, K)
    return out
