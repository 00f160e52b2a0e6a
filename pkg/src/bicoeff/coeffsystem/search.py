"""Maximization of ``|functional|`` over Caratheodory coefficient constraints.

Three candidate sources are combined:

``alignment``
    Exact maximum from the quadratic-plus-linear shape of every functional.
    In box mode the moduli sit at 2 and the phases are chosen so all
    contributions share one argument; the only nontrivial step is the
    maximum of ``|A + B w + C w^2|`` on ``|w| = 1``, found from the
    stationary-point polynomial.  In tight mode ``p2`` is written as
    ``p1^2/2 + rho (2 - |p1|^2/2) e^{i theta}``, which turns the problem
    into a two-variable maximization over ``|p1|, |q1|``.
``random``
    Seeded sampling, chunk ``c`` drawing from ``default_rng([seed, c])``.
``refine``
    Coordinate-wise grid ascent over moduli and phases, started from the
    best random point.

Results are identical for any ``workers`` count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..errors import ParameterError, ValidationError
from ..schwarz import CHUNK, Mode
from .functionals import FunctionalId, QuadraticForm, functional_value, quadratic_form

TWO_PI = 2 * np.pi


@dataclass(frozen=True)
class ExtremalResult:
    """Largest ``|functional|`` found and where.

    ``argmax`` is ``(p1, p2, q1, q2)``; ``sources`` holds the best value of
    each candidate source.
    """

    max_modulus: float
    argmax: tuple[complex, complex, complex, complex]
    mode: str
    budget: int
    seed: int
    value: complex = 0j
    sources: dict[str, float] = field(default_factory=dict)


# ---------------------------------------------------------------- alignment

def circle_max(A: complex, B: complex, C: complex) -> tuple[float, complex]:
    """``max |A + B w + C w^2|`` over ``|w| = 1`` and a maximizing ``w``."""
    A, B, C = complex(A), complex(B), complex(C)
    if B == 0:
        if A == 0 or C == 0:
            return abs(A) + abs(C), 1 + 0j
        return abs(A) + abs(C), np.exp(0.5j * (np.angle(A) - np.angle(C)))
    # |g|^2 = P(w)/w^2 on the circle, P(w) = g(w) (conj(A) w^2 + conj(B) w + conj(C));
    # stationary points solve w P'(w) - 2 P(w) = 0.
    g = np.array([C, B, A])                      # highest degree first
    h = np.array([A.conjugate(), B.conjugate(), C.conjugate()])
    P = np.polymul(g, h)
    stat = np.polysub(np.polymul([1, 0], np.polyder(P)), 2 * P)
    cands = [np.exp(1j * t) for t in np.linspace(0, TWO_PI, 16, endpoint=False)]
    # drop leading coefficients that are negligible at double precision
    big = np.abs(stat) > 1e-14 * np.abs(stat).max()
    stat = stat[np.argmax(big):] if big.any() else stat[:0]
    if stat.size > 1:
        for root in np.roots(stat):
            if abs(root) > 0:
                cands.append(root / abs(root))
    w = np.array(cands)
    vals = np.abs(A + B * w + C * w * w)
    k = int(np.argmax(vals))
    best, w_best = float(vals[k]), complex(w[k])
    # polish the best angle on a shrinking local grid
    t, half = float(np.angle(w_best)), np.pi / 8
    for _ in range(12):
        grid = t + np.linspace(-half, half, 33)
        t = float(grid[int(np.argmax(np.abs(A + B * np.exp(1j * grid) + C * np.exp(2j * grid))))])
        half /= 8
    w_pol = np.exp(1j * t)
    polished = float(abs(A + B * w_pol + C * w_pol * w_pol))
    if polished > best:
        return polished, complex(w_pol)
    return best, w_best


def _phase(z: complex) -> complex:
    return z / abs(z) if z != 0 else 1 + 0j


def _align_box(form: QuadraticForm):
    M, w = circle_max(form.A, form.B, form.C)
    if M == 0:
        p1 = q1 = 0j
    else:
        p1, q1 = 2 + 0j, 2 * w
    Q = form.A * p1 * p1 + form.B * p1 * q1 + form.C * q1 * q1
    u = _phase(Q)
    p2 = 2 * u / _phase(form.c_p2) if form.c_p2 != 0 else 0j
    q2 = 2 * u / _phase(form.c_q2) if form.c_q2 != 0 else 0j
    return p1, p2, q1, q2


def _tight_value(form: QuadraticForm, tp, tq):
    Ap = form.A + form.c_p2 / 2
    Cq = form.C + form.c_q2 / 2
    M, w = circle_max(Ap * tp * tp, form.B * tp * tq, Cq * tq * tq)
    return M + abs(form.c_p2) * (2 - tp * tp / 2) + abs(form.c_q2) * (2 - tq * tq / 2), w


def _align_tight(form: QuadraticForm):
    if form.B == 0:
        # objective is linear in tp^2 and tq^2: a corner is optimal
        grid = [(tp, tq) for tp in (0.0, 2.0) for tq in (0.0, 2.0)]
    else:
        ax = np.linspace(0, 2, 41)
        grid = [(tp, tq) for tp in ax for tq in ax]
    best = max(grid, key=lambda t: (_tight_value(form, *t)[0], t))
    if form.B != 0:
        step = 0.05
        while step > 1e-9:
            moved = False
            for dp, dq in ((step, 0), (-step, 0), (0, step), (0, -step)):
                t = (min(2.0, max(0.0, best[0] + dp)), min(2.0, max(0.0, best[1] + dq)))
                if _tight_value(form, *t)[0] > _tight_value(form, *best)[0]:
                    best, moved = t, True
            if not moved:
                step /= 2
    tp, tq = best
    _, w = _tight_value(form, tp, tq)
    p1, q1 = complex(tp), tq * w
    Q = ((form.A + form.c_p2 / 2) * p1 * p1 + form.B * p1 * q1
         + (form.C + form.c_q2 / 2) * q1 * q1)
    u = _phase(Q)
    p2 = p1 * p1 / 2 + (2 - tp * tp / 2) * u / _phase(form.c_p2)
    q2 = q1 * q1 / 2 + (2 - tq * tq / 2) * u / _phase(form.c_q2)
    return p1, p2, q1, q2


def alignment_maximum(fid, lam: float = 0.0, B1: float = 2.0, B2: float = 2.0,
                      mode: Mode = "box") -> tuple[float, tuple[complex, ...]]:
    """Analytic maximum of ``|functional|`` and a maximizer ``(p1, p2, q1, q2)``."""
    fid = FunctionalId.parse(fid)
    form = quadratic_form(fid, lam, B1, B2)
    z = tuple(complex(c) for c in (_align_box if mode == "box" else _align_tight)(form))
    return float(abs(complex(functional_value(fid, lam, B1, B2, *z)))), z


# ------------------------------------------------------------ parametrization
# box:   x = (|p1|, arg p1, |p2|, arg p2, |q1|, arg q1, |q2|, arg q2)
# tight: x = (t_p, alpha_p, rho_p, theta_p, t_q, alpha_q, rho_q, theta_q)

_UPPER = {"box": np.array([2, TWO_PI, 2, TWO_PI, 2, TWO_PI, 2, TWO_PI]),
          "tight": np.array([2, TWO_PI, 1, TWO_PI, 2, TWO_PI, 1, TWO_PI])}
_PERIODIC = np.array([False, True, False, True, False, True, False, True])


def _coeffs(x: np.ndarray, mode: str):
    x = np.atleast_2d(x)
    if mode == "box":
        return tuple(x[:, 2 * k] * np.exp(1j * x[:, 2 * k + 1]) for k in range(4))
    out = []
    for o in (0, 4):
        t, a, rho, th = x[:, o], x[:, o + 1], x[:, o + 2], x[:, o + 3]
        c1 = t * np.exp(1j * a)
        out += [c1, c1 * c1 / 2 + rho * (2 - t * t / 2) * np.exp(1j * th)]
    return out[0], out[1], out[2], out[3]


def _random_params(rng: np.random.Generator, n: int, mode: str) -> np.ndarray:
    x = rng.uniform(size=(n, 8)) * _UPPER[mode]
    # half the radial coordinates on the outer boundary, where maxima live
    for j in (0, 2, 4, 6):
        edge = rng.uniform(size=n) < 0.5
        if mode == "box":
            x[:, j] = np.where(edge, 2.0, 2.0 * np.sqrt(x[:, j] / 2.0))
        else:
            x[:, j] = np.where(edge, _UPPER[mode][j], x[:, j])
    return x


def _key(value: float, x: tuple) -> tuple:
    flat = []
    for c in x:
        c = complex(c)
        flat += [c.real, c.imag]
    return (-value, tuple(flat))


def _chunk_best(form: QuadraticForm, seed: int, c: int, m: int, mode: str):
    x = _random_params(np.random.default_rng([seed, c]), m, mode)
    vals = np.abs(form(*_coeffs(x, mode)))
    best = float(vals.max())
    # lexicographic tie-break on the coefficient tuple among exact ties
    idx = np.flatnonzero(vals == best)
    cands = [(_key(best, [z[0] for z in _coeffs(x[i], mode)]), i) for i in idx]
    i = min(cands)[1]
    return best, x[i]


def _refine(form: QuadraticForm, x0: np.ndarray, mode: str, sweeps: int = 6) -> np.ndarray:
    x = x0.copy()
    upper = _UPPER[mode]
    width = upper.copy()
    cur = float(np.abs(form(*_coeffs(x, mode)))[0])
    for s in range(sweeps):
        for j in range(8):
            lo, hi = x[j] - width[j] / 2, x[j] + width[j] / 2
            grid = np.linspace(lo, hi, 65)
            if _PERIODIC[j]:
                grid = np.mod(grid, TWO_PI)
            else:
                grid = np.clip(grid, 0, upper[j])
            X = np.repeat(x[None, :], grid.size, axis=0)
            X[:, j] = grid
            vals = np.abs(form(*_coeffs(X, mode)))
            k = int(np.argmax(vals))
            if vals[k] > cur:
                cur, x = float(vals[k]), X[k].copy()
        if s >= 1:
            width = width / 8
    return x


def maximize_functional(fid, lam: float = 0.0, B1: float = 2.0, B2: float = 2.0,
                        mode: Mode = "box", budget: int = 20000, seed: int = 0,
                        workers: int = 1, chunk: int = CHUNK) -> ExtremalResult:
    """Maximize ``|functional_value|`` over feasible ``(p1, p2, q1, q2)``.

    ``p`` and ``q`` range independently over the box (``|c| <= 2``) or the
    tight body.  ``budget`` is the number of random samples.

    Raises:
        ParameterError: if ``budget < 1`` or ``mode`` is unknown.
        ValidationError: if ``B1 <= 0``.
    """
    fid = FunctionalId.parse(fid)
    if budget < 1:
        raise ParameterError(f"budget must be >= 1, got {budget}")
    if mode not in ("box", "tight"):
        raise ParameterError(f"unknown mode {mode!r}")
    if not (B1 > 0):
        raise ValidationError(f"B1 must be > 0, got {B1}")
    form = quadratic_form(fid, lam, B1, B2)

    def evaluate(z):
        return complex(functional_value(fid, lam, B1, B2, *z))

    cands: dict[str, tuple] = {"alignment": alignment_maximum(fid, lam, B1, B2, mode)[1]}

    sizes = [min(chunk, budget - s) for s in range(0, budget, chunk)]
    jobs = list(enumerate(sizes))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(lambda job: _chunk_best(form, seed, job[0], job[1], mode), jobs))
    else:
        results = [_chunk_best(form, seed, c, m, mode) for c, m in jobs]
    best_val, best_x = min(
        results, key=lambda r: _key(r[0], [c[0] for c in _coeffs(r[1], mode)]))
    cands["random"] = tuple(c[0] for c in _coeffs(best_x, mode))
    x_ref = _refine(form, best_x, mode)
    cands["refine"] = tuple(c[0] for c in _coeffs(x_ref, mode))

    scored = {}
    for name, z in cands.items():
        z = tuple(complex(c) for c in z)
        scored[name] = (abs(evaluate(z)), z)
    value, argmax = min(scored.values(), key=lambda s: _key(*s))
    return ExtremalResult(
        max_modulus=float(value),
        argmax=argmax,
        mode=mode,
        budget=budget,
        seed=seed,
        value=evaluate(argmax),
        sources={name: float(s[0]) for name, s in scored.items()},
    )
