import math

import numpy as np
import pytest
import sympy as sp

from bicoeff.classbounds import bound_mixed
from bicoeff.coeffsystem import (
    CLASS_FUNCTIONALS,
    FUNCTIONAL_IDS,
    FunctionalId,
    QuadraticForm,
    functional_value,
    keogh_merkes_bound,
    printed_bound,
    quadratic_form,
    sstar_keogh_merkes_v,
)
from bicoeff.errors import ParameterError, ValidationError

a2, a3, p1, p2, q1, q2, B2, lam = sp.symbols("a2 a3 p1 p2 q1 q2 B2 lam")
B1 = sp.Symbol("B1", positive=True)

# (z coefficient, z^2 coefficient) of each operator for g = z + c2 z^2 + c3 z^3
OPS = {
    "R": lambda c2, c3: (2 * c2, 3 * c3),
    "Rl": lambda c2, c3: ((1 + lam) * c2, (1 + 2 * lam) * c3),
    "S": lambda c2, c3: (c2, 2 * c3 - c2**2),
    "K": lambda c2, c3: (2 * c2, 6 * c3 - 4 * c2**2),
}
PAIRS = {"r_sigma": ("Rl", "Rl"), "sstar_sigma": ("S", "S"), "k_sigma": ("K", "K"),
         "mixed_k_r": ("K", "R"), "mixed_sstar_r": ("S", "R"), "mixed_sstar_k": ("S", "K")}
CLASS_OF = {fid: kind for kind, ids in CLASS_FUNCTIONALS.items() for fid in ids}


def solution_set(kind):
    """a2, a3, q1, q2 as functions of p1, p2 for the class equations."""
    P1 = B1 * p1 / 2
    P2 = B1 * (p2 - p1**2 / 2) / 2 + B2 * p1**2 / 4
    Q1 = B1 * q1 / 2
    Q2 = B1 * (q2 - q1**2 / 2) / 2 + B2 * q1**2 / 4
    f, g = PAIRS[kind]
    e1, e2 = OPS[f](a2, a3)
    s = sp.solve([e1 - P1, e2 - P2], [a2, a3], dict=True)[0]
    g1, g2 = OPS[g](-a2, 2 * a2**2 - a3)
    s.update(sp.solve([(g1 - Q1).subs(s), (g2 - Q2).subs(s)], [q1, q2], dict=True)[0])
    return s


@pytest.fixture(scope="module")
def solutions():
    return {kind: solution_set(kind) for kind in PAIRS}


def residual_on_solution_set(fid, sol, point):
    fid = FunctionalId.parse(fid)
    expr = functional_value(fid, lam, B1, B2, p1, p2, q1, q2)
    target = a2**2 if fid.target == "a2^2" else a3
    return complex(sp.N((expr - target).subs(sol).subs(point)))


POINT = {p1: sp.Rational(3, 7) - sp.I / 5, p2: sp.Rational(-2, 3) + sp.I / 2,
         B1: sp.Rational(13, 10), B2: sp.Rational(-1, 4), lam: sp.Rational(3, 4)}

IDENTITIES = ["eq17a", "eq19", "eq19_1", "eq19_10", "eq19_33", "eq19_12", "eq19_42",
              "eq7", "eq8", "teq7", "teq8"]
NON_IDENTITIES = ["eq19_31", "eq19_32", "te7", "te8"]


@pytest.mark.parametrize("fid", IDENTITIES)
def test_identity_on_solution_set(fid, solutions):
    assert abs(residual_on_solution_set(fid, solutions[CLASS_OF[fid]], POINT)) < 1e-12


@pytest.mark.parametrize("fid", NON_IDENTITIES)
def test_non_identity_on_solution_set(fid, solutions):
    """Kept exactly as defined; they do not reduce to a2^2 or a3 on the solution set."""
    assert abs(residual_on_solution_set(fid, solutions[CLASS_OF[fid]], POINT)) > 1e-3


def test_q1_forced_by_linear_relations(solutions):
    assert sp.simplify(solutions["sstar_sigma"][q1] + p1) == 0
    assert sp.simplify(solutions["mixed_sstar_r"][q1] + 2 * p1) == 0
    assert sp.simplify(solutions["mixed_sstar_k"][q1] + 2 * p1) == 0


class TestValues:
    def test_homogeneous(self):
        for fid in FUNCTIONAL_IDS:
            if fid != "keogh_merkes":
                assert functional_value(fid, 0.5, 1.3, 0.7, 0, 0, 0, 0) == 0

    def test_te7_extreme_point(self):
        assert functional_value("te7", 0, 2, 2, 2, 2, 2, 2) == pytest.approx(1.0)
        assert math.sqrt(functional_value("te7", 0, 2, 2, 2, 2, 2, 2)) == pytest.approx(
            bound_mixed("mixed_sstar_k", 2, 2).a2_bound)

    @pytest.mark.parametrize("b", [0, 0.25, 0.5])
    def test_teq8_aligned(self, b):
        B = 2 * (1 - b)
        assert functional_value("teq8", 0, B, B, 2, 2, 2, 2) == pytest.approx(14 * (1 - b) / 9)

    def test_eq17a_example(self):
        val = functional_value("eq17a", 1, 2, 2, 2, 2, -2, 2)
        assert math.sqrt(val) == pytest.approx(math.sqrt(2 / 3), abs=1e-15)

    def test_broadcast(self):
        x = np.linspace(-2, 2, 5)
        out = functional_value("eq8", 0, 2, 1, x, x, -x, x)
        assert out.shape == (5,)

    def test_errors(self):
        with pytest.raises(ValidationError):
            functional_value("eq19", 0, 0, 1, 1, 1, 1, 1)
        with pytest.raises(ValidationError):
            functional_value("eq19_10", 0, 1, 2, 1, 1, 1, 1)
        with pytest.raises(ParameterError):
            FunctionalId("eq99")
        with pytest.raises(ParameterError):
            FunctionalId.parse("eq19:2")


class TestParsing:
    def test_forms(self):
        assert FunctionalId.parse("eq19.10") == FunctionalId("eq19_10")
        km = FunctionalId.parse("keogh_merkes:1.5")
        assert km.v == 1.5 and str(km) == "keogh_merkes:1.5"
        assert FunctionalId.parse("eq7").target == "a2^2"
        assert FunctionalId.parse("eq8").target == "a3"


class TestQuadraticForm:
    @pytest.mark.parametrize("fid", [f for f in FUNCTIONAL_IDS if f != "keogh_merkes"])
    def test_reproduces_functional(self, fid):
        rng = np.random.default_rng(3)
        form = quadratic_form(fid, 0.4, 1.1, -0.6)
        z = rng.normal(size=(4, 50)) + 1j * rng.normal(size=(4, 50))
        np.testing.assert_allclose(form(*z), functional_value(fid, 0.4, 1.1, -0.6, *z),
                                   atol=1e-12)

    def test_keogh_merkes(self):
        assert quadratic_form(FunctionalId("keogh_merkes", 0.3), 0, 1, 1) == QuadraticForm(
            1 + 0j, 0j, -0.3 + 0j, 0j, 0j)


class TestPrintedBound:
    def test_mapping(self):
        assert printed_bound("eq17a", 1, 2, 2) == pytest.approx(2 / 3)
        assert printed_bound("eq19", 0, 2, 2) == pytest.approx(2)
        assert printed_bound("eq19_1", 0, 2, 2) == pytest.approx(3)
        assert printed_bound("eq19_31", 0, 2, 2) == pytest.approx(3)
        assert printed_bound("eq19_42", 0, 2, 2) == pytest.approx(2 * 8 / 12)
        assert printed_bound("eq7", 0, 2, 2) == pytest.approx(0.75)
        assert printed_bound("teq8", 0, 2, 2) == pytest.approx(14 / 9)

    def test_keogh_merkes(self):
        assert keogh_merkes_bound(0) == 2
        assert keogh_merkes_bound(1.5) == 4
        assert keogh_merkes_bound(0.5 + 1j) == pytest.approx(4)
        assert sstar_keogh_merkes_v(2, 2) == 0
