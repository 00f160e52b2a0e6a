import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicoeff.coeffsystem import (
    FUNCTIONAL_IDS,
    TRIANGLE_IDS,
    FunctionalId,
    circle_max,
    functional_value,
    keogh_merkes_bound,
    maximize_functional,
    printed_bound,
)
from bicoeff.errors import ParameterError, ValidationError
from bicoeff.schwarz import tight_feasible

cplx = st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False)


@settings(max_examples=100, deadline=None)
@given(cplx, cplx, cplx)
def test_circle_max_against_grid(A, B, C):
    M, w = circle_max(A, B, C)
    t = np.exp(1j * np.linspace(0, 2 * np.pi, 20001))
    grid = np.abs(A + B * t + C * t * t).max()
    assert M >= grid - 1e-9
    assert M <= grid + 1e-6 * (1 + abs(A) + abs(B) + abs(C))
    assert abs(abs(w) - 1) < 1e-12
    assert abs(A + B * w + C * w * w) == pytest.approx(M)


class TestKnownMaxima:
    def test_eq17a_example(self):
        res = maximize_functional("eq17a", 1, 2, 2, "box", budget=2000)
        assert res.max_modulus == pytest.approx(2 / 3, abs=1e-12)

    @pytest.mark.parametrize("v", [0, 1.5, -2, 0.3, 0.5 + 0.5j])
    def test_keogh_merkes(self, v):
        res = maximize_functional(FunctionalId("keogh_merkes", v), mode="tight", budget=2000)
        assert res.max_modulus == pytest.approx(keogh_merkes_bound(v), abs=1e-9)

    @pytest.mark.parametrize("fid", TRIANGLE_IDS)
    def test_triangle_bound_attained_when_B2_ge_B1(self, fid):
        res = maximize_functional(fid, 0.3, 0.8, 1.7, "box", budget=2000, seed=1)
        assert res.sources["alignment"] == pytest.approx(printed_bound(fid, 0.3, 0.8, 1.7),
                                                         abs=1e-9)

    @pytest.mark.parametrize("fid", ["eq19_1", "eq19_12"])
    def test_merged_square_term_falls_short(self, fid):
        """With B2 < B1 the two squared-coefficient terms partly cancel."""
        res = maximize_functional(fid, 0, 1, -0.5, "box", budget=2000)
        assert res.max_modulus < printed_bound(fid, 0, 1, -0.5) - 0.2

    @pytest.mark.parametrize("fid", ["eq7", "te8", "eq19_42"])
    def test_random_search_near_exact(self, fid):
        res = maximize_functional(fid, 0, 1.4, 0.9, "box", budget=20000, seed=5)
        assert res.sources["random"] >= 0.97 * res.sources["alignment"]
        assert res.sources["refine"] >= 0.999 * res.sources["alignment"]


class TestInvariants:
    @pytest.mark.parametrize("mode", ["box", "tight"])
    @pytest.mark.parametrize("fid", [f for f in FUNCTIONAL_IDS if f != "keogh_merkes"])
    def test_result_consistent(self, fid, mode):
        res = maximize_functional(fid, 0.5, 1.2, 0.3, mode, budget=500, seed=3)
        p1, p2, q1, q2 = res.argmax
        assert abs(functional_value(fid, 0.5, 1.2, 0.3, *res.argmax)) == res.max_modulus
        assert res.value == functional_value(fid, 0.5, 1.2, 0.3, *res.argmax)
        assert max(abs(c) for c in res.argmax) <= 2 + 1e-12
        if mode == "tight":
            assert tight_feasible(p1, p2) and tight_feasible(q1, q2)
        assert res.max_modulus == max(res.sources.values())
        assert (res.mode, res.budget, res.seed) == (mode, 500, 3)

    @pytest.mark.parametrize("fid", ["eq19", "te7", "eq19_42"])
    def test_tight_below_box(self, fid):
        box = maximize_functional(fid, 0, 1.1, 2.0, "box", budget=1000)
        tight = maximize_functional(fid, 0, 1.1, 2.0, "tight", budget=1000)
        assert tight.max_modulus <= box.max_modulus + 1e-12

    def test_deterministic_across_workers(self):
        kw = dict(lam=0, B1=1.3, B2=0.2, mode="tight", budget=10000, seed=4, chunk=1000)
        a = maximize_functional("teq8", workers=1, **kw)
        b = maximize_functional("teq8", workers=4, **kw)
        assert a == b

    def test_seed_changes_random_source(self):
        a = maximize_functional("eq8", budget=300, seed=1)
        b = maximize_functional("eq8", budget=300, seed=2)
        assert a.sources["random"] != b.sources["random"]

    def test_single_sample(self):
        res = maximize_functional("eq8", budget=1)
        assert res.budget == 1

    def test_errors(self):
        with pytest.raises(ParameterError):
            maximize_functional("eq8", budget=0)
        with pytest.raises(ParameterError):
            maximize_functional("eq8", mode="loose")
        with pytest.raises(ValidationError):
            maximize_functional("eq8", B1=0)
