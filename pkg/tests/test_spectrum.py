"""Tests for Milnor-algebra spectra, eigenspace dimensions, branch counts."""

import random
from fractions import Fraction

import pytest

from curvelattice.algebra import parse_poly
from curvelattice.spectrum import (
    NotIsolated,
    WeightedPoly,
    branch_count,
    eigen_dim,
    milnor_graded_dims,
    spectrum,
)

XY = ("x", "y")


def wp(text, weights):
    return WeightedPoly(parse_poly(text, XY), weights)


class TestMilnorDims:
    def test_cusp(self):
        # oracle: partials x, y^2; basis {1, y}; mu = (6-3)(6-2)/6 = 2
        dims = milnor_graded_dims(wp("x^2 + y^3", (3, 2)))
        assert dims == {0: 1, 2: 1}

    def test_x2_plus_ye(self):
        # oracle: partials x and y^(e-1); basis 1, y, ..., y^(e-2)
        for e in range(2, 8):
            w = wp("x^2 + y^" + str(e), (e, 2))
            dims = milnor_graded_dims(w)
            assert dims == {2 * i - 2: 1 for i in range(1, e)}
            assert w.milnor_number() == e - 1

    def test_x3_plus_y3(self):
        # oracle: partials x^2, y^2; basis {1, x, y, xy}
        dims = milnor_graded_dims(wp("x^3 + y^3", (1, 1)))
        assert dims == {0: 1, 1: 2, 2: 1}

    def test_not_isolated_rejected(self):
        with pytest.raises(NotIsolated):
            milnor_graded_dims(wp("x^2*y^2", (1, 1)))


class TestSpectrum:
    def test_cusp_spectrum(self):
        assert spectrum(wp("x^2 + y^3", (3, 2))) == {
            Fraction(-1, 6): 1,
            Fraction(1, 6): 1,
        }

    def test_x2_plus_ye_spectrum(self):
        for e in range(3, 11):
            sp = spectrum(wp("x^2 + y^" + str(e), (e, 2)))
            assert sp == {Fraction(-1, 2) + Fraction(i, e): 1 for i in range(1, e)}

    def test_x3y3_spectrum(self):
        assert spectrum(wp("x^3 + y^3", (1, 1))) == {
            Fraction(-1, 3): 1,
            Fraction(0): 2,
            Fraction(1, 3): 1,
        }

    def test_symmetry_and_total(self):
        rng = random.Random(99)
        count = 0
        while count < 20:
            w1, w2 = rng.randint(1, 4), rng.randint(1, 4)
            d = (w1 * w2) * rng.randint(2, 4)
            terms = []
            for i in range(d // w1 + 1):
                rem = d - i * w1
                if rem % w2 == 0:
                    terms.append((i, rem // w2))
            if len(terms) < 2:
                continue
            text = " + ".join(
                f"{rng.randint(1, 5)}*x^{i}*y^{j}" for i, j in terms
            )
            try:
                w = wp(text.replace("^0", "^0"), (w1, w2))
                sp = spectrum(w)
            except (NotIsolated, ValueError):
                continue
            count += 1
            assert sum(sp.values()) == w.milnor_number()
            for alpha, nu in sp.items():
                assert sp.get(-alpha, 0) == nu
                assert -1 < alpha < 1

    def test_scale_invariance(self):
        assert spectrum(wp("x^2 + y^3", (3, 2))) == spectrum(wp("x^2 + y^3", (6, 4)))


class TestEigenDim:
    def test_cusp(self):
        w = wp("x^2 + y^3", (3, 2))
        assert eigen_dim(w, Fraction(1, 6)) == 1
        assert eigen_dim(w, Fraction(5, 6)) == 1
        assert eigen_dim(w, Fraction(1, 2)) == 0

    def test_x3y3_at_zero(self):
        assert eigen_dim(wp("x^3 + y^3", (1, 1)), 0) == 2


class TestBranchCount:
    def test_examples(self):
        assert branch_count(wp("x^2 + y^3", (3, 2))) == 1
        assert branch_count(wp("x^3 + y^3", (1, 1))) == 3
        assert branch_count(wp("x^4 + y^2", (1, 2))) == 2

    def test_axis_factors(self):
        # x*y has two branches, the axes
        assert branch_count(wp("x*y", (1, 1))) == 2

    def test_matches_nu0_plus_one(self):
        for text, weights in [
            ("x^2 + y^3", (3, 2)),
            ("x^3 + y^3", (1, 1)),
            ("x^4 + y^2", (1, 2)),
            ("x^5 + y^5", (1, 1)),
        ]:
            w = wp(text, weights)
            nu0 = spectrum(w).get(Fraction(0), 0)
            assert branch_count(w) == nu0 + 1
