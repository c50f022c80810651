"""Tests for exact Q(w) arithmetic, polynomials, gcd/resultants, sqrt."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvelattice.algebra import (
    C_ONE,
    C_ZERO,
    NOT_A_SQUARE,
    OMEGA,
    Cyclo,
    MPoly,
    ParseError,
    ProjPoint,
    UPoly,
    cyclo_nth_roots,
    frac_nth_root,
    gcd,
    is_weighted_homogeneous,
    parse_poly,
    poly_sqrt,
    qomega_roots,
    render,
    resultant,
    weighted_degree,
)

XYZ = ("x", "y", "z")

rationals = st.builds(
    Fraction, st.integers(-30, 30), st.integers(1, 7)
)
cyclos = st.builds(Cyclo, rationals, rationals)


def rand_poly(rng, variables=XYZ, deg=3, terms=4, with_omega=True):
    out = MPoly.zero(variables)
    for _ in range(terms):
        exps = [0] * len(variables)
        for _ in range(rng.randint(0, deg)):
            exps[rng.randrange(len(variables))] += 1
        b = rng.randint(-2, 2) if with_omega else 0
        c = Cyclo(rng.randint(-4, 4), b)
        out = out + MPoly.monomial(variables, exps, c)
    return out


class TestCyclo:
    def test_omega_relation(self):
        assert OMEGA * OMEGA + OMEGA + C_ONE == C_ZERO

    def test_norm_and_inverse(self):
        x = Cyclo(Fraction(3, 2), Fraction(-5, 7))
        assert x * x.inverse() == C_ONE
        assert x.norm() == Fraction(3, 2) ** 2 + Fraction(3, 2) * Fraction(5, 7) + Fraction(5, 7) ** 2

    def test_conjugate_is_omega_squared(self):
        assert OMEGA.conjugate() == OMEGA * OMEGA

    @given(cyclos, cyclos, cyclos)
    @settings(max_examples=60, deadline=None)
    def test_field_axioms(self, x, y, z):
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        if not x.is_zero():
            assert x * x.inverse() == C_ONE


class TestParser:
    def test_nine_cusp_sextic(self):
        p = parse_poly("x^6 - 2*x^3*y^3 - 2*x^3*z^3 + y^6 - 2*y^3*z^3 + z^6", XYZ)
        assert len(p.terms) == 6
        assert p.degree() == 6
        assert p.terms[(6, 0, 0)] == C_ONE
        assert p.terms[(3, 3, 0)] == Cyclo(-2)

    def test_zero(self):
        p = parse_poly("0", XYZ)
        assert p.is_zero()
        assert p.degree() == -1

    def test_like_term_merge(self):
        p = parse_poly("(1/2)*w*x + (1/2)*w*x", XYZ)
        assert p.terms == {(1, 0, 0): OMEGA}

    def test_rational_and_omega_coefficients(self):
        p = parse_poly("(2/3 - w)*x*y + 5", XYZ)
        assert p.terms[(1, 1, 0)] == Cyclo(Fraction(2, 3), -1)
        assert p.constant_coeff() == Cyclo(5)

    def test_syntax_error_position(self):
        with pytest.raises(ParseError):
            parse_poly("x + + y", XYZ)
        with pytest.raises(ParseError):
            parse_poly("x + q", XYZ)

    def test_round_trip_random(self):
        rng = random.Random(7)
        for _ in range(40):
            p = rand_poly(rng)
            assert parse_poly(render(p), XYZ) == p

    def test_round_trip_edge_cases(self):
        for text in ["0", "-x", "w*x - y", "(1/2 - 3*w)*z^2", "-3/4"]:
            p = parse_poly(text, XYZ)
            assert parse_poly(render(p), XYZ) == p


class TestGcd:
    def test_gcd_with_zero_is_normalized(self):
        p = parse_poly("2*x^2 + 2*y^2", XYZ)
        g = gcd(p, MPoly.zero(XYZ))
        assert g == parse_poly("x^2 + y^2", XYZ)

    def test_shared_factor(self):
        # oracle: built from factors, checked by exact division
        xpy = parse_poly("x + y", XYZ)
        p = xpy * xpy * parse_poly("x - z", XYZ)
        q = xpy * parse_poly("z^2", XYZ)
        g = gcd(p, q)
        assert g == xpy
        p.divide_exact(g)
        q.divide_exact(g)

    def test_coprime_cubics(self):
        rng = random.Random(2024)
        p = rand_poly(rng, deg=3)
        q = rand_poly(rng, deg=3)
        # oracle: resultant in x is nonzero, so no common factor involving x
        assert not resultant(p, q, "x").is_zero()
        assert gcd(p, q).degree() == 0

    @settings(max_examples=15, deadline=None)
    @given(st.integers(0, 10**6))
    def test_gcd_divides_both(self, seed):
        rng = random.Random(seed)
        a = rand_poly(rng, deg=2, terms=3)
        b = rand_poly(rng, deg=2, terms=3)
        c = rand_poly(rng, deg=2, terms=2)
        p, q = a * c, b * c
        if p.is_zero() and q.is_zero():
            return
        g = gcd(p, q)
        if not p.is_zero():
            p.divide_exact(g)
        if not q.is_zero():
            q.divide_exact(g)
        if not c.is_zero():
            c.monic().divide_exact(g)  # gcd contains c


class TestResultant:
    def test_linear_convention(self):
        # Sylvester matrix [[1, -1], [1, 1]] has determinant 2 -> 2y
        r = resultant(parse_poly("x - y", XYZ), parse_poly("x + y", XYZ), "x")
        assert r == parse_poly("2*y", XYZ).coeffs_in("x")[0][0].lift_vars(("y", "z"))

    def test_self_resultant_zero(self):
        p = parse_poly("x^2 + y*x + z", XYZ)
        assert resultant(p, p, "x").is_zero()

    def test_hand_sylvester(self):
        # oracle: det [[1,0,-t],[1,-3,0],[0,1,-3]] = 9 - t
        vars2 = ("x", "t")
        r = resultant(parse_poly("x^2 - t", vars2), parse_poly("x - 3", vars2), "x")
        assert r == parse_poly("9 - t", ("t",))

    def test_vanishes_iff_common_factor(self):
        rng = random.Random(11)
        for _ in range(10):
            a = rand_poly(rng, deg=2, terms=2)
            b = rand_poly(rng, deg=2, terms=2)
            c = rand_poly(rng, deg=1, terms=2)
            if a.degree_in("x") <= 0 or b.degree_in("x") <= 0 or c.degree_in("x") <= 0:
                continue
            assert resultant(a * c, b * c, "x").is_zero()

    def test_matches_sympy_on_random_bivariate(self):
        import sympy

        x, y = sympy.symbols("x y")
        rng = random.Random(5)
        for _ in range(6):
            p = rand_poly(rng, ("x", "y"), deg=3, terms=4, with_omega=False)
            q = rand_poly(rng, ("x", "y"), deg=3, terms=4, with_omega=False)
            if p.degree_in("x") <= 0 or q.degree_in("x") <= 0:
                continue
            sp = sum(
                sympy.Rational(c.a.numerator, c.a.denominator) * x ** e[0] * y ** e[1]
                for e, c in p.terms.items()
            )
            sq = sum(
                sympy.Rational(c.a.numerator, c.a.denominator) * x ** e[0] * y ** e[1]
                for e, c in q.terms.items()
            )
            expected = sympy.Poly(sympy.resultant(sp, sq, x), y)
            got = resultant(p, q, "x")
            ours = sum(
                sympy.Rational(c.a.numerator, c.a.denominator) * y ** e[0]
                for e, c in got.terms.items()
            )
            assert sympy.expand(ours - expected.as_expr()) == 0


class TestPolySqrt:
    def test_round_trip_with_omega(self):
        s = parse_poly("x^2 + w*y*z", XYZ)
        assert poly_sqrt(s * s) == s

    def test_odd_exponent(self):
        assert poly_sqrt(parse_poly("x^2*y", XYZ)) is NOT_A_SQUARE

    def test_random_round_trip(self):
        rng = random.Random(3)
        for _ in range(25):
            c = rand_poly(rng, deg=3, terms=4)
            if c.is_zero():
                continue
            r = poly_sqrt(c * c)
            assert r == c or r == -c

    def test_non_square_detected(self):
        assert poly_sqrt(parse_poly("x^2 + y^2 + z^2", XYZ)) is NOT_A_SQUARE
        # leading coefficient 2 is not a square in Q(w)
        assert poly_sqrt(parse_poly("2*x^2", XYZ)) is NOT_A_SQUARE


class TestRoots:
    def test_rational_roots(self):
        p = UPoly([Cyclo(-6), Cyclo(11), Cyclo(-6), C_ONE])  # (t-1)(t-2)(t-3)
        roots, missing = qomega_roots(p)
        assert missing == 0
        assert {r.a for r, _ in roots} == {1, 2, 3}

    def test_omega_roots(self):
        # t^2 + t + 1 has roots w, w^2
        roots, missing = qomega_roots(UPoly([C_ONE, C_ONE, C_ONE]))
        assert missing == 0
        assert {r for r, _ in roots} == {OMEGA, OMEGA * OMEGA}

    def test_missing_roots_counted(self):
        # t^2 - 2 has no roots in Q(w)
        roots, missing = qomega_roots(UPoly([Cyclo(-2), C_ZERO, C_ONE]))
        assert roots == []
        assert missing == 2

    def test_multiplicity(self):
        lin = UPoly([-OMEGA, C_ONE])
        p = lin * lin * UPoly([Cyclo(-5), C_ONE])
        roots, missing = qomega_roots(p)
        assert missing == 0
        assert sorted(m for _, m in roots) == [1, 2]

    def test_cube_roots(self):
        assert cyclo_nth_roots(Cyclo(8), 3) == [Cyclo(2)] or set(
            cyclo_nth_roots(Cyclo(8), 3)
        ) == {Cyclo(2), Cyclo(2) * OMEGA, Cyclo(2) * OMEGA**2}
        assert len(cyclo_nth_roots(Cyclo(8), 3)) == 3  # 2, 2w, 2w^2
        assert cyclo_nth_roots(Cyclo(-4), 3) == []  # cube root of -4 not in Q(w)
        assert cyclo_nth_roots(Cyclo(4), 3) == []

    def test_sqrt_in_field(self):
        assert set(cyclo_nth_roots(Cyclo(-3), 2)) == {Cyclo(1, 2), Cyclo(-1, -2)}
        assert cyclo_nth_roots(Cyclo(2), 2) == []


class TestWeightedDegree:
    def test_spec_examples(self):
        xy = ("x", "y")
        p = parse_poly("x^2 + y^3", xy)
        assert weighted_degree(p, (3, 2)) == 6
        assert is_weighted_homogeneous(p, (3, 2))
        assert weighted_degree(p, (1, 1)) == 3
        assert not is_weighted_homogeneous(p, (1, 1))
        q = parse_poly("x^4 + y^2", xy)
        assert weighted_degree(q, (1, 2)) == 4
        assert is_weighted_homogeneous(q, (1, 2))


class TestProjPoint:
    def test_canonical_representative(self):
        p = ProjPoint([Cyclo(2), Cyclo(4), Cyclo(2)])
        assert p.coords == (C_ONE, Cyclo(2), C_ONE)
        assert p == ProjPoint([C_ONE, Cyclo(2), C_ONE])

    def test_scaling_equality_with_omega(self):
        assert ProjPoint([OMEGA, C_ONE, C_ZERO]) == ProjPoint(
            [OMEGA * OMEGA, OMEGA, C_ZERO]
        )

    def test_zero_rejected(self):
        with pytest.raises(Exception):
            ProjPoint([C_ZERO, C_ZERO, C_ZERO])


def test_frac_nth_root():
    assert frac_nth_root(Fraction(4, 9), 2) == Fraction(2, 3)
    assert frac_nth_root(Fraction(-8, 27), 3) == Fraction(-2, 3)
    assert frac_nth_root(Fraction(2), 2) is None
    assert frac_nth_root(Fraction(-4), 2) is None
