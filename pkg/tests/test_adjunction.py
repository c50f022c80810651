"""Tests for singular-point detection, defects, and Alexander polynomials."""

from fractions import Fraction

import pytest

from curvelattice.algebra import C_ONE, C_ZERO, OMEGA, ProjPoint, parse_poly
from curvelattice.adjunction import (
    AlexanderPoly,
    ClassifiedPoint,
    CurveProfile,
    CuspScheme,
    Functional,
    IncompleteLocus,
    alexander,
    classify_point,
    conditions_at,
    defect,
    defect_table,
    ord_at,
    singular_points,
)

XYZ = ("x", "y", "z")


def poly(text):
    return parse_poly(text, XYZ)


NINE_CUSP = poly("x^6 - 2*x^3*y^3 - 2*x^3*z^3 + y^6 - 2*y^3*z^3 + z^6")


def six_cusp_sextic():
    """Sextic with six rational cusps on the conic x*z = y^2.

    Cusps sit at the parameter values t in {1,-1,2,-2,3,-3} of the conic's
    rational parametrization (1 : t : t^2); the cubic is a product of
    three secant lines through those point pairs.
    """
    q = poly("x*z - y^2")
    c = poly("(z - x)*(z - 4*x)*(z - 9*x)")
    return q * q * q + c * c, q, c


class TestSingularPoints:
    def test_smooth_conic_empty(self):
        assert singular_points(poly("x^2 + y*z")) == []

    def test_nodal_cubic(self):
        pts = singular_points(poly("y^2*z - x^3 - x^2*z"))
        assert len(pts) == 1
        assert pts[0].kind == "node"
        assert pts[0].point == ProjPoint((0, 0, 1))

    def test_cuspidal_cubic(self):
        pts = singular_points(poly("y^2*z - x^3"))
        assert len(pts) == 1
        assert pts[0].kind == "cusp"
        assert pts[0].point == ProjPoint((0, 0, 1))

    def test_nine_cusp_sextic(self):
        # oracle: gradient is (6x^2(x^3-y^3-z^3), 6y^2(y^3-x^3-z^3),
        # 6z^2(z^3-x^3-y^3)); common zeros are the nine points below
        pts = singular_points(NINE_CUSP)
        assert len(pts) == 9
        assert all(p.kind == "cusp" for p in pts)
        got = {p.point for p in pts}
        w2 = OMEGA * OMEGA
        expected = set()
        for e in (C_ONE, OMEGA, w2):
            expected.add(ProjPoint((C_ZERO, e, C_ONE)))
            expected.add(ProjPoint((e, C_ZERO, C_ONE)))
            expected.add(ProjPoint((e, C_ONE, C_ZERO)))
        assert got == expected

    def test_six_cusp_sextic(self):
        g, q, _c = six_cusp_sextic()
        pts = singular_points(g)
        assert len(pts) == 6
        assert all(p.kind == "cusp" for p in pts)
        for p in pts:
            assert q.eval(p.point.coords).is_zero()

    def test_irrational_cusps_raise(self):
        q = poly("x^2 + y*z")
        c = poly("x^3 + y^3 + z^3")
        g = q * q * q + c * c
        with pytest.raises(IncompleteLocus):
            singular_points(g)

    def test_node_at_infinity(self):
        # z^2 y = x^2 (x + y) has a singular point at (0 : 1 : 0)
        pts = singular_points(poly("z^2*y - x^3 - x^2*y"))
        assert any(p.point == ProjPoint((0, 1, 0)) for p in pts)

    def test_classify_rejects_smooth_point(self):
        with pytest.raises(ValueError):
            classify_point(poly("x^2 + y*z"), ProjPoint((0, 1, 0)))


class TestConditions:
    def test_node_has_none(self):
        p = ClassifiedPoint(ProjPoint((0, 0, 1)), "node")
        assert conditions_at(Fraction(5, 6), [p]) == []

    def test_cusp_only_at_five_sixths(self):
        p = ClassifiedPoint(ProjPoint((0, 0, 1)), "cusp")
        assert len(conditions_at(Fraction(5, 6), [p])) == 1
        assert conditions_at(Fraction(1, 6), [p]) == []
        assert conditions_at(Fraction(1, 2), [p]) == []

    def test_custom(self):
        f = Functional(ProjPoint((0, 0, 1)), (1, 0, 0))
        p = ClassifiedPoint(
            ProjPoint((0, 0, 1)), "custom", {Fraction(1, 2): [f]}
        )
        assert conditions_at(Fraction(1, 2), [p]) == [f]
        assert conditions_at(Fraction(5, 6), [p]) == []

    def test_functional_row_derivative(self):
        # d/dx of x^2 at (3, 0, 1) is 6
        f = Functional(ProjPoint((3, 0, 1)), (1, 0, 0))
        row = f.row([(2, 0, 0)], XYZ)
        assert row[0].a == 6


class TestDefects:
    def test_nine_cusp(self):
        prof = CurveProfile(NINE_CUSP)
        # oracle: nine point conditions on cubics; the cusps lie on three
        # independent cubics (x^3 - y^3 - z^3 and its two siblings), so
        # only six conditions are independent
        assert defect(prof, Fraction(5, 6)) == (9, 6, 3)
        assert defect(prof, Fraction(1, 6)) == (0, 0, 0)
        assert defect(prof, Fraction(1, 2)) == (0, 0, 0)

    def test_six_cusp_on_conic(self):
        g, _q, _c = six_cusp_sextic()
        prof = CurveProfile(g)
        # six points on a conic: conics through them form a pencil member
        # short, five independent conditions
        assert defect(prof, Fraction(5, 6)) == (6, 5, 1)

    def test_generic_cusps_no_defect(self):
        # three cusps in general position impose independent conditions
        pts = [
            ClassifiedPoint(ProjPoint((0, 0, 1)), "cusp"),
            ClassifiedPoint(ProjPoint((0, 1, 0)), "cusp"),
            ClassifiedPoint(ProjPoint((1, 0, 0)), "cusp"),
        ]
        rows = [
            f.row(
                [(i, j, 3 - i - j) for i in range(4) for j in range(4 - i)],
                XYZ,
            )
            for f in conditions_at(Fraction(5, 6), pts)
        ]
        from curvelattice.linalg import rank

        assert rank(rows) == 3

    def test_degree_window_validation(self):
        prof = CurveProfile(NINE_CUSP)
        with pytest.raises(ValueError):
            defect(prof, Fraction(1, 5))
        with pytest.raises(ValueError):
            defect(prof, Fraction(7, 6))

    def test_defect_table(self):
        prof = CurveProfile(NINE_CUSP)
        table = defect_table(prof)
        assert table[Fraction(5, 6)] == (9, 6, 3)
        assert all(
            v == (0, 0, 0) for a, v in table.items() if a != Fraction(5, 6)
        )


class TestCuspScheme:
    def test_rational_count_matches_points(self):
        g, q, c = six_cusp_sextic()
        sch = CuspScheme(q, c, "z")
        assert sch.count() == 6

    def test_irrational_count(self):
        q = poly("x^2 + y*z")
        c = poly("x^3 + y^3 + z^3")
        sch = CuspScheme(q, c, "z")
        assert sch.count() == 6

    def test_scheme_defect_matches_point_route(self):
        g, q, c = six_cusp_sextic()
        point_prof = CurveProfile(g)
        scheme_prof = CurveProfile(g, scheme=CuspScheme(q, c, "z"))
        a = Fraction(5, 6)
        assert defect(scheme_prof, a) == defect(point_prof, a)

    def line_crossing_scheme(self):
        """Conic and cubic meeting in six rational points, one on z = 0.

        On the conic x*z = y^2 with parametrization (1 : t : t^2), the
        cubic restricts to t(t^2-1)(t^2-4)(t-3): six simple roots, so
        all six intersections are transversal.  t = 0 gives (1:0:0) on
        the line z = 0; the other five points are off it.
        """
        q = poly("x*z - y^2")
        c = poly(
            "z^3 - 3*y*z^2 - 5*y^2*z + 15*y^3 + 4*x*y^2 - 12*x^2*y"
        )
        pts = [(1, t, t * t) for t in (0, 1, -1, 2, -2, 3)]
        for p in pts:
            assert q.eval(p).is_zero() and c.eval(p).is_zero()
        return q, c, pts

    def test_include_line_count(self):
        q, c, pts = self.line_crossing_scheme()
        assert CuspScheme(q, c, "z").count() == 5
        assert CuspScheme(q, c, "z", include_line=True).count() == 6

    def test_include_line_vanishing_dim(self):
        # oracle: forms of degree m vanishing on a set of rational
        # points, by rank of the evaluation matrix
        from curvelattice.linalg import rank as matrix_rank

        q, c, pts = self.line_crossing_scheme()

        def expected(points, m):
            monos = [
                (i, j, m - i - j)
                for i in range(m + 1)
                for j in range(m + 1 - i)
            ]
            rows = [
                [
                    Fraction(p[0] ** e[0] * p[1] ** e[1] * p[2] ** e[2])
                    for e in monos
                ]
                for p in points
            ]
            return len(monos) - matrix_rank(rows)

        off = CuspScheme(q, c, "z")
        full = CuspScheme(q, c, "z", include_line=True)
        for m in (1, 2, 3):
            assert off.vanishing_dim(m) == expected(pts[1:], m)
            assert full.vanishing_dim(m) == expected(pts, m)

    def test_irrational_scheme_defect(self):
        q = poly("x^2 + y*z")
        c = poly("x^3 + y^3 + z^3")
        g = q * q * q + c * c
        prof = CurveProfile(g, scheme=CuspScheme(q, c, "z"))
        assert defect(prof, Fraction(5, 6)) == (6, 5, 1)
        assert alexander(prof).rendered == "(t^2 - t + 1)"


class TestAlexander:
    def test_nine_cusp(self):
        prof = CurveProfile(NINE_CUSP)
        delta = alexander(prof)
        assert delta.rendered == "(t^2 - t + 1)^3"
        assert ord_at(delta, Fraction(1, 6)) == 3
        assert ord_at(delta, Fraction(5, 6)) == 3
        assert ord_at(delta, Fraction(1, 2)) == 0
        assert ord_at(delta, 0) == 0

    def test_six_cusp(self):
        g, _q, _c = six_cusp_sextic()
        delta = alexander(CurveProfile(g))
        assert delta.rendered == "(t^2 - t + 1)"
        assert ord_at(delta, Fraction(1, 6)) == 1

    def test_smooth_curve_trivial(self):
        prof = CurveProfile(poly("x^4 + y^4 + z^4"), points=[])
        delta = alexander(prof)
        assert delta.rendered == "1"
        assert delta.orders == {}

    def test_components_factor(self):
        prof = CurveProfile(poly("x^4 + y^4 + z^4"), points=[], components=3)
        delta = alexander(prof)
        assert ord_at(delta, 0) == 2
        assert delta.rendered == "(t - 1)^2"

    def test_ord_at_domain(self):
        delta = AlexanderPoly({}, "1")
        with pytest.raises(ValueError):
            ord_at(delta, 1)


class TestProfileValidation:
    def test_rejects_non_squarefree(self):
        with pytest.raises(ValueError):
            CurveProfile(poly("(x + y)^2*z"))

    def test_rejects_non_homogeneous(self):
        with pytest.raises(ValueError):
            CurveProfile(poly("x^2 + y"))

    def test_rejects_non_singular_point(self):
        bad = [ClassifiedPoint(ProjPoint((1, 1, 1)), "node")]
        with pytest.raises(ValueError):
            CurveProfile(poly("x^2 + y*z"), points=bad)

    def test_inventory(self):
        prof = CurveProfile(NINE_CUSP)
        assert prof.singularity_inventory() == {"cusp": 9}
        assert prof.cusp_count() == 9
