"""Curve profiles: singular points, quasiadjunction defects, Alexander data.

A curve profile wraps a squarefree homogeneous ternary form together with
its classified singular points.  Defects are superabundances

    delta_alpha = l_alpha - h_alpha(alpha*d - 3)

where l counts quasiadjunction conditions and h is the number of
independent conditions they impose on forms of degree alpha*d - 3.  The
Alexander polynomial is carried as its vanishing-order table at the roots
of unity zeta(alpha), with ord at alpha in (0,1) equal to
delta_alpha + delta_(1-alpha) and ord at 0 equal to (components - 1).

Singular loci whose points are not rational over Q(w) can be described
scheme-theoretically (a cusp scheme cut out by two forms, saturated away
from a line); lengths and Hilbert data then come from exact linear
algebra instead of point coordinates.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

import sympy

from .algebra import (
    C_ONE,
    C_ZERO,
    Cyclo,
    MPoly,
    ProjPoint,
    UPoly,
    gcd as poly_gcd,
    qomega_roots,
    render,
    resultant,
)
from .linalg import kernel_basis, rank as matrix_rank


class IncompleteLocus(ValueError):
    """Singular-point elimination certifies points outside Q(w).

    Carries the points that were found and the unexplained degree."""

    def __init__(self, unexplained, found):
        super().__init__(
            f"singular locus has {unexplained} unexplained root(s) outside Q(w)"
        )
        self.unexplained = unexplained
        self.found = found


class UnclassifiedPoint(ValueError):
    """A singular point needs a user-supplied classification."""


class Functional:
    """A linear functional on forms: a derivative order evaluated at a point."""

    __slots__ = ("point", "order")

    def __init__(self, point: ProjPoint, order=(0, 0, 0)):
        object.__setattr__(self, "point", point)
        object.__setattr__(self, "order", tuple(order))

    def __setattr__(self, *args):
        raise AttributeError("Functional values are immutable")

    def row(self, monomials, variables):
        """Evaluation row of this functional against a monomial list."""
        out = []
        for exps in monomials:
            mono = MPoly.monomial(variables, exps)
            for v, k in zip(variables, self.order):
                for _ in range(k):
                    mono = mono.derivative(v)
            out.append(mono.eval(self.point.coords))
        return out


class ClassifiedPoint:
    """A singular point with its quasiadjunction data.

    kind is "node", "cusp", or "custom"; custom points carry an explicit
    map alpha -> list of Functional and may declare themselves of ADE
    type (nodes and cusps always are).
    """

    __slots__ = ("point", "kind", "custom", "ade")

    def __init__(self, point: ProjPoint, kind: str, custom=None, ade=None):
        kind = kind.lower()
        if kind not in ("node", "cusp", "custom", "unclassified"):
            raise ValueError(f"unknown singularity kind {kind!r}")
        if ade is None:
            ade = kind in ("node", "cusp")
        object.__setattr__(self, "point", point)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "ade", bool(ade))
        object.__setattr__(
            self,
            "custom",
            {Fraction(a): list(fs) for a, fs in (custom or {}).items()},
        )

    def __setattr__(self, *args):
        raise AttributeError("ClassifiedPoint values are immutable")

    def conditions_at(self, alpha: Fraction):
        if self.kind == "unclassified":
            raise UnclassifiedPoint(repr(self.point))
        if self.kind == "node":
            return []
        if self.kind == "cusp":
            if alpha == Fraction(5, 6):
                return [Functional(self.point)]
            return []
        return list(self.custom.get(alpha, []))

    def local_jacobian_length(self):
        """Length of the local Jacobian scheme (used for completeness checks)."""
        if self.kind == "node":
            return 1
        if self.kind == "cusp":
            return 2
        return None

    def __repr__(self):
        return f"ClassifiedPoint({self.point!r}, {self.kind!r})"


def conditions_at(alpha, points):
    """All quasiadjunction functionals the points impose at alpha."""
    alpha = Fraction(alpha)
    out = []
    for p in points:
        out.extend(p.conditions_at(alpha))
    return out


# ---------------------------------------------------------------------------
# Singular point detection over Q(w)
# ---------------------------------------------------------------------------


def _upoly_gcd_many(polys):
    g = None
    for p in polys:
        if p.is_zero():
            continue
        g = p if g is None else g.gcd(p)
    return g


def _to_upoly(p: MPoly, var) -> UPoly:
    d = p.degree_in(var)
    i = p.vars.index(var)
    cs = [C_ZERO] * (d + 1) if d >= 0 else []
    for e, c in p.terms.items():
        if any(e[j] for j in range(len(p.vars)) if j != i):
            raise ValueError("not univariate")
        if e[i] <= d:
            cs[e[i]] = c
    return UPoly(cs)


def singular_points(g: MPoly, classify=True):
    """All singular points of V(g) with coordinates in Q(w), classified.

    Elimination: pairwise resultants of the partial derivatives in the
    affine chart z=1 give a univariate candidate polynomial; roots are
    extracted inside Q(w) and verified against the full gradient, then
    the line z=0 is handled chart by chart.  Raises IncompleteLocus when
    an unexplained elimination factor (or an x-level gcd factor) has
    roots outside Q(w).
    """
    if len(g.vars) != 3:
        raise ValueError("expected a ternary form")
    vx, vy, vz = g.vars
    partials = [g.derivative(v) for v in g.vars]
    unexplained = 0
    points = []

    # affine chart z = 1
    aff = [p.subs({vz: 1}) for p in partials]
    res = []
    for i in range(3):
        for j in range(i + 1, 3):
            p, q = aff[i], aff[j]
            if p.degree_in(vx) <= 0 and q.degree_in(vx) <= 0:
                continue
            if p.is_zero() or q.is_zero():
                continue
            r = resultant(p, q, vx)
            if not r.is_zero():
                res.append(_to_upoly(r, vy))
    cand = _upoly_gcd_many(res)
    if cand is None:
        # no x-dependence anywhere: the chart equations live in y alone,
        # so any common y root would give an infinite singular locus
        nz = [_to_upoly(p, vy) for p in aff if not p.is_zero()]
        g1 = _upoly_gcd_many(nz)
        if g1 is not None and g1.degree() > 0:
            raise IncompleteLocus(-1, [])
        cand = UPoly([C_ONE])
    if cand.degree() > 0:
        yroots, miss_y = qomega_roots(cand)
        unexplained += miss_y
        for y0, _m in yroots:
            slices = [p.subs({vy: y0}) for p in aff]
            upolys = []
            zero_slice = False
            for s in slices:
                if s.is_zero():
                    zero_slice = True
                    continue
                upolys.append(_to_upoly(s, vx))
            if not upolys:
                if zero_slice:
                    # gradient vanishes identically on a whole line
                    raise IncompleteLocus(-1, points)
                continue
            ux = _upoly_gcd_many(upolys)
            if ux is None or ux.degree() <= 0:
                continue
            xroots, miss_x = qomega_roots(ux)
            unexplained += miss_x
            for x0, _mx in xroots:
                if all(p.eval((x0, y0, C_ONE)).is_zero() for p in partials):
                    points.append(ProjPoint((x0, y0, C_ONE)))

    # line z = 0, chart y = 1
    at_inf = [p.subs({vz: 0, vy: 1}) for p in partials]
    upolys = [_to_upoly(p, vx) for p in at_inf if not p.is_zero()]
    if upolys:
        u = _upoly_gcd_many(upolys)
        if u is not None and u.degree() > 0:
            xroots, miss = qomega_roots(u)
            unexplained += miss
            for x0, _m in xroots:
                if all(p.eval((x0, C_ONE, C_ZERO)).is_zero() for p in partials):
                    points.append(ProjPoint((x0, C_ONE, C_ZERO)))
    else:
        # all partials vanish identically on the chart: cannot happen for
        # a squarefree form with finite singular locus
        raise IncompleteLocus(-1, points)
    if all(p.eval((C_ONE, C_ZERO, C_ZERO)).is_zero() for p in partials):
        points.append(ProjPoint((C_ONE, C_ZERO, C_ZERO)))

    points = list(dict.fromkeys(points))
    if unexplained:
        raise IncompleteLocus(unexplained, points)
    if not classify:
        return [ClassifiedPoint(p, "unclassified") for p in points]
    return [classify_point(g, p) for p in points]


def _local_expansion(g: MPoly, point: ProjPoint):
    """Degree-graded pieces of g recentred at the point in an affine chart."""
    coords = point.coords
    chart = max(i for i in range(3) if not coords[i].is_zero())
    local_vars = ("_u", "_v")
    images = []
    j = 0
    for i in range(3):
        if i == chart:
            images.append(MPoly.const(local_vars, coords[i]))
        else:
            images.append(
                MPoly.const(local_vars, coords[i])
                + MPoly.variable(local_vars[j], local_vars)
            )
            j += 1
    local = g.compose(images)
    pieces = {}
    for e, c in local.terms.items():
        d = sum(e)
        pieces.setdefault(d, {})[e] = c
    return {d: MPoly(local_vars, t) for d, t in pieces.items()}


def classify_point(g: MPoly, point: ProjPoint) -> ClassifiedPoint:
    """Classify a singular point as node, cusp, or unclassified."""
    pieces = _local_expansion(g, point)
    if 0 in pieces or 1 in pieces:
        raise ValueError(f"{point!r} is not a singular point of the curve")
    quad = pieces.get(2)
    if quad is None:
        return ClassifiedPoint(point, "unclassified")
    a = quad.terms.get((2, 0), C_ZERO)
    b = quad.terms.get((1, 1), C_ZERO)
    c = quad.terms.get((0, 2), C_ZERO)
    m = [[a + a, b], [b, c + c]]
    r = matrix_rank(m)
    if r == 2:
        return ClassifiedPoint(point, "node")
    if r == 1:
        ker = kernel_basis(m)[0]
        cubic = pieces.get(3, MPoly.zero(("_u", "_v")))
        if not cubic.eval(ker).is_zero():
            return ClassifiedPoint(point, "cusp")
    return ClassifiedPoint(point, "unclassified")


# ---------------------------------------------------------------------------
# Cusp schemes (singular loci described without point coordinates)
# ---------------------------------------------------------------------------


class CuspScheme:
    """A reduced set of cusps cut out by two forms, away from a line.

    The cusps are the common zeros of the two generators that do not lie
    on the given coordinate line (saturation direction).  The scheme is
    assumed reduced; counts and Hilbert data are computed by elimination
    and exact linear algebra.

    With include_line=True the distinct common zeros ON the line are
    counted too, as reduced points: they are the roots of the shared
    binary factor of the two restrictions, so membership conditions stay
    rational even when the roots themselves are not.
    """

    __slots__ = (
        "gen_a", "gen_b", "sat_var", "include_line", "_count", "_hilbert"
    )

    def __init__(self, gen_a: MPoly, gen_b: MPoly, sat_var: str,
                 include_line=False):
        if gen_a.vars != gen_b.vars or len(gen_a.vars) != 3:
            raise ValueError("cusp scheme needs two ternary forms")
        if sat_var not in gen_a.vars:
            raise ValueError("unknown saturation variable")
        object.__setattr__(self, "gen_a", gen_a)
        object.__setattr__(self, "gen_b", gen_b)
        object.__setattr__(self, "sat_var", sat_var)
        object.__setattr__(self, "include_line", bool(include_line))
        object.__setattr__(self, "_count", None)
        object.__setattr__(self, "_hilbert", {})

    def _line_divisor(self):
        """(squarefree affine gcd of the restrictions, root-at-(1:0) flag)."""
        sv = self.sat_var
        rest = [v for v in self.gen_a.vars if v != sv]
        a0 = self.gen_a.subs({sv: 0})
        b0 = self.gen_b.subs({sv: 0})
        if a0.is_zero() or b0.is_zero():
            z = b0 if a0.is_zero() else a0
            if z.is_zero():
                raise ValueError("both restrictions vanish identically")
            u = _binary_to_upoly(z, rest)
            return u.squarefree_part(), u.degree() < z.degree()
        ua, ub = _binary_to_upoly(a0, rest), _binary_to_upoly(b0, rest)
        g = ua.gcd(ub).squarefree_part()
        has_inf = ua.degree() < a0.degree() and ub.degree() < b0.degree()
        return g, has_inf

    def __setattr__(self, *args):
        raise AttributeError("CuspScheme values are immutable")

    def count(self) -> int:
        """Number of cusps: distinct projected directions of the common
        zeros off the saturation line, maximized over projection centers."""
        if self._count is not None:
            return self._count
        a, b = self.gen_a, self.gen_b
        sv = self.sat_var
        rest = [v for v in a.vars if v != sv]
        # intersections on the saturation line project to the same
        # directions under every shear below
        on_line = _common_binary(a.subs({sv: 0}), b.subs({sv: 0}), rest)
        best = 0
        for shear in (0, 1, 2):
            if shear:
                # move the projection center: rest[0] -> rest[0] + shear*sv
                sub = MPoly.variable(rest[0], a.vars) + MPoly.variable(
                    sv, a.vars
                ).scale(shear)
                images = [
                    sub if v == rest[0] else MPoly.variable(v, a.vars)
                    for v in a.vars
                ]
                aa, bb = a.compose(images), b.compose(images)
            else:
                aa, bb = a, b
            # dehomogenize before eliminating: the resultant of the
            # homogeneous pair is a binary form whose degree is known in
            # advance, so the missing root at (1:0) is a degree deficit
            m, n = aa.degree_in(sv), bb.degree_in(sv)
            formal = n * (aa.degree() - m) + m * (bb.degree() - n) + m * n
            r1m = resultant(
                aa.subs({rest[1]: 1}),
                bb.subs({rest[1]: 1}),
                sv,
                degree_bound=formal,
            )
            if r1m.is_zero():
                continue
            r1 = _to_upoly(r1m, rest[0])
            total = r1.squarefree_part().degree() + (
                1 if r1.degree() < formal else 0
            )
            count = total - on_line
            if count == best and shear:
                # two agreeing projection centers: collisions ruled out
                break
            best = max(best, count)
        if self.include_line:
            best += on_line
        object.__setattr__(self, "_count", best)
        return best

    def vanishing_dim(self, m: int) -> int:
        """Dimension of degree-m forms vanishing on the (saturated) scheme."""
        if m in self._hilbert:
            return self._hilbert[m]
        val = None
        stable = 0
        n = 1
        while stable < 2 and n <= m + 24:
            cur = self._saturation_piece(m, n)
            if cur == val:
                stable += 1
            else:
                val, stable = cur, 0
            n += 1
        self._hilbert[m] = val
        return val

    def _saturation_piece(self, m: int, n: int) -> int:
        """dim { h of degree m : sat_var^n * h in (gen_a, gen_b) }."""
        a, b, sv = self.gen_a, self.gen_b, self.sat_var
        variables = a.vars
        da, db = a.degree(), b.degree()
        big = m + n
        cols = []
        big_monos = _monomials(big)
        index = {e: i for i, e in enumerate(big_monos)}

        def col_of(p: MPoly):
            col = [C_ZERO] * len(big_monos)
            for e, c in p.terms.items():
                col[index[e]] = c
            return col

        w_cols = []
        for gen, dg in ((a, da), (b, db)):
            if big - dg < 0:
                continue
            for e in _monomials(big - dg):
                w_cols.append(col_of(gen * MPoly.monomial(variables, e)))
        si = variables.index(sv)
        h_monos = _monomials(m)
        v_cols = []
        for e in h_monos:
            ne = list(e)
            ne[si] += n
            col = [C_ZERO] * len(big_monos)
            col[index[tuple(ne)]] = C_ONE
            v_cols.append(col)
        if not w_cols:
            return 0
        if self.include_line:
            # intersect with the linear conditions "h restricted to the
            # line vanishes on the shared binary factor": append the
            # condition rows to the unit columns and zero-pad the
            # generator columns, then reuse the same rank bookkeeping
            line_rows = self._line_condition_rows(m, h_monos)
            pad = [C_ZERO] * len(line_rows)
            w_cols = [col + pad for col in w_cols]
            v_cols = [
                col + [row[i] for row in line_rows]
                for i, col in enumerate(v_cols)
            ]
        dim_w = matrix_rank(_transpose(w_cols))
        dim_vw = matrix_rank(_transpose(v_cols + w_cols))
        return len(v_cols) + dim_w - dim_vw

    def _line_condition_rows(self, m: int, h_monos):
        """Rows expressing: the binary form h|_{sat_var=0} is divisible by
        the squarefree common factor of the two restricted generators."""
        variables = self.gen_a.vars
        si = variables.index(self.sat_var)
        rest = [v for v in variables if v != self.sat_var]
        i0 = variables.index(rest[0])
        g, has_inf = self._line_divisor()
        g = g.monic()
        s = g.degree()
        # x^i mod g for i = 0..m, as length-s coefficient vectors
        x = UPoly([C_ZERO, C_ONE])
        rems = []
        rem = UPoly([C_ONE])
        for _ in range(m + 1):
            rems.append(
                list(rem.coeffs) + [C_ZERO] * (s - len(rem.coeffs))
            )
            rem = (rem * x).divmod(g)[1] if s else UPoly([])
        rows = [
            [
                rems[e[i0]][j] if e[si] == 0 else C_ZERO
                for e in h_monos
            ]
            for j in range(s)
        ]
        if has_inf:
            # the common root at (1:0) forces the top coefficient to zero
            rows.append(
                [
                    C_ONE if e[si] == 0 and e[i0] == m else C_ZERO
                    for e in h_monos
                ]
            )
        return rows


def _monomials(d: int):
    return [
        (i, j, d - i - j) for i in range(d + 1) for j in range(d + 1 - i)
    ]


def _transpose(cols):
    return [list(row) for row in zip(*cols)]


def _binary_to_upoly(r: MPoly, rest) -> UPoly:
    """A binary form in rest = (v1, v2), dehomogenized with v2 = 1."""
    return _to_upoly(r.subs({rest[1]: 1}), rest[0])


def _root_at_infinity(r1: UPoly, r: MPoly) -> int:
    return 1 if r1.degree() < r.degree() else 0


def _common_binary(a0: MPoly, b0: MPoly, rest) -> int:
    """Distinct common roots of two binary forms (counting (1:0))."""
    if a0.is_zero() or b0.is_zero():
        z = b0 if a0.is_zero() else a0
        if z.is_zero():
            raise ValueError("both restrictions vanish identically")
        u = _binary_to_upoly(z, rest)
        return u.squarefree_part().degree() + _root_at_infinity(u, z)
    ua, ub = _binary_to_upoly(a0, rest), _binary_to_upoly(b0, rest)
    g = ua.gcd(ub)
    n = g.squarefree_part().degree()
    if ua.degree() < a0.degree() and ub.degree() < b0.degree():
        n += 1  # common root at (1:0)
    return n


# ---------------------------------------------------------------------------
# Curve profiles and defects
# ---------------------------------------------------------------------------


class CurveProfile:
    """A squarefree plane curve with classified singularity data.

    Singularities are either a list of ClassifiedPoint (rational case) or
    a CuspScheme (cusps outside Q(w)).  components is the number of
    irreducible components, declared by the caller (default 1).
    """

    __slots__ = ("g", "d", "points", "scheme", "components")

    def __init__(self, g: MPoly, points=None, scheme=None, components=1,
                 check_squarefree=True):
        if len(g.vars) != 3 or g.is_zero():
            raise ValueError("expected a nonzero ternary form")
        if not g.is_homogeneous():
            raise ValueError("curve polynomial must be homogeneous")
        if check_squarefree and not _squarefree_on_generic_line(g):
            raise ValueError("curve polynomial is not squarefree")
        if points is None and scheme is None:
            points = singular_points(g)
        if points is not None:
            grads = [g.derivative(v) for v in g.vars]
            for cp in points:
                if not all(p.eval(cp.point.coords).is_zero() for p in grads):
                    raise ValueError(f"{cp.point!r} is not singular on the curve")
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "d", g.degree())
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "scheme", scheme)
        object.__setattr__(self, "components", int(components))

    def __setattr__(self, *args):
        raise AttributeError("CurveProfile values are immutable")

    def cusp_count(self) -> int:
        if self.scheme is not None:
            return self.scheme.count()
        return sum(1 for p in self.points if p.kind == "cusp")

    def singularity_inventory(self):
        if self.scheme is not None:
            return {"cusp": self.scheme.count()}
        inv = {}
        for p in self.points:
            inv[p.kind] = inv.get(p.kind, 0) + 1
        return inv


def _squarefree_on_generic_line(g: MPoly) -> bool:
    d = g.degree()
    tvars = ("_t",)
    t = MPoly.variable("_t", tvars)
    for c1 in range(0, 5):
        for c0 in range(0, 5):
            images = [t, MPoly.const(tvars, c0) + t.scale(c1), MPoly.const(tvars, 1)]
            rg = g.compose(images)
            if rg.degree_in("_t") != d:
                continue
            u = _to_upoly(rg, "_t")
            if u.gcd(u.derivative()).degree() == 0:
                return True
    return False


def defect(profile: CurveProfile, alpha) -> tuple:
    """(l, h, delta) at alpha: conditions, independent conditions, defect."""
    alpha = Fraction(alpha)
    if not 0 < alpha <= 1:
        raise ValueError("alpha must lie in (0, 1]")
    if (alpha * profile.d).denominator != 1:
        raise ValueError("alpha * degree must be an integer")
    deg = int(alpha * profile.d) - 3
    if profile.scheme is not None:
        if alpha != Fraction(5, 6):
            return (0, 0, 0)
        l = profile.scheme.count()
        if deg < 0:
            return (l, 0, l)
        # independent conditions: monomial space minus forms vanishing
        # on the scheme
        h = len(_monomials(deg)) - profile.scheme.vanishing_dim(deg)
        return (l, h, l - h)
    fns = conditions_at(alpha, profile.points)
    l = len(fns)
    if l == 0:
        return (0, 0, 0)
    if deg < 0:
        return (l, 0, l)
    monos = _monomials(deg)
    rows = [f.row(monos, profile.g.vars) for f in fns]
    h = matrix_rank(rows)
    return (l, h, l - h)


def defect_table(profile: CurveProfile):
    """Defects at every alpha in (0, 1] with alpha*d integral."""
    d = profile.d
    return {
        Fraction(k, d): defect(profile, Fraction(k, d)) for k in range(1, d + 1)
    }


# ---------------------------------------------------------------------------
# Alexander polynomial
# ---------------------------------------------------------------------------


class AlexanderPoly:
    """Vanishing orders of the Alexander polynomial at zeta(alpha)."""

    __slots__ = ("orders", "rendered")

    def __init__(self, orders, rendered):
        object.__setattr__(
            self, "orders", {Fraction(a): int(o) for a, o in orders.items() if o}
        )
        object.__setattr__(self, "rendered", rendered)

    def __setattr__(self, *args):
        raise AttributeError("AlexanderPoly values are immutable")

    def __repr__(self):
        return f"AlexanderPoly({self.rendered})"


def ord_at(delta: AlexanderPoly, alpha) -> int:
    alpha = Fraction(alpha)
    if not 0 <= alpha < 1:
        raise ValueError("alpha must lie in [0, 1)")
    return delta.orders.get(alpha, 0)


def alexander(profile: CurveProfile) -> AlexanderPoly:
    """Alexander polynomial orders: delta_a + delta_(1-a) on (0,1), r-1 at 0."""
    d = profile.d
    deltas = {}
    for k in range(1, d):
        a = Fraction(k, d)
        deltas[a] = defect(profile, a)[2]
    orders = {}
    for a, dl in deltas.items():
        o = dl + deltas.get(1 - a, 0)
        if o:
            orders[a] = o
    r1 = profile.components - 1
    if r1:
        orders[Fraction(0)] = r1
    return AlexanderPoly(orders, _render_alexander(orders))


def _render_alexander(orders) -> str:
    rem = {a: o for a, o in orders.items() if a != 0}
    factors = []
    t = sympy.Symbol("t")
    denominators = sorted({a.denominator for a in rem})
    for n in denominators:
        prim = [Fraction(k, n) for k in range(1, n) if int_gcd(k, n) == 1]
        if not prim:
            continue
        o = min(rem.get(a, 0) for a in prim)
        if o > 0:
            phi = sympy.cyclotomic_poly(n, t)
            base = str(phi).replace("**", "^")
            factors.append(f"({base})^{o}" if o > 1 else f"({base})")
            for a in prim:
                rem[a] -= o
    for a, o in sorted(rem.items()):
        if o > 0:
            factors.append(f"(t - zeta({a}))^{o}" if o > 1 else f"(t - zeta({a}))")
    o0 = orders.get(Fraction(0), 0)
    if o0:
        factors.append(f"(t - 1)^{o0}" if o0 > 1 else "(t - 1)")
    return "*".join(factors) if factors else "1"
