"""Quasi-toric decompositions Y^2 = X^3 + Z^6 g as Mordell-Weil points.

Points are triples of coprime forms with deg X = 2(k+n), deg Y = 3(k+n),
deg Z = n for a curve g of degree 6k.  The order-6 symmetry
(X, Y, Z) -> (w X, -Y, Z) produces six decompositions per orbit; the
height is 2(k+n) and pairings come from a gcd formula, with the pairs
inside one orbit evaluated by the exact cosine table h * cos(a*pi/3)
(the gcd formula overcounts shared Z-factors on orbit pairs; see the
pairing docstring).

find_toric_sextic searches for the Z = constant decompositions of a
sextic: every candidate conic through six cusps, scalar conditions
lambda^3 = m with g - m q^3 a perfect square, all solved exactly over
Q(w) with out-of-field solutions counted, never fabricated.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from .adjunction import CurveProfile
from .algebra import (
    C_ONE,
    C_ZERO,
    Cyclo,
    MPoly,
    NOT_A_SQUARE,
    OMEGA,
    UPoly,
    _interp_points,
    _newton_interpolate,
    cyclo_nth_roots,
    det_cyclo,
    gcd as poly_gcd,
    poly_sqrt,
    qomega_roots,
    render,
)


class DivisibilityFailure(ArithmeticError):
    """The constructed f^3 - g^2 is not divisible by y0^6."""


class ConventionMismatch(AssertionError):
    """The pairing convention failed one of its validating identities."""


def _monomials2(d):
    return [(i, d - i) for i in range(d + 1)]


def _monomials3(d):
    return [(i, j, d - i - j) for i in range(d + 1) for j in range(d + 1 - i)]


class QuasiToricPoint:
    """A decomposition Y^2 = X^3 + Z^6 g, canonicalized so that the
    graded-lex leading coefficient of Z is 1 (scalar action
    (X, Y, Z) ~ (mu^2 X, mu^3 Y, mu Z))."""

    __slots__ = ("X", "Y", "Z", "curve", "k")

    def __init__(self, X: MPoly, Y: MPoly, Z: MPoly, curve: MPoly, k: int):
        if Z.is_zero():
            raise ValueError("Z must be nonzero")
        mu = Z.leading_coeff().inverse()
        X = X.scale(mu * mu)
        Y = Y.scale(mu * mu * mu)
        Z = Z.scale(mu)
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Y", Y)
        object.__setattr__(self, "Z", Z)
        object.__setattr__(self, "curve", curve)
        object.__setattr__(self, "k", int(k))

    def __setattr__(self, *args):
        raise AttributeError("QuasiToricPoint values are immutable")

    @property
    def n(self) -> int:
        return max(self.Z.degree(), 0)

    def key(self):
        return (
            tuple(sorted(self.X.terms.items())),
            tuple(sorted(self.Y.terms.items())),
            tuple(sorted(self.Z.terms.items())),
        )

    def __eq__(self, other):
        return isinstance(other, QuasiToricPoint) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return (
            f"QuasiToricPoint(X={render(self.X)}, Y={render(self.Y)}, "
            f"Z={render(self.Z)})"
        )


def _coprime(p: MPoly, q: MPoly) -> bool:
    """Exact coprimality over Q(w)[x,y,z], with fast certificates first.

    A common factor either has positive degree in some shared variable v0
    (excluded by a constant univariate gcd at a v0-degree-preserving
    specialization of the other variables) or is v0-free (excluded when
    the joint gcd of all v0-coefficients of p and q is constant).
    """
    if p.is_zero() or q.is_zero():
        return False
    if p.degree() == 0 or q.degree() == 0:
        return True
    v0 = next(
        (
            v
            for i, v in enumerate(p.vars)
            if any(e[i] for e in p.terms) and any(e[i] for e in q.terms)
        ),
        None,
    )
    if v0 is not None:
        others = [v for v in p.vars if v != v0]
        dp, dq = p.degree_in(v0), q.degree_in(v0)
        certified = False
        for trial in range(8):
            sub = {v: Fraction(1 + ((trial + i) % 7)) for i, v in enumerate(others)}
            ps, qs = p.subs(sub), q.subs(sub)
            if ps.degree_in(v0) != dp or qs.degree_in(v0) != dq:
                continue
            if _to_univariate(ps, v0).gcd(_to_univariate(qs, v0)).degree() == 0:
                certified = True
            break
        if certified:
            pc, _rest = p.coeffs_in(v0)
            qc, _rest = q.coeffs_in(v0)
            common = None
            for piece in list(pc.values()) + list(qc.values()):
                if piece.is_zero():
                    continue
                common = piece if common is None else poly_gcd(common, piece)
                if common.degree() == 0:
                    return True
    return poly_gcd(p, q).degree() == 0


def _to_univariate(p: MPoly, var) -> UPoly:
    i = p.vars.index(var)
    d = p.degree_in(var)
    cs = [C_ZERO] * (d + 1) if d >= 0 else []
    for e, c in p.terms.items():
        cs[e[i]] = cs[e[i]] + c
    return UPoly(cs)


def verify_decomposition(point: QuasiToricPoint):
    """(ok, detail): exact identity, degrees, and pairwise coprimality."""
    X, Y, Z, g, k = point.X, point.Y, point.Z, point.curve, point.k
    n = point.n
    if g.degree() != 6 * k:
        return False, f"curve degree {g.degree()} is not {6 * k}"
    if X.degree() != 2 * (k + n):
        return False, f"deg X = {X.degree()}, expected {2 * (k + n)}"
    if Y.degree() != 3 * (k + n):
        return False, f"deg Y = {Y.degree()}, expected {3 * (k + n)}"
    z6 = Z
    for _ in range(5):
        z6 = z6 * Z
    if not (Y * Y - X * X * X - z6 * g).is_zero():
        return False, "identity Y^2 = X^3 + Z^6 g fails"
    for a, b, label in ((X, Y, "X,Y"), (X, Z, "X,Z"), (Y, Z, "Y,Z")):
        if not _coprime(a, b):
            return False, f"{label} are not coprime"
    return True, None


def _twist(point: QuasiToricPoint, a: int, sign: int) -> QuasiToricPoint:
    w = C_ONE
    for _ in range(a % 3):
        w = w * OMEGA
    return QuasiToricPoint(
        point.X.scale(w),
        point.Y if sign > 0 else point.Y.scale(-1),
        point.Z,
        point.curve,
        point.k,
    )


def omega_point(point: QuasiToricPoint) -> QuasiToricPoint:
    """The orbit member denoted wP: (wX, Y, Z)."""
    return _twist(point, 1, 1)


def mu6_orbit(point: QuasiToricPoint):
    """The six decompositions (w^a X, +/- Y, Z), deterministically ordered."""
    orbit = {
        _twist(point, a, s) for a in range(3) for s in (1, -1)
    }
    members = sorted(
        orbit, key=lambda p: (render(p.X), render(p.Y), render(p.Z))
    )
    if len(members) != 6:
        raise ValueError("degenerate orbit: fewer than six distinct members")
    return members


def height(point: QuasiToricPoint) -> int:
    """2(k + deg Z)."""
    return 2 * (point.k + point.n)


# pairing values on orbit pairs: <P, T^a P> = h cos(a pi/3) where
# T = (wX, -Y, Z); indexed by (omega power, sign of Y)
_ORBIT_COS = {
    (0, 1): Fraction(1),
    (1, -1): Fraction(1, 2),
    (2, 1): Fraction(-1, 2),
    (0, -1): Fraction(-1),
    (1, 1): Fraction(-1, 2),
    (2, -1): Fraction(1, 2),
}


def _orbit_relation(p: QuasiToricPoint, q: QuasiToricPoint):
    for (a, s), c in _ORBIT_COS.items():
        if _twist(p, a, s) == q:
            return c
    return None


def pairing(p: QuasiToricPoint, q: QuasiToricPoint) -> int:
    """Height pairing of two decompositions of the same curve.

    Orbit-related pairs use the exact values h*cos(a*pi/3): the general
    gcd formula counts common zeros of the sections, and for orbit pairs
    every zero of the shared Z is counted although the sections do not
    meet there.  All other pairs use
    k + n1 + n2 - deg gcd(Zq^3 Yp - Zp^3 Yq, Zq^2 Xp - Zp^2 Xq),
    validated for symmetry.
    """
    if p.curve != q.curve or p.k != q.k:
        raise ValueError("points must lie over the same curve")
    rel = _orbit_relation(p, q)
    if rel is not None:
        value = height(p) * rel
        if value.denominator != 1:
            raise ConventionMismatch("orbit pairing is not an integer")
        return int(value)
    value = _pairing_gcd(p, q)
    if value != _pairing_gcd(q, p):
        raise ConventionMismatch(
            f"pairing is asymmetric: {value} vs {_pairing_gcd(q, p)}"
        )
    return value


def _pairing_gcd(p, q):
    zq3 = q.Z * q.Z * q.Z
    zp3 = p.Z * p.Z * p.Z
    a = zq3 * p.Y - zp3 * q.Y
    b = (q.Z * q.Z) * p.X - (p.Z * p.Z) * q.X
    if a.is_zero() or b.is_zero():
        raise ConventionMismatch("degenerate gcd arguments off-orbit")
    shared = poly_gcd(a, b)
    return p.k + p.n + q.n - max(shared.degree(), 0)


class GramMatrix:
    """Pairwise height pairings of a list of points."""

    __slots__ = ("basis", "entries")

    def __init__(self, basis, entries):
        object.__setattr__(self, "basis", list(basis))
        object.__setattr__(self, "entries", [list(r) for r in entries])

    def __setattr__(self, *args):
        raise AttributeError("GramMatrix values are immutable")

    @property
    def size(self):
        return len(self.basis)


def gram(points) -> GramMatrix:
    """Gram matrix of pairings; validates symmetry, even diagonal equal
    to the heights, and non-negative leading principal minors."""
    m = len(points)
    entries = [[0] * m for _ in range(m)]
    for i in range(m):
        entries[i][i] = pairing(points[i], points[i])
        if entries[i][i] != height(points[i]) or entries[i][i] % 2:
            raise ConventionMismatch("diagonal must be the even height")
        for j in range(i + 1, m):
            entries[i][j] = entries[j][i] = pairing(points[i], points[j])
    from .linalg import det_fraction

    for t in range(1, m + 1):
        minor = det_fraction([row[:t] for row in entries[:t]])
        if minor < 0:
            raise ConventionMismatch("Gram matrix is not positive semidefinite")
    return GramMatrix(points, entries)


# ---------------------------------------------------------------------------
# Toric search on sextics
# ---------------------------------------------------------------------------


class ToricSearchResult:
    """Outcome of find_toric_sextic.

    points: all decompositions found (closed under the orbit action);
    field_exhausted: solutions exist outside Q(w); missing: upper bound
    on the number of points lost that way; complete: the conic
    enumeration covered every candidate (always within Q(w)).
    """

    __slots__ = ("points", "field_exhausted", "missing", "complete")

    def __init__(self, points, field_exhausted, missing, complete):
        object.__setattr__(self, "points", list(points))
        object.__setattr__(self, "field_exhausted", bool(field_exhausted))
        object.__setattr__(self, "missing", int(missing))
        object.__setattr__(self, "complete", bool(complete))

    def __setattr__(self, *args):
        raise AttributeError("ToricSearchResult values are immutable")


def _conic_through(points, variables):
    """The conic through the points when they impose independent
    conditions up to a one-dimensional kernel; None otherwise."""
    from .linalg import kernel_basis

    monos = _monomials3(2)
    rows = [
        [MPoly.monomial(variables, e).eval(p.coords) for e in monos]
        for p in points
    ]
    ker = kernel_basis(rows)
    if len(ker) != 1:
        return None
    q = MPoly(variables, {e: c for e, c in zip(monos, ker[0]) if not c.is_zero()})
    return q.monic()


def _restrict_to_line(p: MPoly, alpha, beta):
    """Restriction to the line (t, alpha + beta t, 1) as a UPoly."""
    tv = ("t",)
    t = MPoly.variable("t", tv)
    images = [t, MPoly.const(tv, alpha) + t.scale(beta), MPoly.const(tv, 1)]
    r = p.compose(images)
    d = r.degree_in("t")
    cs = [C_ZERO] * (d + 1) if d >= 0 else []
    for e, c in r.terms.items():
        cs[e[0]] = c
    return UPoly(cs)


def _formal_sylvester_det(pc, qc, dp, dq):
    """Determinant of the Sylvester matrix with fixed formal degrees."""
    n = dp + dq
    rows = []
    for i in range(dq):
        row = [C_ZERO] * n
        for k in range(dp + 1):
            row[i + dp - k] = pc[k] if k < len(pc) else C_ZERO
        rows.append(row)
    for i in range(dp):
        row = [C_ZERO] * n
        for k in range(dq + 1):
            row[i + dq - k] = qc[k] if k < len(qc) else C_ZERO
        rows.append(row)
    return det_cyclo(rows)


def _lambda_cubed_candidates(g: MPoly, q0: MPoly, cusps):
    """Squarefree univariate polynomial (in m = lambda^3) whose roots
    contain every m with g - m q0^3 a perfect square.

    Per generic line, the discriminant of the restriction is a degree-11
    polynomial in m (computed by evaluation and Newton interpolation of
    the formal Sylvester determinant); intersecting several lines by gcd
    removes line-specific double-contact roots.
    """
    q03 = q0 * q0 * q0
    lines = []
    trials = 0
    while len(lines) < 3 and trials < 200:
        alpha, beta = Fraction(trials % 7) - 3, Fraction(trials // 7) - 2
        trials += 1
        # leading behavior: direction (1 : beta : 0) off the curve/conic
        if g.eval((C_ONE, Cyclo(beta), C_ZERO)).is_zero():
            continue
        if q0.eval((C_ONE, Cyclo(beta), C_ZERO)).is_zero():
            continue
        if any(
            (
                not c.coords[2].is_zero()
                and (c.coords[1] - Cyclo(alpha) - Cyclo(beta) * c.coords[0]).is_zero()
            )
            for c in cusps
        ):
            continue
        gl = _restrict_to_line(g, alpha, beta)
        ql3 = _restrict_to_line(q03, alpha, beta)
        if gl.degree() != 6 or ql3.degree() != 6:
            continue
        samples = _interp_points(12)
        dets = []
        for mj in samples:
            u = gl - ql3 * Cyclo(mj)
            uc = list(u.coeffs) + [C_ZERO] * (7 - len(u.coeffs))
            du = [uc[i] * i for i in range(1, 7)]
            dets.append(_formal_sylvester_det(uc, du, 6, 5))
        if all(d.is_zero() for d in dets):
            continue
        coeffs = _newton_interpolate(samples, dets)
        lines.append(UPoly(coeffs))
    if not lines:
        return None
    g_m = lines[0]
    for nxt in lines[1:]:
        g_m = g_m.gcd(nxt)
    if g_m.degree() <= 0:
        return g_m
    return g_m.squarefree_part()


def find_toric_sextic(profile: CurveProfile) -> ToricSearchResult:
    """All Z = constant decompositions of a sextic over Q(w).

    Candidate conics pass through six cusps (every 6-subset when at
    least six cusps exist; a sampled family through all cusps
    otherwise); for each conic the scalars lambda with g - lambda^3 q^3
    a perfect square are found from an exact univariate polynomial in
    m = lambda^3 and verified by extracting the square root.
    """
    if profile.d != 6:
        raise ValueError("toric search requires a sextic")
    if profile.points is None:
        raise ValueError("toric search requires an explicit cusp list")
    g = profile.g
    variables = g.vars
    cusps = [p.point for p in profile.points if p.kind == "cusp"]
    conics = {}
    complete = True
    if len(cusps) >= 6:
        for sub in combinations(cusps, 6):
            q0 = _conic_through(sub, variables)
            if q0 is not None:
                conics[render(q0)] = q0
    elif cusps:
        complete = False
        from .linalg import kernel_basis

        monos = _monomials3(2)
        rows = [
            [MPoly.monomial(variables, e).eval(p.coords) for e in monos]
            for p in cusps
        ]
        ker = kernel_basis(rows)
        combos = []
        if len(ker) == 1:
            combos = [ker[0]]
        else:
            for i in range(len(ker)):
                combos.append(ker[i])
                for j in range(i + 1, len(ker)):
                    for c in (1, -1, 2):
                        combos.append(
                            [x + Cyclo(c) * y for x, y in zip(ker[i], ker[j])]
                        )
        for vec in combos[:60]:
            q0 = MPoly(
                variables,
                {e: c for e, c in zip(monos, vec) if not c.is_zero()},
            )
            if not q0.is_zero() and q0.degree() == 2:
                conics[render(q0.monic())] = q0.monic()
    else:
        return ToricSearchResult([], False, 0, True)

    found = {}
    field_exhausted = False
    missing = 0
    for q0 in conics.values():
        cand = _lambda_cubed_candidates(g, q0, cusps)
        if cand is None or cand.degree() <= 0:
            continue
        roots, miss = qomega_roots(cand)
        if miss:
            # roots of the m-polynomial outside Q(w): each could carry a
            # full orbit; counted as an upper bound, never fabricated
            field_exhausted = True
            missing += 6 * miss
        q03 = q0 * q0 * q0
        for m0, _mult in roots:
            if m0.is_zero():
                continue
            s = poly_sqrt(g - q03.scale(m0))
            if s is NOT_A_SQUARE:
                continue
            lams = cyclo_nth_roots(m0, 3)
            if not lams:
                field_exhausted = True
                missing += 6
                continue
            base = QuasiToricPoint(
                q0.scale(-lams[0]),
                s,
                MPoly.const(variables, 1),
                g,
                1,
            )
            ok, detail = verify_decomposition(base)
            if not ok:
                raise ConventionMismatch(f"search produced invalid point: {detail}")
            for member in mu6_orbit(base):
                found[member.key()] = member
    points = sorted(
        found.values(), key=lambda p: (render(p.X), render(p.Y), render(p.Z))
    )
    if complete and not field_exhausted and len(points) not in (0, 6, 24, 72):
        raise ConventionMismatch(
            f"complete sextic search found {len(points)} points; "
            "expected 0, 6, 24, or 72"
        )
    return ToricSearchResult(points, field_exhausted, missing, complete)


# ---------------------------------------------------------------------------
# Table 1 construction (degree 12 and beyond)
# ---------------------------------------------------------------------------

Y_VARS = ("y0", "y1", "y2")


def _binary(variables, coeffs, degree):
    """Binary form in (y1, y2) of the given degree from a coefficient list."""
    terms = {}
    for (i, j), c in zip(_monomials2(degree), coeffs):
        c = Cyclo._coerce(c)
        if not c.is_zero():
            terms[(0, i, j)] = c
    return MPoly(variables, terms)


def table1_params(k: int, seed: int):
    """Seeded parameter document for table1_construct.

    Binary forms with small integer coefficients; u is kept of exact
    degree k+1 so the leading coefficient bookkeeping stays generic.
    """
    rng = random.Random(f"table1:{k}:{seed}")

    def form(degree, monic_lead=False):
        if degree < 0:
            return []
        coeffs = [rng.randint(-3, 3) for _ in range(degree + 1)]
        if monic_lead and coeffs[0] == 0:
            coeffs[0] = 1
        return coeffs

    params = {
        "u": form(k + 1, monic_lead=True),
        "f1p": form(k, monic_lead=True),
        "f2p": form(k - 1, monic_lead=True),
        "f3": form(2 * k - 1),
        "f4": form(2 * k - 2),
        "f5": form(2 * k - 3),
        "f_higher": [form(2 * k + 2 - i) for i in range(6, 2 * k + 3)],
        "g_higher": [form(3 * k + 3 - j) for j in range(6, 3 * k + 4)],
    }
    return params


def table1_construct(k: int, params, seed=None):
    """(f, g, F) with f^3 - g^2 = y0^6 F, built from the closed-form
    solution of the first six y0-coefficients.

    f = sum f_i y0^i has degree 2(k+1), g = sum g_j y0^j degree 3(k+1);
    f_0..f_2 and g_0..g_5 are forced by the free binary forms
    u, f1', f2', f_3, f_4, f_5; the remaining coefficients are free.
    Raises DivisibilityFailure if y0^6 does not divide f^3 - g^2
    (impossible for valid parameter degrees).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if seed is not None:
        params = table1_params(k, seed)
    v = Y_VARS
    y0 = MPoly.variable("y0", v)

    def bf(name, degree):
        coeffs = params.get(name) or []
        return _binary(v, coeffs, degree)

    u = bf("u", k + 1)
    if u.is_zero():
        raise ValueError("u must be nonzero")
    f1p = bf("f1p", k)
    f2p = bf("f2p", k - 1)
    f3 = bf("f3", 2 * k - 1)
    f4 = bf("f4", 2 * k - 2)
    f5 = bf("f5", 2 * k - 3)

    f_coeffs = {
        0: u * u,
        1: u * f1p,
        2: (f1p * f1p).scale(Fraction(1, 4)) + u * f2p,
    }
    for i, fi in ((3, f3), (4, f4), (5, f5)):
        if i <= 2 * k + 2:
            f_coeffs[i] = fi
    g_coeffs = {
        0: u * u * u,
        1: (u * u * f1p).scale(Fraction(3, 2)),
        2: (u * (f1p * f1p) + (u * u * f2p).scale(2)).scale(Fraction(3, 4)),
        3: (
            f1p * f1p * f1p
            + (u * f1p * f2p).scale(6)
            + (f3 * u).scale(12)
        ).scale(Fraction(1, 8)),
        4: (
            u * (f2p * f2p) + (f4 * u).scale(4) + (f3 * f1p).scale(2)
        ).scale(Fraction(3, 8)),
        5: (
            (f1p * (f2p * f2p)).scale(-1)
            + (f5 * u).scale(8)
            + (f4 * f1p).scale(4)
            + (f3 * f2p).scale(4)
        ).scale(Fraction(3, 16)),
    }
    for idx, coeffs in enumerate(params.get("f_higher") or []):
        i = 6 + idx
        if i <= 2 * k + 2:
            f_coeffs[i] = _binary(v, coeffs, 2 * k + 2 - i)
    for idx, coeffs in enumerate(params.get("g_higher") or []):
        j = 6 + idx
        if j <= 3 * k + 3:
            g_coeffs[j] = _binary(v, coeffs, 3 * k + 3 - j)

    f = MPoly.zero(v)
    y0pow = MPoly.const(v, 1)
    for i in range(0, 2 * k + 3):
        if i in f_coeffs:
            f = f + f_coeffs[i] * y0pow
        y0pow = y0pow * y0
    gp = MPoly.zero(v)
    y0pow = MPoly.const(v, 1)
    for j in range(0, 3 * k + 4):
        if j in g_coeffs:
            gp = gp + g_coeffs[j] * y0pow
        y0pow = y0pow * y0

    diff = f * f * f - gp * gp
    y06 = MPoly.monomial(v, (6, 0, 0))
    try:
        F = diff.divide_exact(y06)
    except Exception as err:
        raise DivisibilityFailure(str(err)) from err
    return f, gp, F


def table1_cusp_count(f: MPoly, gp: MPoly) -> int:
    """Cusp count of the degree-6k curve built from (f, g).

    The cusps are the common zeros of f and g: those off the line y0 = 0
    are counted by scheme elimination, and the construction places one
    more cusp at each distinct zero of both restrictions to y0 = 0
    (the roots of the shared binary form u)."""
    from .adjunction import CuspScheme

    return CuspScheme(f, gp, "y0", include_line=True).count()


def table1_point(k: int, seed: int):
    """(point, curve) for a seeded Table-1 instance: the section
    (X, Y, Z) = (f, g, y0) of the degree-6k curve -F, with n = 1."""
    f, gp, F = table1_construct(k, None, seed=seed)
    curve = F.scale(-1)
    point = QuasiToricPoint(f, gp, MPoly.variable("y0", Y_VARS), curve, k)
    return point, curve


# ---------------------------------------------------------------------------
# Seeded torus sextics (six cusps in general position on a conic)
# ---------------------------------------------------------------------------


def seeded_torus_sextic(seed: int):
    """(profile, q, c) with profile.g = q^3 + c^2: a sextic with six
    rational cusps on the conic q, in general position for generic seeds.

    Deterministic in the seed; retries derived sub-seeds until the
    resulting curve has exactly six cusps and nothing else.  The returned
    profile carries the classified cusps.
    """
    from .adjunction import singular_points

    for attempt in range(64):
        rng = random.Random(f"torus-sextic:{seed}:{attempt}")
        ts = sorted(rng.sample(range(-6, 7), 6))
        pts = [(Fraction(1), Fraction(t), Fraction(t * t)) for t in ts]
        v = ("x", "y", "z")
        q = MPoly.monomial(v, (1, 0, 1)) - MPoly.monomial(v, (0, 2, 0))
        # cubic through the six points: seeded kernel combination
        from .linalg import kernel_basis

        monos = _monomials3(3)
        rows = [
            [MPoly.monomial(v, e).eval(p) for e in monos] for p in pts
        ]
        ker = kernel_basis(rows)
        if len(ker) != 4:
            continue
        vec = [C_ZERO] * len(monos)
        for b in ker:
            w = Cyclo(rng.randint(-3, 3))
            vec = [x + w * y for x, y in zip(vec, b)]
        c = MPoly(v, {e: co for e, co in zip(monos, vec) if not co.is_zero()})
        if c.is_zero() or c.degree() != 3:
            continue
        g = q * q * q + c * c
        try:
            classified = singular_points(g)
        except Exception:
            continue
        if len(classified) == 6 and all(p.kind == "cusp" for p in classified):
            return CurveProfile(g, points=classified), q, c
    raise RuntimeError("no generic torus sextic found for this seed")
