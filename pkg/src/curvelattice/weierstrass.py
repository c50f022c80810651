"""Weierstrass models y^2 = x^3 + A x + B over a line, and height formulas.

A and B are univariate polynomials over Q(w) of degrees at most 4k and
6k.  Minimality and the no-reducible-fibers criterion are checked place
by place, where places are the irreducible factors of the relevant
polynomial (handled through squarefree decompositions, never through
irreducible factorization) together with the place at infinity, whose
valuations are the degree deficits 4k - deg A and 6k - deg B.

The height formulas are <S,S> = 2*chi + 2*(S.Z) and
<S,S'> = chi + (S.Z) + (S'.Z) - (S.S').
"""

from __future__ import annotations

from .algebra import MPoly, UPoly


class Degenerate(ValueError):
    """The discriminant 4A^3 + 27B^2 vanishes identically."""


class NotMinimal(ValueError):
    """The model must be minimal before fiber checks."""


def squarefree_decomposition(f: UPoly):
    """Yun decomposition {multiplicity: monic squarefree factor}.

    The factors are pairwise coprime and f equals its leading coefficient
    times the product of factor^multiplicity.
    """
    if f.is_zero():
        raise ValueError("zero polynomial has no squarefree decomposition")
    parts = {}
    if f.degree() <= 0:
        return parts
    fp = f.derivative()
    a = f.gcd(fp)
    b = f.divmod(a)[0]
    c = fp.divmod(a)[0]
    d = c - b.derivative()
    i = 1
    while b.degree() > 0:
        ai = b.gcd(d)
        if ai.degree() > 0:
            parts[i] = ai
        b = b.divmod(ai)[0]
        c = d.divmod(ai)[0]
        d = c - b.derivative()
        i += 1
    return parts


def _rad_at_least(parts, m: int) -> UPoly:
    """Product of the squarefree factors of multiplicity at least m."""
    out = UPoly([1])
    for i, p in parts.items():
        if i >= m:
            out = out * p
    return out


def _to_upoly_any(p) -> UPoly:
    if isinstance(p, UPoly):
        return p
    if isinstance(p, MPoly):
        active = [v for i, v in enumerate(p.vars) if any(e[i] for e in p.terms)]
        if len(active) > 1:
            raise ValueError("coefficient polynomial must be univariate")
        var = active[0] if active else (p.vars[0] if p.vars else None)
        if var is None:
            return UPoly([p.constant_coeff()])
        from .algebra import C_ZERO

        d = p.degree_in(var)
        idx = p.vars.index(var)
        cs = [C_ZERO] * (d + 1)
        for e, c in p.terms.items():
            cs[e[idx]] = c
        return UPoly(cs)
    return UPoly([p])


class WeierstrassData:
    """Coefficients (A, B) of y^2 = x^3 + A x + B with the twist degree k."""

    __slots__ = ("A", "B", "k")

    def __init__(self, A, B, k: int):
        A, B = _to_upoly_any(A), _to_upoly_any(B)
        k = int(k)
        if k <= 0:
            raise ValueError("k must be positive")
        if A.degree() > 4 * k or B.degree() > 6 * k:
            raise ValueError("degrees exceed the 4k/6k bounds")
        if (A * A * A * 4 + B * B * 27).is_zero():
            raise Degenerate("discriminant vanishes identically")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "k", k)

    def __setattr__(self, *args):
        raise AttributeError("WeierstrassData values are immutable")

    def disc(self) -> UPoly:
        return self.A * self.A * self.A * 4 + self.B * self.B * 27


def discriminant(w: WeierstrassData) -> UPoly:
    """4A^3 + 27B^2; raises Degenerate if identically zero."""
    d = w.disc()
    if d.is_zero():
        raise Degenerate("discriminant vanishes identically")
    return d


def is_minimal(w: WeierstrassData) -> bool:
    """No place has v(A) >= 4 and v(B) >= 6 simultaneously."""
    A, B, k = w.A, w.B, w.k
    # place at infinity
    v_inf_a = None if A.is_zero() else 4 * k - A.degree()
    v_inf_b = None if B.is_zero() else 6 * k - B.degree()
    if (v_inf_a is None or v_inf_a >= 4) and (v_inf_b is None or v_inf_b >= 6):
        return False
    # finite places
    if A.is_zero():
        return _rad_at_least(squarefree_decomposition(B), 6).degree() == 0
    if B.is_zero():
        return _rad_at_least(squarefree_decomposition(A), 4).degree() == 0
    ra = _rad_at_least(squarefree_decomposition(A), 4)
    rb = _rad_at_least(squarefree_decomposition(B), 6)
    return ra.gcd(rb).degree() == 0


def no_reducible_fibers(w: WeierstrassData) -> bool:
    """Every fiber is irreducible: at each place of the discriminant,
    v(disc) <= 1, or v(disc) = 2 with v(A) = 1 (for A identically zero,
    v(B) = 1 plays that role: the fiber is an irreducible cuspidal cubic).
    """
    if not is_minimal(w):
        raise NotMinimal("model is not minimal")
    A, k = w.A, w.k
    disc = discriminant(w)
    dparts = squarefree_decomposition(disc)
    if _rad_at_least(dparts, 3).degree() > 0:
        return False
    d2 = dparts.get(2)
    if d2 is not None and d2.degree() > 0:
        if A.is_zero():
            b1 = squarefree_decomposition(w.B).get(1, UPoly([1]))
            if d2.gcd(b1).degree() != d2.degree():
                return False
        else:
            a1 = squarefree_decomposition(A).get(1, UPoly([1]))
            if d2.gcd(a1).degree() != d2.degree():
                return False
    # place at infinity
    v_d = 12 * k - disc.degree()
    if v_d >= 3:
        return False
    if v_d == 2:
        if A.is_zero():
            if 6 * k - w.B.degree() != 1:
                return False
        elif 4 * k - A.degree() != 1:
            return False
    return True


def height_from_intersections(chi: int, sz: int) -> int:
    """<S,S> = 2*chi + 2*(S.Z)."""
    if chi < 1:
        raise ValueError("chi must be positive")
    if sz < 0:
        raise ValueError("intersection numbers are non-negative")
    return 2 * chi + 2 * sz


def pairing_from_intersections(chi: int, sz: int, spz: int, ssp: int) -> int:
    """<S,S'> = chi + (S.Z) + (S'.Z) - (S.S')."""
    if chi < 1:
        raise ValueError("chi must be positive")
    return chi + sz + spz - ssp
