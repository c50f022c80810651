"""Exact lattice analytics: shortest vectors, root-lattice identification,
Q-equivalence of quadratic forms, and Zariski-pair certification.

Shortest vectors are enumerated with exact rational arithmetic
(Fincke-Pohst style bounding from an LDL decomposition).  Root lattices
are identified by matching the evidence tuple (rank, determinant,
minimal norm, kissing number) against a built-in table; this is
invariant matching, not an isometry proof, and every report says so.

Hasse invariant convention: the product of Hilbert symbols (d_i, d_j)_p
over i < j on the diagonalized form.
"""

from __future__ import annotations

import math
from fractions import Fraction

import sympy

from .linalg import det_fraction


class NotPositiveDefinite(ValueError):
    """The Gram matrix has a non-positive leading principal pivot."""


class Degenerate(ValueError):
    """The quadratic form is singular."""


class PrereqFailed(ValueError):
    """A Zariski-certificate precondition is violated."""


class QuadForm:
    """A symmetric rational matrix viewed as a quadratic form."""

    __slots__ = ("m",)

    def __init__(self, rows):
        m = [[Fraction(x) for x in row] for row in rows]
        n = len(m)
        if any(len(row) != n for row in m):
            raise ValueError("matrix must be square")
        for i in range(n):
            for j in range(n):
                if m[i][j] != m[j][i]:
                    raise ValueError("matrix must be symmetric")
        object.__setattr__(self, "m", m)

    def __setattr__(self, *args):
        raise AttributeError("QuadForm values are immutable")

    @property
    def n(self):
        return len(self.m)

    def det(self) -> Fraction:
        return det_fraction(self.m)

    def scaled(self, c) -> "QuadForm":
        c = Fraction(c)
        return QuadForm([[x * c for x in row] for row in self.m])


def _ldl(m):
    """LDL decomposition for positive definite m: returns (diag, upper)
    with Q(x) = sum d_i (x_i + sum_{j>i} u[i][j] x_j)^2."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    d = [Fraction(0)] * n
    u = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = a[i][i]
        if d[i] <= 0:
            raise NotPositiveDefinite(f"pivot {i} is {d[i]}")
        for j in range(i + 1, n):
            u[i][j] = a[i][j] / d[i]
        for j in range(i + 1, n):
            for k in range(j, n):
                a[j][k] -= d[i] * u[i][j] * u[i][k]
                a[k][j] = a[j][k]
    return d, u


def _range_for(c, s):
    """All integers x with (x + c)^2 <= s, for rational c and s."""
    if s < 0:
        return range(0, 0)

    def below_upper(x):  # x + c <= sqrt(s)
        v = x + c
        return v <= 0 or v * v <= s

    def above_lower(x):  # x + c >= -sqrt(s)
        v = x + c
        return v >= 0 or v * v <= s

    root = math.sqrt(float(s))
    hi = math.floor(root - float(c))
    while below_upper(hi + 1):
        hi += 1
    while not below_upper(hi):
        hi -= 1
    lo = math.ceil(-root - float(c))
    while above_lower(lo - 1):
        lo -= 1
    while not above_lower(lo):
        lo += 1
    return range(lo, hi + 1)


def _enumerate_upto(gram, bound):
    """All nonzero integer vectors v with v^T G v <= bound, as
    (norm, vector) pairs; exact arithmetic throughout."""
    n = len(gram)
    d, u = _ldl(gram)
    out = []
    vec = [0] * n

    def descend(i, remaining):
        if i < 0:
            if any(vec):
                norm = bound - remaining
                out.append((norm, tuple(vec)))
            return
        c = sum(u[i][j] * vec[j] for j in range(i + 1, n))
        for x in _range_for(c, remaining / d[i]):
            vec[i] = x
            descend(i - 1, remaining - d[i] * (x + c) ** 2)
        vec[i] = 0

    descend(n - 1, Fraction(bound))
    return out


def shortest_vectors(gram):
    """(min_norm, count, vectors) of the lattice with this Gram matrix."""
    rows = gram.m if isinstance(gram, QuadForm) else [
        [Fraction(x) for x in row] for row in gram
    ]
    n = len(rows)
    if n == 0 or n > 8:
        raise ValueError("rank must be between 1 and 8")
    bound = min(rows[i][i] for i in range(n))
    cands = _enumerate_upto(rows, bound)
    min_norm = min(norm for norm, _v in cands)
    vectors = sorted(v for norm, v in cands if norm == min_norm)
    return min_norm, len(vectors), vectors


_NOTE = "identification by invariant matching, not an isometry proof"


class LatticeId:
    """Identification verdict with its evidence tuple."""

    __slots__ = ("tag", "evidence", "note")

    def __init__(self, tag, evidence):
        object.__setattr__(self, "tag", tag)
        object.__setattr__(self, "evidence", tuple(evidence))
        object.__setattr__(self, "note", _NOTE)

    def __setattr__(self, *args):
        raise AttributeError("LatticeId values are immutable")

    def __repr__(self):
        return f"LatticeId({self.tag}, evidence={self.evidence})"


def _table():
    rows = [
        ("D4", 4, Fraction(4), Fraction(2), 24),
        ("E6", 6, Fraction(3), Fraction(2), 72),
        ("E8", 8, Fraction(1), Fraction(2), 240),
    ]
    for k in range(1, 9):
        rows.append((f"A2({k})", 2, Fraction(3 * k * k), Fraction(2 * k), 6))
        for m in range(2, 5):
            rows.append(
                (
                    f"A2^{m}({k})",
                    2 * m,
                    Fraction(3 * k * k) ** m,
                    Fraction(2 * k),
                    6 * m,
                )
            )
    return rows


def evidence_tuple(gram):
    """(rank, determinant, minimal norm, kissing number) of a Gram matrix."""
    q = gram if isinstance(gram, QuadForm) else QuadForm(gram)
    min_norm, count, _vecs = shortest_vectors(q)
    return (q.n, q.det(), min_norm, count)


def identify(gram) -> LatticeId:
    """Match the evidence tuple against the built-in root-lattice table."""
    ev = evidence_tuple(gram)
    for tag, rank, det, mn, kiss in _table():
        if ev == (rank, det, mn, kiss):
            return LatticeId(tag, ev)
    return LatticeId("Unknown", ev)


def identify_saturation(gram) -> LatticeId:
    """Identify the saturation of the lattice the Gram matrix generates.

    A finite-index sublattice scales the determinant by the square of
    the index, so every table row with the same rank, determinant
    det/f^2 for some integer f >= 1, and minimal norm at most the
    observed one is a possible saturation.  The verdict is only definite
    when exactly one row survives; otherwise Unknown with the evidence.
    """
    ev = evidence_tuple(gram)
    rank, det, mn, kiss = ev
    candidates = []
    f = 1
    while f * f <= det:
        if det % (f * f) == 0:
            target = det / (f * f)
            for tag, trank, tdet, tmn, tkiss in _table():
                if trank != rank or tdet != target:
                    continue
                if f == 1 and (tmn, tkiss) != (mn, kiss):
                    continue
                if f > 1 and tmn > mn:
                    continue
                candidates.append(tag)
        f += 1
    if len(candidates) == 1:
        return LatticeId(candidates[0], ev)
    return LatticeId("Unknown", ev)


# ---------------------------------------------------------------------------
# Quadratic forms over Q
# ---------------------------------------------------------------------------


def diagonalize(q: QuadForm):
    """Congruence diagonalization, entries reduced modulo squares.

    Returns a list of square-reduced nonzero integers (one per dimension);
    raises Degenerate on singular input.
    """
    m = [list(row) for row in q.m]
    n = len(m)
    for i in range(n):
        if m[i][i] == 0:
            swap = next((j for j in range(i + 1, n) if m[j][j] != 0), None)
            if swap is not None:
                for k in range(n):
                    m[i][k], m[swap][k] = m[swap][k], m[i][k]
                for k in range(n):
                    m[k][i], m[k][swap] = m[k][swap], m[k][i]
            else:
                j = next((j for j in range(i + 1, n) if m[i][j] != 0), None)
                if j is None:
                    raise Degenerate("form is singular")
                for k in range(n):
                    m[i][k] += m[j][k]
                for k in range(n):
                    m[k][i] += m[k][j]
        piv = m[i][i]
        for j in range(i + 1, n):
            if m[j][i] != 0:
                f = m[j][i] / piv
                for k in range(n):
                    m[j][k] -= f * m[i][k]
                for k in range(n):
                    m[k][j] -= f * m[k][i]
    return [_square_reduce(m[i][i]) for i in range(n)]


def _square_reduce(x: Fraction) -> int:
    """The square class representative of a nonzero rational: the signed
    squarefree part of numerator * denominator."""
    if x == 0:
        raise Degenerate("zero diagonal entry")
    n = x.numerator * x.denominator
    sign = -1 if n < 0 else 1
    out = 1
    for p, e in sympy.factorint(abs(n)).items():
        if e % 2:
            out *= p
    return sign * out


def _split_valuation(x: Fraction, p: int):
    """x = p^v * u with u a p-adic unit; returns (v, u)."""
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v, Fraction(num, den)


def hilbert_symbol(a, b, p) -> int:
    """The Hilbert symbol (a, b)_p for p a prime or the string 'inf'."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("arguments must be nonzero")
    if p in ("inf", "infinity", math.inf):
        return -1 if a < 0 and b < 0 else 1
    p = int(p)
    if not sympy.isprime(p):
        raise ValueError(f"{p} is not prime")
    alpha, u = _split_valuation(a, p)
    beta, v = _split_valuation(b, p)
    if p == 2:
        um = (u.numerator * pow(u.denominator, -1, 8)) % 8
        vm = (v.numerator * pow(v.denominator, -1, 8)) % 8
        eps_u, eps_v = (um - 1) // 2 % 2, (vm - 1) // 2 % 2
        om_u, om_v = (um * um - 1) // 8 % 2, (vm * vm - 1) // 8 % 2
        exp = eps_u * eps_v + alpha * om_v + beta * om_u
        return -1 if exp % 2 else 1
    leg_u = sympy.jacobi_symbol((u.numerator * pow(u.denominator, -1, p)) % p, p)
    leg_v = sympy.jacobi_symbol((v.numerator * pow(v.denominator, -1, p)) % p, p)
    sign = (-1) ** (alpha * beta * ((p - 1) // 2))
    return int(sign * leg_u**beta * leg_v**alpha)


def hasse_invariant(diag, p) -> int:
    """Product of (d_i, d_j)_p over i < j for a diagonalized form."""
    out = 1
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            out *= hilbert_symbol(diag[i], diag[j], p)
    return out


def _relevant_primes(diag_a, diag_b):
    primes = {2}
    for d in list(diag_a) + list(diag_b):
        primes |= set(sympy.factorint(abs(int(d))).keys())
    return sorted(primes)


def q_compare(q1: QuadForm, q2: QuadForm) -> dict:
    """Full comparison report for Q-equivalence of two quadratic forms."""
    d1, d2 = diagonalize(q1), diagonalize(q2)
    report = {
        "rank": [len(d1), len(d2)],
        "diagonals": [d1, d2],
        "signature": [sum(1 if x > 0 else -1 for x in d1),
                      sum(1 if x > 0 else -1 for x in d2)],
        "discriminant_class": [
            _square_reduce(Fraction(math.prod(d1))),
            _square_reduce(Fraction(math.prod(d2))),
        ],
        "hasse": {},
        "witness_prime": None,
    }
    equivalent = report["rank"][0] == report["rank"][1]
    if equivalent and report["signature"][0] != report["signature"][1]:
        equivalent = False
        report["witness_prime"] = "inf"
    if equivalent and report["discriminant_class"][0] != report["discriminant_class"][1]:
        equivalent = False
    if report["rank"][0] == report["rank"][1]:
        differing = []
        for p in _relevant_primes(d1, d2):
            h1, h2 = hasse_invariant(d1, p), hasse_invariant(d2, p)
            report["hasse"][p] = [h1, h2]
            if h1 != h2:
                differing.append(p)
                equivalent = False
        if differing and report["witness_prime"] is None:
            # prefer an odd witness prime: the odd-place symbol is the
            # easiest to audit by reduction modulo p
            odd = [p for p in differing if p != 2]
            report["witness_prime"] = odd[0] if odd else 2
    report["equivalent"] = equivalent
    return report


def q_equivalent(q1: QuadForm, q2: QuadForm) -> bool:
    """Rational equivalence of quadratic forms: rank, signature,
    discriminant square class, and all Hasse invariants agree."""
    return q_compare(q1, q2)["equivalent"]


# ---------------------------------------------------------------------------
# Zariski-pair certification
# ---------------------------------------------------------------------------


INDEX_ASSUMPTION = (
    "point-generated sublattice assumed to have finite index whose square "
    "divides the determinant; saturation index > 1 would change the "
    "determinant but is not excluded by the rank check"
)


class CurveSummary:
    """Deformation-invariant data of a curve used for certification."""

    __slots__ = (
        "degree",
        "inventory",
        "alexander_orders",
        "delta_one_sixth",
        "rank_prediction",
    )

    def __init__(self, degree, inventory, alexander_orders, delta_one_sixth,
                 rank_prediction):
        object.__setattr__(self, "degree", int(degree))
        object.__setattr__(self, "inventory", dict(inventory))
        object.__setattr__(
            self,
            "alexander_orders",
            {Fraction(a): int(o) for a, o in alexander_orders.items()},
        )
        object.__setattr__(self, "delta_one_sixth", int(delta_one_sixth))
        object.__setattr__(self, "rank_prediction", int(rank_prediction))

    def __setattr__(self, *args):
        raise AttributeError("CurveSummary values are immutable")

    @classmethod
    def from_profile(cls, profile):
        """Summary for the elliptic model y^2 = x^3 + g (f = x^2 + y^3)."""
        from .adjunction import alexander, defect
        from .algebra import MPoly
        from .mordellweil import mw_rank
        from .spectrum import WeightedPoly

        xy = ("x", "y")
        f = WeightedPoly(
            MPoly.monomial(xy, (2, 0)) + MPoly.monomial(xy, (0, 3)), (3, 2)
        )
        delta = alexander(profile)
        d16 = defect(profile, Fraction(1, 6))[2]
        rank = mw_rank(f, profile).rank
        return cls(
            profile.d,
            profile.singularity_inventory(),
            delta.orders,
            d16,
            rank,
        )


def zariski_certificate(summary_a: CurveSummary, gram_a,
                        summary_b: CurveSummary, gram_b) -> dict:
    """Certificate that two equisingular curves are topologically distinct.

    Preconditions (PrereqFailed otherwise): equal degree divisible by 6,
    equal singularity inventory, equal Alexander orders, delta_(1/6) = 0
    on both sides.  A certificate is emitted only when both sublattices
    have the full predicted rank and their Q-spans are inequivalent;
    otherwise the verdict is inconclusive.
    """
    if summary_a.degree != summary_b.degree:
        raise PrereqFailed("degrees differ")
    if summary_a.degree % 6:
        raise PrereqFailed("degree is not divisible by 6")
    if summary_a.inventory != summary_b.inventory:
        raise PrereqFailed("singularity inventories differ")
    if summary_a.alexander_orders != summary_b.alexander_orders:
        raise PrereqFailed("Alexander polynomials differ")
    if summary_a.delta_one_sixth or summary_b.delta_one_sixth:
        raise PrereqFailed("delta at 1/6 must vanish on both sides")
    qa = gram_a if isinstance(gram_a, QuadForm) else QuadForm(gram_a)
    qb = gram_b if isinstance(gram_b, QuadForm) else QuadForm(gram_b)
    expected = summary_a.rank_prediction
    assert expected == summary_b.rank_prediction
    doc = {
        "schema": "curvelattice/1",
        "degree": summary_a.degree,
        "inventory": {k: v for k, v in sorted(summary_a.inventory.items())},
        "alexander_orders": {
            str(a): o for a, o in sorted(summary_a.alexander_orders.items())
        },
        "rank_prediction": expected,
        "grams": [qa.m, qb.m],
        "deviations": [],
    }
    if qa.n != expected or qb.n != expected or qa.det() == 0 or qb.det() == 0:
        doc["verdict"] = "inconclusive"
        doc["reason"] = "sublattice rank does not match the predicted rank"
        return doc
    cmp = q_compare(qa, qb)
    doc["comparison"] = cmp
    if cmp["equivalent"]:
        doc["verdict"] = "inconclusive"
        doc["reason"] = "sublattice Q-spans are equivalent"
        return doc
    doc["verdict"] = "certificate"
    doc["reason"] = (
        "equal deformation invariants but inequivalent height-pairing "
        "lattices of full predicted rank"
    )
    doc["deviations"] = [INDEX_ASSUMPTION]
    return doc
