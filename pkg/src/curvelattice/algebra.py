"""Exact arithmetic over Q(w) and sparse multivariate polynomials.

The coefficient field is Q(w) where w is a primitive third root of unity,
so w^2 + w + 1 = 0.  Elements are stored as a + b*w with rational a, b.
Polynomials are sparse maps from exponent vectors to nonzero coefficients,
ordered by graded lexicographic order on the declared variable list.

Provides: parsing/rendering of polynomial expressions, subresultant gcd,
Sylvester-determinant resultants, exact square roots of polynomials, and
root extraction of univariate polynomials inside Q(w).
"""

from __future__ import annotations

import math
from fractions import Fraction

import sympy


class AlgebraError(ValueError):
    """Base class for exact-arithmetic failures."""


class NotDivisible(AlgebraError):
    """Raised when an exact polynomial division leaves a remainder."""


class NotASquare:
    """Returned by poly_sqrt when the input has no square root in Q(w)[x]."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NotASquare"

    def __bool__(self):
        return False


NOT_A_SQUARE = NotASquare()


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def frac_nth_root(x: Fraction, n: int):
    """Return the rational n-th root of x, or None if there is none."""
    x = _as_fraction(x)
    if x == 0:
        return Fraction(0)
    neg = x < 0
    if neg and n % 2 == 0:
        return None
    ax = -x if neg else x
    rn, okn = sympy.integer_nthroot(ax.numerator, n)
    rd, okd = sympy.integer_nthroot(ax.denominator, n)
    if not (okn and okd):
        return None
    r = Fraction(int(rn), int(rd))
    return -r if neg else r


class Cyclo:
    """An element a + b*w of Q(w), with w^2 = -w - 1."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", _as_fraction(a))
        object.__setattr__(self, "b", _as_fraction(b))

    def __setattr__(self, *args):
        raise AttributeError("Cyclo values are immutable")

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    # -- ring operations --------------------------------------------------
    @staticmethod
    def _coerce(x) -> "Cyclo":
        if isinstance(x, Cyclo):
            return x
        return Cyclo(_as_fraction(x))

    def __add__(self, other):
        o = Cyclo._coerce(other)
        return Cyclo(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-Cyclo._coerce(other))

    def __rsub__(self, other):
        return Cyclo._coerce(other) + (-self)

    def __mul__(self, other):
        o = Cyclo._coerce(other)
        # (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2,  w^2 = -1 - w
        a, b, c, d = self.a, self.b, o.a, o.b
        bd = b * d
        return Cyclo(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def conjugate(self) -> "Cyclo":
        """The image under w -> w^2 (complex conjugation on Q(w))."""
        return Cyclo(self.a - self.b, -self.b)

    def norm(self) -> Fraction:
        """Field norm a^2 - a*b + b^2; zero only for the zero element."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inverse(self) -> "Cyclo":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        c = self.conjugate()
        return Cyclo(c.a / n, c.b / n)

    def __truediv__(self, other):
        return self * Cyclo._coerce(other).inverse()

    def __rtruediv__(self, other):
        return Cyclo._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = Cyclo(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing --------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclo(other)
        if not isinstance(other, Cyclo):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"Cyclo({self.a}, {self.b})"

    def __str__(self):
        return render_coeff(self)


C_ZERO = Cyclo(0)
C_ONE = Cyclo(1)
OMEGA = Cyclo(0, 1)


def render_coeff(c: Cyclo) -> str:
    """Render a Q(w) element in the polynomial grammar."""
    if c.b == 0:
        return str(c.a)
    if c.a == 0:
        if c.b == 1:
            return "w"
        return f"{c.b}*w"
    bpart = "w" if c.b == 1 else f"{c.b}*w" if c.b > 0 else f"({c.b})*w"
    if c.b > 0:
        return f"({c.a} + {c.b}*w)" if c.b != 1 else f"({c.a} + w)"
    return f"({c.a} - {-c.b}*w)" if c.b != -1 else f"({c.a} - w)"


def cyclo_conj_sign_canonical(c: Cyclo) -> bool:
    """True when c lies in the canonical half-plane (a > 0, or a == 0, b > 0)."""
    return c.a > 0 or (c.a == 0 and c.b > 0)


# ---------------------------------------------------------------------------
# Sparse multivariate polynomials
# ---------------------------------------------------------------------------

DEGREE_ZERO_POLY = -1  # degree sentinel for the zero polynomial


def _grlex_key(exps):
    return (sum(exps), exps)


class MPoly:
    """Sparse multivariate polynomial over Q(w).

    terms maps exponent tuples to nonzero Cyclo coefficients.  Instances
    are treated as immutable; all operations return new polynomials.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms=None):
        object.__setattr__(self, "vars", tuple(variables))
        clean = {}
        if terms:
            for exps, c in terms.items():
                if not isinstance(c, Cyclo):
                    c = Cyclo._coerce(c)
                if c.is_zero():
                    continue
                exps = tuple(int(e) for e in exps)
                if len(exps) != len(self.vars):
                    raise AlgebraError("exponent vector length mismatch")
                clean[exps] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *args):
        raise AttributeError("MPoly values are immutable")

    # -- constructors -----------------------------------------------------
    @staticmethod
    def zero(variables) -> "MPoly":
        return MPoly(variables)

    @staticmethod
    def const(variables, c) -> "MPoly":
        variables = tuple(variables)
        return MPoly(variables, {(0,) * len(variables): Cyclo._coerce(c)})

    @staticmethod
    def variable(name, variables) -> "MPoly":
        variables = tuple(variables)
        i = variables.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(variables)))
        return MPoly(variables, {exps: C_ONE})

    @staticmethod
    def monomial(variables, exps, c=C_ONE) -> "MPoly":
        return MPoly(variables, {tuple(exps): Cyclo._coerce(c)})

    # -- basic queries ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            return DEGREE_ZERO_POLY
        return max(sum(e) for e in self.terms)

    def degree_in(self, var) -> int:
        if not self.terms:
            return DEGREE_ZERO_POLY
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def leading_exponents(self):
        return max(self.terms, key=_grlex_key)

    def leading_coeff(self) -> Cyclo:
        return self.terms[self.leading_exponents()]

    def constant_coeff(self) -> Cyclo:
        return self.terms.get((0,) * len(self.vars), C_ZERO)

    def monic(self) -> "MPoly":
        """Scale so the graded-lex leading coefficient is 1."""
        if not self.terms:
            return self
        inv = self.leading_coeff().inverse()
        return self.scale(inv)

    # -- arithmetic -------------------------------------------------------
    def _check_same_vars(self, other):
        if self.vars != other.vars:
            raise AlgebraError(f"variable lists differ: {self.vars} vs {other.vars}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            other = MPoly.const(self.vars, other)
        self._check_same_vars(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, C_ZERO) + c
            if s.is_zero():
                terms.pop(e, None)
            else:
                terms[e] = s
        return MPoly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            other = MPoly.const(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "MPoly":
        c = Cyclo._coerce(c)
        if c.is_zero():
            return MPoly.zero(self.vars)
        return MPoly(self.vars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            return self.scale(other)
        self._check_same_vars(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                s = terms.get(e)
                s = p if s is None else s + p
                if s.is_zero():
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return MPoly(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise AlgebraError("negative polynomial power")
        result = MPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MPoly({render(self)!r})"

    # -- calculus / substitution -----------------------------------------
    def derivative(self, var) -> "MPoly":
        i = self.vars.index(var)
        terms = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = list(e)
            ne[i] -= 1
            terms[tuple(ne)] = c * e[i]
        return MPoly(self.vars, terms)

    def eval(self, values) -> Cyclo:
        """Full evaluation at a point (sequence of Cyclo/rational values)."""
        vals = [Cyclo._coerce(v) for v in values]
        total = C_ZERO
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t = t * v**k
            total = total + t
        return total

    def subs(self, assignment) -> "MPoly":
        """Partial substitution var name -> Cyclo value; keeps the var list."""
        idx = {self.vars.index(k): Cyclo._coerce(v) for k, v in assignment.items()}
        terms = {}
        for e, c in self.terms.items():
            t = c
            ne = list(e)
            for i, v in idx.items():
                if e[i]:
                    t = t * v ** e[i]
                ne[i] = 0
            if t.is_zero():
                continue
            key = tuple(ne)
            s = terms.get(key, C_ZERO) + t
            if s.is_zero():
                terms.pop(key, None)
            else:
                terms[key] = s
        return MPoly(self.vars, terms)

    def compose(self, images) -> "MPoly":
        """Substitute images[i] (MPoly over a common var list) for vars[i]."""
        if len(images) != len(self.vars):
            raise AlgebraError("compose needs one image per variable")
        target_vars = images[0].vars
        # cache powers of each image
        pows = [{0: MPoly.const(target_vars, 1)} for _ in images]

        def power(i, k):
            cache = pows[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * images[i]
            return cache[k]

        total = MPoly.zero(target_vars)
        for e, c in self.terms.items():
            t = MPoly.const(target_vars, c)
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            total = total + t
        return total

    def coeffs_in(self, var):
        """Coefficients of powers of var, as polynomials with var removed.

        Returns (exp -> MPoly over remaining vars, remaining var tuple).
        """
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1 :]
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            re = e[:i] + e[i + 1 :]
            d = out.setdefault(k, {})
            d[re] = c
        return {k: MPoly(rest, d) for k, d in out.items()}, rest

    def lift_vars(self, variables) -> "MPoly":
        """Reinterpret over a larger variable list (new vars get exponent 0)."""
        variables = tuple(variables)
        pos = [variables.index(v) for v in self.vars]
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * len(variables)
            for p, k in zip(pos, e):
                ne[p] = k
            terms[tuple(ne)] = c
        return MPoly(variables, terms)

    def divide_exact(self, d: "MPoly") -> "MPoly":
        """Exact division; raises NotDivisible when a remainder survives."""
        self._check_same_vars(d)
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self.terms)
        qterms = {}
        dlead = d.leading_exponents()
        dlc = d.terms[dlead]
        while rem:
            e = max(rem, key=_grlex_key)
            c = rem[e]
            qe = tuple(a - b for a, b in zip(e, dlead))
            if any(k < 0 for k in qe):
                raise NotDivisible(render(self))
            qc = c / dlc
            qterms[qe] = qterms.get(qe, C_ZERO) + qc
            for de, dc in d.terms.items():
                ke = tuple(a + b for a, b in zip(qe, de))
                s = rem.get(ke, C_ZERO) - qc * dc
                if s.is_zero():
                    rem.pop(ke, None)
                else:
                    rem[ke] = s
        return MPoly(self.vars, qterms)

    def divides(self, other: "MPoly") -> bool:
        try:
            other.divide_exact(self)
            return True
        except NotDivisible:
            return False


# ---------------------------------------------------------------------------
# Parser / renderer
# ---------------------------------------------------------------------------


class ParseError(AlgebraError):
    def __init__(self, message, pos):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class _Parser:
    """Recursive-descent parser for the polynomial expression grammar.

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' natural)?
    base   := rational | 'w' | variable | '(' expr ')'
    """

    def __init__(self, text, variables):
        self.text = text
        self.pos = 0
        self.variables = tuple(variables)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> MPoly:
        p = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            raise ParseError(f"unexpected {self.text[self.pos]!r}", self.pos)
        return p

    def expr(self) -> MPoly:
        # allow a leading sign on the first term
        sign = 1
        if self.peek() == "-":
            self.pos += 1
            sign = -1
        elif self.peek() == "+":
            self.pos += 1
        p = self.term()
        if sign < 0:
            p = -p
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.pos += 1
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> MPoly:
        p = self.factor()
        while self.peek() == "*":
            self.pos += 1
            p = p * self.factor()
        return p

    def factor(self) -> MPoly:
        p = self.base()
        if self.peek() == "^":
            self.pos += 1
            n = self.natural()
            p = p**n
        return p

    def natural(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected exponent", self.pos)
        return int(self.text[start : self.pos])

    def base(self) -> MPoly:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            p = self.expr()
            if self.peek() != ")":
                raise ParseError("expected ')'", self.pos)
            self.pos += 1
            return p
        if ch.isdigit() or ch == "-":
            return MPoly.const(self.variables, self.rational())
        if ch.isalpha() or ch == "_":
            name = self.identifier()
            if name == "w":
                return MPoly.const(self.variables, OMEGA)
            if name not in self.variables:
                raise ParseError(f"unknown variable {name!r}", self.pos)
            return MPoly.variable(name, self.variables)
        raise ParseError("expected a value", self.pos)

    def identifier(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        return self.text[start : self.pos]

    def rational(self) -> Fraction:
        self.skip_ws()
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            raise ParseError("expected integer", start)
        num = int(self.text[start : self.pos])
        if self.peek() == "/":
            save = self.pos
            self.pos += 1
            dstart = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if self.pos == dstart:
                self.pos = save
                return Fraction(num)
            den = int(self.text[dstart : self.pos])
            if den == 0:
                raise ParseError("zero denominator", dstart)
            return Fraction(num, den)
        return Fraction(num)


def parse_poly(text: str, variables) -> MPoly:
    """Parse a polynomial expression; 'w' denotes the cube root of unity."""
    return _Parser(text, variables).parse()


def render(p: MPoly) -> str:
    """Canonical string form; parse_poly(render(p), p.vars) == p."""
    if p.is_zero():
        return "0"
    pieces = []
    for e in sorted(p.terms, key=_grlex_key, reverse=True):
        c = p.terms[e]
        mono = "*".join(
            f"{v}^{k}" if k > 1 else v for v, k in zip(p.vars, e) if k > 0
        )
        if c.b == 0:
            sign = "-" if c.a < 0 else "+"
            mag = abs(c.a)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
        elif c.a == 0 and c.b > 0:
            sign = "+"
            co = "w" if c.b == 1 else f"{c.b}*w"
            body = f"{co}*{mono}" if mono else co
        elif c.a == 0:  # c.b < 0
            sign = "-"
            co = "w" if c.b == -1 else f"{-c.b}*w"
            body = f"{co}*{mono}" if mono else co
        else:
            sign = "+"
            inner_sign = "+" if c.b > 0 else "-"
            bmag = abs(c.b)
            wpart = "w" if bmag == 1 else f"{bmag}*w"
            co = f"({c.a} {inner_sign} {wpart})"
            body = f"{co}*{mono}" if mono else co
        pieces.append((sign, body))
    sign0, body0 = pieces[0]
    out = body0 if sign0 == "+" else f"-{body0}"
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# Content / primitive-part gcd with subresultant pseudo-remainders
# ---------------------------------------------------------------------------


def _active_var(p: MPoly, q: MPoly):
    for v in p.vars:
        if p.degree_in(v) > 0 or q.degree_in(v) > 0:
            return v
    return None


def _prem(p, q, var):
    """Pseudo-remainder of p by q with respect to var (both MPoly)."""
    dp = p.degree_in(var)
    dq = q.degree_in(var)
    if dp < dq:
        return p
    cp, rest = p.coeffs_in(var)
    cq, _ = q.coeffs_in(var)
    lq = cq[dq].lift_vars(p.vars)
    xv = MPoly.variable(var, p.vars)
    r = p
    while not r.is_zero() and r.degree_in(var) >= dq:
        dr = r.degree_in(var)
        cr, _ = r.coeffs_in(var)
        lr = cr[dr].lift_vars(p.vars)
        r = r * lq - q * lr * xv ** (dr - dq)
        if not r.is_zero() and r.degree_in(var) >= dr:
            raise AlgebraError("pseudo-remainder failed to reduce degree")
    return r


def gcd(p: MPoly, q: MPoly) -> MPoly:
    """GCD normalized with graded-lex leading coefficient 1."""
    if p.is_zero() and q.is_zero():
        return MPoly.zero(p.vars)
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    g = _gcd_inner(p, q)
    return g.monic()


def _content(p: MPoly, var):
    """GCD of the coefficients of p as a polynomial in var."""
    coeffs, rest = p.coeffs_in(var)
    items = list(coeffs.values())
    g = items[0]
    for c in items[1:]:
        g = _gcd_inner(g, c)
        if g.degree() == 0:
            break
    return g.lift_vars(p.vars)


def _gcd_inner(p: MPoly, q: MPoly) -> MPoly:
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    var = _active_var(p, q)
    if var is None:
        return MPoly.const(p.vars, 1)
    if p.degree_in(var) == 0 or q.degree_in(var) == 0:
        # one argument is free of the main variable: gcd divides its content
        if p.degree_in(var) == 0:
            return _gcd_inner(p, _content(q, var))
        return _gcd_inner(q, _content(p, var))
    if p.degree_in(var) < q.degree_in(var):
        p, q = q, p
    cont_p = _content(p, var)
    cont_q = _content(q, var)
    pp = p.divide_exact(cont_p)
    qq = q.divide_exact(cont_q)
    cont_g = _gcd_inner(cont_p, cont_q)
    # subresultant polynomial remainder sequence on primitive parts
    a, b = pp, qq
    while True:
        r = _prem(a, b, var)
        if r.is_zero():
            break
        if r.degree_in(var) == 0:
            return cont_g
        a, b = b, r.divide_exact(_content(r, var))
    return cont_g * b.divide_exact(_content(b, var))


# ---------------------------------------------------------------------------
# Determinants and resultants
# ---------------------------------------------------------------------------


def bareiss_det(rows, divide):
    """Fraction-free determinant; divide(a, b) must be an exact division."""
    n = len(rows)
    if n == 0:
        raise AlgebraError("empty matrix")
    m = [list(r) for r in rows]
    sign = 1
    prev = None
    for k in range(n - 1):
        if _is_zero_entry(m[k][k]):
            for i in range(k + 1, n):
                if not _is_zero_entry(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return _zero_like(m[0][0])
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num if prev is None else divide(num, prev)
            m[i][k] = _zero_like(m[0][0])
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def _is_zero_entry(x):
    if isinstance(x, MPoly):
        return x.is_zero()
    if isinstance(x, Cyclo):
        return x.is_zero()
    return x == 0


def _zero_like(x):
    if isinstance(x, MPoly):
        return MPoly.zero(x.vars)
    if isinstance(x, Cyclo):
        return C_ZERO
    return type(x)(0)


def det_cyclo(rows) -> Cyclo:
    if all(c.is_rational() for r in rows for c in r):
        return Cyclo(_det_rational(rows))
    return bareiss_det(rows, lambda a, b: a / b)


def _det_rational(rows) -> Fraction:
    """Integer Bareiss after clearing row denominators (much faster than
    Fraction arithmetic for the interpolation workloads)."""
    scale = Fraction(1)
    m = []
    for r in rows:
        lcm = 1
        for c in r:
            d = c.a.denominator
            lcm = lcm * d // math.gcd(lcm, d)
        scale /= lcm
        m.append([int(c.a * lcm) for c in r])
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1] * scale


def sylvester_matrix(p: MPoly, q: MPoly, var):
    """Sylvester matrix with the p-coefficient rows before the q rows."""
    dp = p.degree_in(var)
    dq = q.degree_in(var)
    if dp <= 0 and dq <= 0:
        raise AlgebraError("resultant needs positive degree in the variable")
    cp, rest = p.coeffs_in(var)
    cq, _ = q.coeffs_in(var)
    zero = MPoly.zero(rest)
    n = dp + dq
    rows = []
    for i in range(dq):
        row = [zero] * n
        for k, c in cp.items():
            row[i + dp - k] = c
        rows.append(row)
    for i in range(dp):
        row = [zero] * n
        for k, c in cq.items():
            row[i + dq - k] = c
        rows.append(row)
    return rows, rest


def _interp_points(n):
    pts = [Fraction(0)]
    k = 1
    while len(pts) < n:
        pts.append(Fraction(k))
        if len(pts) < n:
            pts.append(Fraction(-k))
        k += 1
    return pts[:n]


def _newton_interpolate(xs, ys):
    """Newton-form interpolation with Cyclo values; returns low->high coeffs."""
    n = len(xs)
    divided = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            divided[i] = (divided[i] - divided[i - 1]) / Cyclo(xs[i] - xs[i - j])
    coeffs = [C_ZERO] * n
    # build sum divided[j] * prod_{i<j} (t - xs[i]) as coefficient list
    acc = [C_ONE]  # current product polynomial, low->high
    for j in range(n):
        for i, c in enumerate(acc):
            coeffs[i] = coeffs[i] + divided[j] * c
        if j < n - 1:
            # acc *= (t - xs[j])
            new = [C_ZERO] * (len(acc) + 1)
            for i, c in enumerate(acc):
                new[i + 1] = new[i + 1] + c
                new[i] = new[i] - c * Cyclo(xs[j])
            acc = new
    return coeffs


def resultant(p: MPoly, q: MPoly, var, degree_bound=None) -> MPoly:
    """Resultant with respect to var; Sylvester determinant convention.

    degree_bound, when given, caps the resultant's degree in the single
    remaining active variable (fewer interpolation points).
    """
    if p.is_zero() or q.is_zero():
        raise AlgebraError("resultant of the zero polynomial")
    if p.degree_in(var) <= 0 or q.degree_in(var) <= 0:
        if p.degree_in(var) <= 0 and q.degree_in(var) <= 0:
            raise AlgebraError("resultant needs positive degree in the variable")
        # deg 0 in var: Res(c, q) = c^{deg q}
        if p.degree_in(var) <= 0:
            c, rest = p.coeffs_in(var)
            return (c[0] ** q.degree_in(var)).lift_vars(_drop_var(p.vars, var))
        c, rest = q.coeffs_in(var)
        return (c[0] ** p.degree_in(var)).lift_vars(_drop_var(p.vars, var))
    rows, rest = sylvester_matrix(p, q, var)
    active = [v for v in rest if any(r.degree_in(v) > 0 for row in rows for r in row)]
    if not active:
        val = det_cyclo([[r.constant_coeff() for r in row] for row in rows])
        return MPoly.const(rest, val)
    if len(active) == 1:
        t = active[0]
        bound = sum(max(r.degree_in(t) for r in row) for row in rows) + 1
        if degree_bound is not None:
            bound = min(bound, degree_bound + 1)
        xs = _interp_points(bound)
        # dense coefficient lists in t per entry, then Horner per sample
        ti = rows[0][0].vars.index(t) if rows[0][0].vars else 0
        dense = []
        for row in rows:
            drow = []
            for r in row:
                cs = [C_ZERO] * (r.degree_in(t) + 1) if r.terms else [C_ZERO]
                for e, c in r.terms.items():
                    cs[e[ti]] = cs[e[ti]] + c
                drow.append(cs)
            dense.append(drow)
        ys = []
        for x in xs:
            xc = Cyclo(x)
            mat = []
            for drow in dense:
                out = []
                for cs in drow:
                    total = C_ZERO
                    for c in reversed(cs):
                        total = total * xc + c
                    out.append(total)
                mat.append(out)
            ys.append(det_cyclo(mat))
        coeffs = _newton_interpolate(xs, ys)
        ti = rest.index(t)
        terms = {}
        for k, c in enumerate(coeffs):
            if not c.is_zero():
                e = [0] * len(rest)
                e[ti] = k
                terms[tuple(e)] = c
        return MPoly(rest, terms)
    # general case: fraction-free elimination over the polynomial ring
    return bareiss_det(rows, lambda a, b: a.divide_exact(b))


def _drop_var(variables, var):
    i = variables.index(var)
    return variables[:i] + variables[i + 1 :]


# ---------------------------------------------------------------------------
# Univariate polynomials over Q(w) (internal helper representation)
# ---------------------------------------------------------------------------


class UPoly:
    """Dense univariate polynomial over Q(w), coefficients low -> high."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Cyclo._coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *args):
        raise AttributeError("UPoly values are immutable")

    @staticmethod
    def from_mpoly(p: MPoly, var) -> "UPoly":
        i = p.vars.index(var)
        if any(e[j] for e in p.terms for j in range(len(p.vars)) if j != i):
            raise AlgebraError("polynomial is not univariate in the given variable")
        d = p.degree_in(var)
        cs = [C_ZERO] * (d + 1) if d >= 0 else []
        for e, c in p.terms.items():
            cs[e[i]] = c
        return UPoly(cs)

    def to_mpoly(self, var, variables) -> MPoly:
        variables = tuple(variables)
        i = variables.index(var)
        terms = {}
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                e = [0] * len(variables)
                e[i] = k
                terms[tuple(e)] = c
        return MPoly(variables, terms)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly(
            [
                (self.coeffs[i] if i < len(self.coeffs) else C_ZERO)
                + (other.coeffs[i] if i < len(other.coeffs) else C_ZERO)
                for i in range(n)
            ]
        )

    def __neg__(self):
        return UPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            c = Cyclo._coerce(other)
            return UPoly([x * c for x in self.coeffs])
        out = [C_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1) if self.coeffs and other.coeffs else []
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UPoly(out)

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("univariate division by zero")
        r = list(self.coeffs)
        d = other.degree()
        lc = other.coeffs[-1]
        q = [C_ZERO] * max(len(r) - d, 0)
        for i in range(len(r) - 1, d - 1, -1):
            if r[i].is_zero():
                continue
            f = r[i] / lc
            q[i - d] = f
            for j, b in enumerate(other.coeffs):
                r[i - d + j] = r[i - d + j] - f * b
        return UPoly(q), UPoly(r)

    def monic(self) -> "UPoly":
        if self.is_zero():
            return self
        inv = self.coeffs[-1].inverse()
        return self * inv

    def derivative(self) -> "UPoly":
        return UPoly([c * k for k, c in enumerate(self.coeffs)][1:])

    def eval(self, x) -> Cyclo:
        x = Cyclo._coerce(x)
        total = C_ZERO
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def conjugate(self) -> "UPoly":
        return UPoly([c.conjugate() for c in self.coeffs])

    def gcd(self, other) -> "UPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def squarefree_part(self) -> "UPoly":
        if self.degree() <= 0:
            return self.monic()
        g = self.gcd(self.derivative())
        return self.divmod(g)[0].monic()


def qomega_roots(p: UPoly):
    """All roots of p inside Q(w), with multiplicities.

    Returns (roots, missing) where roots is a list of (Cyclo, multiplicity)
    and missing counts the remaining distinct roots that lie outside Q(w)
    (degree of the squarefree part not accounted for by found roots).
    """
    if p.is_zero():
        raise AlgebraError("root-finding on the zero polynomial")
    sf_deg = p.squarefree_part().degree()
    if sf_deg == 0:
        return [], 0
    # push into Q[t] via the norm: q = p * conj(p) has rational coefficients
    q = p * p.conjugate()
    assert all(c.is_rational() for c in q.coeffs)
    t = sympy.Symbol("t")
    qq = sympy.Poly(
        [sympy.Rational(c.a.numerator, c.a.denominator) for c in reversed(q.coeffs)],
        t,
        domain="QQ",
    )
    candidates = []
    for fac, _mult in qq.factor_list()[1]:
        d = fac.degree()
        cs = [Fraction(int(c.numerator), int(c.denominator)) for c in fac.all_coeffs()]
        if d == 1:
            candidates.append(Cyclo(-cs[1] / cs[0]))
        elif d == 2:
            u = cs[1] / cs[0]
            v = cs[2] / cs[0]
            disc = u * u - 4 * v
            if disc < 0 and Fraction(-disc, 3) >= 0:
                s = frac_nth_root(Fraction(-disc, 3), 2)
                if s is not None:
                    # roots (-u +/- s*sqrt(-3))/2 with sqrt(-3) = 1 + 2w
                    candidates.append(Cyclo((-u + s) / 2, s))
                    candidates.append(Cyclo((-u - s) / 2, -s))
    roots = []
    seen = set()
    for r in candidates:
        if r in seen:
            continue
        seen.add(r)
        if not p.eval(r).is_zero():
            continue
        mult = 0
        cur = p
        lin = UPoly([-r, C_ONE])
        while True:
            quo, rem = cur.divmod(lin)
            if not rem.is_zero():
                break
            mult += 1
            cur = quo
        roots.append((r, mult))
    missing = sf_deg - len(roots)
    return roots, missing


def cyclo_nth_roots(c: Cyclo, n: int):
    """All x in Q(w) with x^n = c."""
    if c.is_zero():
        return [C_ZERO]
    coeffs = [-c] + [C_ZERO] * (n - 1) + [C_ONE]
    roots, _missing = qomega_roots(UPoly(coeffs))
    return [r for r, _m in roots]


# ---------------------------------------------------------------------------
# Exact polynomial square root
# ---------------------------------------------------------------------------


def poly_sqrt(p: MPoly):
    """Exact square root in Q(w)[x...], or NOT_A_SQUARE.

    The result's leading coefficient is normalized to the half-plane with
    rational part positive (or zero rational part and positive w part).
    """
    if p.is_zero():
        return MPoly.zero(p.vars)
    lead = p.leading_exponents()
    if any(e % 2 for e in lead):
        return NOT_A_SQUARE
    lc_roots = cyclo_nth_roots(p.leading_coeff(), 2)
    if not lc_roots:
        return NOT_A_SQUARE
    half = tuple(e // 2 for e in lead)
    s = MPoly.monomial(p.vars, half, lc_roots[0])
    lead_key = _grlex_key(half)
    twice_lc = s.leading_coeff() * 2
    while True:
        rem = p - s * s
        if rem.is_zero():
            break
        e = max(rem.terms, key=_grlex_key)
        ne = tuple(a - b for a, b in zip(e, half))
        if any(k < 0 for k in ne) or _grlex_key(ne) >= lead_key:
            return NOT_A_SQUARE
        c = rem.terms[e] / twice_lc
        s = s + MPoly.monomial(p.vars, ne, c)
    lc = s.leading_coeff()
    if not cyclo_conj_sign_canonical(lc):
        s = -s
    return s


# ---------------------------------------------------------------------------
# Weighted degrees
# ---------------------------------------------------------------------------


def weighted_degree(p: MPoly, weights):
    """Maximum weighted degree over terms; sentinel for the zero polynomial."""
    if len(weights) != len(p.vars):
        raise AlgebraError("weights length must match variable count")
    if p.is_zero():
        return DEGREE_ZERO_POLY
    return max(sum(w * e for w, e in zip(weights, exps)) for exps in p.terms)


def is_weighted_homogeneous(p: MPoly, weights) -> bool:
    if len(weights) != len(p.vars):
        raise AlgebraError("weights length must match variable count")
    degs = {sum(w * e for w, e in zip(weights, exps)) for exps in p.terms}
    return len(degs) <= 1


# ---------------------------------------------------------------------------
# Projective points
# ---------------------------------------------------------------------------


class ProjPoint:
    """Point of P^2 over Q(w); canonical form scales the last nonzero
    coordinate to 1."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        cs = [Cyclo._coerce(c) for c in coords]
        if len(cs) != 3:
            raise AlgebraError("projective points need 3 coordinates")
        last = None
        for i in range(2, -1, -1):
            if not cs[i].is_zero():
                last = i
                break
        if last is None:
            raise AlgebraError("(0:0:0) is not a projective point")
        inv = cs[last].inverse()
        object.__setattr__(self, "coords", tuple(c * inv for c in cs))

    def __setattr__(self, *args):
        raise AttributeError("ProjPoint values are immutable")

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "(" + " : ".join(str(c) for c in self.coords) + ")"
