"""Elements of the quantum torus K<z^±1, s^±1> with s*z = q*z*s.

An element is stored in s-normal form: a map from s-exponent i to a nonzero
Laurent coefficient x_i(z), meaning sum x_i(z) * s^i.  Moving s past a
coefficient shifts the argument: s^i f(z) = f(q^i z) s^i, and symmetrically
z^k f(s) = f(q^-k s) z^k for the z-normal form sum x_k(s) z^k.  The ambient q
comes from the session (scalars module).

Units are exactly the monomials c * z^m * s^n.  An element is "sigma-good"
when both extreme s-coefficients are units of K[z,z^-1], "z-good" when both
extreme z-coefficients (z-normal form) are units of K[s,s^-1].
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .errors import ParseError, PreconditionViolation, ZeroInput
from .laurent import ONE, ZERO, LaurentPoly, laurent_to_str, qshift
from .scalars import get_q


def _coerce(x):
    if isinstance(x, AqElement):
        return x
    if isinstance(x, LaurentPoly):
        return AqElement({0: x})
    if isinstance(x, (int, Fraction)):
        return AqElement({0: LaurentPoly.const(x)})
    return None


class AqElement:
    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for i, f in coeffs.items():
                if isinstance(f, (int, Fraction)):
                    f = LaurentPoly.const(f)
                if not f.is_zero():
                    c[i] = f
        self._c = c

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero():
        return AqElement()

    @staticmethod
    def one():
        return AqElement({0: ONE})

    @staticmethod
    def from_laurent(f):
        return AqElement({0: f})

    @staticmethod
    def from_sigma_poly(g: LaurentPoly):
        """Interpret a Laurent polynomial in the variable s: sum g_i s^i."""
        return AqElement({i: LaurentPoly.const(c) for i, c in g.terms()})

    @staticmethod
    def monomial(c, zexp=0, sexp=0):
        return AqElement({sexp: LaurentPoly.monomial(c, zexp)})

    @staticmethod
    def sigma(i=1):
        return AqElement({i: ONE})

    # -- structure --------------------------------------------------------

    def is_zero(self):
        return not self._c

    def coefficient(self, i) -> LaurentPoly:
        return self._c.get(i, ZERO)

    def terms(self):
        """(s-exponent, coefficient) pairs sorted by exponent."""
        return sorted(self._c.items())

    def sigma_support(self):
        return sorted(self._c)

    def monomials(self):
        """(z-exp, s-exp, coeff) triples, sorted by (s-exp, z-exp)."""
        out = []
        for i, f in self.terms():
            for j, c in f.terms():
                out.append((j, i, c))
        return out

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        c = dict(self._c)
        for i, f in other._c.items():
            g = c.get(i, ZERO) + f
            if g.is_zero():
                c.pop(i, None)
            else:
                c[i] = g
        out = AqElement.__new__(AqElement)
        out._c = c
        return out

    __radd__ = __add__

    def __neg__(self):
        out = AqElement.__new__(AqElement)
        out._c = {i: -f for i, f in self._c.items()}
        return out

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        acc = {}
        for i, f in self._c.items():
            for j, g in other._c.items():
                # s^i g(z) = g(q^i z) s^i
                piece = f * qshift(g, i)
                if piece.is_zero():
                    continue
                k = i + j
                cur = acc.get(k)
                acc[k] = piece if cur is None else cur + piece
        out = AqElement.__new__(AqElement)
        out._c = {k: f for k, f in acc.items() if not f.is_zero()}
        return out

    def __rmul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, n):
        if not isinstance(n, int):
            raise PreconditionViolation("integer powers only")
        if n < 0:
            return self.inverse_unit() ** (-n)
        result = AqElement.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_unit(self):
        if len(self._c) != 1:
            return False
        (f,) = self._c.values()
        return f.is_unit()

    def inverse_unit(self):
        """(c z^m s^n)^-1 = c^-1 q^{nm} z^-m s^-n; error if not a unit."""
        if len(self._c) != 1:
            raise PreconditionViolation(f"not a unit: {self}")
        ((n, f),) = self._c.items()
        u = f.unit_decompose()
        if u is None:
            raise PreconditionViolation(f"not a unit: {self}")
        c, m = u
        return AqElement({-n: LaurentPoly.monomial(get_q() ** (n * m) / c, -m)})

    # -- comparisons ------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(tuple(self.terms()))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Aq({to_str(self)})"

    def __str__(self):
        return to_str(self)


# -- the two anti/automorphisms --------------------------------------------


def epsilon(x: AqElement) -> AqElement:
    """Anti-automorphism with z |-> z, s |-> s^-1 (an involution)."""
    return AqElement({-i: qshift(f, -i) for i, f in x._c.items()})


def fourier(x: AqElement) -> AqElement:
    """Automorphism with z |-> s, s |-> z^-1; its fourth power is the identity."""
    acc = {}
    for j, i, c in x.monomials():
        # c z^j s^i |-> c s^j z^-i = c q^{-ij} z^-i s^j
        row = acc.setdefault(j, {})
        row[-i] = row.get(-i, Fraction(0)) + c * get_q() ** (-i * j)
    out = {}
    for sexp, zmap in acc.items():
        lo = min(zmap)
        hi = max(zmap)
        f = LaurentPoly(lo, [zmap.get(k, Fraction(0)) for k in range(lo, hi + 1)])
        if not f.is_zero():
            out[sexp] = f
    return AqElement(out)


def sigma_conj(x: AqElement, k: int) -> AqElement:
    """s^k x s^-k: coefficients q-shift by k, s-exponents unchanged."""
    return AqElement({i: qshift(f, k) for i, f in x._c.items()})


# -- z-normal form ----------------------------------------------------------


def to_z_form(x: AqElement) -> dict[int, LaurentPoly]:
    """{k: x_k(s)} with x = sum x_k(s) z^k; coefficients are polys in s."""
    acc: dict[int, dict[int, Fraction]] = {}
    q = get_q()
    for j, i, c in x.monomials():
        # c z^j s^i, pulled to s^i z^j form: z^j s^i = q^{-ij} * (s^i z^j) means
        # c z^j s^i = (c q^{-ij} s^i) z^j
        row = acc.setdefault(j, {})
        row[i] = row.get(i, Fraction(0)) + c * q ** (-i * j)
    out = {}
    for k, smap in acc.items():
        lo, hi = min(smap), max(smap)
        f = LaurentPoly(lo, [smap.get(t, Fraction(0)) for t in range(lo, hi + 1)])
        if not f.is_zero():
            out[k] = f
    return out


def from_z_form(zf: dict[int, LaurentPoly]) -> AqElement:
    acc: dict[int, dict[int, Fraction]] = {}
    q = get_q()
    for k, g in zf.items():
        for i, c in g.terms():
            # (c s^i) z^k = c q^{ik} z^k s^i
            row = acc.setdefault(i, {})
            row[k] = row.get(k, Fraction(0)) + c * q ** (i * k)
    out = {}
    for i, zmap in acc.items():
        lo, hi = min(zmap), max(zmap)
        f = LaurentPoly(lo, [zmap.get(t, Fraction(0)) for t in range(lo, hi + 1)])
        if not f.is_zero():
            out[i] = f
    return AqElement(out)


# -- degrees and goodness ----------------------------------------------------


class Degrees(NamedTuple):
    deg_sigma: int
    deg_z: int
    sigma_good: bool
    z_good: bool


def degrees(x: AqElement):
    """Degree/goodness summary, or None for the zero element.

    deg_sigma and deg_z are support widths (additive under multiplication
    since the algebra is a domain); goodness asks the extreme coefficients of
    the respective normal form to be units.
    """
    if x.is_zero():
        return None
    support = x.sigma_support()
    deg_sigma = support[-1] - support[0]
    zlo = min(f.bot for f in x._c.values())
    zhi = max(f.top for f in x._c.values())
    deg_z = zhi - zlo
    sigma_good = x._c[support[0]].is_unit() and x._c[support[-1]].is_unit()
    # extreme z-coefficients are units of K[s,s^-1] iff exactly one s-slot
    # contributes each extreme z-exponent
    z_good = (
        sum(1 for f in x._c.values() if f.coeff(zlo) != 0) == 1
        and sum(1 for f in x._c.values() if f.coeff(zhi) != 0) == 1
    )
    return Degrees(deg_sigma, deg_z, sigma_good, z_good)


def good_normal_coeffs(p: AqElement):
    """For sigma-good p of width t, the unit u with u*p = p_0 + ... + s^t
    (top coefficient 1, p_0 a unit).  Returns (u, [p_0, ..., p_{t-1}])."""
    d = degrees(p)
    if d is None or not d.sigma_good:
        raise PreconditionViolation("normal form requires a sigma-good element")
    support = p.sigma_support()
    m, t = support[0], d.deg_sigma
    shifted = {i - m: qshift(f, -m) for i, f in p._c.items()}
    topinv = shifted[t].inverse_unit()
    coeffs = [topinv * shifted.get(i, ZERO) for i in range(t)]
    u = AqElement({-m: topinv})
    return u, coeffs


def unit_normalize(x: AqElement) -> AqElement:
    """Canonical representative of the left-unit orbit {c z^k s^m * x}.

    Lowest s-exponent and lowest z-exponent are moved to 0 and the first
    monomial (in (s,z) order) gets coefficient 1; two elements generate equal
    principal left ideals by a unit iff they normalize identically.
    """
    if x.is_zero():
        return x
    m = x.sigma_support()[0]
    y = AqElement.sigma(-m) * x
    k = min(f.bot for f in y._c.values())
    c0 = y._c[0].coeff(y._c[0].bot)
    return AqElement.monomial(1 / c0, -k) * y


# -- division -----------------------------------------------------------------


def sigma_divide(r: AqElement, w: AqElement, bottom: bool = False):
    """Left division in s-normal form: returns (g, h, rem) with g in K[z,z^-1],
    g*r = h*w + rem, and deg_sigma(rem) < deg_sigma(w).

    Default eliminates from the top s-exponent; bottom=True mirrors from the
    bottom.  g is a product of shifts of the eliminated extreme coefficient of
    w, hence a unit whenever that coefficient is a unit.  Zero dividend gives
    (1, 0, 0).
    """
    if w.is_zero():
        raise PreconditionViolation("division by zero")
    if r.is_zero():
        return ONE, AqElement.zero(), AqElement.zero()
    dw = degrees(w).deg_sigma
    if degrees(r).deg_sigma < dw:
        raise PreconditionViolation("divisor has larger sigma-degree than dividend")
    wsup = w.sigma_support()
    k = wsup[0] if bottom else wsup[-1]
    wk = w.coefficient(k)
    g_total = ONE
    h_total = AqElement.zero()
    cur = r
    while not cur.is_zero() and degrees(cur).deg_sigma >= dw:
        csup = cur.sigma_support()
        l = csup[0] if bottom else csup[-1]
        factor = qshift(wk, l - k)
        piece = AqElement({l - k: cur.coefficient(l)})
        cur = factor * cur - piece * w
        g_total = factor * g_total
        h_total = factor * h_total + piece
    return g_total, h_total, cur


def z_divide(r: AqElement, w: AqElement, bottom: bool = False):
    """Mirror of sigma_divide in z-normal form: (g, h, rem) with g in K[s,s^-1]
    (returned as a Laurent polynomial in s), g*r = h*w + rem and
    deg_z(rem) < deg_z(w)."""
    if w.is_zero():
        raise PreconditionViolation("division by zero")
    if r.is_zero():
        return ONE, AqElement.zero(), AqElement.zero()
    dw = degrees(w).deg_z
    if degrees(r).deg_z < dw:
        raise PreconditionViolation("divisor has larger z-degree than dividend")
    zw = to_z_form(w)
    k = min(zw) if bottom else max(zw)
    wk = zw[k]

    def smul(g, form):
        # left multiply a z-form by g(s): coefficient-wise
        return {j: g * f for j, f in form.items()}

    def piecemul(a, t, form):
        # (a(s) z^t) * form: a(s) f_j(q^-t s) z^{t+j}
        out = {}
        for j, f in form.items():
            piece = a * qshift(f, -t)
            if not piece.is_zero():
                out[t + j] = piece
        return out

    def sub(f1, f2):
        out = dict(f1)
        for j, f in f2.items():
            g = out.get(j, ZERO) - f
            if g.is_zero():
                out.pop(j, None)
            else:
                out[j] = g
        return out

    def width(form):
        return max(form) - min(form)

    g_total = ONE
    h_total: dict[int, LaurentPoly] = {}
    cur = to_z_form(r)
    while cur and width(cur) >= dw:
        l = min(cur) if bottom else max(cur)
        factor = qshift(wk, -(l - k))
        a = cur[l]
        cur = sub(smul(factor, cur), piecemul(a, l - k, zw))
        g_total = factor * g_total
        h_total = smul(factor, h_total)
        h_total[l - k] = h_total.get(l - k, ZERO) + a
    return g_total, from_z_form(h_total), from_z_form(cur)


# -- text form ----------------------------------------------------------------


def to_str(x: AqElement) -> str:
    """s-normal form, terms by increasing s-exponent, coefficients by
    increasing z-exponent.  Round-trips through parse()."""
    if x.is_zero():
        return "0"
    pieces = []
    for zj, si, c in sorted(x.monomials(), key=lambda m: (m[1], m[0])):
        a = abs(c)
        parts = []
        if a != 1 or (zj == 0 and si == 0):
            parts.append(
                str(a.numerator)
                if a.denominator == 1
                else f"{a.numerator}/{a.denominator}"
            )
        if zj == 1:
            parts.append("z")
        elif zj != 0:
            parts.append(f"z^{zj}")
        if si == 1:
            parts.append("s")
        elif si != 0:
            parts.append(f"s^{si}")
        body = "*".join(parts)
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)


class _Parser:
    """Recursive descent for:  expr := term {(+|-) term};
    term := factor {"*" factor}; factor := ["-"] atom ["^" sint];
    atom := "z" | "s" | "q" | rational | "(" expr ")"."""

    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise ParseError(msg, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch):
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def integer(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected integer")
        return int(self.text[start : self.pos])

    def sint(self):
        neg = self.take("-")
        n = self.integer()
        return -n if neg else n

    def expr(self):
        x = self.term()
        while True:
            if self.take("+"):
                x = x + self.term()
            elif self.take("-"):
                x = x - self.term()
            else:
                return x

    def term(self):
        x = self.factor()
        while self.take("*"):
            x = x * self.factor()
        return x

    def factor(self):
        neg = self.take("-")
        x = self.atom()
        if self.take("^"):
            e = self.sint()
            if e >= 0:
                x = x**e
            else:
                if not x.is_unit():
                    self.error("negative power of a non-unit")
                x = x.inverse_unit() ** (-e)
        return -x if neg else x

    def atom(self):
        ch = self.peek()
        if ch == "(":
            self.take("(")
            x = self.expr()
            if not self.take(")"):
                self.error("expected ')'")
            return x
        if ch == "z":
            self.pos += 1
            return AqElement.monomial(1, zexp=1)
        if ch == "s":
            self.pos += 1
            return AqElement.sigma(1)
        if ch == "q":
            self.pos += 1
            return AqElement.monomial(get_q())
        if ch.isdigit():
            num = self.integer()
            if self.take("/"):
                den = self.integer()
                if den == 0:
                    self.error("zero denominator")
                return AqElement.monomial(Fraction(num, den))
            return AqElement.monomial(Fraction(num))
        self.error("expected atom")

    def parse(self):
        x = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            self.error("unexpected trailing input")
        return x


def parse(text: str) -> AqElement:
    """Parse an expression in z, s, q and rationals into s-normal form.
    q resolves to the ambient session value."""
    return _Parser(text).parse()
