"""Laurent polynomials over Q and square matrices of them.

A LaurentPoly stores the lowest exponent `lo` and a coefficient tuple whose
first and last entries are nonzero; the zero polynomial is the empty tuple
with lo = 0.  Units of the ring are exactly the monomials c*z^m.  The q-shift
f(z) |-> f(q^k z) reads q from the ambient session (see scalars).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PreconditionViolation, ZeroInput
from .scalars import Scalar, get_q, scalar_to_str


def _as_scalar(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"not a scalar: {c!r}")


class LaurentPoly:
    __slots__ = ("lo", "coeffs")

    def __init__(self, lo=0, coeffs=()):
        coeffs = tuple(_as_scalar(c) for c in coeffs)
        # normalize: trim zero fringe so the representation is canonical
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        end = len(coeffs)
        while end > start and coeffs[end - 1] == 0:
            end -= 1
        if start == end:
            self.lo = 0
            self.coeffs = ()
        else:
            self.lo = lo + start
            self.coeffs = coeffs[start:end]

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero():
        return LaurentPoly()

    @staticmethod
    def const(c):
        return LaurentPoly(0, (c,))

    @staticmethod
    def monomial(c, k):
        return LaurentPoly(k, (c,))

    # -- structure --------------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    @property
    def bot(self):
        """Lowest exponent with nonzero coefficient (zero poly has none)."""
        if not self.coeffs:
            raise ZeroInput("zero polynomial has no degree")
        return self.lo

    @property
    def top(self):
        if not self.coeffs:
            raise ZeroInput("zero polynomial has no degree")
        return self.lo + len(self.coeffs) - 1

    def degree(self):
        """Width top - bot of the support."""
        return self.top - self.bot

    def coeff(self, k):
        if self.lo <= k < self.lo + len(self.coeffs):
            return self.coeffs[k - self.lo]
        return Fraction(0)

    def terms(self):
        """(exponent, coefficient) pairs, increasing exponent, nonzero only."""
        return [(self.lo + i, c) for i, c in enumerate(self.coeffs) if c != 0]

    def unit_decompose(self):
        """(c, m) with self = c*z^m if self is a unit, else None."""
        t = self.terms()
        if len(t) == 1:
            return (t[0][1], t[0][0])
        return None

    def is_unit(self):
        return self.unit_decompose() is not None

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.lo, other.lo)
        hi = max(self.lo + len(self.coeffs), other.lo + len(other.coeffs))
        out = [Fraction(0)] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            out[self.lo - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.lo - lo + i] += c
        return LaurentPoly(lo, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.lo, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_scalar(other)
            if c == 0:
                return LaurentPoly.zero()
            return LaurentPoly(self.lo, tuple(c * a for a in self.coeffs))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    out[i + j] += a * b
        return LaurentPoly(self.lo + other.lo, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise PreconditionViolation("LaurentPoly powers must be nonneg ints")
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k):
        """Multiply by z^k."""
        return LaurentPoly(self.lo + k, self.coeffs)

    def inverse_unit(self):
        """Inverse of a unit c*z^m; PreconditionViolation otherwise."""
        u = self.unit_decompose()
        if u is None:
            raise PreconditionViolation(f"not a unit: {self}")
        c, m = u
        return LaurentPoly.monomial(1 / c, -m)

    def eval(self, x):
        """Evaluate at a nonzero scalar (zero allowed when lo >= 0)."""
        x = _as_scalar(x)
        if x == 0:
            if self.is_zero():
                return Fraction(0)
            if self.lo < 0:
                raise ZeroInput("cannot evaluate negative exponents at 0")
            return self.coeff(0)
        total = Fraction(0)
        for k, c in self.terms():
            total += c * x**k
        return total

    # -- comparisons ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.lo == other.lo and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.lo, self.coeffs))

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return laurent_to_str(self)

    def __bool__(self):
        return not self.is_zero()


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.const(1)
Z = LaurentPoly.monomial(1, 1)


def qshift(f: LaurentPoly, k: int) -> LaurentPoly:
    """f(q^k z) for the ambient q; a ring automorphism for each k."""
    if k == 0 or f.is_zero():
        return f
    q = get_q()
    step = q**k
    out = []
    scale = step**f.lo
    for c in f.coeffs:
        out.append(c * scale)
        scale *= step
    return LaurentPoly(f.lo, out)


def divexact(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Exact quotient f/g; PreconditionViolation if g does not divide f."""
    if g.is_zero():
        raise ZeroInput("division by zero polynomial")
    if f.is_zero():
        return ZERO
    # reduce to ordinary polynomials with nonzero constant terms
    offset = f.lo - g.lo
    rem = list(f.coeffs)
    div = g.coeffs
    out = [Fraction(0)] * (len(rem) - len(div) + 1)
    if len(out) <= 0:
        raise PreconditionViolation("inexact Laurent division (degree)")
    lead = div[-1]
    for i in range(len(out) - 1, -1, -1):
        c = rem[i + len(div) - 1] / lead
        out[i] = c
        if c != 0:
            for j, d in enumerate(div):
                rem[i + j] -= c * d
    if any(r != 0 for r in rem):
        raise PreconditionViolation("inexact Laurent division (remainder)")
    return LaurentPoly(offset, out)


# -- printing -------------------------------------------------------------


def _monomial_str(c: Fraction, k: int, var: str) -> str:
    """|c|*var^k with the usual omissions; sign handled by the caller."""
    a = abs(c)
    parts = []
    if a != 1 or k == 0:
        parts.append(scalar_to_str(a))
    if k == 1:
        parts.append(var)
    elif k != 0:
        parts.append(f"{var}^{k}")
    return "*".join(parts)


def laurent_to_str(f: LaurentPoly, var: str = "z") -> str:
    if f.is_zero():
        return "0"
    pieces = []
    for k, c in f.terms():
        body = _monomial_str(c, k, var)
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)


def laurent_from_str(text: str) -> LaurentPoly:
    """Parse a z-only expression (the aq grammar restricted to z)."""
    from .aq import parse  # local import: aq builds on this module

    x = parse(text)
    f = x.coefficient(0)
    if x != x.from_laurent(f):
        raise PreconditionViolation(f"expression is not sigma-free: {text}")
    return f


# -- matrices -------------------------------------------------------------


class LaurentMatrix:
    """A square matrix over K[z, z^-1]."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(_coerce_entry(e) for e in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise PreconditionViolation("matrix must be square and nonempty")
        self.n = n
        self.rows = rows

    @staticmethod
    def identity(n):
        return LaurentMatrix(
            tuple(
                tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)
            )
        )

    @staticmethod
    def from_strs(entries):
        return LaurentMatrix(
            tuple(tuple(laurent_from_str(e) for e in row) for row in entries)
        )

    def entry(self, i, j):
        return self.rows[i][j]

    def transpose(self):
        return LaurentMatrix(tuple(zip(*self.rows)))

    def qshift(self, k):
        return LaurentMatrix(
            tuple(tuple(qshift(e, k) for e in row) for row in self.rows)
        )

    def __mul__(self, other):
        if isinstance(other, LaurentMatrix):
            if other.n != self.n:
                raise PreconditionViolation("size mismatch")
            return LaurentMatrix(
                tuple(
                    tuple(
                        sum(
                            (self.rows[i][k] * other.rows[k][j] for k in range(self.n)),
                            ZERO,
                        )
                        for j in range(self.n)
                    )
                    for i in range(self.n)
                )
            )
        return NotImplemented

    def apply(self, vec):
        """Matrix times a column vector (list of LaurentPoly)."""
        if len(vec) != self.n:
            raise PreconditionViolation("size mismatch")
        return [
            sum((self.rows[i][k] * vec[k] for k in range(self.n)), ZERO)
            for i in range(self.n)
        ]

    def kron(self, other):
        n, m = self.n, other.n
        return LaurentMatrix(
            tuple(
                tuple(
                    self.rows[i][j] * other.rows[k][l]
                    for j in range(n)
                    for l in range(m)
                )
                for i in range(n)
                for k in range(m)
            )
        )

    def __eq__(self, other):
        return isinstance(other, LaurentMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(
            ", ".join(str(e) for e in row) for row in self.rows
        )
        return f"LaurentMatrix[{body}]"

    def to_strs(self):
        return [[laurent_to_str(e) for e in row] for row in self.rows]


def _coerce_entry(e):
    if isinstance(e, LaurentPoly):
        return e
    if isinstance(e, (int, Fraction)):
        return LaurentPoly.const(e)
    if isinstance(e, str):
        return laurent_from_str(e)
    raise TypeError(f"bad matrix entry: {e!r}")


def det(mat: LaurentMatrix) -> LaurentPoly:
    """Determinant by fraction-free (Bareiss) elimination; every interior
    division is exact in K[z, z^-1] and is checked."""
    n = mat.n
    m = [list(row) for row in mat.rows]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = divexact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
            m[i][k] = ZERO
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


def det_and_inverse(mat: LaurentMatrix):
    """(det, inverse) where inverse is None unless det is a unit.

    The inverse, when present, is exact: entries are cofactors divided by the
    unit determinant, and T * T^-1 = I holds on the nose.
    """
    d = det(mat)
    u = d.unit_decompose() if not d.is_zero() else None
    if u is None:
        return d, None
    n = mat.n
    if n == 1:
        return d, LaurentMatrix(((d.inverse_unit(),),))
    dinv = d.inverse_unit()
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = LaurentMatrix(
                tuple(
                    tuple(mat.rows[r][c] for c in range(n) if c != i)
                    for r in range(n)
                    if r != j
                )
            )
            cof = det(minor)
            if (i + j) % 2:
                cof = -cof
            row.append(cof * dinv)
        rows.append(tuple(row))
    return d, LaurentMatrix(tuple(rows))
