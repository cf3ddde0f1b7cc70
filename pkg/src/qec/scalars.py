"""Exact scalars and the session parameter q.

Scalars are `fractions.Fraction` values: arbitrary-precision, always in lowest
terms with positive denominator.  The deformation parameter q is a scalar
outside {0, 1, -1}; everything downstream reads it from the ambient session
(default q = 2) instead of threading it through every call.  No floating point
is used anywhere in this package.
"""

from __future__ import annotations

from contextlib import contextmanager
from fractions import Fraction

from .errors import PreconditionViolation, ZeroInput

Scalar = Fraction


def scalar_from_str(text: str) -> Fraction:
    """Parse "a" or "a/b" into an exact rational."""
    return Fraction(text.strip())


def scalar_to_str(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class QParam:
    """A validated deformation parameter: nonzero and not a root of unity.

    Over the rationals the only roots of unity are 1 and -1, so the invariant
    is q not in {0, 1, -1}; with that, q^n = q^m implies n = m.
    """

    __slots__ = ("value",)

    def __init__(self, value):
        value = Fraction(value)
        if value == 0 or value == 1 or value == -1:
            raise PreconditionViolation(f"q must avoid {{0, 1, -1}}, got {value}")
        self.value = value

    def __repr__(self):
        return f"QParam({scalar_to_str(self.value)})"

    def __eq__(self, other):
        return isinstance(other, QParam) and self.value == other.value


_session_q = QParam(Fraction(2))


def set_q(value) -> None:
    """Set the ambient q for the current session."""
    global _session_q
    _session_q = value if isinstance(value, QParam) else QParam(value)


def get_q() -> Fraction:
    """The ambient q as a plain scalar."""
    return _session_q.value


def get_qparam() -> QParam:
    return _session_q


@contextmanager
def using_q(value):
    """Temporarily switch the ambient q (tests, CLI overrides)."""
    global _session_q
    saved = _session_q
    set_q(value)
    try:
        yield _session_q
    finally:
        _session_q = saved


def qpow(n: int) -> Fraction:
    """q^n for the ambient q; n may be negative."""
    return get_q() ** n


def q_power_class(c, qp: QParam | None = None):
    """The unique n with c = q^n, or None if c is not a power of q.

    Exact decision: |q| != 1 for admissible rational q, so |q^n| is strictly
    monotone in n; walking n toward |c| visits every candidate.
    """
    c = Fraction(c)
    if c == 0:
        raise ZeroInput("0 is not in any q-power class")
    q = (qp or _session_q).value
    if c == 1:
        return 0
    # Reduce to |q| > 1; the class for q^-1 is the negated class for q.
    if abs(q) < 1:
        n = q_power_class(c, QParam(1 / q))
        return None if n is None else -n
    if abs(c) > 1:
        power, n = q, 1
        while abs(power) < abs(c):
            power *= q
            n += 1
        return n if power == c else None
    if abs(c) < 1:
        power, n = 1 / q, -1
        while abs(power) > abs(c):
            power /= q
            n -= 1
        return n if power == c else None
    # |c| = 1 with c != 1: only candidate is n = 0, already excluded.
    return None
