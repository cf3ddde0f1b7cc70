from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qec.errors import PreconditionViolation, ZeroInput
from qec.scalars import (
    QParam,
    get_q,
    q_power_class,
    qpow,
    scalar_from_str,
    scalar_to_str,
    set_q,
    using_q,
)


def test_qparam_rejects_degenerate_values():
    for v in (0, 1, -1):
        with pytest.raises(PreconditionViolation):
            QParam(Fraction(v))
    with pytest.raises(PreconditionViolation):
        set_q(Fraction(1))


def test_session_q_default_and_override():
    assert get_q() == 2
    with using_q(Fraction(3, 5)):
        assert get_q() == Fraction(3, 5)
        with using_q(Fraction(-7)):
            assert get_q() == -7
        assert get_q() == Fraction(3, 5)
    assert get_q() == 2


def test_qpow():
    assert qpow(0) == 1
    assert qpow(3) == 8
    assert qpow(-2) == Fraction(1, 4)
    with using_q(Fraction(-2, 3)):
        assert qpow(2) == Fraction(4, 9)
        assert qpow(-1) == Fraction(-3, 2)


def test_scalar_str_round_trip():
    for text in ("3/2", "-7", "0", "22/7", "-5/9"):
        assert scalar_to_str(scalar_from_str(text)) == text


# -- q_power_class against an independent prime-valuation oracle ---------------


def _valuation(n: int, p: int) -> int:
    v = 0
    n = abs(n)
    while n and n % p == 0:
        n //= p
        v += 1
    return v


def _prime_factors(n: int):
    n = abs(n)
    fs = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            fs.add(d)
            n //= d
        d += 1
    if n > 1:
        fs.add(n)
    return fs


def _oracle_power_class(c: Fraction, q: Fraction):
    """Exponent n with q^n == c, via the valuation at any prime dividing q.

    |q| != 1 guarantees some prime appears with nonzero total valuation; that
    prime pins the only possible exponent, which is then checked exactly.
    """
    for p in sorted(_prime_factors(q.numerator) | _prime_factors(q.denominator)):
        vq = _valuation(q.numerator, p) - _valuation(q.denominator, p)
        if vq == 0:
            continue
        vc = _valuation(c.numerator, p) - _valuation(c.denominator, p)
        if vc % vq:
            return None
        n = vc // vq
        return n if q**n == c else None
    return None


_QS = [Fraction(2), Fraction(1, 2), Fraction(-2), Fraction(3, 5), Fraction(-7, 3), Fraction(10)]


def test_q_power_class_on_exact_powers():
    for q in _QS:
        with using_q(q):
            for n in range(-8, 9):
                assert q_power_class(q**n) == n
                assert _oracle_power_class(q**n, q) == n


def test_q_power_class_agrees_with_valuation_oracle():
    candidates = [
        Fraction(3),
        Fraction(5),
        Fraction(7, 11),
        Fraction(-4),
        Fraction(6),
        Fraction(9, 25),
        Fraction(-1),
        Fraction(1),
        Fraction(2, 3),
        Fraction(49, 9),
    ]
    for q in _QS:
        with using_q(q):
            for c in candidates + [q**3 * 5, -(q**2), q**-4 * Fraction(7, 2)]:
                assert q_power_class(c) == _oracle_power_class(c, q), (q, c)


@given(
    st.sampled_from(_QS),
    st.integers(min_value=-9, max_value=9),
    st.fractions(min_value=Fraction(-20), max_value=Fraction(20), max_denominator=12),
)
def test_q_power_class_hypothesis(q, n, c):
    if c == 0:
        return
    with using_q(q):
        assert q_power_class(q**n) == n
        assert q_power_class(c) == _oracle_power_class(c, q)


def test_q_power_class_zero_input():
    with pytest.raises(ZeroInput):
        q_power_class(Fraction(0))
