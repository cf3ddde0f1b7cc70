"""Left-ideal machinery: principal membership, annihilators of cosets in
cyclic modules, cyclic-vector searches, and the line-subbundle probe."""

from fractions import Fraction

import pytest

from qec.aq import AqElement, degrees, parse, sigma_divide, unit_normalize
from qec.errors import PreconditionViolation, SearchExhausted
from qec.ideals import (
    IdealPresentation,
    SearchBounds,
    annihilator_in_good,
    annihilator_space,
    cyclic_search,
    line_subbundle_probe,
    membership_principal,
    minimal_annihilator_width,
)
from qec.laurent import ONE, ZERO, LaurentPoly
from qec.modules import (
    Good,
    LineBundle,
    MatrixModule,
    SigmaMatrix,
    Torsion,
    aq_act,
    extension_fixture,
    to_matrix,
)
from qec.laurent import LaurentMatrix
from qec.samples import rand_aq, rand_sigma_good
from qec.scalars import qpow


def test_membership_multiples(rng):
    for _ in range(20):
        p = rand_sigma_good(rng, t_max=3)
        x = rand_aq(rng, max_width=2)
        assert membership_principal(x * p, p)
    assert membership_principal(AqElement.zero(), parse("s - 1"))


def test_membership_rejects_nonmembers():
    assert not membership_principal(parse("1"), parse("s - 1"))
    assert not membership_principal(parse("z"), parse("s - 2"))
    # lower width than the generator: cannot be a member
    assert not membership_principal(parse("(1+z)*s - (2*z+1)"), parse("s^2 - 3*s + 2"))


def test_membership_needs_good_generator():
    with pytest.raises(PreconditionViolation):
        membership_principal(parse("1"), parse("(1+z)*s - (2*z+1)"))


def test_two_generator_division_phenomenon():
    # p is sigma-divisible by w, but only with the non-unit cofactor 2z+1
    p = parse("s^2 - 3*s + 2")
    w = parse("(1+z)*s - (2*z+1)")
    g, h, rem = sigma_divide(p, w)
    assert rem.is_zero()
    assert not g.is_unit()
    ge = AqElement.from_laurent(g)
    assert ge * p == h * w
    # the minimal cofactor is 2z+1: (2z+1) p = (s-2) w
    assert parse("2*z + 1") * p == (parse("s") - parse("2")) * w


def test_annihilator_two_generator_example():
    # the coset of (1+z) in O = A_q/(s-1) has a non-principal annihilator
    ann = annihilator_in_good(parse("s - 1"), parse("1 + z"))
    assert ann.kind == "two_generator"
    p, w = ann.generators
    assert unit_normalize(p) == unit_normalize(parse("s^2 - 3*s + 2"))
    assert unit_normalize(w) == unit_normalize(parse("(1+z)*s - (2*z+1)"))
    # both generators kill the coset
    T = to_matrix(Good(parse("s - 1")))
    v = aq_act(parse("1 + z"), T, [ONE])
    for gen in ann.generators:
        assert all(c.is_zero() for c in aq_act(gen, T, v))
    # the identity (qz+1) p = (s - q) w ties the two generators together
    assert parse("2*z + 1") * parse("s^2 - 3*s + 2") == (
        parse("s") - parse("2")
    ) * parse("(1+z)*s - (2*z+1)")


def test_annihilator_of_monomial_cosets():
    # z^n e in O has the principal annihilator (s - q^n)
    for n in range(-16, 17):
        ann = annihilator_in_good(parse("s - 1"), AqElement.monomial(1, n))
        assert ann.kind == "principal"
        expected = parse("s") - AqElement.from_laurent(
            LaurentPoly.const(qpow(n))
        )
        assert unit_normalize(ann.generators[0]) == unit_normalize(expected)


def test_annihilator_trivial_cases():
    ann = annihilator_in_good(parse("s - 1"), parse("1"))
    assert ann.kind == "principal"
    assert unit_normalize(ann.generators[0]) == unit_normalize(parse("s - 1"))
    # the zero coset is annihilated by everything
    ann0 = annihilator_in_good(parse("s - 1"), parse("0"))
    assert ann0 == IdealPresentation.principal(AqElement.one())
    ann0b = annihilator_in_good(parse("s - 1"), parse("s - 1"))
    assert ann0b == IdealPresentation.principal(AqElement.one())


def test_annihilator_search_exhausted():
    tiny = SearchBounds(deg_sigma=1, deg_z=0, window=2)
    with pytest.raises(SearchExhausted):
        annihilator_in_good(parse("s - 1"), parse("1 + z"), tiny)


def test_minimal_annihilator_width_values():
    # in a rank-one module every vector has a width-one annihilator over K(z)
    T = to_matrix(Good(parse("s - 1")))
    v1 = aq_act(parse("1 + z"), T, [ONE])
    assert minimal_annihilator_width(T, v1, 4) == 1
    # rank two: e1 is cyclic, so nothing below width two annihilates it
    T2 = to_matrix(Good(parse("z - s - s^-1")))
    e1 = (ONE, ZERO)
    assert minimal_annihilator_width(T2, e1, 4) == 2
    assert minimal_annihilator_width(T2, e1, 1) is None


def test_annihilator_space_postconditions(rng):
    T = to_matrix(Good(parse("s^2 - 3*s + 2")))
    v = (ONE, ZERO)
    space = annihilator_space(T, v, 2, 0)
    assert space
    for x in space:
        assert all(c.is_zero() for c in aq_act(x, T, list(v)))


def test_cyclic_search_counterexample_module():
    res = cyclic_search(to_matrix(Good(parse("z - s - s^-1"))))
    assert res is not None
    assert res.rank_S_upper == 1 and res.certified
    assert res.ann.kind == "principal"
    gen = res.ann.generators[0]
    d = degrees(gen)
    assert d.deg_sigma == 2 and d.deg_z == 1 and d.sigma_good
    assert unit_normalize(gen) == unit_normalize(parse("1 - 2*z*s + s^2"))


def test_cyclic_search_line_and_torsion():
    res = cyclic_search(to_matrix(LineBundle(3, 2)))
    assert res.rank_S_upper == 2 and res.certified
    assert res.ann.kind == "principal"
    assert unit_normalize(res.ann.generators[0]) == unit_normalize(
        parse("s - 3*z^2")
    )
    resj = cyclic_search(to_matrix(Torsion([(1, 2)])))
    assert resj.rank_S_upper == 0 and resj.certified


def test_cyclic_search_two_generator_case():
    T = to_matrix(extension_fixture())
    res = cyclic_search(T)
    assert res is not None and res.certified
    assert res.rank_S_upper == 1
    # whichever presentation was found, its generators kill the vector
    for gen in res.ann.generators:
        assert all(c.is_zero() for c in aq_act(gen, T, list(res.v)))


def test_cyclic_search_respects_bounds():
    tight = SearchBounds(deg_sigma=2, deg_z=0, window=4)
    assert cyclic_search(to_matrix(LineBundle(1, 2)), tight) is None


def test_line_subbundle_probe_fixture():
    T = to_matrix(extension_fixture())
    found = line_subbundle_probe(T, range(-2, 3), window=6)
    assert any(c == 1 and k == 1 for c, k, _ in found)
    for c, k, v in found:
        # verify the eigen-equation T(z) v(qz) = c z^k v(z) exactly
        from qec.laurent import qshift

        img = T.mat.apply([qshift(f, 1) for f in v])
        scale = LaurentPoly.monomial(c, k)
        assert list(img) == [scale * f for f in v]


def test_line_subbundle_probe_simple_module_empty():
    T = to_matrix(Good(parse("z - s - s^-1")))
    assert line_subbundle_probe(T, range(-4, 5), window=10) == []


def test_line_subbundle_probe_line_module():
    T = to_matrix(LineBundle(Fraction(3), 2))
    found = line_subbundle_probe(T, range(-1, 4), window=4)
    assert any(c == 3 and k == 2 for c, k, _ in found)
