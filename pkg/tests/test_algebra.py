import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sl3bracket.algebra import (ONE, ZERO, LaurentPoly, ModuleElement, bigon_value,
                                format_element, format_poly, loop_value, lp_add, lp_eval,
                                lp_mirror, lp_mul, make_monomial, me_add, me_is_scalar,
                                me_mirror, me_mul, me_specialize)
from sl3bracket.canon import canonical_form
from sl3bracket.web import heawood, k33, mobius_kantor, theta

A = LaurentPoly.monomial


def P(*pairs):
    return LaurentPoly(dict(pairs))


HEAWOOD = make_monomial([canonical_form(heawood())])
MK = make_monomial([canonical_form(mobius_kantor())])
K33 = make_monomial([canonical_form(k33())])

polys = st.dictionaries(st.integers(-12, 12), st.integers(-5, 5), max_size=5).map(LaurentPoly)
monos = st.sampled_from([(), HEAWOOD, MK, K33, make_monomial(HEAWOOD + MK)])
elements = st.dictionaries(monos, polys, max_size=3).map(ModuleElement)


def test_add_examples():
    assert lp_add(A(6) + 1, A(-6)) == P((6, 1), (0, 1), (-6, 1))
    p = A(3) - 2 * A(-1)
    assert lp_add(p, ZERO) == p
    assert lp_add(A(2), -A(2)) == ZERO
    assert lp_add(A(2), -A(2)).terms == {}


def test_mul_examples():
    assert lp_mul(A(2), A(-2)) == ONE
    b = A(3) + A(-3)
    assert lp_mul(b, b) == A(6) + 2 + A(-6)
    assert lp_mul(A(2), loop_value()) == A(8) + A(2) + A(-4)


def test_eval_examples():
    assert lp_eval(loop_value(), 1) == 3
    assert lp_eval(A(3) + A(-3), -1) == -2
    assert lp_eval(A(8), -1) == 1
    with pytest.raises(ValueError):
        lp_eval(loop_value(), 2)


def test_mirror_examples():
    assert lp_mirror(A(2)) == A(-2)
    assert lp_mirror(loop_value()) == loop_value()
    assert lp_mirror(bigon_value()) == bigon_value()


def test_constants():
    assert loop_value() == A(6) + 1 + A(-6)
    assert bigon_value() == A(3) + A(-3)
    assert [lp_eval(bigon_value(), a) for a in (1, -1)] == [2, -2]
    assert [lp_eval(loop_value(), a) for a in (1, -1)] == [3, 3]


def test_format_poly():
    assert format_poly(loop_value()) == "A^6+1+A^-6"
    assert format_poly(2 * A(3)) == "2*A^3"
    assert format_poly(-A(-1)) == "-A^-1"
    assert format_poly(ZERO) == "0"
    assert format_poly(A(1) - 3) == "A^1-3"


def test_module_examples():
    g = ModuleElement.of(HEAWOOD)
    x = ModuleElement.of(MK, A(2)) + ModuleElement.scalar(A(1))
    assert me_add(x, ModuleElement()) == x
    assert me_add(2 * g, -2 * g).is_zero()
    s = me_add(ModuleElement.of(HEAWOOD, A(1)), ModuleElement.of(MK, A(1)))
    assert len(s.terms) == 2
    assert me_mul(ModuleElement.scalar(A(2)), ModuleElement.scalar(A(-2))) == ModuleElement.scalar(ONE)
    gg = me_mul(g, g)
    assert gg.terms == {make_monomial(HEAWOOD + HEAWOOD): ONE}
    g3 = ModuleElement.of(K33)
    assert me_mul(g + ModuleElement.of(MK), g3) == me_mul(g, g3) + me_mul(ModuleElement.of(MK), g3)


def test_specialize_and_scalar():
    b = bigon_value()
    x = ModuleElement.scalar(LaurentPoly.constant(3)) + ModuleElement.of(HEAWOOD, b)
    assert me_specialize(x, 1) == ModuleElement({(): 3, HEAWOOD: 2})
    assert me_specialize(ModuleElement(), 1).is_zero()
    assert me_specialize(ModuleElement.of(HEAWOOD, b), -1) == ModuleElement({HEAWOOD: -2})
    assert me_is_scalar(ModuleElement.scalar(loop_value()))
    assert not me_is_scalar(ModuleElement.of(HEAWOOD, A(1)))
    assert me_is_scalar(ModuleElement())


def test_monomial_order_and_format():
    t = make_monomial([canonical_form(theta())])
    x = ModuleElement({HEAWOOD: A(1), (): ONE, t: 2 * A(3)})
    text = format_element(x)
    assert text.startswith("1 + (2*A^3)*[1;(0,1),(0,1),(0,1)] + (A^1)*[7;")
    assert format_element(ModuleElement()) == "0"
    assert make_monomial(MK + HEAWOOD) == make_monomial(HEAWOOD + MK)


@given(polys, polys, polys)
def test_poly_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + ZERO == p and p * ONE == p
    assert (p - p).is_zero()


@given(polys, polys)
def test_mirror_is_homomorphism(p, q):
    assert lp_mirror(p * q) == lp_mirror(p) * lp_mirror(q)
    assert lp_mirror(p + q) == lp_mirror(p) + lp_mirror(q)
    assert lp_mirror(lp_mirror(p)) == p


@given(polys, st.sampled_from([1, -1]))
def test_eval_is_homomorphism(p, a):
    q = p * p + 1
    assert lp_eval(q, a) == lp_eval(p, a) ** 2 + 1


@settings(max_examples=60)
@given(elements, elements, elements)
def test_module_ring_laws(x, y, z):
    assert me_add(x, y) == me_add(y, x)
    assert me_mul(x, y) == me_mul(y, x)
    assert me_mul(me_mul(x, y), z) == me_mul(x, me_mul(y, z))
    assert me_mul(x, me_add(y, z)) == me_add(me_mul(x, y), me_mul(x, z))
    assert me_mul(x, ModuleElement.scalar(ONE)) == x
    assert me_mirror(me_mul(x, y)) == me_mul(me_mirror(x), me_mirror(y))


@given(elements, elements, st.sampled_from([1, -1]))
def test_specialize_is_homomorphism(x, y, a):
    assert me_specialize(me_mul(x, y), a) == me_mul(me_specialize(x, a), me_specialize(y, a))


@given(polys)
def test_zero_coefficients_never_stored(p):
    assert 0 not in p.terms.values()
    assert all(c for c in ModuleElement({HEAWOOD: p, (): p - p}).terms.values())
