"""Exact arithmetic checks for Laurent polynomials and rational functions."""

from fractions import Fraction
import random

import pytest

from linkhom.polyalg import LaurentPoly, RationalFn, laurent_gcd, quantum_integer

Q = ("q",)
QT = ("t", "q")


def qp(mapping):
    return LaurentPoly.from_terms(Q, mapping)


def tq(mapping):
    return LaurentPoly.from_terms(QT, mapping)


def test_binomial_square():
    p = qp({1: 1, -1: 1})  # q + q^-1
    assert p * p == qp({2: 1, 0: 2, -2: 1})


def test_additive_inverse_is_empty():
    p = qp({3: 2, -1: 5})
    assert (p + (-p)).is_zero()
    assert (p - p).terms == {}


def test_cancellation_through_rational():
    one_minus_q2 = qp({0: 1, 2: -1})
    d = RationalFn(tq({(0, 0): 1, (-1, 1): 1}), tq({(0, 0): 1, (0, 2): -1}))
    prod = RationalFn.from_poly(tq({(0, 0): 1, (0, 2): -1})) * d
    assert prod == RationalFn.from_poly(tq({(0, 0): 1, (-1, 1): 1}))
    assert prod.is_poly()


def test_substitute_specialization_value():
    # t -> -q^-3 in (1 + t^-1 q)/(1 - q^2) gives 1 + q^2
    d = RationalFn(tq({(0, 0): 1, (-1, 1): 1}), tq({(0, 0): 1, (0, 2): -1}))
    value = LaurentPoly.monomial(Q, -3, -1)
    out = d.substitute("t", value)
    assert out == qp({0: 1, 2: 1})


def test_substitute_identity_monomial():
    t_itself = tq({(1, 0): 1})
    out = t_itself.substitute("t", LaurentPoly.monomial(Q, -3, -1))
    assert out == qp({-3: -1})


def test_substitute_division_by_zero():
    f = RationalFn(tq({(0, 0): 1}), tq({(1, 0): 1, (0, 0): -1}))  # 1/(t-1)
    with pytest.raises(ZeroDivisionError):
        f.substitute("t", LaurentPoly.one(Q))


@pytest.mark.parametrize("k,expected", [
    (0, {}),
    (1, {0: 1}),
    (2, {1: 1, -1: 1}),
    (3, {2: 1, 0: 1, -2: 1}),
])
def test_quantum_integers(k, expected):
    assert quantum_integer(k) == qp(expected)


def test_quantum_integer_defining_relation():
    qm = qp({1: 1, -1: -1})  # q - q^-1
    for k in range(21):
        expected = LaurentPoly.monomial(Q, k) - LaurentPoly.monomial(Q, -k)
        assert quantum_integer(k) * qm == expected


def test_coefficient_access():
    p = qp({2: 1, 0: 2})
    assert p.coefficient(2) == 1
    assert LaurentPoly.zero(Q).coefficient(1) == 0
    half = LaurentPoly.monomial(Q, Fraction(1, 2))
    assert half.coefficient(Fraction(1, 2)) == 1


def test_half_step_arithmetic():
    h = LaurentPoly.monomial(Q, Fraction(1, 2))
    assert h * h == qp({1: 1})
    assert h.coefficient(1) == 0


def _random_poly(rng, variables, nterms=4, span=4):
    terms = {}
    for _ in range(nterms):
        exps = tuple(rng.randint(-span, span) for _ in variables)
        terms[exps if len(variables) > 1 else exps[0]] = rng.randint(-5, 5)
    return LaurentPoly.from_terms(variables, terms)


def test_ring_axioms_randomized():
    rng = random.Random(7)
    for _ in range(60):
        a = _random_poly(rng, QT)
        b = _random_poly(rng, QT)
        c = _random_poly(rng, QT)
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)


def test_substitute_is_ring_homomorphism():
    rng = random.Random(11)
    value = qp({-1: 1, 2: -2})
    for _ in range(25):
        a = _random_poly(rng, QT, span=3)
        b = _random_poly(rng, QT, span=3)
        sa, sb = a.substitute("t", value), b.substitute("t", value)
        if isinstance(sa, LaurentPoly):
            sa = RationalFn.from_poly(sa)
        if isinstance(sb, LaurentPoly):
            sb = RationalFn.from_poly(sb)
        prod = (a * b).substitute("t", value)
        if isinstance(prod, LaurentPoly):
            prod = RationalFn.from_poly(prod)
        assert prod == sa * sb


def test_rational_canonical_form_different_factorizations():
    # (1-q^4)/(1-q^2) and (1+q^2) have the same canonical representation
    a = RationalFn(qp({0: 1, 4: -1}), qp({0: 1, 2: -1}))
    b = RationalFn(qp({0: 1, 2: 1}), qp({0: 1}))
    assert a == b
    assert a.num == b.num and a.den == b.den
    # scaling numerator and denominator does not change the representation
    c = RationalFn(qp({1: -3, 5: 3}), qp({1: -3, 3: 3}))
    assert c == a


def test_rational_canonical_form_randomized():
    rng = random.Random(3)
    for _ in range(20):
        n = _random_poly(rng, QT, nterms=3, span=2)
        d = _random_poly(rng, QT, nterms=3, span=2)
        m = _random_poly(rng, QT, nterms=2, span=2)
        if d.is_zero() or m.is_zero():
            continue
        f1 = RationalFn(n, d)
        f2 = RationalFn(n * m, d * m)
        assert f1 == f2
        assert f1.num == f2.num and f1.den == f2.den


def test_laurent_gcd_known_factor():
    a = qp({0: 1, 2: -1}) * qp({0: 1, 2: 1})
    b = qp({0: 1, 2: -1}) * qp({1: 1})
    g = laurent_gcd(a, b)
    assert g in (qp({0: 1, 2: -1}), qp({0: -1, 2: 1}))


def test_divide_exact_and_failure():
    p = qp({0: 1, 2: 2, 4: 1})
    d = qp({0: 1, 2: 1})
    assert p.divide_exact(d) == d
    with pytest.raises(ValueError):
        qp({0: 1, 1: 1}).divide_exact(qp({0: 2}))


def test_arity_mismatch_raises():
    with pytest.raises(ValueError):
        qp({0: 1}) + tq({(0, 0): 1})


def test_zero_denominator_raises():
    with pytest.raises(ZeroDivisionError):
        RationalFn(qp({0: 1}), LaurentPoly.zero(Q))


def test_render_and_json():
    p = LaurentPoly.from_terms(QT, {(1, 0): -1, (0, 2): 3, (Fraction(-1, 2), 0): 1})
    s = p.render()
    assert "3*q^2" in s and "t" in s
    js = p.to_json()
    assert js["half_steps"] is True
    assert {"t": 2, "q": 0, "c": -1} in js["terms"]


def test_pow_negative_monomial():
    m = qp({2: -1})
    assert m ** -2 == qp({-4: 1})
    with pytest.raises(ValueError):
        qp({0: 1, 2: 1}) ** -1
