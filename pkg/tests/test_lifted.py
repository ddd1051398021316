import random
from fractions import Fraction

import pytest

from twobridge.lifted import (LiftedMoebius, LiftedPoint, Moebius,
                              ProjectivePoint, boundary_zero, infinity,
                              lift0_apply, order_n_rotation,
                              order_two_rotation)
from twobridge.numberfield import real_cyclotomic_field

F5 = real_cyclotomic_field(5)


def pt(field, x) -> ProjectivePoint:
    return ProjectivePoint(field.element([Fraction(x)]), field.one)


def lpt(field, wind, x) -> LiftedPoint:
    return LiftedPoint(wind, pt(field, x))


# ----------------------------------------------------------------- points

def test_projective_canonicalization():
    p = ProjectivePoint(F5.one, -F5.one)  # [1 : -1] -> [-1 : 1]
    assert p.v == F5.one and p.u == -F5.one
    q = ProjectivePoint(-2 * F5.one, F5.zero)  # [-2 : 0] -> [2 : 0]
    assert not q.finite and q.u.sign() > 0
    assert q == infinity(F5)
    assert pt(F5, 3) == ProjectivePoint(6 * F5.one, 2 * F5.one)
    with pytest.raises(ValueError):
        ProjectivePoint(F5.zero, F5.zero)


def test_lifted_point_order():
    a = lpt(F5, 0, -5)
    b = lpt(F5, 0, 100)
    inf0 = LiftedPoint(0, infinity(F5))
    c = lpt(F5, 1, -77)
    assert a < b < inf0 < c
    assert not a < a and a <= a
    assert lpt(F5, 2, 1) == lpt(F5, 2, 1)
    assert LiftedPoint(3, infinity(F5)) == LiftedPoint(3, infinity(F5))


def test_points_not_hashable():
    with pytest.raises(TypeError):
        hash(pt(F5, 0))
    with pytest.raises(TypeError):
        hash(lpt(F5, 0, 0))


# --------------------------------------------------------------- matrices

def test_moebius_checks_unimodularity():
    with pytest.raises(ValueError):
        Moebius(F5, F5.one, F5.zero, F5.zero, 2 * F5.one)
    m = Moebius.identity(F5)
    assert m.is_identity() and m.trace() == 2 * F5.one


def test_moebius_sign_canonical():
    s = order_two_rotation(F5)
    neg = Moebius(F5, -s.a, -s.b, -s.c, -s.d)
    assert neg == s


def test_rotation_orders():
    for n in (3, 5, 7, 9, 11):
        f = real_cyclotomic_field(n)
        s = order_two_rotation(f)
        r = order_n_rotation(f)
        assert (s * s).is_identity()
        assert (r ** n).is_identity()
        for k in range(1, n):
            assert not (r ** k).is_identity()


# ------------------------------------------------------------------ lifts

def test_lift0_semantics_halfturn():
    s = order_two_rotation(F5)  # pole at 0, image of x is -1/x
    below = lift0_apply(s, lpt(F5, 0, -2))
    assert below == lpt(F5, 0, Fraction(1, 2))
    at = lift0_apply(s, lpt(F5, 0, 0))
    assert at == LiftedPoint(0, infinity(F5))
    above = lift0_apply(s, lpt(F5, 0, 3))
    assert above == lpt(F5, 1, Fraction(-1, 3))
    from_inf = lift0_apply(s, LiftedPoint(0, infinity(F5)))
    assert from_inf == lpt(F5, 1, 0)


def test_lift0_level_preserving_when_upper_triangular():
    m = Moebius(F5, F5.one, F5.lam, F5.zero, F5.one)
    p = lpt(F5, 4, 100)
    assert lift0_apply(m, p).wind == 4
    assert lift0_apply(m, LiftedPoint(2, infinity(F5))) == \
        LiftedPoint(2, infinity(F5))


def test_halfturn_squared_is_deck_translation():
    for n in (3, 5, 7, 9, 11):
        f = real_cyclotomic_field(n)
        ls = LiftedMoebius.lift0(order_two_rotation(f))
        assert ls * ls == LiftedMoebius.translation(f, 1)


def test_lifted_rotation_powers():
    for n in (3, 5, 7, 9, 11):
        f = real_cyclotomic_field(n)
        bt = LiftedMoebius.lift0(order_n_rotation(f) ** 2)
        assert bt ** n == LiftedMoebius.translation(f, n - 2)


def test_translation_is_central():
    t = LiftedMoebius.translation(F5, 3)
    g = LiftedMoebius.lift0(order_n_rotation(F5))
    assert t * g == g * t
    p = lpt(F5, 0, 7)
    assert t.apply(p) == lpt(F5, 3, 7)


def test_group_laws_random():
    rng = random.Random(31)
    f = real_cyclotomic_field(7)
    gens = [LiftedMoebius.lift0(order_two_rotation(f)),
            LiftedMoebius.lift0(order_n_rotation(f) ** 2),
            LiftedMoebius.translation(f, 1)]
    gens += [g.inverse() for g in gens]
    ident = LiftedMoebius.translation(f, 0)
    points = [lpt(f, 0, 0), lpt(f, 0, 1), lpt(f, 0, -1),
              LiftedPoint(0, infinity(f))]
    for _ in range(60):
        word = [rng.choice(gens) for _ in range(rng.randint(1, 8))]
        acc = ident
        for g in word:
            acc = acc * g
        # inverse round-trip
        assert (acc * acc.inverse()).is_identity()
        # action is a homomorphism
        for p in points:
            expect = p
            for g in reversed(word):
                expect = g.apply(expect)
            assert acc.apply(p) == expect
        # lifts are increasing maps
        assert acc.apply(points[0]) < acc.apply(points[1])
        assert acc.apply(points[2]) < acc.apply(points[0])
        assert acc.apply(points[1]) < acc.apply(points[3])


def test_pow_matches_repeated_product():
    f = real_cyclotomic_field(5)
    g = LiftedMoebius.lift0(order_n_rotation(f) ** 2) * \
        LiftedMoebius.lift0(order_two_rotation(f))
    acc = LiftedMoebius.translation(f, 0)
    for k in range(5):
        assert g ** k == acc
        assert g ** (-k) == acc.inverse()
        acc = acc * g
