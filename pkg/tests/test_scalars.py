import random
from fractions import Fraction

import pytest

from gradecat.scalars import (
    Cyclotomic,
    RationalQuaternion,
    cyclotomic_polynomial,
    zeta,
)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_zeta4_squares_to_minus_one():
    assert zeta(4) * zeta(4) == -1


def test_zeta_has_exact_order():
    for n in (3, 4, 6, 8):
        z = zeta(n)
        assert z ** n == 1
        for k in range(1, n):
            assert z ** k != 1


def test_conj_of_zeta3():
    assert zeta(3).conjugate() == zeta(3) ** 2


def test_inverse_of_one_plus_i():
    val = 1 + zeta(4)
    inv = val.inverse()
    assert inv == (1 - zeta(4)) * Fraction(1, 2)
    assert val * inv == 1


def test_cross_conductor_arithmetic():
    # zeta_6 = -zeta_3^2
    assert zeta(6) == -(zeta(3) ** 2)
    assert zeta(6) * zeta(2) == zeta(3) ** 2
    assert zeta(4) + zeta(3) == zeta(3) + zeta(4)


def random_cyclo(rng, n):
    deg = len(cyclotomic_polynomial(n)) - 1
    return Cyclotomic(n, [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(deg)])


def test_field_axioms_sampled():
    rng = random.Random(11)
    for n in (3, 4, 8, 12):
        for _ in range(20):
            a, b, c = (random_cyclo(rng, n) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            if a:
                assert a * a.inverse() == 1


def test_conj_is_ring_involution():
    rng = random.Random(5)
    for n in (3, 4, 8):
        for _ in range(15):
            a, b = random_cyclo(rng, n), random_cyclo(rng, n)
            assert a.conjugate().conjugate() == a
            assert (a + b).conjugate() == a.conjugate() + b.conjugate()
            assert (a * b).conjugate() == a.conjugate() * b.conjugate()


def test_conj_fixes_exactly_rationals_at_quadratic_conductors():
    # Q(zeta_N) for N in {3, 4} has Q as its real subfield
    rng = random.Random(9)
    for n in (3, 4):
        for _ in range(40):
            a = random_cyclo(rng, n)
            assert (a.conjugate() == a) == a.is_rational()


def test_root_of_unity_detection():
    assert zeta(8, 3).is_root_of_unity_or_zero()
    assert (-zeta(3)).is_root_of_unity_or_zero()
    assert not (1 + zeta(4)).is_root_of_unity_or_zero()


def test_cyclotomic_json_roundtrip():
    a = Cyclotomic(4, [Fraction(1, 2), Fraction(-3)])
    assert Cyclotomic.from_json(a.to_json()) == a


# ---------------------------------------------------------------------------
# quaternions
# ---------------------------------------------------------------------------

def test_quaternion_relations():
    i, j, k = RationalQuaternion.i(), RationalQuaternion.j(), RationalQuaternion.k()
    assert i * i == -1
    assert j * j == -1
    assert k * k == -1
    assert i * j == k
    assert j * i == -k
    assert i * j * k == -1


def test_quaternion_inverse_of_one_plus_i():
    q = RationalQuaternion(1, 1)
    assert q.inverse() == RationalQuaternion(Fraction(1, 2), Fraction(-1, 2))
    assert q * q.inverse() == 1
    assert q.inverse() * q == 1


def random_quat(rng):
    return RationalQuaternion(*(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4)))


def test_quaternion_division_ring_axioms():
    rng = random.Random(23)
    for _ in range(40):
        a, b, c = (random_quat(rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if a:
            assert a * a.inverse() == 1
            assert a.inverse() * a == 1


def test_quaternion_conj_antihomomorphism():
    rng = random.Random(29)
    for _ in range(30):
        a, b = random_quat(rng), random_quat(rng)
        assert (a * b).conjugate() == b.conjugate() * a.conjugate()
        assert a.conjugate().conjugate() == a


def test_quaternion_norm_multiplicative():
    rng = random.Random(31)
    for _ in range(30):
        a, b = random_quat(rng), random_quat(rng)
        assert (a * b).norm() == a.norm() * b.norm()


def test_quaternion_zero_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        RationalQuaternion().inverse()
    with pytest.raises(ZeroDivisionError):
        Cyclotomic.from_rational(0, 4).inverse()
