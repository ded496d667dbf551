"""Quaternion multiplication table, inverses, and norm multiplicativity."""

import random
from fractions import Fraction

import pytest

from paulikit.quaternion import Quaternion, ZeroQuaternion, unit_label, units

ONE = Quaternion.one()
I, J, K = Quaternion.i(), Quaternion.j(), Quaternion.k()


class TestRuleTable:
    def test_squares(self):
        assert I * I == -ONE
        assert J * J == -ONE
        assert K * K == -ONE

    def test_cyclic_products(self):
        assert I * J == K
        assert J * K == I
        assert K * I == J

    def test_anticyclic_products(self):
        assert J * I == -K
        assert K * J == -I
        assert I * K == -J

    def test_one_is_neutral(self):
        x = Quaternion(Fraction(1, 2), Fraction(-3), Fraction(2, 7), Fraction(5))
        assert ONE * x == x
        assert x * ONE == x

    def test_triple_product(self):
        # (i*j)*k = k*k = -1
        assert (I * J) * K == -ONE


class TestInverse:
    def test_unit_inverses(self):
        assert I.inverse() == -I
        assert ONE.inverse() == ONE
        assert (I * J).inverse() == -K

    def test_zero_raises(self):
        with pytest.raises(ZeroQuaternion):
            Quaternion().inverse()

    def test_general_inverse_formula(self):
        x = Quaternion(Fraction(1), Fraction(2), Fraction(-3), Fraction(4))
        assert x * x.inverse() == ONE
        assert x.inverse() == x.conjugate().scale(Fraction(1, 30))  # norm^2 = 30

    def test_unit_norm_inverse_is_conjugate(self):
        # norm-1 quaternion: (3/5, 4/5, 0, 0) and friends
        for coeffs in [(Fraction(3, 5), Fraction(4, 5), 0, 0),
                       (Fraction(1, 3), Fraction(2, 3), Fraction(2, 3), 0),
                       (Fraction(1, 5), Fraction(2, 5), Fraction(2, 5), Fraction(4, 5))]:
            x = Quaternion(*coeffs)
            assert x.norm_sq() == 1
            assert x.inverse() == x.conjugate()


def test_norm_multiplicativity_on_1000_random_rational_pairs():
    rng = random.Random(12345)

    def rand_quat():
        return Quaternion(
            *(Fraction(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(4))
        )

    for _ in range(1000):
        x, y = rand_quat(), rand_quat()
        assert (x * y).norm_sq() == x.norm_sq() * y.norm_sq()


def test_unit_labels():
    assert [unit_label(u) for u in units()] == [
        "1", "-1", "i", "-i", "j", "-j", "k", "-k"
    ]
    with pytest.raises(ValueError):
        unit_label(Quaternion(2))
