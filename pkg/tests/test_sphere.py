"""Sphere actions: axioms, freeness, orbits, exact sample families."""

from fractions import Fraction

import pytest
from gmpy2 import mpq

from paulikit.quaternion import Quaternion
from paulikit.scalars import GaussianRational
from paulikit.sphere import (
    NotOnSphere,
    NotUnitGroupElement,
    SpherePointC,
    SpherePointQ,
    SphereAction,
    check_action_axioms,
    check_freeness,
    orbit,
    orbit_size_report,
    q8_act,
    q8_sphere_action,
    sample_points_c,
    sample_points_q,
    z4_act,
    z4_sphere_action,
)

ONE_Q = SpherePointQ(Quaternion.one())


def gr(re, im=0):
    return GaussianRational(re, im)


def c_point(re0, im0, re1, im1):
    return SpherePointC(gr(re0, im0), gr(re1, im1))


class TestPointTypes:
    def test_off_sphere_rejected(self):
        with pytest.raises(NotOnSphere):
            SpherePointQ(Quaternion(Fraction(1, 2)))
        with pytest.raises(NotOnSphere):
            SpherePointC(gr(1), gr(1))

    def test_exact_norm_accepted(self):
        SpherePointQ(Quaternion(Fraction(3, 5), Fraction(4, 5), 0, 0))
        c_point(Fraction(3, 5), 0, Fraction(4, 5), 0)


class TestQ8Action:
    def test_negative_one_negates(self):
        x = SpherePointQ(Quaternion(Fraction(3, 5), Fraction(4, 5), 0, 0))
        assert q8_act(-Quaternion.one(), x) == SpherePointQ(-x.q, _validate=False)

    def test_unit_acting_on_one(self):
        assert q8_act(Quaternion.i(), ONE_Q).q == Quaternion.i()

    def test_rule_table_through_action(self):
        j_point = SpherePointQ(Quaternion.j())
        assert q8_act(Quaternion.i(), j_point).q == Quaternion.k()

    def test_non_unit_rejected(self):
        with pytest.raises(NotUnitGroupElement):
            q8_act(Quaternion(Fraction(1, 2)), ONE_Q)

    def test_orbit_of_one_is_all_units(self):
        from paulikit.quaternion import units

        group = q8_sphere_action().group
        points = orbit(ONE_Q, group, q8_act)
        assert {p.q for p in points} == set(units())


class TestZ4Action:
    def test_generator_on_basis_point(self):
        p = c_point(1, 0, 0, 0)
        assert z4_act(1, p) == c_point(0, 1, 0, 0)  # (1, 0) -> (i, 0)

    def test_fourth_power_is_identity(self):
        p = c_point(Fraction(3, 5), 0, Fraction(4, 5), 0)
        assert z4_act(4, p) == p

    def test_square_negates(self):
        p = c_point(Fraction(1, 3), Fraction(2, 3), Fraction(2, 3), 0)
        assert z4_act(2, p) == SpherePointC(-p.z0, -p.z1)

    def test_negative_exponents_wrap(self):
        p = c_point(Fraction(3, 5), 0, 0, Fraction(4, 5))
        assert z4_act(-1, p) == z4_act(3, p)

    def test_orbit_of_first_basis_point(self):
        p = c_point(1, 0, 0, 0)
        group = z4_sphere_action().group
        points = orbit(p, group, z4_act)
        assert points == [
            c_point(1, 0, 0, 0),
            c_point(0, 1, 0, 0),
            c_point(-1, 0, 0, 0),
            c_point(0, -1, 0, 0),
        ]


class TestSampleFamilies:
    def test_counts_and_determinism(self):
        a = sample_points_q(1000, seed=7)
        b = sample_points_q(1000, seed=7)
        assert a == b
        assert len(set(a)) == 1000
        c1 = sample_points_c(1000, seed=7)
        assert len(set(c1)) == 1000

    def test_seed_changes_selection(self):
        assert sample_points_q(50, seed=0) != sample_points_q(50, seed=1)

    def test_all_samples_exactly_on_sphere(self):
        for p in sample_points_q(200, seed=3):
            assert p.q.norm_sq() == 1
        for p in sample_points_c(200, seed=3):
            assert p.z0.norm_sq() + p.z1.norm_sq() == 1

    def test_requesting_too_many_samples(self):
        with pytest.raises(ValueError):
            sample_points_q(10**6)


class TestChecks:
    def test_axioms_pass_on_samples(self):
        pts = sample_points_q(150, seed=0)
        report = check_action_axioms(q8_sphere_action(), pts)
        assert report["passed"]
        assert report["compatibility_triples"] == 64 * 150
        pts_c = sample_points_c(150, seed=0)
        report_c = check_action_axioms(z4_sphere_action(), pts_c)
        assert report_c["passed"]

    def test_corrupted_action_fails_compatibility(self):
        # negative control: post-compose with an extra rotation
        base = q8_sphere_action()
        j = Quaternion.j()

        def corrupted(g, p):
            if g == Quaternion.i():
                return SpherePointQ(j * (g * p.q), _validate=False)
            return q8_act(g, p)

        action = SphereAction("corrupted", base.group, corrupted,
                              base.point_norm_ok)
        report = check_action_axioms(action, sample_points_q(20, seed=0))
        assert not report["passed"]
        assert report["compatibility_failures"] > 0

    def test_freeness_reports(self):
        rq = check_freeness(q8_sphere_action(), sample_points_q(200, seed=0))
        assert rq["passed"]
        assert rq["fixed_points"] == 0
        certs = rq["certificates"]["unit_minus_one_norm_sq"]
        assert len(certs) == 7
        assert all(v != "0" for v in certs.values())

        rc = check_freeness(z4_sphere_action(), sample_points_c(200, seed=0))
        assert rc["passed"]
        assert rc["certificates"]["square_negates_all_samples"] is True

    def test_trivial_group_vacuously_free(self):
        from paulikit.groups import close_under_product

        trivial = close_under_product(
            [Quaternion.one()], lambda a, b: a * b, max_size=2
        )
        action = SphereAction("trivial", trivial, q8_act,
                              lambda p: p.q.norm_sq() == 1)
        report = check_freeness(action, sample_points_q(50, seed=0))
        assert report["passed"]
        assert report["fixed_points"] == 0

    def test_orbit_sizes_match_group_orders(self):
        rq = orbit_size_report(q8_sphere_action(), sample_points_q(100, seed=0))
        assert rq["orbit_size_histogram"] == {8: 100}
        rc = orbit_size_report(z4_sphere_action(), sample_points_c(100, seed=0))
        assert rc["orbit_size_histogram"] == {4: 100}

    def test_mpq_and_fraction_coefficients_interoperate(self):
        exact = Quaternion(mpq(3, 5), mpq(4, 5), mpq(0), mpq(0))
        frac = Quaternion(Fraction(3, 5), Fraction(4, 5), 0, 0)
        assert exact == frac
        assert SpherePointQ(exact) == SpherePointQ(frac)
