"""Concrete free actions of the quaternion group and Z4 on the 3-sphere.

Points are exact: quaternion points carry rational coefficients with
norm-square exactly 1, complex-pair points carry Gaussian-rational
coordinates with |z0|^2 + |z1|^2 exactly 1.  The bundled sample family is
built from integer quadruples (a,b,c,d) with a^2+b^2+c^2+d^2 a perfect
square, so normalization is exact; coefficients use gmpy2 rationals, which
keep the exhaustive axiom sweeps fast without giving up exactness.

The quaternion group acts by left multiplication; Z4 acts on (z0, z1) by
(z0, z1) -> (i z0, -i z1), iterated.  Freeness is checked pointwise on the
samples and backed by two analytic certificates: a unit quaternion g with
g * x = x forces g = 1 because nonzero quaternions are invertible, and the
square of the Z4 generator negates both coordinates, which no point of the
sphere survives.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from gmpy2 import mpq

from .groups import ConcreteGroup
from .quaternion import Quaternion, units
from .scalars import GaussianRational
from . import catalog


class NotOnSphere(ValueError):
    """The point's norm-square is not exactly 1."""


class NotUnitGroupElement(ValueError):
    """The acting quaternion is not one of the eight units."""


class SpherePointQ:
    """A quaternion of norm-square exactly 1."""

    __slots__ = ("q",)

    def __init__(self, q: Quaternion, _validate: bool = True):
        if _validate and q.norm_sq() != 1:
            raise NotOnSphere(f"norm^2 = {q.norm_sq()} != 1")
        object.__setattr__(self, "q", q)

    def __setattr__(self, name, value):
        raise AttributeError("SpherePointQ is immutable")

    def __eq__(self, other):
        return isinstance(other, SpherePointQ) and self.q == other.q

    def __hash__(self):
        return hash(self.q)

    def __repr__(self):
        return f"SpherePointQ({self.q!r})"


class SpherePointC:
    """A pair (z0, z1) of Gaussian rationals with |z0|^2 + |z1|^2 = 1."""

    __slots__ = ("z0", "z1")

    def __init__(self, z0: GaussianRational, z1: GaussianRational, _validate=True):
        if _validate and z0.norm_sq() + z1.norm_sq() != 1:
            raise NotOnSphere("|z0|^2 + |z1|^2 != 1")
        object.__setattr__(self, "z0", z0)
        object.__setattr__(self, "z1", z1)

    def __setattr__(self, name, value):
        raise AttributeError("SpherePointC is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, SpherePointC)
            and self.z0 == other.z0
            and self.z1 == other.z1
        )

    def __hash__(self):
        return hash((self.z0, self.z1))

    def __repr__(self):
        return f"SpherePointC({self.z0}, {self.z1})"


_UNITS = units()


def q8_act(g: Quaternion, x: SpherePointQ) -> SpherePointQ:
    """Left multiplication by a unit quaternion; the result stays on S^3."""
    if g not in _UNITS:
        raise NotUnitGroupElement(f"{g!r} is not a quaternion unit")
    return SpherePointQ(g * x.q, _validate=False)


def z4_act(n: int, p: SpherePointC) -> SpherePointC:
    """(z0, z1) -> (i^n z0, (-i)^n z1); exact over Gaussian rationals."""
    z0, z1 = p.z0, p.z1
    for _ in range(n % 4):
        z0 = z0.times_i()
        z1 = z1.times_minus_i()
    return SpherePointC(z0, z1, _validate=False)


# ---------------------------------------------------------------------------
# Exact sample families

#: Integer quadruples whose squares sum to a perfect square.  Sign flips and
#: coordinate permutations of these yield well over a thousand distinct
#: exact points on S^3.
_BASE_QUADRUPLES = (
    (1, 0, 0, 0),
    (3, 4, 0, 0),
    (1, 2, 2, 0),
    (2, 3, 6, 0),
    (1, 4, 8, 0),
    (1, 2, 2, 4),
    (2, 4, 5, 6),
    (1, 2, 4, 10),
    (2, 5, 14, 8),  # 4 + 25 + 196 + 64 = 289 = 17^2
)


def _exact_unit_quadruples():
    seen = set()
    out = []
    for quad in _BASE_QUADRUPLES:
        total = sum(c * c for c in quad)
        root = int(total ** 0.5)
        while root * root < total:
            root += 1
        assert root * root == total, quad
        for perm in itertools.permutations(quad):
            for signs in itertools.product((1, -1), repeat=4):
                coords = tuple(s * c for s, c in zip(signs, perm))
                if coords in seen:
                    continue
                seen.add(coords)
                out.append((coords, root))
    return out


def sample_points_q(count: int = 1000, seed: int = 0) -> list[SpherePointQ]:
    """Deterministic exact sample of quaternion sphere points."""
    pool = _exact_unit_quadruples()
    rng = random.Random(seed)
    rng.shuffle(pool)
    if count > len(pool):
        raise ValueError(f"only {len(pool)} distinct exact samples available")
    return [
        SpherePointQ(
            Quaternion(mpq(a, d), mpq(b, d), mpq(c, d), mpq(e, d)), _validate=True
        )
        for (a, b, c, e), d in pool[:count]
    ]


def sample_points_c(count: int = 1000, seed: int = 0) -> list[SpherePointC]:
    """Deterministic exact sample of (z0, z1) sphere points."""
    pool = _exact_unit_quadruples()
    rng = random.Random(seed)
    rng.shuffle(pool)
    if count > len(pool):
        raise ValueError(f"only {len(pool)} distinct exact samples available")
    return [
        SpherePointC(_gaussian(a, b, d), _gaussian(c, e, d), _validate=True)
        for (a, b, c, e), d in pool[:count]
    ]


def _gaussian(num_re, num_im, den) -> GaussianRational:
    from fractions import Fraction

    return GaussianRational(Fraction(num_re, den), Fraction(num_im, den))


# ---------------------------------------------------------------------------
# Actions as first-class objects the generic checkers consume


@dataclass(frozen=True)
class SphereAction:
    """An action bundled with its group and the point operations it needs."""

    name: str
    group: ConcreteGroup
    apply: callable          # (group element handle, point) -> point
    point_norm_ok: callable  # point -> bool, exact norm check


def q8_sphere_action() -> SphereAction:
    group = catalog.quaternion_group()
    return SphereAction(
        name="q8-left-multiplication",
        group=group,
        apply=q8_act,
        point_norm_ok=lambda p: p.q.norm_sq() == 1,
    )


def z4_sphere_action() -> SphereAction:
    group = catalog.cyclic_group(4)
    return SphereAction(
        name="z4-coordinate-rotation",
        group=group,
        apply=z4_act,
        point_norm_ok=lambda p: p.z0.norm_sq() + p.z1.norm_sq() == 1,
    )


def check_action_axioms(action: SphereAction, samples) -> dict:
    """Exhaustive identity, compatibility and norm-preservation check.

    Compatibility runs over every (g, h, sample) triple; all comparisons are
    exact.  Failures are counted, not raised.
    """
    group = action.group
    elems = group.elements
    identity = elems[group.identity]
    apply = action.apply

    identity_failures = sum(1 for p in samples if apply(identity, p) != p)

    norm_failures = 0
    for g in elems:
        for p in samples:
            if not action.point_norm_ok(apply(g, p)):
                norm_failures += 1

    compat_failures = 0
    n = group.order
    for gi in range(n):
        g = elems[gi]
        for hi in range(n):
            h = elems[hi]
            gh = elems[group.mul(gi, hi)]
            for p in samples:
                if apply(g, apply(h, p)) != apply(gh, p):
                    compat_failures += 1

    checked = n * n * len(samples)
    return {
        "action": action.name,
        "group_order": n,
        "samples": len(samples),
        "identity_failures": identity_failures,
        "norm_failures": norm_failures,
        "compatibility_failures": compat_failures,
        "compatibility_triples": checked,
        "passed": identity_failures == norm_failures == compat_failures == 0,
    }


def check_freeness(action: SphereAction, samples) -> dict:
    """No non-identity element fixes any sample point (exact comparisons).

    Also records the analytic certificates: for the quaternion action the
    exact witness |g - 1|^2 != 0 for every non-identity unit (g * x = x on
    invertible quaternions forces g = 1), and for Z4 the identity
    h^2(p) = -p, which has no fixed point on the sphere.
    """
    group = action.group
    apply = action.apply
    fixed = 0
    for gi, g in enumerate(group.elements):
        if gi == group.identity:
            continue
        for p in samples:
            if apply(g, p) == p:
                fixed += 1

    certificates = {}
    if action.name.startswith("q8"):
        one = Quaternion.one()
        certificates["unit_minus_one_norm_sq"] = {
            group.labels[gi]: str((g - one).norm_sq())
            for gi, g in enumerate(group.elements)
            if gi != group.identity
        }
    if action.name.startswith("z4"):
        certificates["square_negates_all_samples"] = all(
            z4_act(2, p) == SpherePointC(-p.z0, -p.z1, _validate=False)
            for p in samples
        )

    return {
        "action": action.name,
        "group_order": group.order,
        "samples": len(samples),
        "fixed_points": fixed,
        "certificates": certificates,
        "passed": fixed == 0,
    }


def orbit(point, group: ConcreteGroup, apply) -> list:
    """Distinct images of a point under all group elements."""
    out = []
    for g in group.elements:
        gp = apply(g, point)
        if gp not in out:
            out.append(gp)
    return out


def orbit_size_report(action: SphereAction, samples) -> dict:
    """Orbit sizes across samples; a free action forces size = group order."""
    sizes = {}
    for p in samples:
        size = len(orbit(p, action.group, action.apply))
        sizes[size] = sizes.get(size, 0) + 1
    return {
        "action": action.name,
        "group_order": action.group.order,
        "samples": len(samples),
        "orbit_size_histogram": sizes,
        "passed": sizes == {action.group.order: len(samples)},
    }
