"""Bundled concrete groups and the exact matrices that generate them.

Everything here is exact: the three 2x2 generator matrices have entries in
{0, +-1, +-i} as Gaussian rationals, the quaternion group is built from the
eight integer-coefficient units, the cyclic groups from modular addition and
the dihedral group of order 8 from the symmetries of a square (an
independent permutation model, deliberately not produced by coset
enumeration so the two construction routes can cross-check each other).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import quaternion as quat
from .groups import ConcreteGroup, GroupHom, close_under_product
from .matrix2 import Matrix2, exact_identity
from .scalars import GaussianRational


def _gr(re=0, im=0) -> GaussianRational:
    return GaussianRational(Fraction(re), Fraction(im))


def pauli_x() -> Matrix2:
    return Matrix2(_gr(0), _gr(1), _gr(1), _gr(0))


def pauli_y() -> Matrix2:
    return Matrix2(_gr(0), _gr(0, -1), _gr(0, 1), _gr(0))


def pauli_z() -> Matrix2:
    return Matrix2(_gr(1), _gr(0), _gr(0), _gr(-1))


def exact_pauli_matrices():
    return pauli_x(), pauli_y(), pauli_z()


def pauli_label(m: Matrix2) -> str:
    """Canonical label i^k W with W in {I, X, Y, Z}; exact comparison."""
    bases = (("I", exact_identity()), ("X", pauli_x()), ("Y", pauli_y()), ("Z", pauli_z()))
    phase = GaussianRational.one()
    for prefix in ("", "i", "-", "-i"):
        for name, base in bases:
            if m == base.scale(phase):
                return prefix + name
        phase = phase.times_i()
    raise ValueError("matrix is not a phase multiple of a Pauli matrix")


@lru_cache(maxsize=None)
def pauli_matrix_group() -> ConcreteGroup:
    """Exact matrix closure of {X, Y, Z}: the order-16 group."""
    x, y, z = exact_pauli_matrices()
    return close_under_product(
        [x, y, z],
        lambda a, b: a * b,
        max_size=64,
        generator_labels=["X", "Y", "Z"],
        label_fn=pauli_label,
        provenance="matrix closure of {X, Y, Z}",
    )


@lru_cache(maxsize=None)
def quaternion_group() -> ConcreteGroup:
    """Closure of the quaternion units i and j: the order-8 group."""
    return close_under_product(
        [quat.Quaternion.i(), quat.Quaternion.j()],
        lambda a, b: a * b,
        max_size=16,
        generator_labels=["i", "j"],
        label_fn=quat.unit_label,
        provenance="quaternion unit closure of {i, j}",
    )


@lru_cache(maxsize=None)
def cyclic_group(n: int, gen_name: str = "y") -> ConcreteGroup:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    labels = ["1"] + [
        gen_name if k == 1 else f"{gen_name}^{k}" for k in range(1, n)
    ]
    return ConcreteGroup(list(range(n)), table, labels, f"cyclic group of order {n}")


@lru_cache(maxsize=None)
def klein_group() -> ConcreteGroup:
    from .groups import direct_product

    return direct_product(cyclic_group(2, "a"), cyclic_group(2, "b"))


def _compose(p, q):
    return tuple(q[x] for x in p)


@lru_cache(maxsize=None)
def dihedral_group() -> ConcreteGroup:
    """Order-8 dihedral group as symmetries of a square (permutation model)."""
    r = (1, 2, 3, 0)       # rotation by a quarter turn
    s = (0, 3, 2, 1)       # reflection fixing vertex 0
    group = close_under_product(
        [r, s],
        _compose,
        max_size=16,
        generator_labels=["r", "s"],
        provenance="symmetries of the square, generated by {r, s}",
    )
    labels = []
    elems = {p: lbl for p, lbl in zip(group.elements, group.labels)}
    ident = (0, 1, 2, 3)
    powers = {ident: ""}
    cur = ident
    for k in range(1, 4):
        cur = _compose(cur, r)
        powers[cur] = f"r^{k}" if k > 1 else "r"
    for p in group.elements:
        if p in powers:
            labels.append(powers[p] or "1")
        else:
            base = _compose(p, s)  # p = base * s with base a rotation
            labels.append(f"{powers[base]}*s" if powers[base] else "s")
    return ConcreteGroup(group.elements, group.table, labels, group.provenance)


#: The bundled zoo, keyed by the names the CLI accepts.
ZOO_BUILDERS = {
    "z2": lambda: cyclic_group(2),
    "z4": lambda: cyclic_group(4),
    "z2xz2": klein_group,
    "q8": quaternion_group,
    "d8": dihedral_group,
    "pauli": pauli_matrix_group,
}


def zoo_group(name: str) -> ConcreteGroup:
    try:
        return ZOO_BUILDERS[name]()
    except KeyError:
        raise KeyError(
            f"unknown group {name!r}; available: {sorted(ZOO_BUILDERS)}"
        ) from None


def unique_central_involution(group: ConcreteGroup) -> int:
    """Index of the unique order-2 element of the center.

    Every bundled nontrivial 2-group here (Z4, Q8, D8, the order-16 matrix
    group) has exactly one central involution, which makes the canonical
    central-product pairing well defined.
    """
    from .groups import center

    cands = [
        g for g in center(group).indices if group.element_order(g) == 2
    ]
    if len(cands) != 1:
        raise ValueError(
            f"group has {len(cands)} central involutions; expected exactly one"
        )
    return cands[0]


def q8_mod_i_hom() -> GroupHom:
    """The epimorphism Q8 -> Z2 whose kernel is the cyclic subgroup <i>."""
    q8 = quaternion_group()
    z2 = cyclic_group(2)
    images = []
    for q in q8.elements:
        in_span_i = (q.c == 0 and q.d == 0)  # +-1, +-i
        images.append(0 if in_span_i else 1)
    return GroupHom(q8, z2, tuple(images))


def z4_mod_2_hom() -> GroupHom:
    """The reduction Z4 -> Z2, kernel {1, y^2}."""
    z4 = cyclic_group(4)
    z2 = cyclic_group(2)
    return GroupHom(z4, z2, tuple(k % 2 for k in z4.elements))
