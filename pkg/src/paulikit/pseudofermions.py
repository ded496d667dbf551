"""Pseudo-fermion operators for the damped two-level atom.

The model is parametrized by (|omega|, theta, delta) with omega =
|omega| e^{i theta} the radiation-atom coupling and delta the decay-rate
asymmetry; Omega = sqrt(|omega|^2 - delta^2) must be real and strictly
positive.  Two non-self-adjoint operators a, b on C^2 satisfy

    {a, b} = 1,   a^2 = b^2 = 0,

a deformation of the canonical anticommutation relations in which b need not
be the adjoint of a.  From them:

    mu_1 = b + a,   mu_2 = i (b - a),   mu_3 = [a, b] = ab - ba,

which square to the identity and satisfy mu_1 mu_2 = i mu_3 cyclically, so
u = i mu_3, xy = i mu_2 and y = i 1 generate a 16-element matrix group
isomorphic to the exact Pauli matrix group; u and xy alone close into the
order-8 quaternion group.  The effective Hamiltonian has three equal forms

    H = (1/2) [[-i delta, conj(omega)], [omega, i delta]]
      = Omega (b a - 1/2)
      = -(Omega/2) mu_3,

with eigenvalues +-Omega/2.  The central factor generated by y = i 1
commutes with H and all its mu_2/mu_3 deformations: those scalars are the
constants of motion of the model.

Everything here runs in the floating regime: identities are exact in
infinite precision, so checks assert residuals below a tolerance rather than
equality.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from . import catalog
from .groups import BoundExceeded, ConcreteGroup, close_under_product, is_isomorphic
from .matrix2 import (
    Matrix2,
    FullRank,
    anticommutator,
    commutator,
    complex_identity,
    complex_zero,
    eigenvalues,
    kernel_2x2,
)
from .scalars import DEFAULT_TOL

#: Tolerance for the entrywise equality used when closing operator products
#: into a finite group; looser than identity residuals because closure
#: multiplies up to four matrices deep.
GROUP_CLOSURE_TOL = 1e-8


class InvalidRegime(ValueError):
    """Parameters outside |omega| > |delta|: Omega is not real positive."""


class DegenerateNormalization(ArithmeticError):
    """<phi0, Psi0> vanished within tolerance; the pairing cannot be fixed."""


@dataclass(frozen=True)
class PFParams:
    omega_abs: float
    theta: float = 0.0
    delta: float = 0.0

    def __post_init__(self):
        if not (self.omega_abs > 0):
            raise InvalidRegime("|omega| must be strictly positive")
        if not (self.omega_abs > abs(self.delta)):
            raise InvalidRegime(
                f"need |omega| > |delta| for a real positive frequency; "
                f"got |omega|={self.omega_abs}, delta={self.delta}"
            )

    @property
    def omega_cap(self) -> float:
        """Omega = sqrt(|omega|^2 - delta^2), real and strictly positive."""
        return math.sqrt(self.omega_abs**2 - self.delta**2)

    @property
    def omega(self) -> complex:
        return self.omega_abs * cmath.exp(1j * self.theta)


@dataclass(frozen=True)
class PFPair:
    a: Matrix2
    b: Matrix2


def build_pf(params: PFParams, tol: float = DEFAULT_TOL) -> PFPair:
    """The explicit operator pair of the model."""
    w, th, dl = params.omega_abs, params.theta, params.delta
    om = params.omega_cap
    ep, em = cmath.exp(1j * th), cmath.exp(-1j * th)
    s = 1 / (2 * om)
    a = Matrix2(-w * s, -em * (om + 1j * dl) * s, ep * (om - 1j * dl) * s, w * s)
    b = Matrix2(-w * s, em * (om - 1j * dl) * s, -ep * (om + 1j * dl) * s, w * s)
    pair = PFPair(a, b)
    report = verify_pf_relations(pair, tol)
    if not report["passed"]:
        raise ArithmeticError(f"constructed pair violates the relations: {report}")
    return pair


def verify_pf_relations(pf: PFPair, tol: float = DEFAULT_TOL) -> dict:
    """Residuals of {a,b} = 1 and a^2 = b^2 = 0."""
    one = complex_identity()
    zero = complex_zero()
    res_anti = anticommutator(pf.a, pf.b).max_diff(one)
    res_a2 = (pf.a * pf.a).max_diff(zero)
    res_b2 = (pf.b * pf.b).max_diff(zero)
    return {
        "residual_anticommutator": res_anti,
        "residual_a_squared": res_a2,
        "residual_b_squared": res_b2,
        "tol": tol,
        "passed": max(res_anti, res_a2, res_b2) <= tol,
    }


@dataclass(frozen=True)
class PauliTriple:
    mu1: Matrix2
    mu2: Matrix2
    mu3: Matrix2

    def as_tuple(self):
        return (self.mu1, self.mu2, self.mu3)


def mu_operators(pf: PFPair) -> PauliTriple:
    """mu_1 = b + a, mu_2 = i(b - a), mu_3 = [a, b]."""
    return PauliTriple(
        pf.a + pf.b,
        (pf.b - pf.a).scale(1j),
        commutator(pf.a, pf.b),
    )


def rho_operators(pf: PFPair) -> PauliTriple:
    """The adjoint triple; it satisfies the same relations."""
    mu = mu_operators(pf)
    return PauliTriple(mu.mu1.adjoint(), mu.mu2.adjoint(), mu.mu3.adjoint())


def verify_pauli_triple(triple: PauliTriple, tol: float = DEFAULT_TOL) -> dict:
    """Residuals of mu_j^2 = 1 and the cyclic products mu_1 mu_2 = i mu_3 etc."""
    one = complex_identity()
    m1, m2, m3 = triple.as_tuple()
    residuals = {
        "mu1_squared": (m1 * m1).max_diff(one),
        "mu2_squared": (m2 * m2).max_diff(one),
        "mu3_squared": (m3 * m3).max_diff(one),
        "mu1_mu2": (m1 * m2).max_diff(m3.scale(1j)),
        "mu2_mu3": (m2 * m3).max_diff(m1.scale(1j)),
        "mu3_mu1": (m3 * m1).max_diff(m2.scale(1j)),
        "product_is_i": (m1 * m2 * m3).max_diff(one.scale(1j)),
    }
    return {
        "residuals": residuals,
        "tol": tol,
        "passed": max(residuals.values()) <= tol,
    }


def hamiltonian(params: PFParams, tol: float = DEFAULT_TOL) -> dict:
    """Build the Hamiltonian three ways and check they agree entrywise.

    Returns the matrix, the cross-form residuals, and the eigenvalues, which
    must be -Omega/2 and +Omega/2 (trace 0, determinant -Omega^2/4).
    """
    om = params.omega_cap
    w = params.omega
    h_explicit = Matrix2(-0.5j * params.delta, 0.5 * w.conjugate(), 0.5 * w, 0.5j * params.delta)
    pf = build_pf(params)
    h_number = ((pf.b * pf.a) - complex_identity().scale(0.5)).scale(om)
    h_mu = mu_operators(pf).mu3.scale(-om / 2)
    res_number = h_explicit.max_diff(h_number)
    res_mu = h_explicit.max_diff(h_mu)
    eigs = eigenvalues(h_explicit)
    res_eigs = max(abs(eigs[0] - (-om / 2)), abs(eigs[1] - om / 2))
    return {
        "matrix": h_explicit,
        "residual_number_form": res_number,
        "residual_mu_form": res_mu,
        "eigenvalues": eigs,
        "residual_eigenvalues": res_eigs,
        "trace": h_explicit.trace(),
        "det": h_explicit.det(),
        "self_adjoint": h_explicit.max_diff(h_explicit.adjoint()) <= tol,
        "tol": tol,
        "passed": max(res_number, res_mu, res_eigs) <= tol,
    }


@dataclass(frozen=True)
class PauliRealization:
    group: ConcreteGroup
    q8_subgroup: ConcreteGroup
    z4_subgroup: ConcreteGroup
    u: Matrix2
    xy: Matrix2
    y: Matrix2
    isomorphic_to_matrix_group: bool
    witness: list | None


def realization_generators(params: PFParams):
    """The three group generators u = i mu_3, xy = i mu_2, y = i 1."""
    pf = build_pf(params)
    mu = mu_operators(pf)
    return mu.mu3.scale(1j), mu.mu2.scale(1j), complex_identity().scale(1j)


def pauli_group_realization(
    params: PFParams, tol: float = GROUP_CLOSURE_TOL
) -> PauliRealization:
    """Close {u, xy, y} under products into a 16-element concrete group.

    Uses entrywise tolerance equality; asserts the result is isomorphic to
    the exact matrix closure of {X, Y, Z} and records the order-8 closure of
    {u, xy} and the order-4 closure of {y}.
    """
    u, xy, y = realization_generators(params)
    eq = lambda m1, m2: m1.max_diff(m2) <= tol
    group = close_under_product(
        [u, xy, y],
        lambda p, q: p * q,
        eq=eq,
        max_size=16,
        generator_labels=["u", "xy", "y"],
        provenance=f"operator closure at (|omega|, theta, delta) = "
        f"({params.omega_abs}, {params.theta}, {params.delta})",
    )
    q8 = close_under_product(
        [u, xy],
        lambda p, q: p * q,
        eq=eq,
        max_size=8,
        generator_labels=["u", "xy"],
        provenance="operator closure of {u, xy}",
    )
    z4 = close_under_product(
        [y],
        lambda p, q: p * q,
        eq=eq,
        max_size=4,
        generator_labels=["y"],
        provenance="operator closure of {y}",
    )
    ok, witness = is_isomorphic(group, catalog.pauli_matrix_group())
    return PauliRealization(group, q8, z4, u, xy, y, ok, witness)


def constants_of_motion(
    params: PFParams, alpha: float, tol: float = DEFAULT_TOL
) -> dict:
    """The deformed Hamiltonian H' = -(Omega/2) mu_3 + alpha mu_2.

    y = i 1 commutes with H' identically (it is scalar), so the cyclic
    factor it generates consists of constants of motion for every alpha.
    H' lies in the span of {mu_2, mu_3}; the coefficients are recovered by a
    two-unknown least-squares solve and must come out (alpha, -Omega/2).
    The generator u = i mu_3 is *not* conserved once alpha != 0.
    """
    pf = build_pf(params)
    mu = mu_operators(pf)
    om = params.omega_cap
    h_prime = mu.mu3.scale(-om / 2) + mu.mu2.scale(alpha)
    y = complex_identity().scale(1j)
    u = mu.mu3.scale(1j)

    res_y = commutator(h_prime, y).max_abs()
    res_u = commutator(h_prime, u).max_abs()

    c2, c3 = _span_coefficients(h_prime, mu.mu2, mu.mu3)
    recon = mu.mu2.scale(c2) + mu.mu3.scale(c3)
    span_residual = recon.max_diff(h_prime)

    return {
        "alpha": alpha,
        "commutator_with_y": res_y,
        "commutator_with_u": res_u,
        "u_is_constant": res_u <= tol,
        "coefficient_mu2": c2,
        "coefficient_mu3": c3,
        "expected_coefficients": (alpha, -om / 2),
        "span_residual": span_residual,
        "tol": tol,
        "passed": res_y == 0.0 and span_residual <= tol,
    }


def _span_coefficients(target: Matrix2, b1: Matrix2, b2: Matrix2):
    """Solve c1*b1 + c2*b2 = target in the least-squares sense (4 eqs, 2 unknowns)."""
    v = target.entries()
    e1 = b1.entries()
    e2 = b2.entries()
    g11 = sum(x.conjugate() * x for x in e1)
    g12 = sum(x.conjugate() * y for x, y in zip(e1, e2))
    g21 = g12.conjugate()
    g22 = sum(x.conjugate() * x for x in e2)
    r1 = sum(x.conjugate() * y for x, y in zip(e1, v))
    r2 = sum(x.conjugate() * y for x, y in zip(e2, v))
    det = g11 * g22 - g12 * g21
    c1 = (r1 * g22 - g12 * r2) / det
    c2 = (g11 * r2 - g21 * r1) / det
    return c1, c2


# ---------------------------------------------------------------------------
# Biorthogonal eigensystem and metric operators


def _vdot(u, v) -> complex:
    """Inner product, antilinear in the first argument."""
    return u[0].conjugate() * v[0] + u[1].conjugate() * v[1]


def _vnorm(v) -> float:
    return math.sqrt(abs(v[0]) ** 2 + abs(v[1]) ** 2)


def _vsub(u, v):
    return (u[0] - v[0], u[1] - v[1])


def _vscale(v, s):
    return (v[0] * s, v[1] * s)


def _outer(u, v) -> Matrix2:
    """u v^dagger as a matrix."""
    return Matrix2(
        u[0] * v[0].conjugate(),
        u[0] * v[1].conjugate(),
        u[1] * v[0].conjugate(),
        u[1] * v[1].conjugate(),
    )


@dataclass(frozen=True)
class PFEigensystem:
    phi0: tuple
    phi1: tuple
    psi0: tuple
    psi1: tuple
    number_op: Matrix2          # N = b a
    residuals: dict = field(compare=False)


def eigensystem(pf: PFPair, tol: float = DEFAULT_TOL) -> PFEigensystem:
    """Vacuum and excited vectors of N = b a and its adjoint.

    phi0 spans ker(a), Psi0 spans ker(b^dagger); phi1 = b phi0 and
    Psi1 = a^dagger Psi0.  Kernel vectors are phase-fixed (first component of
    significant magnitude real positive), then Psi0 is rescaled so that
    <phi0, Psi0> = 1; biorthogonality of the rest follows.  Raises
    :class:`FullRank` when a kernel is missing (the pair is broken) and
    :class:`DegenerateNormalization` when the pairing vanishes.
    """
    phi0 = kernel_2x2(pf.a, tol)
    psi0 = kernel_2x2(pf.b.adjoint(), tol)
    pairing = _vdot(phi0, psi0)
    if abs(pairing) <= tol:
        raise DegenerateNormalization(
            f"<phi0, Psi0> = {pairing!r} is zero within tolerance"
        )
    psi0 = _vscale(psi0, 1 / pairing)
    phi1 = pf.b.apply(phi0)
    psi1 = pf.a.adjoint().apply(psi0)
    n_op = pf.b * pf.a

    n_dag = n_op.adjoint()
    residuals = {
        "n_phi0": _vnorm(n_op.apply(phi0)),
        "n_phi1": _vnorm(_vsub(n_op.apply(phi1), phi1)),
        "ndag_psi0": _vnorm(n_dag.apply(psi0)),
        "ndag_psi1": _vnorm(_vsub(n_dag.apply(psi1), psi1)),
        "ladder_down": _vnorm(_vsub(pf.a.apply(phi1), phi0)),
        "ladder_down_dual": _vnorm(_vsub(pf.b.adjoint().apply(psi1), psi0)),
        "biorthogonality": max(
            abs(_vdot(phi0, psi0) - 1),
            abs(_vdot(phi1, psi1) - 1),
            abs(_vdot(phi0, psi1)),
            abs(_vdot(phi1, psi0)),
        ),
    }
    return PFEigensystem(phi0, phi1, psi0, psi1, n_op, residuals)


def metric_operators(es: PFEigensystem, tol: float = DEFAULT_TOL) -> dict:
    """The rank-accumulated metric operators and their exchange identities.

    S_phi = sum_n phi_n phi_n^dagger and S_Psi likewise.  Checks:
    self-adjointness, strictly positive eigenvalues, S_phi S_Psi = 1, the
    basis exchange S_phi Psi_n = phi_n and S_Psi phi_n = Psi_n, the
    intertwining relations S_Psi N = N^dagger S_Psi and
    S_phi N^dagger = N S_phi, and the operator-norm bounds by the squared
    vector norms.
    """
    s_phi = _outer(es.phi0, es.phi0) + _outer(es.phi1, es.phi1)
    s_psi = _outer(es.psi0, es.psi0) + _outer(es.psi1, es.psi1)
    one = complex_identity()
    n_op, n_dag = es.number_op, es.number_op.adjoint()

    eig_phi = eigenvalues(s_phi)
    eig_psi = eigenvalues(s_psi)
    norm_phi_bound = _vnorm(es.phi0) ** 2 + _vnorm(es.phi1) ** 2
    norm_psi_bound = _vnorm(es.psi0) ** 2 + _vnorm(es.psi1) ** 2

    residuals = {
        "self_adjoint_phi": s_phi.max_diff(s_phi.adjoint()),
        "self_adjoint_psi": s_psi.max_diff(s_psi.adjoint()),
        "product_is_identity": (s_phi * s_psi).max_diff(one),
        "exchange_phi": max(
            _vnorm(_vsub(s_phi.apply(es.psi0), es.phi0)),
            _vnorm(_vsub(s_phi.apply(es.psi1), es.phi1)),
        ),
        "exchange_psi": max(
            _vnorm(_vsub(s_psi.apply(es.phi0), es.psi0)),
            _vnorm(_vsub(s_psi.apply(es.phi1), es.psi1)),
        ),
        "intertwine_psi": (s_psi * n_op).max_diff(n_dag * s_psi),
        "intertwine_phi": (s_phi * n_dag).max_diff(n_op * s_phi),
    }
    positive = min(eig_phi[0].real, eig_psi[0].real) > 0
    bounds_ok = (
        max(abs(e) for e in eig_phi) <= norm_phi_bound + tol
        and max(abs(e) for e in eig_psi) <= norm_psi_bound + tol
    )
    return {
        "s_phi": s_phi,
        "s_psi": s_psi,
        "eigenvalues_phi": eig_phi,
        "eigenvalues_psi": eig_psi,
        "norm_bound_phi": norm_phi_bound,
        "norm_bound_psi": norm_psi_bound,
        "residuals": residuals,
        "strictly_positive": positive,
        "norm_bounds_hold": bounds_ok,
        "tol": tol,
        "passed": max(residuals.values()) <= tol and positive and bounds_ok,
    }


def evolve(params: PFParams, state, t: float):
    """Solve i dPhi/dt = H Phi by expansion in the biorthogonal eigenbasis.

    phi0 and phi1 are eigenvectors of H = Omega(N - 1/2) with eigenvalues
    -Omega/2 and +Omega/2; components pick up phases e^{+i Omega t / 2} and
    e^{-i Omega t / 2}.
    """
    pf = build_pf(params)
    es = eigensystem(pf)
    om = params.omega_cap
    c0 = _vdot(es.psi0, state)
    c1 = _vdot(es.psi1, state)
    f0 = c0 * cmath.exp(1j * om * t / 2)
    f1 = c1 * cmath.exp(-1j * om * t / 2)
    return (
        f0 * es.phi0[0] + f1 * es.phi1[0],
        f0 * es.phi0[1] + f1 * es.phi1[1],
    )


def schrodinger_residual(params: PFParams, state, t: float, h: float = 1e-6) -> float:
    """Finite-difference check of i dPhi/dt = H Phi at time t."""
    plus = evolve(params, state, t + h)
    minus = evolve(params, state, t - h)
    deriv = ((plus[0] - minus[0]) / (2 * h), (plus[1] - minus[1]) / (2 * h))
    lhs = (1j * deriv[0], 1j * deriv[1])
    rhs = hamiltonian(params)["matrix"].apply(evolve(params, state, t))
    return _vnorm(_vsub(lhs, rhs))


# ---------------------------------------------------------------------------
# Parameter grids

GRID_OMEGAS = (1.0, 2.0, 5.0)
GRID_THETAS = (0.0, math.pi / 4, 1.0)


def standard_grid() -> list[PFParams]:
    """The verification grid: |omega| x theta x delta in {0, +-|omega|/2}."""
    points = []
    for w in GRID_OMEGAS:
        for th in GRID_THETAS:
            for dl in (0.0, w / 2, -w / 2):
                points.append(PFParams(w, th, dl))
    return points
