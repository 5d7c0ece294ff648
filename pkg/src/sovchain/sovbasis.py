"""Separation-of-variables bases built by repeated transfer-matrix action.

Left co-vector basis:

* rank 1 (rational/trig): <h| = <S| prod_n ( T(xi_n - eta/2) / A(eta/2 - xi_n) )^(1-h_n)
* rank >= 2:              <h| = <S| prod_a ( T(xi_a) )^(h_a)

plus, at rank 1, the generalized Sklyanin basis (for comparison), the dual
right basis with its Vandermonde measure, and the boundary gauge data behind
the normalization coefficient A.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .algebra import boundary_monodromy, k_matrix, monodromy, transfer_matrix, u_minus_block
from .models import RATIONAL, TRIGONOMETRIC, BoundaryParamsRank1, ModelSpec
from .numkit import op_on_sites, solve_linear

__all__ = [
    "NotApplicableError",
    "GaugeData",
    "gauge_transform",
    "canonical_gauge",
    "coeff_a",
    "coeff_a_sklyanin",
    "sym_value",
    "vandermonde_nodes",
    "SovBasis",
    "default_seed_covector",
    "build_left_sov_basis",
    "basis_rank_check",
    "build_sklyanin_basis",
    "sklyanin_b_eigenvalue",
    "compare_sklyanin_vs_new",
    "RightSovBasis",
    "measure_normalization",
    "kappa_node",
    "build_right_sov_basis",
    "right_basis_from_top",
]

_SIGMA_Z = np.diag([1.0, -1.0]).astype(complex)
_SIGMA_PLUS = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
_SIGMA_MINUS = np.array([[0.0, 0.0], [1.0, 0.0]], dtype=complex)


class NotApplicableError(RuntimeError):
    """Requested construction is undefined for these parameters."""


# -- boundary gauge ----------------------------------------------------------


@dataclass(frozen=True)
class GaugeData:
    """Derived boundary data: sign branch, similarity W and barred scalars.

    For commuting boundaries there is no similarity; W_gauge is None, the
    barred zetas are the principal ones and b_bar_minus = c_bar_plus = 0.
    """

    epsilon_plus: int
    epsilon_minus: int
    W_gauge: np.ndarray | None
    zeta_bar_plus: complex
    zeta_bar_minus: complex
    c_bar_plus: complex
    b_bar_minus: complex
    commuting: bool

    @property
    def inhom_product(self) -> complex:
        """b_bar_minus * c_bar_plus, the switch for the inhomogeneous TQ term."""
        return self.b_bar_minus * self.c_bar_plus


def _sqrt1p4k2(kappa: complex) -> complex:
    return cmath.sqrt(1 + 4 * kappa * kappa)


def _half_ratio(kappa: complex, eps: int) -> complex:
    """(1 - eps sqrt(1+4 kappa^2)) / (2 kappa), stable as kappa -> 0 for eps=+1."""
    if eps == 1:
        return -2 * kappa / (1 + _sqrt1p4k2(kappa))
    if kappa == 0:
        raise ZeroDivisionError("branch eps=-1 diverges at kappa = 0")
    return (1 + _sqrt1p4k2(kappa)) / (2 * kappa)


def _branch_data(b: BoundaryParamsRank1, ep: int, em: int):
    sp, sm = _sqrt1p4k2(b.kappa_plus), _sqrt1p4k2(b.kappa_minus)
    rp = _half_ratio(b.kappa_plus, ep)
    rm = _half_ratio(b.kappa_minus, em)
    w = np.array(
        [
            [1.0, -rp * cmath.exp(b.tau_plus)],
            [rm * cmath.exp(-b.tau_minus), 1.0],
        ],
        dtype=complex,
    )
    zbp = ep * b.zeta_plus / sp
    zbm = em * b.zeta_minus / sm
    c_bar = (
        ep
        * cmath.exp(-b.tau_plus)
        / sp
        * (2 * b.kappa_plus + (1 + ep * sp) * rm * cmath.exp(b.tau_plus - b.tau_minus))
    )
    b_bar = (
        em
        * cmath.exp(b.tau_minus)
        / sm
        * (2 * b.kappa_minus + (1 + em * sm) * rp * cmath.exp(b.tau_plus - b.tau_minus))
    )
    return w, zbp, zbm, c_bar, b_bar


def gauge_transform(spec: ModelSpec) -> GaugeData:
    """Similarity data triangularizing the two boundary matrices.

    Picks the first (eps_+, eps_-) in {-1,1}^2 (lexicographic) with an
    invertible W and b_bar_minus != 0, and checks that W K_-+ W^-1 takes the
    advertised triangular-plus-rank-one forms.
    """
    b = spec.boundary
    if not isinstance(b, BoundaryParamsRank1):
        raise NotApplicableError("gauge transformation is a rank-1 construction")
    if b.commuting():
        raise NotApplicableError("boundary matrices commute; no gauge needed")
    for ep, em in itertools.product((-1, 1), repeat=2):
        if b.kappa_plus == 0 and ep == -1:
            continue
        if b.kappa_minus == 0 and em == -1:
            continue
        w, zbp, zbm, c_bar, b_bar = _branch_data(b, ep, em)
        if abs(np.linalg.det(w)) <= 1e-10 or abs(b_bar) <= 1e-10:
            continue
        gauge = GaugeData(ep, em, w, zbp, zbm, c_bar, b_bar, commuting=False)
        _check_gauged_forms(spec, gauge)
        return gauge
    raise NotApplicableError("no admissible (eps_+, eps_-) branch found")


def _check_gauged_forms(spec: ModelSpec, g: GaugeData, tol: float = 1e-12):
    if spec.kind != RATIONAL:
        return  # the similarity forms below are the rational ones
    w = g.W_gauge
    w_inv = np.linalg.inv(w)
    lam = 0.3711 + 0.1923j  # any probe point works; the forms are linear in lam
    eta = spec.eta
    kbar_m = w @ k_matrix(spec, "minus", lam) @ w_inv
    want_m = np.eye(2) + (lam - eta / 2) / g.zeta_bar_minus * (
        _SIGMA_Z + g.b_bar_minus * _SIGMA_PLUS
    )
    kbar_p = w @ k_matrix(spec, "plus", lam) @ w_inv
    want_p = np.eye(2) + (lam + eta / 2) / g.zeta_bar_plus * (
        _SIGMA_Z + g.c_bar_plus * _SIGMA_MINUS
    )
    dev = max(np.max(np.abs(kbar_m - want_m)), np.max(np.abs(kbar_p - want_p)))
    if dev > tol * max(1.0, np.max(np.abs(kbar_m)), np.max(np.abs(kbar_p))):
        raise AssertionError(f"gauged boundary matrices deviate by {dev:.2e}")


def canonical_gauge(spec: ModelSpec) -> GaugeData:
    """Gauge data used throughout: branch data if non-commuting, principal
    barred zetas with vanishing off-diagonal couplings otherwise."""
    b = spec.boundary
    if not isinstance(b, BoundaryParamsRank1):
        raise NotApplicableError("rank-1 boundary data required")
    if b.commuting():
        return GaugeData(
            1,
            1,
            None,
            b.zeta_bar_principal("plus"),
            b.zeta_bar_principal("minus"),
            0.0,
            0.0,
            commuting=True,
        )
    return gauge_transform(spec)


# -- the normalization coefficient A ------------------------------------------


def _trig_g(spec: ModelSpec, side: str, lam: complex) -> complex:
    b = spec.boundary
    eta = spec.eta
    kap = b.kappa(side)
    if kap == 0:
        z = b.zeta(side)
        return cmath.sinh(lam + z - eta / 2) / cmath.sinh(z)
    alpha, beta = b.alpha_beta(side)
    sgn = -1.0 if side == "plus" else 1.0
    return (
        cmath.sinh(lam + alpha - eta / 2)
        * cmath.cosh(lam + sgn * beta - eta / 2)
        / (cmath.sinh(alpha) * cmath.cosh(beta))
    )


def coeff_a(spec: ModelSpec, lam: complex, gauge: GaugeData | None = None) -> complex:
    """The fusion coefficient A(lam) normalizing the rank-1 SoV basis."""
    if spec.rank_n != 2:
        raise NotApplicableError("A(lam) is a rank-1 object")
    eta = spec.eta
    sign = (-1.0) ** spec.sites_N
    if spec.kind == RATIONAL:
        if lam == 0:
            raise ZeroDivisionError("A(lam) has a pole at lam = 0")
        g = canonical_gauge(spec) if gauge is None else gauge
        zbp, zbm = g.zeta_bar_plus, g.zeta_bar_minus
        return (
            sign
            * (2 * lam + eta)
            / (2 * lam)
            * (lam - eta / 2 + zbp)
            * (lam - eta / 2 + zbm)
            / (zbp * zbm)
            * spec.a_of(lam)
            * spec.d_of(-lam)
        )
    s2 = cmath.sinh(2 * lam)
    if abs(s2) < 1e-300:
        raise ZeroDivisionError("A(lam) has a pole at sinh(2 lam) = 0")
    return (
        sign
        * cmath.sinh(2 * lam + eta)
        / s2
        * _trig_g(spec, "plus", lam)
        * _trig_g(spec, "minus", lam)
        * spec.a_of(lam)
        * spec.d_of(-lam)
    )


def coeff_a_sklyanin(spec: ModelSpec, lam: complex, zeta_bar_minus: complex) -> complex:
    """A_-(lam), the normalizer of the generalized Sklyanin basis (rational)."""
    return (
        (-1.0) ** spec.sites_N
        * (zeta_bar_minus + lam - spec.eta / 2)
        / zeta_bar_minus
        * spec.a_of(lam)
        * spec.d_of(-lam)
    )


# -- shared node helpers -------------------------------------------------------


def sym_value(spec: ModelSpec, lam: complex) -> complex:
    """The symmetric variable: lam^2 rationally, cosh(2 lam) trigonometrically."""
    return cmath.cosh(2 * lam) if spec.kind == TRIGONOMETRIC else lam * lam


def vandermonde_nodes(spec: ModelSpec, h: tuple) -> complex:
    """V_hat(xi_1^(h_1), ..., xi_N^(h_N)) in the model's symmetric variable."""
    vals = [sym_value(spec, spec.xi_h(n, h[n])) for n in range(spec.sites_N)]
    out = 1.0 + 0.0j
    for k in range(len(vals)):
        for j in range(k + 1, len(vals)):
            out *= vals[k] - vals[j]
    return out


# -- left SoV basis ------------------------------------------------------------


@dataclass
class SovBasis:
    """Left SoV co-vector family; rows are rescaled to unit max-norm."""

    spec: ModelSpec
    seed_covector: np.ndarray
    tuples: list[tuple]
    covectors: np.ndarray          # (n^N, n^N), rescaled rows
    log_scales: np.ndarray         # natural-log row scales
    normalizers: np.ndarray        # per-node A values (rank 1) or ones

    def index(self, h: tuple) -> int:
        return self.tuples.index(tuple(h))

    def row(self, h: tuple) -> np.ndarray:
        """Unrescaled co-vector <h| (may be large)."""
        i = self.index(h)
        return self.covectors[i] * cmath.exp(self.log_scales[i])


def _phi_weights(n: int) -> np.ndarray:
    phi = 0.618
    return np.array([phi**k for k in range(n)], dtype=complex)


def default_seed_covector(spec: ModelSpec) -> np.ndarray:
    """Tensor-product seed: (1, 0.618) per site at rank 1; at higher rank the
    golden-ratio weights expressed in the left eigenbasis of the one-site
    boundary product K_+(xi_a) K_-(xi_a)."""
    if spec.rank_n == 2:
        site = np.array([1.0, 0.618], dtype=complex)
        seed = np.array([1.0], dtype=complex)
        for _ in range(spec.sites_N):
            seed = np.kron(seed, site)
        return seed
    n = spec.rank_n
    weights = _phi_weights(n)
    seed = np.array([1.0], dtype=complex)
    for a in range(spec.sites_N):
        k_site = k_matrix(spec, "plus", spec.xi[a]) @ k_matrix(spec, "minus", spec.xi[a])
        vals, vecs = np.linalg.eig(k_site)
        order = np.lexsort((vals.imag, vals.real))
        site = weights @ np.linalg.inv(vecs[:, order])
        seed = np.kron(seed, site)
    return seed


def _rank1_factors(spec: ModelSpec, gauge: GaugeData | None):
    """Per-site generator T(xi_n^(1)) and normalizer A(-xi_n^(1))."""
    gens, norms = [], []
    for a in range(spec.sites_N):
        node = spec.xi_h(a, 1)
        norm = coeff_a(spec, -node, gauge)
        if abs(norm) < 1e-14:
            raise ZeroDivisionError(f"normalizer A(eta/2 - xi_{a + 1}) vanishes")
        gens.append(transfer_matrix(spec, node))
        norms.append(norm)
    return gens, norms


def build_left_sov_basis(
    spec: ModelSpec, seed=None, gauge: GaugeData | None = None
) -> SovBasis:
    """All n^N co-vectors <h| in lexicographic h order."""
    n, big_n = spec.rank_n, spec.sites_N
    seed = default_seed_covector(spec) if seed is None else np.asarray(seed, complex)
    if seed.shape != (spec.hilbert_dim,):
        raise ValueError("seed co-vector has the wrong length")
    if n == 2:
        gens, norms = _rank1_factors(spec, gauge)
        exponent = lambda h_n: 1 - h_n
    else:
        gens = [transfer_matrix(spec, x) for x in spec.xi]
        norms = [1.0 + 0.0j] * big_n
        exponent = lambda h_n: h_n
    tuples = [tuple(h) for h in itertools.product(range(n), repeat=big_n)]
    rows = np.zeros((len(tuples), spec.hilbert_dim), dtype=complex)
    log_scales = np.zeros(len(tuples))
    for i, h in enumerate(tuples):
        vec = seed.astype(complex)
        log_scale = 0.0
        for a in range(big_n):
            for _ in range(exponent(h[a])):
                vec = (vec @ gens[a]) / norms[a]
                peak = np.max(np.abs(vec))
                if peak == 0:
                    break
                vec = vec / peak
                log_scale += math.log(peak)
        peak = np.max(np.abs(vec))
        if peak > 0:
            log_scale += math.log(peak)
            vec = vec / peak
        else:
            log_scale = -math.inf
        rows[i] = vec
        log_scales[i] = log_scale
    return SovBasis(
        spec=spec,
        seed_covector=seed,
        tuples=tuples,
        covectors=rows,
        log_scales=log_scales,
        normalizers=np.array(norms, dtype=complex),
    )


def basis_rank_check(basis: SovBasis) -> dict:
    """Determinant of the rescaled co-vector stack.

    full_rank holds when |det| of the unit-max-norm-row matrix exceeds 1e-8.
    """
    if np.any(np.isneginf(basis.log_scales)):
        return {"full_rank": False, "log_abs_det": -math.inf}
    sign, log_det = np.linalg.slogdet(basis.covectors)
    if sign == 0:
        return {"full_rank": False, "log_abs_det": -math.inf}
    return {"full_rank": bool(log_det > math.log(1e-8)), "log_abs_det": float(log_det)}


# -- generalized Sklyanin basis (rank 1) ---------------------------------------


def _gauged_u_minus_block(spec: ModelSpec, gauge: GaugeData, lam: complex, i: int, j: int):
    """Block (i, j) of M(lam) Kbar_-(lam) Mhat(lam) on H."""
    n, big_n = 2, spec.sites_N
    dims = [n] * (big_n + 1)
    w = gauge.W_gauge
    kbar = w @ k_matrix(spec, "minus", lam) @ np.linalg.inv(w)
    u = (
        monodromy(spec, lam, "bulk")
        @ op_on_sites(kbar, dims, (0,))
        @ monodromy(spec, lam, "hat")
    )
    return u_minus_block(u, n, i, j)


def sklyanin_b_eigenvalue(spec: ModelSpec, gauge: GaugeData, h: tuple, lam: complex) -> complex:
    """Eigenvalue of the gauged B operator on the Sklyanin co-vector <h|."""
    out = gauge.b_bar_minus * (lam - spec.eta / 2) / gauge.zeta_bar_minus
    out *= (-1.0) ** spec.sites_N
    for n in range(spec.sites_N):
        node = spec.xi_h(n, h[n])
        out *= (lam - node) * (-lam - node)
    return complex(out)


def build_sklyanin_basis(spec: ModelSpec, gauge: GaugeData | None = None) -> SovBasis:
    """Left eigenbasis of the gauged B operator, built by A-bar action on <0|.

    Rational only: the trigonometric gauge needs Baxter's dynamical gauge
    transformations, which are outside this package's scope.
    """
    if spec.rank_n != 2 or spec.kind != RATIONAL:
        raise NotApplicableError("generalized Sklyanin basis: rational rank 1 only")
    gauge = gauge_transform(spec) if gauge is None else gauge
    if gauge.commuting or gauge.W_gauge is None:
        raise NotApplicableError("Sklyanin basis needs non-commuting boundaries")
    big_n = spec.sites_N
    dim = 2**big_n
    bra0 = np.zeros(dim, dtype=complex)
    bra0[0] = 1.0  # all spins up
    gens, norms = [], []
    for a in range(big_n):
        node = spec.xi_h(a, 1)
        gens.append(_gauged_u_minus_block(spec, gauge, -node, 0, 0))
        norms.append(coeff_a_sklyanin(spec, -node, gauge.zeta_bar_minus))
    w_tensor = np.array([1.0], dtype=complex)
    for _ in range(big_n):
        w_tensor = np.kron(w_tensor, gauge.W_gauge)
    tuples = [tuple(h) for h in itertools.product(range(2), repeat=big_n)]
    rows = np.zeros((dim, dim), dtype=complex)
    log_scales = np.zeros(dim)
    for i, h in enumerate(tuples):
        vec = bra0.copy()
        log_scale = 0.0
        for a in range(big_n):
            if h[a] == 0:
                vec = (vec @ gens[a]) / norms[a]
                peak = np.max(np.abs(vec))
                if peak > 0:
                    vec, log_scale = vec / peak, log_scale + math.log(peak)
        vec = vec @ w_tensor
        peak = np.max(np.abs(vec))
        if peak > 0:
            vec, log_scale = vec / peak, log_scale + math.log(peak)
        else:
            log_scale = -math.inf
        rows[i] = vec
        log_scales[i] = log_scale
    return SovBasis(
        spec=spec,
        seed_covector=bra0 @ w_tensor,
        tuples=tuples,
        covectors=rows,
        log_scales=log_scales,
        normalizers=np.array(norms, dtype=complex),
    )


def sklyanin_eigencheck(
    spec: ModelSpec, gauge: GaugeData, basis: SovBasis, n_points: int = 3
) -> float:
    """Worst relative deviation of <h_-| B(lam) = b_(-,h)(lam) <h_-|.

    The stored co-vectors carry the trailing tensor-W factor, so they are
    left eigenvectors of the W-conjugated gauged B block.
    """
    w_tensor = np.array([1.0], dtype=complex)
    for _ in range(spec.sites_N):
        w_tensor = np.kron(w_tensor, gauge.W_gauge)
    w_inv = np.linalg.inv(w_tensor)
    worst = 0.0
    for lam in spec.sample_points(n_points, salt=17):
        b_block = w_inv @ _gauged_u_minus_block(spec, gauge, lam, 0, 1) @ w_tensor
        for i, h in enumerate(basis.tuples):
            u = basis.covectors[i]
            ev = sklyanin_b_eigenvalue(spec, gauge, h, lam)
            num = np.max(np.abs(u @ b_block - ev * u))
            den = max(float(np.max(np.abs(u @ b_block))), 1e-300)
            worst = max(worst, num / den)
    return worst


def compare_sklyanin_vs_new(spec: ModelSpec, gauge: GaugeData | None = None) -> dict:
    """Per-tuple proportionality of the Sklyanin basis against the new basis
    seeded with <0| W x ... x W."""
    gauge = gauge_transform(spec) if gauge is None else gauge
    skl = build_sklyanin_basis(spec, gauge)
    new = build_left_sov_basis(spec, seed=skl.seed_covector, gauge=gauge)
    angles, consts = [], []
    for i in range(len(skl.tuples)):
        u = skl.covectors[i] / np.linalg.norm(skl.covectors[i])
        v = new.covectors[i] / np.linalg.norm(new.covectors[i])
        # sin(angle) as the norm of v minus its projection on u; this stays
        # accurate for angles far below sqrt(machine epsilon).
        sin_theta = float(np.linalg.norm(v - np.vdot(u, v) * u))
        angles.append(math.asin(min(1.0, sin_theta)))
        scale = cmath.exp(new.log_scales[i] - skl.log_scales[i])
        consts.append(
            complex(np.vdot(skl.covectors[i], new.covectors[i])
                    / np.vdot(skl.covectors[i], skl.covectors[i]) * scale)
        )
    return {
        "max_angle": float(max(angles)),
        "angles": angles,
        "constants": consts,
        "tuples": skl.tuples,
    }


# -- right SoV basis and measure (rank 1) ---------------------------------------


@dataclass
class RightSovBasis:
    spec: ModelSpec
    seed_vector: np.ndarray
    tuples: list[tuple]
    vectors: np.ndarray            # columns indexed like tuples
    normalization: complex         # N_S

    def column(self, h: tuple) -> np.ndarray:
        return self.vectors[:, self.tuples.index(tuple(h))]


def measure_normalization(spec: ModelSpec, gauge: GaugeData | None = None) -> complex:
    """The N_S making the scalar-product measure take its product form."""
    g = canonical_gauge(spec) if gauge is None else gauge
    v_plain = _vandermonde_of(spec, [spec.xi[n] for n in range(spec.sites_N)])
    v0 = vandermonde_nodes(spec, (0,) * spec.sites_N)
    v1 = vandermonde_nodes(spec, (1,) * spec.sites_N)
    out = v_plain * v0 / v1
    for n in range(spec.sites_N):
        out *= spec.line(spec.xi[n]) / spec.line(spec.xi[n] - g.zeta_bar_minus)
    return complex(out)


def _vandermonde_of(spec: ModelSpec, points) -> complex:
    vals = [sym_value(spec, z) for z in points]
    out = 1.0 + 0.0j
    for k in range(len(vals)):
        for j in range(k + 1, len(vals)):
            out *= vals[k] - vals[j]
    return out


def kappa_node(spec: ModelSpec, n: int) -> complex:
    """The per-site constant (xi_n + eta)/(xi_n - eta) of the right basis."""
    return spec.line(spec.xi[n] + spec.eta) / spec.line(spec.xi[n] - spec.eta)


def build_right_sov_basis(
    spec: ModelSpec, left: SovBasis, gauge: GaugeData | None = None
) -> RightSovBasis:
    """Dual basis |h> = prod_a [T(xi_a + eta/2)/(k_a A(eta/2 - xi_a))]^(h_a) |S>,
    with |S> solved from <h|S> = delta_(h,0) / (N_S V_hat(xi^(0)))."""
    if spec.rank_n != 2:
        raise NotApplicableError("the right SoV basis is a rank-1 construction")
    g = canonical_gauge(spec) if gauge is None else gauge
    n_s = measure_normalization(spec, g)
    big_n = spec.sites_N
    dim = 2**big_n
    rhs = np.zeros(dim, dtype=complex)
    i0 = left.index((0,) * big_n)
    rhs[i0] = 1.0 / (n_s * vandermonde_nodes(spec, (0,) * big_n))
    rhs = rhs * np.exp(-left.log_scales)
    seed = solve_linear(left.covectors, rhs.reshape(-1, 1)).ravel()
    gens, norms = [], []
    for a in range(big_n):
        node0 = spec.xi_h(a, 0)
        norms.append(kappa_node(spec, a) * coeff_a(spec, -spec.xi_h(a, 1), g))
        gens.append(transfer_matrix(spec, node0))
    tuples = [tuple(h) for h in itertools.product(range(2), repeat=big_n)]
    cols = np.zeros((dim, dim), dtype=complex)
    for i, h in enumerate(tuples):
        vec = seed.copy()
        for a in range(big_n):
            if h[a] == 1:
                vec = (gens[a] @ vec) / norms[a]
        cols[:, i] = vec
    return RightSovBasis(
        spec=spec, seed_vector=seed, tuples=tuples, vectors=cols, normalization=n_s
    )


def right_basis_from_top(
    spec: ModelSpec, left: SovBasis, gauge: GaugeData | None = None
) -> RightSovBasis:
    """Alternative construction descending from |S_bar> = |1,...,1> with
    T(xi_a - eta/2) action; equal to the primary one by the fusion identities."""
    if spec.rank_n != 2:
        raise NotApplicableError("the right SoV basis is a rank-1 construction")
    g = canonical_gauge(spec) if gauge is None else gauge
    n_s = measure_normalization(spec, g)
    big_n = spec.sites_N
    dim = 2**big_n
    rhs = np.zeros(dim, dtype=complex)
    i1 = left.index((1,) * big_n)
    rhs[i1] = 1.0 / (n_s * vandermonde_nodes(spec, (1,) * big_n))
    rhs = rhs * np.exp(-left.log_scales)
    seed_bar = solve_linear(left.covectors, rhs.reshape(-1, 1)).ravel()
    gens, norms = [], []
    for a in range(big_n):
        node1 = spec.xi_h(a, 1)
        gens.append(kappa_node(spec, a) * transfer_matrix(spec, node1))
        norms.append(coeff_a(spec, spec.xi_h(a, 0), g))
    tuples = [tuple(h) for h in itertools.product(range(2), repeat=big_n)]
    cols = np.zeros((dim, dim), dtype=complex)
    for i, h in enumerate(tuples):
        vec = seed_bar.copy()
        for a in range(big_n):
            if h[a] == 0:
                vec = (gens[a] @ vec) / norms[a]
        cols[:, i] = vec
    return RightSovBasis(
        spec=spec, seed_vector=seed_bar, tuples=tuples, vectors=cols, normalization=n_s
    )
