"""Transfer-matrix spectra two ways: dense diagonalization (the oracle) and
the discrete SoV characterization (quadratic/fusion systems), plus separated
eigenvector reconstruction.

Interpolation conventions.  Rank 1 rebuilds t(lam) from the node values
t(xi_a^(h_a)) together with the central value t(eta/2) and (rationally) the
lam^(2N+2) asymptotic constant.  gl_3 rebuilds t_1(lam) from t_1(+-xi_a)
(negative nodes eliminated through the inversion scalars r_a), the central
values T(0), T(-3 eta/2) and the asymptotic constant -tr M^(+) M^(-); t_2 is
then interpolated from its central zeros, the fusion values at +-xi_a, four
central values and its own asymptotic constant.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import (
    antisym_projector,
    fused_transfer_2,
    gl3_inversion_scalar,
    k_matrix,
    projector_image_basis,
    quantum_determinant_t3,
    transfer_matrix,
)
from .algebra import _fused_k2
from .models import RATIONAL, TRIGONOMETRIC, ModelSpec
from .numkit import eig_general, op_on_sites, solve_linear
from .sovbasis import (
    GaugeData,
    SovBasis,
    canonical_gauge,
    coeff_a,
    kappa_node,
    sym_value,
    vandermonde_nodes,
)

__all__ = [
    "InterpolationData",
    "TransferEigenvalue",
    "interpolation_data",
    "diag_oracle",
    "fusion_residual",
    "solve_sov_system",
    "reconstruct_eigenvector",
    "reconstruct_left_eigenvector",
    "gl3_t2_from_t1",
]


# -- interpolation data --------------------------------------------------------


@dataclass
class InterpolationData:
    """Central constants and Lagrange-type basis functions for one model."""

    spec: ModelSpec
    gauge: GaugeData | None
    asym: complex                 # leading coefficient constant
    central: dict                 # named central values
    rhs_nodes: np.ndarray         # RHS of the discrete system per node

    # rank 1 ------------------------------------------------------------

    def u_fn(self, lam: complex, h: tuple) -> complex:
        spec = self.spec
        out = sym_value(spec, lam) - sym_value(spec, spec.eta / 2)
        for b in range(spec.sites_N):
            out *= sym_value(spec, lam) - sym_value(spec, spec.xi_h(b, h[b]))
        return out

    def s_fn(self, lam: complex, h: tuple) -> complex:
        spec = self.spec
        out = 1.0 + 0.0j
        se = sym_value(spec, spec.eta / 2)
        for b in range(spec.sites_N):
            sb = sym_value(spec, spec.xi_h(b, h[b]))
            out *= (sym_value(spec, lam) - sb) / (se - sb)
        return out

    def r_fn(self, a: int, lam: complex, h: tuple) -> complex:
        spec = self.spec
        sa = sym_value(spec, spec.xi_h(a, h[a]))
        se = sym_value(spec, spec.eta / 2)
        out = (sym_value(spec, lam) - se) / (sa - se)
        for b in range(spec.sites_N):
            if b == a:
                continue
            sb = sym_value(spec, spec.xi_h(b, h[b]))
            out *= (sym_value(spec, lam) - sb) / (sa - sb)
        return out

    # trigonometric rank 1 ----------------------------------------------

    def f_fn(self, lam: complex, h: tuple) -> complex:
        spec = self.spec
        eta = spec.eta
        ch_l, ch_e = cmath.cosh(2 * lam), cmath.cosh(eta)
        p_minus = 1.0 + 0.0j
        p_plus = 1.0 + 0.0j
        p_plain = 1.0 + 0.0j
        for b in range(spec.sites_N):
            cb = cmath.cosh(2 * spec.xi_h(b, h[b]))
            p_minus *= (ch_l - cb) / (ch_e - cb)
            p_plus *= (ch_l - cb) / (ch_e + cb)
            p_plain *= ch_l - cb
        sign = (-1.0) ** spec.sites_N
        return (
            (ch_l + ch_e) / (2 * ch_e) * p_minus * self.central["a_half"]
            - sign * (ch_l - ch_e) / (2 * ch_e) * p_plus * self.central["a_half_ipi"]
            + self.asym * (ch_l**2 - ch_e**2) * p_plain
        )

    def g_fn(self, a: int, lam: complex, h: tuple) -> complex:
        spec = self.spec
        ch_l, ch_e = cmath.cosh(2 * lam), cmath.cosh(spec.eta)
        ca = cmath.cosh(2 * spec.xi_h(a, h[a]))
        out = (ch_l**2 - ch_e**2) / (ca**2 - ch_e**2)
        for b in range(spec.sites_N):
            if b == a:
                continue
            cb = cmath.cosh(2 * spec.xi_h(b, h[b]))
            out *= (ch_l - cb) / (ca - cb)
        return out

    # gl_3 ----------------------------------------------------------------

    def g3_fn(self, a: int, eps: int, lam: complex) -> complex:
        spec = self.spec
        eta, x = spec.eta, spec.xi[a]
        out = (
            lam
            * (lam + 1.5 * eta)
            * (lam + eps * x)
            / (x * (x + 1.5 * eps * eta) * 2 * eps * x)
        )
        for b in range(spec.sites_N):
            if b == a:
                continue
            out *= (lam**2 - spec.xi[b] ** 2) / (x**2 - spec.xi[b] ** 2)
        return out

    def f3_fn(self, a: int, eps: int, lam: complex) -> complex:
        spec = self.spec
        eta, x = spec.eta, spec.xi[a]
        num = (lam**2 - eta**2) * (lam**2 - (eta / 2) ** 2) * spec.d_of(lam - eta)
        den = (x**2 - eta**2) * (x**2 - (eta / 2) ** 2) * spec.d_of(eps * x - eta)
        return num / den * self.g3_fn(a, eps, lam)

    def t_infinity(self, lam: complex) -> complex:
        spec = self.spec
        return self.asym * lam * (lam + 1.5 * spec.eta) * spec.d_of(lam)

    def t2_infinity(self, lam: complex) -> complex:
        spec = self.spec
        eta = spec.eta
        return (
            self.central["t2_asym"]
            * lam
            * (lam**2 - (eta / 2) ** 2)
            * (lam**2 - eta**2)
            * (lam + 1.5 * eta)
            * spec.d_of(lam)
            * spec.d_of(lam - eta)
        )

    def v3_fn(self, lam: complex, t2_centrals: dict) -> complex:
        """The central part V(lam | .) of the t_2 interpolation."""
        spec = self.spec
        eta = spec.eta
        dd = spec.d_of(lam - eta) * spec.d_of(lam)
        term0 = (
            8
            * (lam**2 - eta**2)
            * (lam**2 - (eta / 2) ** 2)
            * (lam + 1.5 * eta)
            * dd
            / (3 * eta**5 * spec.d_of(eta) * spec.d_of(0.0))
            * t2_centrals["zero"]
        )
        term_h = 0.0 + 0.0j
        for eps in (1, -1):
            # denominator 3(3+eps), not 3 eps (3+eps): the eps = -1 basis
            # function must take value +1 at its own node -eta/2
            term_h += (
                16
                * lam
                * (lam**2 - eta**2)
                * (lam + eps * eta / 2)
                * (lam + 1.5 * eta)
                * dd
                / (
                    3
                    * (3 + eps)
                    * eta**5
                    * spec.d_of((eps - 2) * eta / 2)
                    * spec.d_of(eta / 2)
                )
                * t2_centrals["half_plus" if eps == 1 else "half_minus"]
            )
        term_m = (
            4
            * lam
            * (lam - eta)
            * (lam**2 - (eta / 2) ** 2)
            * (lam + 1.5 * eta)
            * dd
            / (3 * eta**5 * spec.d_of(2 * eta) * spec.d_of(eta))
            * t2_centrals["minus_eta"]
        )
        return term0 - term_h + term_m


def _tr_fused_k2(spec: ModelSpec, side: str, lam: complex) -> complex:
    basis = projector_image_basis(antisym_projector(spec.rank_n, 2))
    return complex(np.trace(basis.conj().T @ _fused_k2(spec, side, lam) @ basis))


def interpolation_data(spec: ModelSpec, gauge: GaugeData | None = None) -> InterpolationData:
    eta = spec.eta
    big_n = spec.sites_N
    if spec.rank_n == 2:
        g = canonical_gauge(spec) if gauge is None else gauge
        b = spec.boundary
        rhs = np.array(
            [
                coeff_a(spec, spec.xi_h(n, 0), g) * coeff_a(spec, -spec.xi_h(n, 1), g)
                for n in range(big_n)
            ],
            dtype=complex,
        )
        if spec.kind == RATIONAL:
            asym = (2 + g.inhom_product) / (g.zeta_bar_plus * g.zeta_bar_minus)
            central = {
                "t_half": 2 * (-1.0) ** big_n * spec.a_of(eta / 2) * spec.d_of(-eta / 2)
            }
        else:
            asym = (
                2.0 ** (1 - big_n)
                * b.kappa_plus
                * b.kappa_minus
                * cmath.cosh(b.tau_plus - b.tau_minus)
                / (cmath.sinh(b.zeta_plus) * cmath.sinh(b.zeta_minus))
            )
            central = {
                "a_half": coeff_a(spec, eta / 2, g),
                "a_half_ipi": coeff_a(spec, eta / 2 + 1j * cmath.pi / 2, g),
            }
        return InterpolationData(spec=spec, gauge=g, asym=asym, central=central, rhs_nodes=rhs)
    if spec.rank_n != 3:
        raise ValueError("spectrum interpolation covers rank 1 and gl_3")
    b = spec.boundary
    mp = b.m_matrix("plus", 3)
    mm = b.m_matrix("minus", 3)
    asym = -complex(np.trace(mp @ mm))
    p2 = antisym_projector(3, 2)
    mm_pair = op_on_sites(mp @ mm, [3, 3], (0,)) @ op_on_sites(mp @ mm, [3, 3], (1,))
    t2_asym = -4.0 * complex(np.trace(p2 @ mm_pair @ p2))
    central = {
        "t_zero": b.zeta_minus * spec.d_of(eta) * complex(np.trace(k_matrix(spec, "plus", 0.0))),
        "t_m3h": b.zeta_plus
        * spec.d_of(1.5 * eta)
        * complex(np.trace(k_matrix(spec, "minus", -1.5 * eta))),
        "t2_half_plus": eta
        * (eta**2 / 4 - b.zeta_minus**2)
        * spec.d_of(eta / 2)
        * spec.d_of(1.5 * eta)
        * _tr_fused_k2(spec, "plus", eta / 2),
        "t2_minus_eta": eta
        * (eta**2 / 4 - b.zeta_plus**2)
        * spec.d_of(eta)
        * spec.d_of(2 * eta)
        * _tr_fused_k2(spec, "minus", -eta),
        "t2_asym": t2_asym,
        "r_a": np.array([gl3_inversion_scalar(spec, a + 1) for a in range(big_n)]),
    }
    rhs = np.array(
        [
            [quantum_determinant_t3(spec, mu * spec.xi[n]) for mu in (1, -1)]
            for n in range(big_n)
        ],
        dtype=complex,
    )
    return InterpolationData(spec=spec, gauge=None, asym=asym, central=central, rhs_nodes=rhs)


# -- eigenvalue container --------------------------------------------------------


@dataclass
class TransferEigenvalue:
    """Node data x_a plus the interpolated evaluator t(lam)."""

    data: InterpolationData
    x: np.ndarray                  # t(xi_a^(0)) at rank 1, t_1(xi_a) for gl_3
    provenance: str = "oracle"
    extras: dict = field(default_factory=dict)

    @property
    def spec(self) -> ModelSpec:
        return self.data.spec

    def value(self, lam: complex) -> complex:
        spec = self.spec
        d = self.data
        h0 = (0,) * spec.sites_N
        if spec.rank_n == 2:
            if spec.kind == RATIONAL:
                out = d.asym * d.u_fn(lam, h0) + d.central["t_half"] * d.s_fn(lam, h0)
                for a in range(spec.sites_N):
                    out += d.r_fn(a, lam, h0) * self.x[a]
            else:
                out = d.f_fn(lam, h0)
                for a in range(spec.sites_N):
                    out += d.g_fn(a, lam, h0) * self.x[a]
            return out
        eta = spec.eta
        out = d.t_infinity(lam)
        out += (
            (lam + 1.5 * eta)
            * spec.d_of(lam)
            / (1.5 * eta * spec.d_of(0.0))
            * d.central["t_zero"]
        )
        out -= (
            lam
            * spec.d_of(lam)
            / (1.5 * eta * spec.d_of(1.5 * eta))
            * d.central["t_m3h"]
        )
        for a in range(spec.sites_N):
            r_a = d.central["r_a"][a]
            out += d.g3_fn(a, 1, lam) * self.x[a]
            out += d.g3_fn(a, -1, lam) * (r_a / self.x[a])
        return out

    def node_value(self, a: int, h_or_eps) -> complex:
        """t at the SoV node: h in {0,1} at rank 1, eps in {+1,-1} for gl_3."""
        spec = self.spec
        if spec.rank_n == 2:
            if h_or_eps == 0:
                return self.x[a]
            return self.value(spec.xi_h(a, 1))
        if h_or_eps == 1:
            return self.x[a]
        return self.data.central["r_a"][a] / self.x[a]


# -- the oracle -------------------------------------------------------------------


def diag_oracle(spec: ModelSpec, gauge: GaugeData | None = None):
    """Diagonalize T at a probe point and read node values off by
    biorthogonal Rayleigh quotients.

    Returns (eigenvalues, right_vectors, left_vectors, report) with columns /
    rows matching the eigenvalue list.
    """
    data = interpolation_data(spec, gauge)
    report = {"degenerate_probes": 0, "simple": False}
    probes = spec.sample_points(3, salt=23)
    eig = None
    for k, lam in enumerate(probes):
        candidate = transfer_matrix(spec, lam)
        if k > 0:
            # random but seeded combination keeps shared eigenvectors while
            # splitting accidental probe degeneracies
            w = spec.rng(salt=31 + k).standard_normal(2)
            candidate = w[0] * candidate + w[1] * transfer_matrix(spec, probes[0])
        eig = eig_general(candidate)
        if eig.is_simple():
            report["simple"] = True
            break
        report["degenerate_probes"] += 1
    values = []
    if spec.rank_n == 2:
        nodes = [spec.xi_h(a, 0) for a in range(spec.sites_N)]
        extra_nodes = [spec.xi_h(a, 1) for a in range(spec.sites_N)]
    else:
        nodes = list(spec.xi)
        extra_nodes = [-x for x in spec.xi]
    node_ops = [transfer_matrix(spec, z) for z in nodes]
    extra_ops = [transfer_matrix(spec, z) for z in extra_nodes]
    for k in range(spec.hilbert_dim):
        v = eig.right_vectors[:, k]
        u = eig.left_vectors[k, :]
        pairing = u @ v
        x = np.array([(u @ (op @ v)) / pairing for op in node_ops])
        x_extra = np.array([(u @ (op @ v)) / pairing for op in extra_ops])
        values.append(
            TransferEigenvalue(
                data=data, x=x, provenance="oracle", extras={"x_extra": x_extra}
            )
        )
    return values, eig.right_vectors, eig.left_vectors, report


# -- discrete system --------------------------------------------------------------


def _system_residual_vector(cand: TransferEigenvalue) -> np.ndarray:
    """Unnormalized residuals of the discrete quadratic/fusion system."""
    spec = cand.spec
    d = cand.data
    if spec.rank_n == 2:
        out = np.zeros(spec.sites_N, dtype=complex)
        for n in range(spec.sites_N):
            out[n] = cand.x[n] * cand.value(spec.xi_h(n, 1)) - d.rhs_nodes[n]
        return out
    t2 = gl3_t2_from_t1(spec, cand)
    eta = spec.eta
    out = np.zeros(2 * spec.sites_N, dtype=complex)
    for n in range(spec.sites_N):
        for j, mu in enumerate((1, -1)):
            z = mu * spec.xi[n]
            lhs = (
                spec.r_of(2 * z - eta)
                * spec.r_of(2 * z - 2 * eta)
                * cand.node_value(n, mu)
                * t2(z - eta)
            )
            out[2 * n + j] = lhs - d.rhs_nodes[n, j]
    return out


def fusion_residual(spec: ModelSpec, cand: TransferEigenvalue) -> list[float]:
    """Relative residuals of the discrete characterization, one per equation."""
    raw = _system_residual_vector(cand)
    d = cand.data
    if spec.rank_n == 2:
        scales = np.abs(d.rhs_nodes)
    else:
        scales = np.abs(d.rhs_nodes).reshape(-1)
    return [float(abs(r) / max(s, 1e-300)) for r, s in zip(raw, scales)]


def _newton(cand: TransferEigenvalue, max_iter: int = 50, tol: float = 1e-12) -> bool:
    """Damped Newton on the discrete system; mutates cand.x. True on success."""
    spec = cand.spec
    scale = np.max(np.abs(cand.data.rhs_nodes))
    x = cand.x
    f = _system_residual_vector(cand)
    for _ in range(max_iter):
        if np.max(np.abs(f)) < tol * scale:
            return True
        n_unk = len(x)
        jac = np.zeros((len(f), n_unk), dtype=complex)
        for m in range(n_unk):
            h = 1e-7 * max(1.0, abs(x[m]))
            cand.x = x.copy()
            cand.x[m] += h
            jac[:, m] = (_system_residual_vector(cand) - f) / h
        cand.x = x
        try:
            if len(f) == n_unk:
                step = solve_linear(jac, f.reshape(-1, 1)).ravel()
            else:
                step, *_ = np.linalg.lstsq(jac, f, rcond=None)
        except np.linalg.LinAlgError:
            return False
        damp = 1.0
        best = np.max(np.abs(f))
        for _ in range(20):
            cand.x = x - damp * step
            f_new = _system_residual_vector(cand)
            if np.max(np.abs(f_new)) < best:
                x = cand.x
                f = f_new
                break
            damp /= 2
        else:
            cand.x = x
            return np.max(np.abs(f)) < 1e-10 * scale
    return bool(np.max(np.abs(f)) < 1e-10 * scale)


def _closed_form_roots_n1(data: InterpolationData) -> list[np.ndarray]:
    """All solutions of the single-node system at N = 1."""
    spec = data.spec
    if spec.rank_n == 2:
        # x * (c + r x) = RHS  ->  r x^2 + c x - RHS = 0
        probe = TransferEigenvalue(data=data, x=np.array([0.0 + 0.0j]))
        node1 = spec.xi_h(0, 1)
        c0 = probe.value(node1)
        probe.x = np.array([1.0 + 0.0j])
        r0 = probe.value(node1) - c0
        roots = np.roots([r0, c0, -data.rhs_nodes[0]])
        return [np.array([z]) for z in roots if abs(z) > 1e-12]
    # gl_3: clear x from the mu = +1 equation and take polynomial roots.
    spec = data.spec
    eta = spec.eta
    xi1 = spec.xi[0]
    pref = spec.r_of(2 * xi1 - eta) * spec.r_of(2 * xi1 - 2 * eta)

    def g_of_x(xv: complex) -> complex:
        cand = TransferEigenvalue(data=data, x=np.array([xv]))
        t2 = gl3_t2_from_t1(spec, cand)
        return pref * xv * t2(xi1 - eta) - data.rhs_nodes[0, 0]

    # x * g(x) is a polynomial of degree <= 4; fit it exactly on 6 points.
    pts = np.array([0.7 + 0.31j, -1.1 + 0.6j, 1.5 - 0.8j, 0.4 - 1.2j, -0.9 - 0.5j, 1.9 + 1.0j])
    vals = np.array([z * g_of_x(z) for z in pts])
    coeffs = np.linalg.solve(np.vander(pts, 6), vals)
    roots = np.roots(coeffs)
    return [np.array([z]) for z in roots if abs(z) > 1e-10]


def solve_sov_system(
    spec: ModelSpec,
    seeds=None,
    gauge: GaugeData | None = None,
    oracle=None,
) -> list[TransferEigenvalue]:
    """Solve the discrete SoV system by damped Newton from oracle-jittered
    seeds (plus exhaustive closed-form roots at N = 1); deduplicated."""
    data = interpolation_data(spec, gauge)
    seed_list = []
    if seeds is not None:
        seed_list.extend([np.asarray(s, dtype=complex) for s in seeds])
    else:
        if oracle is None:
            oracle, *_ = diag_oracle(spec, gauge)
        rng = spec.rng(salt=41)
        for cand in oracle:
            jitter = 1 + 1e-3 * (rng.standard_normal(len(cand.x)) + 1j * rng.standard_normal(len(cand.x)))
            seed_list.append(cand.x * jitter)
        if spec.sites_N == 1:
            seed_list.extend(_closed_form_roots_n1(data))
    solutions: list[TransferEigenvalue] = []

    def same(a: np.ndarray, b: np.ndarray) -> bool:
        scale = max(float(np.max(np.abs(a))), float(np.max(np.abs(b))), 1.0)
        return float(np.max(np.abs(a - b))) < 1e-6 * scale

    for s in seed_list:
        cand = TransferEigenvalue(data=data, x=np.asarray(s, dtype=complex).copy(),
                                  provenance="sov_solver")
        if not _newton(cand):
            continue
        if any(same(cand.x, sol.x) for sol in solutions):
            continue
        solutions.append(cand)
    return solutions


# -- eigenvector reconstruction -----------------------------------------------------


def sov_wavefunction(basis: SovBasis, t: TransferEigenvalue, gauge=None) -> np.ndarray:
    """SoV coordinates <h|t> for every h-tuple of the basis."""
    spec = basis.spec
    out = np.zeros(len(basis.tuples), dtype=complex)
    if spec.rank_n == 2:
        ratios = [
            t.value(spec.xi_h(a, 1)) / basis.normalizers[a] for a in range(spec.sites_N)
        ]
        for i, h in enumerate(basis.tuples):
            val = 1.0 + 0.0j
            for a, h_a in enumerate(h):
                if h_a == 0:
                    val *= ratios[a]
            out[i] = val
        return out
    for i, h in enumerate(basis.tuples):
        val = 1.0 + 0.0j
        for a, h_a in enumerate(h):
            val *= t.x[a] ** h_a
        out[i] = val
    return out


def reconstruct_eigenvector(
    spec: ModelSpec,
    basis: SovBasis,
    t: TransferEigenvalue,
    oracle_vector: np.ndarray | None = None,
    n_probes: int = 3,
) -> dict:
    """Solve the co-vector stack for |t> and verify T |t> = t |t>."""
    psi = sov_wavefunction(basis, t)
    rhs = psi * np.exp(-basis.log_scales)
    vec = solve_linear(basis.covectors, rhs.reshape(-1, 1)).ravel()
    vec = vec / np.linalg.norm(vec)
    worst = 0.0
    for lam in spec.sample_points(n_probes, salt=53):
        t_op = transfer_matrix(spec, lam)
        lhs = t_op @ vec
        worst = max(
            worst,
            float(np.linalg.norm(lhs - t.value(lam) * vec) / max(np.linalg.norm(lhs), 1e-300)),
        )
    out = {"vector": vec, "eigen_residual": worst}
    if oracle_vector is not None:
        align = abs(np.vdot(oracle_vector, vec)) / (
            np.linalg.norm(oracle_vector) * np.linalg.norm(vec)
        )
        out["alignment"] = float(align)
    return out


def reconstruct_left_eigenvector(
    spec: ModelSpec,
    left: SovBasis,
    t: TransferEigenvalue,
    gauge: GaugeData | None = None,
) -> np.ndarray:
    """<t| from its expansion over the left basis (rank 1 only)."""
    if spec.rank_n != 2:
        raise ValueError("left-eigenvector SoV expansion is a rank-1 formula")
    g = canonical_gauge(spec) if gauge is None else gauge
    out = np.zeros(spec.hilbert_dim, dtype=complex)
    for i, h in enumerate(left.tuples):
        coeff = vandermonde_nodes(spec, h)
        for a, h_a in enumerate(h):
            if h_a == 1:
                coeff *= t.value(spec.xi_h(a, 0)) / (
                    kappa_node(spec, a) * coeff_a(spec, -spec.xi_h(a, 1), g)
                )
        out += coeff * left.covectors[i] * cmath.exp(left.log_scales[i])
    return out


# -- gl_3: t_2 from t_1 ----------------------------------------------------------


def gl3_t2_from_t1(spec: ModelSpec, t1: TransferEigenvalue):
    """Scalar evaluator for t_2(lam), interpolated from t_1 node data.

    Wired through the fusion values at +-xi_a, the central values at
    0, +-eta/2, -eta and the asymptotic constant.
    """
    if spec.rank_n != 3:
        raise ValueError("t_2 interpolation is a gl_3 construction")
    d = t1.data
    eta = spec.eta
    t2_centrals = {
        "zero": spec.r_of(-eta) * t1.value(0.0) * t1.value(-eta),
        "half_minus": spec.r_of(-2 * eta) * t1.value(-eta / 2) * t1.value(-1.5 * eta),
        "half_plus": d.central["t2_half_plus"],
        "minus_eta": d.central["t2_minus_eta"],
    }
    node_products = {}
    for a in range(spec.sites_N):
        for eps in (1, -1):
            z = eps * spec.xi[a]
            node_products[(a, eps)] = (
                spec.r_of(2 * z - eta) * t1.node_value(a, eps) * t1.value(z - eta)
            )

    def t2(lam: complex) -> complex:
        out = d.t2_infinity(lam) + d.v3_fn(lam, t2_centrals)
        for (a, eps), val in node_products.items():
            out += d.f3_fn(a, eps, lam) * val
        return out

    return t2
