"""Chain definitions: rank, kind, inhomogeneities and boundary parameters.

Conventions used throughout the package:

* rank 1 (local dimension 2, rational or trigonometric): shifted node points
  xi_n^(h) = xi_n + eta/2 - h*eta with h in {0, 1}; the bulk functions are
  a(lam) = prod_n (lam - xi_n + eta/2) and d(lam) = a(lam - eta), with
  (lam - x) replaced by sinh(lam - x) in the trigonometric case.
* rank >= 2 (rational gl_n): unshifted nodes xi_a; d(lam) =
  prod_a (lam - xi_a)(lam + xi_a), a(lam) = d(lam + eta), and for gl_3 the
  fusion prefactor r(lam) = -lam (lam + 3 eta).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field

import numpy as np

from .numkit import as_cmatrix, dim_cap

__all__ = [
    "GenericityError",
    "BoundaryParamsRank1",
    "BoundaryParamsRankN",
    "ModelSpec",
    "RATIONAL",
    "TRIGONOMETRIC",
]

RATIONAL = "rational"
TRIGONOMETRIC = "trigonometric"

DELTA_GEN_DEFAULT = 1e-3


class GenericityError(ValueError):
    """Parameter point violates the genericity conditions."""


def _sqrt1p4k2(kappa: complex) -> complex:
    return cmath.sqrt(1 + 4 * kappa * kappa)


@dataclass(frozen=True)
class BoundaryParamsRank1:
    """Scalar boundary data (zeta, kappa, tau) for both chain ends."""

    zeta_plus: complex
    zeta_minus: complex
    kappa_plus: complex = 0.0
    kappa_minus: complex = 0.0
    tau_plus: complex = 0.0
    tau_minus: complex = 0.0

    def zeta(self, side: str) -> complex:
        return self.zeta_plus if side == "plus" else self.zeta_minus

    def kappa(self, side: str) -> complex:
        return self.kappa_plus if side == "plus" else self.kappa_minus

    def tau(self, side: str) -> complex:
        return self.tau_plus if side == "plus" else self.tau_minus

    def r_sign(self, side: str) -> int:
        k2 = self.kappa(side) ** 2
        return 0 if abs(k2 + 0.25) < 1e-14 else 1

    def zeta_bar_principal(self, side: str) -> complex:
        """zeta / sqrt(1 + 4 kappa^2) on the principal branch (no sign choice)."""
        if self.r_sign(side) == 0:
            return self.zeta(side)
        return self.zeta(side) / _sqrt1p4k2(self.kappa(side))

    def m_matrix(self, side: str) -> np.ndarray:
        """Involution M with K(lam) = I + (lam +- eta/2)/zeta_bar * M."""
        k, t = self.kappa(side), self.tau(side)
        core = np.array(
            [[1.0, 2 * k * cmath.exp(t)], [2 * k * cmath.exp(-t), -1.0]], dtype=complex
        )
        if self.r_sign(side) == 0:
            return core
        return core / _sqrt1p4k2(k)

    def commuting(self, tol: float = 1e-12) -> bool:
        """True iff [K_+(lam), K_-(mu)] = 0 for all arguments."""
        scale = max(
            abs(self.kappa_plus), abs(self.kappa_minus), 1.0
        )
        d1 = self.kappa_minus * cmath.exp(self.tau_minus) - self.kappa_plus * cmath.exp(self.tau_plus)
        d2 = self.kappa_minus * cmath.exp(-self.tau_minus) - self.kappa_plus * cmath.exp(-self.tau_plus)
        return abs(d1) < tol * scale and abs(d2) < tol * scale

    def alpha_beta(self, side: str) -> tuple[complex, complex]:
        """Trigonometric (alpha, beta) with sinh(a)cosh(b) = sinh(zeta)/(2 kappa)
        and cosh(a)sinh(b) = cosh(zeta)/(2 kappa); principal asinh branch."""
        k = self.kappa(side)
        if k == 0:
            raise ZeroDivisionError("alpha/beta undefined for kappa = 0")
        z = self.zeta(side)
        s = cmath.sinh(z) / (2 * k)
        c = cmath.cosh(z) / (2 * k)
        u = cmath.asinh(s + c)
        v = cmath.asinh(s - c)
        return (u + v) / 2, (u - v) / 2


@dataclass(frozen=True)
class BoundaryParamsRankN:
    """Boundary data for gl_n: K_+-(lam) = I -+ (lam - n delta_{+-1,1} eta/2)/zeta_+- M^(+-)."""

    zeta_plus: complex
    zeta_minus: complex
    p_plus: int
    p_minus: int
    r_plus: int = 1
    r_minus: int = 1
    W_plus: np.ndarray | None = None
    W_minus: np.ndarray | None = None

    def zeta(self, side: str) -> complex:
        return self.zeta_plus if side == "plus" else self.zeta_minus

    def m_matrix(self, side: str, n: int) -> np.ndarray:
        p = self.p_plus if side == "plus" else self.p_minus
        r = self.r_plus if side == "plus" else self.r_minus
        w = self.W_plus if side == "plus" else self.W_minus
        w = np.eye(n, dtype=complex) if w is None else as_cmatrix(w, n, n)
        if r == 1:
            eps = np.array([1.0 if j < p else -1.0 for j in range(n)], dtype=complex)
            core = np.diag(eps)
        else:
            core = np.zeros((n, n), dtype=complex)
            core[0, n - 1] = 1.0
        return w @ core @ np.linalg.inv(w)

    def check(self, n: int) -> None:
        for side in ("plus", "minus"):
            p = self.p_plus if side == "plus" else self.p_minus
            r = self.r_plus if side == "plus" else self.r_minus
            if not 0 <= p <= n:
                raise ValueError(f"p_{side} must lie in [0, {n}]")
            m = self.m_matrix(side, n)
            dev = np.max(np.abs(m @ m - r * np.eye(n)))
            if dev > 1e-12:
                raise ValueError(f"M^({side}) squared deviates from r*I by {dev:.2e}")
        pair = (self.p_plus, self.p_minus)
        comp = (n - self.p_plus, n - self.p_minus)
        if comp < pair:
            raise ValueError(
                f"boundary pair p={pair} is the complementary form of {comp}; "
                "use the canonical representative"
            )


@dataclass(frozen=True)
class ModelSpec:
    """Full definition of one open chain."""

    rank_n: int
    kind: str
    sites_N: int
    eta: complex
    xi: tuple
    boundary: object
    seed: int = 7
    delta_gen: float = DELTA_GEN_DEFAULT
    _skip_checks: bool = field(default=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "eta", complex(self.eta))
        object.__setattr__(self, "xi", tuple(complex(x) for x in self.xi))
        if not self._skip_checks:
            self.validate()

    # -- structural checks -------------------------------------------------

    def validate(self):
        if self.rank_n < 2:
            raise ValueError("rank_n must be >= 2")
        if self.kind not in (RATIONAL, TRIGONOMETRIC):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind == TRIGONOMETRIC and self.rank_n != 2:
            raise ValueError("trigonometric kind is only supported at rank 2")
        if self.sites_N < 1:
            raise ValueError("sites_N must be >= 1")
        if len(self.xi) != self.sites_N:
            raise ValueError("need one inhomogeneity per site")
        if self.rank_n**self.sites_N > dim_cap():
            raise ValueError("Hilbert space dimension exceeds the configured cap")
        if self.rank_n == 2:
            if not isinstance(self.boundary, BoundaryParamsRank1):
                raise TypeError("rank 2 needs BoundaryParamsRank1")
        else:
            if not isinstance(self.boundary, BoundaryParamsRankN):
                raise TypeError("rank >= 3 needs BoundaryParamsRankN")
            self.boundary.check(self.rank_n)
        self._check_genericity()

    def _sep(self, z: complex) -> float:
        """|z|, taken modulo i*pi in the trigonometric case."""
        if self.kind == TRIGONOMETRIC:
            z = complex(z.real, z.imag - np.pi * round(z.imag / np.pi))
        return abs(z)

    def _check_genericity(self):
        d, eta, xi = self.delta_gen, self.eta, self.xi
        for a in range(self.sites_N):
            if self._sep(xi[a]) <= d:
                raise GenericityError(f"|xi_{a + 1}| too small")
            for s in (1, -1):
                if self._sep(2 * xi[a] + s * eta) <= d:
                    raise GenericityError(f"|2 xi_{a + 1} {'+-'[s < 0]} eta| too small")
            for b in range(self.sites_N):
                if a == b:
                    continue
                for eps in (-1, 0, 1):
                    if self._sep(xi[a] - xi[b] - eps * eta) <= d:
                        raise GenericityError(
                            f"xi_{a + 1} - xi_{b + 1} collides with {eps}*eta"
                        )
            for b in range(a + 1, self.sites_N):
                for s in (1, 0, -1):
                    if self._sep(xi[a] + xi[b] + s * eta) <= d:
                        raise GenericityError(
                            f"xi_{a + 1} + xi_{b + 1} collides with {-s}*eta"
                        )

    # -- derived scalars ----------------------------------------------------

    @property
    def hilbert_dim(self) -> int:
        return self.rank_n**self.sites_N

    def xi_h(self, n: int, h: int) -> complex:
        """Shifted node xi_n + eta/2 - h eta (rank-1 convention, 0-based n)."""
        return self.xi[n] + self.eta / 2 - h * self.eta

    def line(self, z: complex) -> complex:
        """The basic 'linear' function: z rationally, sinh z trigonometrically."""
        return cmath.sinh(z) if self.kind == TRIGONOMETRIC else z

    def a_of(self, lam: complex) -> complex:
        if self.rank_n == 2:
            return complex(
                np.prod([self.line(lam - x + self.eta / 2) for x in self.xi])
            )
        return self.d_of(lam + self.eta)

    def d_of(self, lam: complex) -> complex:
        if self.rank_n == 2:
            return complex(
                np.prod([self.line(lam - x - self.eta / 2) for x in self.xi])
            )
        return complex(np.prod([(lam - x) * (lam + x) for x in self.xi]))

    def r_of(self, lam: complex) -> complex:
        """gl_3 fusion prefactor."""
        return -lam * (lam + 3 * self.eta)

    def rng(self, salt: int = 0) -> np.random.Generator:
        return np.random.default_rng(self.seed + 1000003 * salt)

    def sample_points(self, count: int, salt: int = 0, avoid: tuple = ()) -> list[complex]:
        """Seeded generic complex points on the annulus 0.3 < |lam| < 1.7.

        Points within delta_gen of the model's singular denominators (nodes,
        their negatives, eta-shifted lattice, the origin) are rejected.
        """
        rng = self.rng(salt)
        bad = list(avoid)
        bad.extend([0.0, self.eta / 2, -self.eta / 2, self.eta, -self.eta])
        for x in self.xi:
            for h in (0, 1):
                for s in (1, -1):
                    bad.append(s * (x + self.eta / 2 - h * self.eta))
            bad.append(x)
            bad.append(-x)
        out: list[complex] = []
        while len(out) < count:
            r = 0.3 + 1.4 * rng.random()
            phi = 2 * np.pi * rng.random()
            z = r * cmath.exp(1j * phi)
            if all(self._sep(z - b) > self.delta_gen for b in bad):
                out.append(z)
        return out

    def describe(self) -> dict:
        b = self.boundary
        out = {
            "rank_n": self.rank_n,
            "kind": self.kind,
            "sites_N": self.sites_N,
            "eta": str(self.eta),
            "xi": [str(x) for x in self.xi],
            "seed": self.seed,
        }
        if isinstance(b, BoundaryParamsRank1):
            out["boundary"] = {
                "zeta_plus": str(b.zeta_plus),
                "zeta_minus": str(b.zeta_minus),
                "kappa_plus": str(b.kappa_plus),
                "kappa_minus": str(b.kappa_minus),
                "tau_plus": str(b.tau_plus),
                "tau_minus": str(b.tau_minus),
            }
        else:
            out["boundary"] = {
                "zeta_plus": str(b.zeta_plus),
                "zeta_minus": str(b.zeta_minus),
                "p_plus": b.p_plus,
                "p_minus": b.p_minus,
                "r_plus": b.r_plus,
                "r_minus": b.r_minus,
            }
        return out
