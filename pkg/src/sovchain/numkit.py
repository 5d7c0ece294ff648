"""Dense complex linear algebra kernel.

Everything downstream manipulates plain complex128 numpy arrays; this module
collects the few operations the rest of the package needs with consistent
validation, deterministic ordering and error reporting.  LAPACK (through
numpy/scipy) does the heavy lifting.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np
import scipy.linalg

__all__ = [
    "CMatrix",
    "DimensionError",
    "SingularSystemError",
    "ConvergenceError",
    "EigenData",
    "as_cmatrix",
    "dim_cap",
    "kron",
    "partial_trace_first",
    "det",
    "solve_linear",
    "eig_general",
    "vandermonde_sq",
    "op_on_sites",
]

# CMatrix is a dense complex matrix; an alias keeps signatures readable.
CMatrix = np.ndarray

DEFAULT_DIM_CAP = 1 << 16
EIG_DIM_CAP = 256
PIVOT_RTOL = 1e-12
SIMPLE_GAP_RTOL = 1e-7


class DimensionError(ValueError):
    """Matrix dimensions incompatible or beyond the configured cap."""


class SingularSystemError(np.linalg.LinAlgError):
    """Linear system singular within the pivot threshold."""

    def __init__(self, msg, smallest_pivot):
        super().__init__(f"{msg} (smallest pivot {smallest_pivot:.3e})")
        self.smallest_pivot = smallest_pivot


class ConvergenceError(np.linalg.LinAlgError):
    """Eigensolver did not converge within its iteration budget."""


def dim_cap() -> int:
    """Dimension-product cap; overridable via SOVCHAIN_DIM_CAP."""
    raw = os.environ.get("SOVCHAIN_DIM_CAP")
    return int(raw) if raw else DEFAULT_DIM_CAP


def as_cmatrix(m, rows=None, cols=None) -> CMatrix:
    """Validate and return `m` as a finite complex128 2-d array."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2:
        raise DimensionError(f"expected a matrix, got ndim={a.ndim}")
    if rows is not None and a.shape[0] != rows:
        raise DimensionError(f"expected {rows} rows, got {a.shape[0]}")
    if cols is not None and a.shape[1] != cols:
        raise DimensionError(f"expected {cols} cols, got {a.shape[1]}")
    if not np.all(np.isfinite(a.view(float))):
        raise ValueError("matrix has non-finite entries")
    return a


def kron(a: CMatrix, b: CMatrix) -> CMatrix:
    """Kronecker product with the row-major (first factor slow) layout."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape[0] * b.shape[0] > dim_cap() or a.shape[1] * b.shape[1] > dim_cap():
        raise DimensionError(
            f"kron result {a.shape[0] * b.shape[0]}x{a.shape[1] * b.shape[1]} "
            f"exceeds dimension cap {dim_cap()}"
        )
    return np.kron(a, b)


def partial_trace_first(m: CMatrix, dim_first: int) -> CMatrix:
    """Trace out the first tensor factor of dimension `dim_first`."""
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    if m.shape[0] != m.shape[1]:
        raise DimensionError("partial trace needs a square matrix")
    if dim_first <= 0 or n % dim_first:
        raise DimensionError(f"dimension {n} not divisible by {dim_first}")
    d = n // dim_first
    return np.trace(m.reshape(dim_first, d, dim_first, d), axis1=0, axis2=2)


def op_on_sites(op: CMatrix, dims, sites) -> CMatrix:
    """Embed `op`, acting on the tensor factors listed in `sites` (in that
    order), into the product space whose factor dimensions are `dims`."""
    dims = list(dims)
    sites = list(sites)
    n_sp = len(dims)
    if n_sp > 13:
        raise DimensionError("too many tensor factors for the einsum embedding")
    d_op = int(np.prod([dims[s] for s in sites]))
    op = np.asarray(op, dtype=complex)
    if op.shape != (d_op, d_op):
        raise DimensionError("operator shape does not match the selected factors")
    t = op.reshape([dims[s] for s in sites] * 2)
    out_l = [chr(97 + i) for i in range(n_sp)]
    in_l = [chr(97 + n_sp + i) for i in range(n_sp)]
    subs = ["".join(out_l[s] for s in sites) + "".join(in_l[s] for s in sites)]
    operands = [t]
    for i in range(n_sp):
        if i not in sites:
            subs.append(out_l[i] + in_l[i])
            operands.append(np.eye(dims[i], dtype=complex))
    spec = ",".join(subs) + "->" + "".join(out_l) + "".join(in_l)
    full = np.einsum(spec, *operands)
    d = int(np.prod(dims))
    return full.reshape(d, d)


def det(m: CMatrix) -> complex:
    """Determinant via pivoted LU."""
    m = np.asarray(m, dtype=complex)
    if m.shape[0] != m.shape[1]:
        raise DimensionError("determinant needs a square matrix")
    return complex(np.linalg.det(m))


def solve_linear(a: CMatrix, rhs: CMatrix) -> CMatrix:
    """Solve a x = rhs, raising SingularSystemError near singularity."""
    a = np.asarray(a, dtype=complex)
    rhs = np.asarray(rhs, dtype=complex)
    if a.shape[0] != a.shape[1]:
        raise DimensionError("solve needs a square matrix")
    if rhs.shape[0] != a.shape[0]:
        raise DimensionError("rhs row count does not match")
    lu, piv = scipy.linalg.lu_factor(a, check_finite=False)
    pivots = np.abs(np.diag(lu))
    row_scale = max(np.max(np.abs(a), initial=0.0), 1.0)
    smallest = float(pivots.min(initial=np.inf))
    if smallest < PIVOT_RTOL * row_scale:
        raise SingularSystemError("singular system", smallest)
    return scipy.linalg.lu_solve((lu, piv), rhs, check_finite=False)


@dataclass
class EigenData:
    """General complex eigendecomposition with paired left/right vectors.

    values[k] pairs with right_vectors[:, k] and left_vectors[k, :];
    left rows are normalized so that left @ right = I when the spectrum is
    simple.  residuals[k] bounds ||A v_k - lam_k v_k|| / ||A||.
    """

    values: np.ndarray
    right_vectors: CMatrix
    left_vectors: CMatrix
    residuals: np.ndarray

    def min_gap(self) -> float:
        vals = self.values
        if len(vals) < 2:
            return np.inf
        diff = np.abs(vals[:, None] - vals[None, :])
        np.fill_diagonal(diff, np.inf)
        return float(diff.min())

    def spectral_radius(self) -> float:
        return float(np.max(np.abs(self.values), initial=0.0))

    def is_simple(self, gap_rtol: float = SIMPLE_GAP_RTOL) -> bool:
        radius = self.spectral_radius()
        return radius > 0 and self.min_gap() > gap_rtol * radius


def eig_general(m: CMatrix) -> EigenData:
    """Eigen-decompose a general complex matrix, deterministically ordered.

    Eigenvalues are sorted by (real, imag); left vectors come from the same
    LAPACK call and are rescaled to be biorthonormal against the right ones
    whenever the pairing is numerically nonsingular.
    """
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    if m.shape[0] != m.shape[1]:
        raise DimensionError("eig needs a square matrix")
    if n > EIG_DIM_CAP:
        raise DimensionError(f"dimension {n} exceeds eigensolver cap {EIG_DIM_CAP}")
    try:
        vals, vl, vr = scipy.linalg.eig(m, left=True, right=True, check_finite=False)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise ConvergenceError(str(exc)) from exc
    order = np.lexsort((vals.imag, vals.real))
    vals = vals[order]
    vr = vr[:, order]
    # scipy returns left vectors as columns of vl with vl^H m = vals vl^H.
    left = vl[:, order].conj().T
    # Biorthonormalize: scale left rows so that left @ right ~= I.
    pairing = np.einsum("ij,ji->i", left, vr)
    safe = np.abs(pairing) > 1e-300
    scale = np.ones_like(pairing)
    scale[safe] = 1.0 / pairing[safe]
    left = left * scale[:, None]
    norm_m = max(np.linalg.norm(m, ord=2), 1e-300)
    res = np.linalg.norm(m @ vr - vr * vals[None, :], axis=0) / norm_m
    return EigenData(values=vals, right_vectors=vr, left_vectors=left, residuals=res)


def vandermonde_sq(x) -> complex:
    """prod_{k<j} (x_k^2 - x_j^2); the squared-variable Vandermonde."""
    x = np.asarray(x, dtype=complex)
    if x.size < 2:
        return 1.0 + 0.0j
    sq = x**2
    diff = sq[:, None] - sq[None, :]
    iu = np.triu_indices(x.size, k=1)
    return complex(np.prod(diff[iu]))
