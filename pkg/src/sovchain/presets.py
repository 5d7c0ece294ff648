"""Named parameter presets.

Every preset is fully pinned (no randomness in the parameters themselves) so
reports are reproducible; the per-spec seed only drives probe points.
"""

from __future__ import annotations

import cmath

import numpy as np

from .algebra import RationalLimitParams
from .models import (
    RATIONAL,
    TRIGONOMETRIC,
    BoundaryParamsRank1,
    BoundaryParamsRankN,
    ModelSpec,
)

__all__ = ["PRESETS", "preset_names", "preset", "describe_presets"]

_XI_UNIT_RAT = 1.0 + 0.173j
_XI_UNIT_TRIG = 0.23 + 0.11j

_W3_PLUS = np.array(
    [
        [1.0, 0.3 - 0.2j, -0.1j],
        [0.2 + 0.1j, 1.0, 0.4],
        [-0.3, 0.25j, 1.0],
    ],
    dtype=complex,
)
_W3_MINUS = np.array(
    [
        [1.0, -0.2, 0.35j],
        [0.15j, 1.0, -0.25 + 0.1j],
        [0.3 - 0.05j, -0.2j, 1.0],
    ],
    dtype=complex,
)
_W4_PLUS = np.array(
    [
        [1.0, 0.2 - 0.1j, 0.1j, -0.15],
        [0.1 + 0.2j, 1.0, 0.3, 0.05j],
        [-0.2, 0.15j, 1.0, 0.2 - 0.05j],
        [0.05, -0.1, 0.25j, 1.0],
    ],
    dtype=complex,
)
_W4_MINUS = np.array(
    [
        [1.0, -0.15, 0.2j, 0.1],
        [0.2j, 1.0, -0.1 + 0.05j, 0.15],
        [0.1 - 0.1j, -0.25j, 1.0, 0.2],
        [-0.05j, 0.1, -0.15, 1.0],
    ],
    dtype=complex,
)


def _gl2_rational(boundary: BoundaryParamsRank1, sites: int, seed: int = 7) -> ModelSpec:
    xi = tuple((a + 1) * _XI_UNIT_RAT for a in range(sites))
    return ModelSpec(2, RATIONAL, sites, 0.83 + 0.21j, xi, boundary, seed=seed)


def _gl2_trig(boundary: BoundaryParamsRank1, sites: int, seed: int = 7) -> ModelSpec:
    xi = tuple((a + 1) * _XI_UNIT_TRIG for a in range(sites))
    return ModelSpec(2, TRIGONOMETRIC, sites, 0.41 + 0.13j, xi, boundary, seed=seed)


def gl2_rational_generic(sites: int = 2) -> ModelSpec:
    b = BoundaryParamsRank1(
        zeta_plus=0.91 + 0.45j,
        zeta_minus=1.37 - 0.29j,
        kappa_plus=0.74 - 0.23j,
        kappa_minus=0.52 + 0.11j,
        tau_plus=-0.41 + 0.19j,
        tau_minus=0.31 + 0.07j,
    )
    return _gl2_rational(b, sites)


def gl2_rational_diagonal(sites: int = 2) -> ModelSpec:
    b = BoundaryParamsRank1(zeta_plus=0.77 + 0.31j, zeta_minus=1.23 - 0.17j)
    return _gl2_rational(b, sites)


def gl2_rational_noncommuting(sites: int = 2) -> ModelSpec:
    # One diagonal and one non-diagonal boundary: non-commuting with a forced
    # gauge branch on the diagonal side.
    b = BoundaryParamsRank1(
        zeta_plus=0.95 - 0.22j,
        zeta_minus=1.18 + 0.27j,
        kappa_plus=0.0,
        kappa_minus=0.61 + 0.18j,
        tau_plus=0.0,
        tau_minus=0.23 - 0.12j,
    )
    return _gl2_rational(b, sites)


def gl2_trig_generic(sites: int = 2) -> ModelSpec:
    b = BoundaryParamsRank1(
        zeta_plus=0.93 - 0.27j,
        zeta_minus=0.75 + 0.31j,
        kappa_plus=0.66 + 0.12j,
        kappa_minus=0.48 - 0.09j,
        tau_plus=0.21 + 0.15j,
        tau_minus=-0.17 + 0.08j,
    )
    return _gl2_trig(b, sites)


def gl2_trig_constrained(sites: int = 2) -> ModelSpec:
    """Boundary parameters on the constraint that rules out the generalized
    Sklyanin construction (choice r = 1, eps_+ = eps_- = +1)."""
    base = BoundaryParamsRank1(
        zeta_plus=0.93 - 0.27j,
        zeta_minus=0.75 + 0.31j,
        kappa_plus=0.66 + 0.12j,
        kappa_minus=0.48 - 0.09j,
        tau_plus=0.0,
        tau_minus=-0.17 + 0.08j,
    )
    eta = 0.41 + 0.13j
    a_p, b_p = base.alpha_beta("plus")
    a_m, b_m = base.alpha_beta("minus")
    tau_plus = (
        base.tau_minus
        + 1j * cmath.pi
        + (b_p - a_p)
        + (b_m + a_m)
        - (sites + 1 - 2) * eta
    )
    b = BoundaryParamsRank1(
        zeta_plus=base.zeta_plus,
        zeta_minus=base.zeta_minus,
        kappa_plus=base.kappa_plus,
        kappa_minus=base.kappa_minus,
        tau_plus=tau_plus,
        tau_minus=base.tau_minus,
    )
    return _gl2_trig(b, sites)


def gl3_generic(sites: int = 1) -> ModelSpec:
    b = BoundaryParamsRankN(
        zeta_plus=1.12 - 0.37j,
        zeta_minus=0.83 + 0.29j,
        p_plus=1,
        p_minus=2,
        W_plus=_W3_PLUS,
        W_minus=_W3_MINUS,
    )
    xi = tuple((a + 1) * _XI_UNIT_RAT for a in range(sites))
    return ModelSpec(3, RATIONAL, sites, 0.79 + 0.23j, xi, b, seed=7)


def gln4_basis(sites: int = 1) -> ModelSpec:
    b = BoundaryParamsRankN(
        zeta_plus=1.05 + 0.21j,
        zeta_minus=0.88 - 0.33j,
        p_plus=1,
        p_minus=2,
        W_plus=_W4_PLUS,
        W_minus=_W4_MINUS,
    )
    xi = tuple((a + 1) * _XI_UNIT_RAT for a in range(sites))
    return ModelSpec(4, RATIONAL, sites, 0.71 + 0.19j, xi, b, seed=7)


PRESETS = {
    "gl2-rational-generic": (
        "rational gl2, N=2, generic non-commuting boundaries",
        lambda: {"model": gl2_rational_generic()},
    ),
    "gl2-rational-diagonal": (
        "rational gl2, N=2, diagonal (kappa = 0) commuting boundaries",
        lambda: {"model": gl2_rational_diagonal()},
    ),
    "gl2-rational-noncommuting": (
        "rational gl2, N=2, one diagonal and one generic boundary",
        lambda: {"model": gl2_rational_noncommuting()},
    ),
    "gl2-trig-generic": (
        "trigonometric gl2, N=2, generic boundaries",
        lambda: {"model": gl2_trig_generic()},
    ),
    "gl2-trig-constrained": (
        "trigonometric gl2, N=2, boundaries on the Sklyanin-excluded constraint",
        lambda: {"model": gl2_trig_constrained()},
    ),
    "gl3-generic-N1": (
        "rational gl3, N=1, generic non-commuting boundaries (p+=1, p-=2)",
        lambda: {"model": gl3_generic(1)},
    ),
    "gl3-generic-N2": (
        "rational gl3, N=2, generic non-commuting boundaries (p+=1, p-=2)",
        lambda: {"model": gl3_generic(2)},
    ),
    "gln4-basis-N1": (
        "rational gl4, N=1, SoV basis construction check",
        lambda: {"model": gln4_basis(1)},
    ),
    "rational-limit-sweep": (
        "trigonometric-to-rational limit sweep at N=1, eps in {1e-2, 1e-3, 1e-4}",
        lambda: {
            "rational_limit": RationalLimitParams(),
            "epsilons": (1e-2, 1e-3, 1e-4),
        },
    ),
}


def preset_names() -> list[str]:
    return list(PRESETS)


def preset(name: str) -> dict:
    if name not in PRESETS:
        raise KeyError(f"unknown preset {name!r}; known: {', '.join(PRESETS)}")
    return PRESETS[name][1]()


def describe_presets() -> list[tuple[str, str]]:
    return [(name, desc) for name, (desc, _) in PRESETS.items()]
