"""sovchain: transfer matrices, SoV bases and spectrum verification for open
quantum spin chains (rational/trigonometric rank 1, rational gl_3 and gl_n)."""

__version__ = "0.1.0"

from .models import (
    BoundaryParamsRank1,
    BoundaryParamsRankN,
    GenericityError,
    ModelSpec,
    RATIONAL,
    TRIGONOMETRIC,
)

__all__ = [
    "BoundaryParamsRank1",
    "BoundaryParamsRankN",
    "GenericityError",
    "ModelSpec",
    "RATIONAL",
    "TRIGONOMETRIC",
    "__version__",
]
