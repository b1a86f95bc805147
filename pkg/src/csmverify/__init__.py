"""Exact Schubert calculus on generalized flag manifolds.

CSM and Segre classes of Schubert, opposite-Schubert, and Richardson cells,
the deformed product built from Euler characteristics of open triple
intersections, and exhaustive verification sweeps over small-rank groups.
"""

from .boxproduct import BoxCalculator
from .cohomology import CohomologyClass, EquivariantClass, FlagCohomology, StructureTable
from .csm import CsmCalculator, CsmTable, calibrated_dl_convention
from .errors import (
    CacheCorrupt,
    CalibrationFailure,
    CapacityExceeded,
    CsmVerifyError,
    GroupMismatch,
    InexactDivision,
    InternalInvariantError,
    InvalidCartan,
    LemmaViolation,
    MirrorMismatch,
    NotARoot,
    NotFiniteType,
    ParityViolation,
    PathDisagreement,
    SingularSystem,
    UsageError,
)
from .polynomial import IntPolynomial
from .richardson import CsmBasisCoefficients, RichardsonCalculator, RichardsonCoefficients
from .rootdata import (
    CartanDatum,
    RootVector,
    WeylElement,
    WeylGroup,
    build_root_system,
    enumerate_weyl,
)

__version__ = "0.1.0"

__all__ = [
    "BoxCalculator",
    "CartanDatum",
    "CohomologyClass",
    "CsmBasisCoefficients",
    "CsmCalculator",
    "CsmTable",
    "EquivariantClass",
    "FlagCohomology",
    "IntPolynomial",
    "RichardsonCalculator",
    "RichardsonCoefficients",
    "RootVector",
    "StructureTable",
    "WeylElement",
    "WeylGroup",
    "build_root_system",
    "calibrated_dl_convention",
    "enumerate_weyl",
    "__version__",
]
