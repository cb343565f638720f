"""Eigenvalue-free detection of broken PT-symmetry in finite matrices."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    ClassificationAmbiguous,
    MethodInapplicable,
    NearDegenerate,
    NoConvergence,
    NotRealCharPoly,
    VanishingMinor,
)
from .scalars import Fraction, GaussianRational, I, SignGuard, guarded_sign, sign  # noqa: E402
from .matrix import (  # noqa: E402
    ParityMatrix,
    SquareMatrix,
    check_pt_symmetry,
    pt_well,
    pt_well_n,
    random_pt_matrix,
)
from .charpoly import RealPolynomial, char_poly, derivative, squarefree_flag  # noqa: E402
from .newton import (  # noqa: E402
    HankelMatrix,
    NewtonSums,
    build_hankel,
    newton_sums_recursive,
    newton_sums_series,
)
from .inertia import (  # noqa: E402
    ImaginaryInertia,
    QualitativeSpectrum,
    RealInertia,
    SignSequence,
    jacobi_inertia,
    leading_principal_minors,
    qualitative_spectrum,
    real_inertia_from_hankel,
)
from .oracle import classify_roots, cross_validate, find_roots  # noqa: E402
from .sweep import FamilySpec, refine_threshold, run_sweep  # noqa: E402
