"""Boundary conditions and spectral certificates for banded Hermitian Toeplitz matrices.

The library constructs finite windows of banded Hermitian Toeplitz
operators whose symbols are products of shifted one-dimensional Laplacian
factors, equips them with softening (modified Neumann) and stiffening
(modified Dirichlet) corner corrections built from rank-one stencil sums,
and certifies numerically that the resulting operator-inequality chain,
kernel dimensions and spectral-gap scaling behave as the construction
promises.
"""

from .boundary import (
    BoundaryKind,
    StencilVector,
    build_restricted,
    classic_neumann,
    classic_split_difference,
    corner_block,
    dirichlet_from_neumann,
    rank_one_sum,
    stencil,
)
from .errors import (
    DimensionMismatchError,
    DuplicateAngleError,
    DuplicateNodeError,
    InvalidMultiplicityError,
    KernelMismatchError,
    NoConvergenceError,
    NonHermitianError,
    NonRealSymbolError,
    OutOfClassError,
    SizeTooSmallError,
    ToepbrackError,
)
from .matrices import (
    HermitianMatrix,
    circulant_periodic,
    direct_sum,
    hermitian,
    reflect_antidiagonal,
    toeplitz_finite,
)
from .spectra import (
    BracketReport,
    GapReport,
    Spectrum,
    check_bracketing,
    check_bracketing_penta,
    confluent_vandermonde_abs,
    eigenvalues,
    gap_scan,
    grid_shift,
    kernel_basis,
    psd_gap,
    sampled_gap_floor,
    spectral_gap,
)
from .symbols import (
    ANGLE_TOL,
    TWO_PI,
    BandedCoeffs,
    PentaDecomposition,
    SymbolSpec,
    banded_coefficients,
    circular_distance,
    decompose_pentadiagonal,
    evaluate_symbol,
    fourier_coefficients,
    make_symbol,
    penta_coefficients,
    reduce_angle,
)

__version__ = "0.1.0"

__all__ = [
    "ANGLE_TOL",
    "TWO_PI",
    "BandedCoeffs",
    "BoundaryKind",
    "BracketReport",
    "DimensionMismatchError",
    "DuplicateAngleError",
    "DuplicateNodeError",
    "GapReport",
    "HermitianMatrix",
    "InvalidMultiplicityError",
    "KernelMismatchError",
    "NoConvergenceError",
    "NonHermitianError",
    "NonRealSymbolError",
    "OutOfClassError",
    "PentaDecomposition",
    "SizeTooSmallError",
    "Spectrum",
    "StencilVector",
    "SymbolSpec",
    "ToepbrackError",
    "banded_coefficients",
    "build_restricted",
    "check_bracketing",
    "check_bracketing_penta",
    "circulant_periodic",
    "circular_distance",
    "classic_neumann",
    "classic_split_difference",
    "confluent_vandermonde_abs",
    "corner_block",
    "decompose_pentadiagonal",
    "dirichlet_from_neumann",
    "direct_sum",
    "eigenvalues",
    "evaluate_symbol",
    "fourier_coefficients",
    "gap_scan",
    "grid_shift",
    "hermitian",
    "kernel_basis",
    "make_symbol",
    "penta_coefficients",
    "psd_gap",
    "rank_one_sum",
    "reduce_angle",
    "reflect_antidiagonal",
    "sampled_gap_floor",
    "spectral_gap",
    "stencil",
    "toeplitz_finite",
]
