"""Boundary-corrected Toeplitz restrictions via rank-one stencil sums.

Every product symbol of degree N factors through a stencil vector
``c_0..c_N`` (the convolution of the per-factor pairs (1, -exp(-i*E))),
whose shifted copies psi_k (supported on [k, k+N]) satisfy

    T[i][j] = sum_k psi_k(i) * conj(psi_k(j)),

i.e. the infinite matrix is the sum of the rank-one projectors onto the
psi_k.  Dropping the projectors that cross a window edge yields the
softened (negative-semidefinite correction) restriction; adding them back
with opposite sign yields the stiffened one.  The two corrections are what
this module calls the modified Neumann and modified Dirichlet boundary
conditions.  The classic Toeplitz-plus-Hankel Neumann condition is kept as
well because it fails the softening property once the band is wider than
three diagonals, which the counterexample helpers reproduce.

Corner orientation: ``corner_block`` returns the block added at the
bottom-right (right boundary).  The matching top-left block is the
conjugated anti-diagonal reflection of it, which equals the direct
crossing-placement sum at the left edge; a plain (unconjugated) reflection
would transpose the block and break both the rank-one identity and the
operator inequalities for complex symbols.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import DimensionMismatchError, SizeTooSmallError
from .matrices import HermitianMatrix, _toeplitz_body, _wrap, hermitian
from .symbols import BandedCoeffs, SymbolSpec, fourier_coefficients, phase_angle


class BoundaryKind(enum.Enum):
    """Boundary condition applied at one window edge."""

    SIMPLE = "0"
    MODIFIED_NEUMANN = "n"
    MODIFIED_DIRICHLET = "d"
    CLASSIC_NEUMANN = "c"

    @classmethod
    def from_code(cls, code: str) -> "BoundaryKind":
        for kind in cls:
            if kind.value == code:
                return kind
        raise ValueError(f"unknown boundary code {code!r} (use 0, n, d or c)")


@dataclass(frozen=True)
class StencilVector:
    """Coefficients c_0..c_N of the generating stencil; c_0 == 1."""

    c: np.ndarray

    @property
    def degree(self) -> int:
        return len(self.c) - 1


def stencil(spec: SymbolSpec) -> StencilVector:
    """Convolve the per-factor pairs (1, -exp(-i*E_i)), each alpha_i times.

    The autocorrelation sum_j c_j * conj(c_{j+t}) reproduces the symbol
    coefficient a_t, which is the identity all boundary constructions here
    rely on.
    """
    c = np.array([1.0 + 0.0j])
    for e, mult in spec.factors:
        pair = np.array([1.0, -np.exp(-1j * phase_angle(e))])
        for _ in range(mult):
            c = np.convolve(c, pair)
    c.flags.writeable = False
    return StencilVector(c)


def _placement(c: np.ndarray, k: int, size: int) -> np.ndarray:
    """psi_k truncated to the window [0, size)."""
    v = np.zeros(size, dtype=np.complex128)
    lo = max(k, 0)
    hi = min(k + len(c) - 1, size - 1)
    if lo <= hi:
        v[lo : hi + 1] = c[lo - k : hi - k + 1]
    return v


def rank_one_sum(spec: SymbolSpec, size: int, k_range: Iterable[int]) -> HermitianMatrix:
    """Sum of the outer products of the window-truncated stencils psi_k.

    ``k_range`` must consist of placements that intersect the window, i.e.
    -N <= k <= size-1.  With k_range = range(0, size - N) (all placements
    contained in the window) this is exactly the both-sided modified
    Neumann restriction.
    """
    n = spec.degree
    _check_window(size, 2 * n + 1)
    c = stencil(spec).c
    out = np.zeros((size, size), dtype=np.complex128)
    for k in sorted(int(k) for k in k_range):
        if not -n <= k <= size - 1:
            raise ValueError(f"placement {k} does not intersect the window [0, {size})")
        v = _placement(c, k, size)
        out += np.outer(v, v.conj())
    return _wrap(out)


def _right_crossing_vectors(c: np.ndarray) -> list[np.ndarray]:
    """Last-N-coordinate parts of the N placements crossing the right edge."""
    n = len(c) - 1
    return [np.concatenate([np.zeros(s, dtype=np.complex128), c[: n - s]]) for s in range(n)]


def _left_crossing_vectors(c: np.ndarray) -> list[np.ndarray]:
    """First-N-coordinate parts of the N placements crossing the left edge."""
    n = len(c) - 1
    return [np.concatenate([c[u:], np.zeros(u - 1, dtype=np.complex128)]) for u in range(1, n + 1)]


def _crossing_sum(vectors: list[np.ndarray]) -> np.ndarray:
    n = len(vectors)
    out = np.zeros((n, n), dtype=np.complex128)
    for v in vectors:
        out += np.outer(v, v.conj())
    return out


def corner_block(spec: SymbolSpec, kind: BoundaryKind) -> HermitianMatrix:
    """The N x N block added at the bottom-right corner of the window.

    Modified Neumann subtracts the projectors of the N placements that
    cross the right boundary (negative semidefinite block); modified
    Dirichlet adds them (positive semidefinite).  The top-left counterpart
    is the conjugated anti-diagonal reflection, available through
    :func:`build_restricted`.
    """
    if kind is BoundaryKind.MODIFIED_NEUMANN:
        sign = -1.0
    elif kind is BoundaryKind.MODIFIED_DIRICHLET:
        sign = 1.0
    else:
        raise ValueError("corner_block is defined for the modified conditions only")
    c = stencil(spec).c
    return _wrap(sign * _crossing_sum(_right_crossing_vectors(c)))


def _left_block(spec: SymbolSpec, kind: BoundaryKind) -> np.ndarray:
    sign = -1.0 if kind is BoundaryKind.MODIFIED_NEUMANN else 1.0
    c = stencil(spec).c
    return sign * _crossing_sum(_left_crossing_vectors(c))


def _check_window(size: int, minimum: int) -> None:
    if size < minimum:
        raise SizeTooSmallError(f"window size {size} is below the minimum {minimum}")


def _hankel_block(coeffs: BandedCoeffs) -> np.ndarray:
    """Classic Neumann corner: H[i][j] = a_{-(i+j+1)}, zero past anti-diagonal N."""
    n = coeffs.half_bandwidth
    h = np.zeros((n, n), dtype=np.complex128)
    for i in range(n):
        for j in range(n - i):
            h[i, j] = coeffs[-(i + j + 1)]
    return h


def build_restricted(
    spec: SymbolSpec,
    size: int,
    left: BoundaryKind,
    right: BoundaryKind,
) -> HermitianMatrix:
    """Toeplitz window of the symbol with boundary conditions at each edge.

    Requires size >= 2N+1 so the two corner blocks never overlap.  The
    both-sided modified Neumann case is built directly as the rank-one sum
    over interior placements; every other combination is the plain window
    plus the appropriate N x N corner additions.  Simple/Simple returns the
    unmodified window.
    """
    n = spec.degree
    _check_window(size, 2 * n + 1)
    if left is BoundaryKind.MODIFIED_NEUMANN and right is BoundaryKind.MODIFIED_NEUMANN:
        return rank_one_sum(spec, size, range(0, size - n))
    coeffs = fourier_coefficients(spec)
    out = _toeplitz_body(coeffs, size)
    for side, kind in (("left", left), ("right", right)):
        if kind is BoundaryKind.SIMPLE:
            continue
        if kind is BoundaryKind.CLASSIC_NEUMANN:
            block = _hankel_block(coeffs)
            if side == "right":
                block = np.conj(block[::-1, ::-1])
        elif side == "right":
            block = corner_block(spec, kind).entries
        else:
            block = _left_block(spec, kind)
        if side == "left":
            out[:n, :n] += block
        else:
            out[size - n :, size - n :] += block
    return hermitian(out)


def classic_neumann(coeffs: BandedCoeffs, size: int, side: str) -> HermitianMatrix:
    """Toeplitz window plus the classic Hankel corner on one side.

    ``side`` is "left" or "right".  Only real-coefficient symbols give a
    Hermitian Hankel block; complex coefficients raise NonHermitianError.
    The window may be as small as N+1 (band and single corner still fit),
    which the split counterexamples need.
    """
    n = coeffs.half_bandwidth
    _check_window(size, n + 1)
    out = _toeplitz_body(coeffs, size)
    block = _hankel_block(coeffs)
    if side == "left":
        out[:n, :n] += block
    elif side == "right":
        out[size - n :, size - n :] += np.conj(block[::-1, ::-1])
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return hermitian(out)


def classic_split_difference(coeffs: BandedCoeffs, size1: int, size2: int) -> HermitianMatrix:
    """T_{L1+L2} minus the direct sum of classic-Neumann halves.

    For bands wider than three diagonals this difference is indefinite,
    which is exactly why the classic condition cannot bracket; the returned
    matrix makes that failure inspectable.
    """
    size = size1 + size2
    _check_window(size, 2 * coeffs.half_bandwidth + 1)
    whole = _toeplitz_body(coeffs, size)
    whole[:size1, :size1] -= classic_neumann(coeffs, size1, "right").entries
    whole[size1:, size1:] -= classic_neumann(coeffs, size2, "left").entries
    return hermitian(whole)


def dirichlet_from_neumann(
    a: HermitianMatrix,
    block11_n: HermitianMatrix,
    block22_n: HermitianMatrix,
) -> HermitianMatrix:
    """diag(2*A11 - N11, 2*A22 - N22) for a 2 x 2 block-partitioned A.

    If A dominates diag(N11, N22) in the operator order, the returned
    direct sum dominates A; applying the map twice returns the original
    direct sum.  The block dimensions must add up to the dimension of A.
    """
    n1, n2 = block11_n.dim, block22_n.dim
    if n1 + n2 != a.dim:
        raise DimensionMismatchError(
            f"block dims {n1}+{n2} do not add up to the matrix dim {a.dim}"
        )
    out = np.zeros((a.dim, a.dim), dtype=np.complex128)
    out[:n1, :n1] = 2.0 * a.entries[:n1, :n1] - block11_n.entries
    out[n1:, n1:] = 2.0 * a.entries[n1:, n1:] - block22_n.entries
    return hermitian(out)
