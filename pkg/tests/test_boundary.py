"""Stencils, corner blocks and boundary-modified restrictions."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from toepbrack import (
    BoundaryKind,
    DimensionMismatchError,
    NonHermitianError,
    SizeTooSmallError,
    build_restricted,
    classic_neumann,
    classic_split_difference,
    corner_block,
    dirichlet_from_neumann,
    eigenvalues,
    fourier_coefficients,
    hermitian,
    kernel_basis,
    make_symbol,
    rank_one_sum,
    stencil,
    toeplitz_finite,
)
from conftest import random_spec

N_KIND = BoundaryKind.MODIFIED_NEUMANN
D_KIND = BoundaryKind.MODIFIED_DIRICHLET
SIMPLE = BoundaryKind.SIMPLE


def paper_corner(e):
    """The 2x2 left-corner magnitude block displayed for the two-factor example."""
    return np.array(
        [
            [3 + np.exp(1j * e) + np.exp(-1j * e), -1 - np.exp(1j * e)],
            [-1 - np.exp(-1j * e), 1.0],
        ]
    )


class TestStencil:
    def test_laplacian(self):
        assert_allclose(stencil(make_symbol([(0.0, 1)])).c, [1.0, -1.0], atol=0)

    def test_laplacian_squared(self):
        assert_allclose(stencil(make_symbol([(0.0, 2)])).c, [1.0, -2.0, 1.0], atol=0)

    def test_two_factor(self):
        e = 2.0
        c = stencil(make_symbol([(0.0, 1), (e, 1)])).c
        assert_allclose(c, [1.0, -1.0 - np.exp(-1j * e), np.exp(-1j * e)], atol=1e-15)

    def test_leading_coefficient_one(self, rng):
        for _ in range(10):
            spec = random_spec(rng, max_mult=3)
            c = stencil(spec).c
            assert c[0] == 1.0
            assert len(c) == spec.degree + 1

    def test_autocorrelation_reproduces_coefficients(self, rng):
        for _ in range(20):
            spec = random_spec(rng, max_factors=3, max_mult=2)
            c = stencil(spec).c
            a = fourier_coefficients(spec).a
            n = spec.degree
            for t in range(n + 1):
                acf = np.sum(c[: n + 1 - t] * np.conj(c[t:]))
                assert abs(acf - a[n + t]) < 1e-12 * max(1.0, abs(a[n]))

    def test_rank_one_block_matches_display(self):
        e = 2.0
        c = stencil(make_symbol([(0.0, 1), (e, 1)])).c
        block = np.outer(c, c.conj())
        expected = np.array(
            [
                [1, -1 - np.exp(1j * e), np.exp(1j * e)],
                [-1 - np.exp(-1j * e), 2 + np.exp(-1j * e) + np.exp(1j * e), -1 - np.exp(1j * e)],
                [np.exp(-1j * e), -1 - np.exp(-1j * e), 1],
            ]
        )
        assert_allclose(block, expected, atol=1e-15)


class TestRankOneSum:
    def test_interior_equals_both_sided_restriction_exactly(self, rng):
        for _ in range(10):
            spec = random_spec(rng, max_mult=2)
            n = spec.degree
            size = 4 * n + 3
            interior = rank_one_sum(spec, size, range(0, size - n))
            built = build_restricted(spec, size, N_KIND, N_KIND)
            assert np.array_equal(interior.entries, built.entries)

    def test_central_block_is_toeplitz_band(self, rng):
        for _ in range(10):
            spec = random_spec(rng, max_mult=2)
            n = spec.degree
            size = 4 * n + 3
            interior = rank_one_sum(spec, size, range(0, size - n)).entries
            band = toeplitz_finite(fourier_coefficients(spec), size).entries
            sl = slice(n, size - n)
            assert_allclose(interior[sl, sl], band[sl, sl], atol=1e-12 * np.abs(band).max())

    def test_path_laplacian(self):
        spec = make_symbol([(0.0, 1)])
        m = rank_one_sum(spec, 4, range(0, 3))
        assert_allclose(
            m.entries,
            [[1, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 1]],
            atol=0,
        )

    def test_empty_range(self):
        spec = make_symbol([(0.0, 1)])
        assert np.array_equal(rank_one_sum(spec, 4, []).entries, np.zeros((4, 4)))

    def test_rejects_non_intersecting_placement(self):
        spec = make_symbol([(0.0, 1)])
        with pytest.raises(ValueError):
            rank_one_sum(spec, 4, [4])
        with pytest.raises(ValueError):
            rank_one_sum(spec, 4, [-2])


class TestCornerBlock:
    def test_two_factor_neumann_corner(self):
        e = 2.0
        block = corner_block(make_symbol([(0.0, 1), (e, 1)]), N_KIND)
        expected = -np.array(
            [
                [1, -1 - np.exp(1j * e)],
                [-1 - np.exp(-1j * e), 3 + np.exp(1j * e) + np.exp(-1j * e)],
            ]
        )
        assert_allclose(block.entries, expected, atol=1e-15)

    def test_laplacian_corner_is_minus_one(self):
        block = corner_block(make_symbol([(0.0, 1)]), N_KIND)
        assert_allclose(block.entries, [[-1.0]], atol=0)

    def test_sign_definiteness(self, rng):
        for _ in range(15):
            spec = random_spec(rng, max_mult=2)
            soft = eigenvalues(corner_block(spec, N_KIND)).values
            stiff = eigenvalues(corner_block(spec, D_KIND)).values
            assert soft.max() <= 1e-12
            assert stiff.min() >= -1e-12

    def test_rejects_other_kinds(self):
        spec = make_symbol([(0.0, 1)])
        with pytest.raises(ValueError):
            corner_block(spec, SIMPLE)


class TestBuildRestricted:
    def test_laplacian_both_sided(self):
        m = build_restricted(make_symbol([(0.0, 1)]), 4, N_KIND, N_KIND)
        assert_allclose(
            m.entries,
            [[1, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 1]],
            atol=0,
        )

    def test_simple_simple_is_plain_window(self):
        spec = make_symbol([(0.0, 1), (2.0, 1)])
        t = toeplitz_finite(fourier_coefficients(spec), 7)
        m = build_restricted(spec, 7, SIMPLE, SIMPLE)
        assert np.array_equal(m.entries, t.entries)

    def test_left_corners_match_displayed_blocks(self):
        e = 2.0
        spec = make_symbol([(0.0, 1), (e, 1)])
        size = 7
        t = toeplitz_finite(fourier_coefficients(spec), size).entries
        soft = build_restricted(spec, size, N_KIND, SIMPLE).entries
        stiff = build_restricted(spec, size, D_KIND, SIMPLE).entries
        assert_allclose(soft - t, _pad_top_left(-paper_corner(e), size), atol=1e-14)
        assert_allclose(stiff - t, _pad_top_left(paper_corner(e), size), atol=1e-14)

    def test_right_dirichlet_corner_is_conjugated_mirror(self):
        e = 2.0
        spec = make_symbol([(0.0, 1), (e, 1)])
        size = 6
        t = toeplitz_finite(fourier_coefficients(spec), size).entries
        stiff = build_restricted(spec, size, SIMPLE, D_KIND).entries
        mirrored = np.conj(paper_corner(e)[::-1, ::-1])
        diff = stiff - t
        assert_allclose(diff[size - 2 :, size - 2 :], mirrored, atol=1e-14)
        diff[size - 2 :, size - 2 :] = 0
        assert_allclose(diff, 0, atol=0)

    def test_size_too_small(self):
        spec = make_symbol([(0.0, 2)])
        with pytest.raises(SizeTooSmallError):
            build_restricted(spec, 4, N_KIND, N_KIND)

    def test_modulation_covariance(self, rng):
        # Conjugating by the diagonal phase matrix shifts every factor angle.
        for _ in range(8):
            spec = random_spec(rng, max_factors=2, max_mult=2)
            size = 2 * spec.degree + 3
            delta = float(rng.uniform(0.1, 6.0))
            m = build_restricted(spec, size, N_KIND, N_KIND).entries
            u = np.exp(-1j * delta * np.arange(size))
            conjugated = (u[:, None] * m) * np.conj(u[None, :])
            shifted = build_restricted(spec.shifted(delta), size, N_KIND, N_KIND).entries
            assert_allclose(conjugated, shifted, atol=1e-12 * np.abs(m).max())

    def test_kernel_vectors_annihilated(self, rng):
        for _ in range(8):
            spec = random_spec(rng, max_mult=2)
            size = 4 * spec.degree + 5
            m = build_restricted(spec, size, N_KIND, N_KIND)
            bound = 1e-9 * m.row_sum_norm()
            for phi in kernel_basis(spec, size):
                assert np.linalg.norm(m.entries @ phi) <= bound


def _pad_top_left(block, size):
    out = np.zeros((size, size), dtype=complex)
    out[: block.shape[0], : block.shape[1]] = block
    return out


class TestClassicNeumann:
    def test_laplacian_left_vertex(self):
        coeffs = fourier_coefficients(make_symbol([(0.0, 1)]))
        m = classic_neumann(coeffs, 5, "left")
        assert m.entries[0, 0] == 1.0
        assert m.entries[1, 1] == 2.0

    def test_matches_modified_for_laplacian(self):
        spec = make_symbol([(0.0, 1)])
        coeffs = fourier_coefficients(spec)
        classic = classic_neumann(coeffs, 6, "left")
        modified = build_restricted(spec, 6, N_KIND, SIMPLE)
        assert_allclose(classic.entries, modified.entries, atol=0)

    def test_laplacian_squared_hankel_corner(self):
        coeffs = fourier_coefficients(make_symbol([(0.0, 2)]))
        t = toeplitz_finite(coeffs, 5).entries
        m = classic_neumann(coeffs, 5, "left").entries
        assert_allclose(m - t, _pad_top_left(np.array([[-4.0, 1.0], [1.0, 0.0]]), 5), atol=0)

    def test_right_side_is_mirror(self):
        coeffs = fourier_coefficients(make_symbol([(0.0, 2)]))
        left = classic_neumann(coeffs, 6, "left").entries
        right = classic_neumann(coeffs, 6, "right").entries
        assert_allclose(right, left[::-1, ::-1], atol=0)

    def test_split_difference_matches_displayed_pattern(self):
        coeffs = fourier_coefficients(make_symbol([(0.0, 2)]))
        diff = classic_split_difference(coeffs, 4, 4).entries.real
        expected = np.zeros((8, 8))
        expected[2:6, 2:6] = [
            [0, -1, 1, 0],
            [-1, 4, -4, 1],
            [1, -4, 4, -1],
            [0, 1, -1, 0],
        ]
        assert_allclose(diff, expected, atol=0)

    def test_complex_symbol_rejected(self):
        coeffs = fourier_coefficients(make_symbol([(0.0, 1), (2.0, 1)]))
        with pytest.raises(NonHermitianError):
            classic_neumann(coeffs, 7, "left")

    def test_minimum_size(self):
        coeffs = fourier_coefficients(make_symbol([(0.0, 2)]))
        classic_neumann(coeffs, 3, "left")  # N+1 is allowed
        with pytest.raises(SizeTooSmallError):
            classic_neumann(coeffs, 2, "left")

    def test_bad_side(self):
        coeffs = fourier_coefficients(make_symbol([(0.0, 1)]))
        with pytest.raises(ValueError):
            classic_neumann(coeffs, 5, "top")


class TestDirichletFromNeumann:
    def test_scalar_blocks(self):
        a = hermitian([[1.0, 0.5], [0.5, 1.0]])
        out = dirichlet_from_neumann(a, hermitian([[0.5]]), hermitian([[0.5]]))
        assert_allclose(out.entries, [[1.5, 0.0], [0.0, 1.5]], atol=0)

    def test_reproduces_stiffened_blocks(self):
        spec = make_symbol([(0.0, 1), (2.0, 1)])
        coeffs = fourier_coefficients(spec)
        l1, l2 = 6, 7
        whole = toeplitz_finite(coeffs, l1 + l2)
        soft1 = build_restricted(spec, l1, SIMPLE, N_KIND)
        soft2 = build_restricted(spec, l2, N_KIND, SIMPLE)
        out = dirichlet_from_neumann(whole, soft1, soft2).entries
        stiff1 = build_restricted(spec, l1, SIMPLE, D_KIND).entries
        stiff2 = build_restricted(spec, l2, D_KIND, SIMPLE).entries
        assert_allclose(out[:l1, :l1], stiff1, atol=1e-12 * np.abs(out).max())
        assert_allclose(out[l1:, l1:], stiff2, atol=1e-12 * np.abs(out).max())

    def test_double_application_reverses(self):
        spec = make_symbol([(0.0, 2)])
        coeffs = fourier_coefficients(spec)
        whole = toeplitz_finite(coeffs, 12)
        b1 = build_restricted(spec, 5, SIMPLE, N_KIND)
        b2 = build_restricted(spec, 7, N_KIND, SIMPLE)
        once = dirichlet_from_neumann(whole, b1, b2)
        twice = dirichlet_from_neumann(
            whole,
            hermitian(once.entries[:5, :5]),
            hermitian(once.entries[5:, 5:]),
        )
        assert_allclose(twice.entries[:5, :5], b1.entries, atol=1e-12)
        assert_allclose(twice.entries[5:, 5:], b2.entries, atol=1e-12)

    def test_dimension_mismatch(self):
        a = hermitian(np.eye(4))
        with pytest.raises(DimensionMismatchError):
            dirichlet_from_neumann(a, hermitian(np.eye(2)), hermitian(np.eye(3)))
