"""Tests for companding, the T matrix, quantization, and L*a*b*."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from spectramix.colorimetry import (
    CMF_CIE1931,
    D65_SPD,
    N_WAVELENGTHS,
    SRGB_M,
    T_CANONICAL,
    WAVELENGTHS_NM,
    WHITE_XYZ,
    LinearRgb,
    Srgb8,
    TMatrix,
    Xyz,
    as_reflectance,
    as_srgb8,
    clip_gamut,
    compose_t_matrix,
    linear_rgb_to_srgb8,
    reflectance_to_linear_rgb,
    srgb8_to_lab,
    srgb8_to_linear,
    srgb_decode,
    srgb_encode,
    xyz_from_linear_rgb,
    xyz_to_lab,
)
from spectramix.errors import DomainError


class TestCompanding:
    def test_endpoints_exact(self):
        assert srgb_decode(0.0) == 0.0
        assert srgb_decode(1.0) == 1.0
        assert srgb_encode(0.0) == 0.0
        assert srgb_encode(1.0) == 1.0

    def test_linear_branch_below_decode_threshold(self):
        assert srgb_decode(0.04) == pytest.approx(0.04 / 12.92, abs=0)

    def test_power_branch_at_decode_threshold(self):
        # the branch point itself takes the power formula
        expected = ((0.04045 + 0.055) / 1.055) ** 2.4
        assert srgb_decode(0.04045) == expected

    def test_encode_branches(self):
        assert srgb_encode(0.003) == pytest.approx(12.92 * 0.003, abs=0)
        v = 0.5
        assert srgb_encode(v) == pytest.approx(1.055 * v ** (1 / 2.4) - 0.055, abs=1e-15)

    def test_branches_meet_continuously(self):
        lo = 0.04045 / 12.92
        hi = ((0.04045 + 0.055) / 1.055) ** 2.4
        assert abs(hi - lo) < 1e-8

    @given(st.floats(0.0, 1.0))
    def test_round_trip(self, v):
        assert srgb_encode(srgb_decode(v)) == pytest.approx(v, abs=1e-12)
        assert srgb_decode(srgb_encode(v)) == pytest.approx(v, abs=1e-12)

    @given(st.integers(0, 255))
    def test_eight_bit_lattice_is_fixed(self, v):
        # decode then encode lands back on the same 8-bit code
        back = int(np.floor(255.0 * srgb_encode(srgb_decode(v / 255.0)) + 0.5))
        assert back == v

    @pytest.mark.parametrize("bad", [-0.1, 1.1, float("nan"), float("inf")])
    def test_out_of_range_rejected(self, bad):
        with pytest.raises(DomainError):
            srgb_decode(bad)
        with pytest.raises(DomainError):
            srgb_encode(bad)


class TestReflectanceValidation:
    def test_wavelength_grid(self):
        assert N_WAVELENGTHS == 36
        assert WAVELENGTHS_NM[0] == 380
        assert WAVELENGTHS_NM[-1] == 730
        assert np.all(np.diff(WAVELENGTHS_NM) == 10)

    def test_accepts_lists_and_arrays(self):
        out = as_reflectance([0.5] * 36)
        assert out.shape == (36,)

    @pytest.mark.parametrize("bad", [[0.5] * 35, [0.5] * 37, []])
    def test_wrong_length_rejected(self, bad):
        with pytest.raises(DomainError):
            as_reflectance(bad)

    def test_non_finite_rejected(self):
        curve = [0.5] * 36
        curve[7] = float("nan")
        with pytest.raises(DomainError):
            as_reflectance(curve)


class TestTMatrix:
    def test_shape_and_row_sums(self):
        assert T_CANONICAL.entries.shape == (3, 36)
        assert np.abs(T_CANONICAL.entries.sum(axis=1) - 1.0).max() < 1e-8

    def test_entries_read_only(self):
        with pytest.raises(ValueError):
            T_CANONICAL.entries[0, 0] = 99.0

    def test_all_ones_curve_is_white(self):
        rgb = reflectance_to_linear_rgb(np.ones(36))
        assert np.abs(np.asarray(rgb) - 1.0).max() < 1e-8

    def test_flat_curve_scales_linearly(self):
        rgb = reflectance_to_linear_rgb(np.full(36, 0.3))
        assert np.abs(np.asarray(rgb) - 0.3).max() < 1e-8

    @pytest.mark.parametrize(
        "entries",
        [np.ones((3, 35)), np.ones((4, 36)), np.full((3, 36), np.nan)],
    )
    def test_bad_tables_rejected(self, entries):
        with pytest.raises(DomainError):
            TMatrix(entries)

    def test_row_sum_validation(self):
        with pytest.raises(DomainError):
            TMatrix(np.full((3, 36), 0.5))  # rows sum to 18

    def test_compose_reproduces_canonical_table(self):
        composed = compose_t_matrix(CMF_CIE1931, SRGB_M, D65_SPD)
        dev = np.abs(composed.entries - T_CANONICAL.entries).max()
        assert dev < 1e-4

    def test_compose_rejects_zero_illuminant(self):
        with pytest.raises(DomainError):
            compose_t_matrix(CMF_CIE1931, SRGB_M, np.zeros(36))

    def test_compose_rejects_wrong_illuminant_length(self):
        with pytest.raises(DomainError):
            compose_t_matrix(CMF_CIE1931, SRGB_M, np.ones(35))

    def test_compose_normalizes_illuminant_scale(self):
        a = compose_t_matrix(CMF_CIE1931, SRGB_M, D65_SPD)
        b = compose_t_matrix(CMF_CIE1931, SRGB_M, D65_SPD * 7.5)
        assert np.abs(a.entries - b.entries).max() < 1e-12


class TestQuantization:
    def test_pure_levels(self):
        assert linear_rgb_to_srgb8(LinearRgb(1.0, 1.0, 1.0)) == (255, 255, 255)
        assert linear_rgb_to_srgb8(LinearRgb(0.0, 0.0, 0.0)) == (0, 0, 0)

    def test_rounding_direction(self):
        # values just below/above a half-code boundary land on neighbors
        lo = srgb_decode(100.4 / 255.0)
        hi = srgb_decode(100.6 / 255.0)
        assert linear_rgb_to_srgb8(LinearRgb(lo, lo, lo)).r == 100
        assert linear_rgb_to_srgb8(LinearRgb(hi, hi, hi)).r == 101

    def test_unclipped_input_rejected(self):
        with pytest.raises(DomainError):
            linear_rgb_to_srgb8(LinearRgb(1.2, 0.5, 0.5))
        with pytest.raises(DomainError):
            linear_rgb_to_srgb8(LinearRgb(-0.01, 0.5, 0.5))

    @given(st.integers(0, 255), st.integers(0, 255), st.integers(0, 255))
    def test_eight_bit_round_trip(self, r, g, b):
        c = Srgb8(r, g, b)
        assert linear_rgb_to_srgb8(srgb8_to_linear(c)) == c

    def test_as_srgb8_accepts_integer_likes(self):
        assert as_srgb8([0, 128, 255]) == Srgb8(0, 128, 255)
        assert as_srgb8(np.array([1, 2, 3])) == Srgb8(1, 2, 3)

    @pytest.mark.parametrize("bad", [(256, 0, 0), (-1, 0, 0), (0.5, 0, 0), ("ff", 0, 0), (0, 0), 7])
    def test_as_srgb8_rejects(self, bad):
        with pytest.raises(DomainError):
            as_srgb8(bad)


class TestGamut:
    def test_in_gamut_untouched(self):
        rgb = LinearRgb(0.2, 0.5, 0.9)
        clipped, moved = clip_gamut(rgb)
        assert clipped == rgb
        assert not moved

    def test_out_of_gamut_clamped(self):
        clipped, moved = clip_gamut(LinearRgb(-0.2, 0.5, 1.3))
        assert clipped == (0.0, 0.5, 1.0)
        assert moved

    def test_in_gamut_flag(self):
        assert LinearRgb(0.0, 1.0, 0.5).in_gamut()
        assert not LinearRgb(1.0001, 0.5, 0.5).in_gamut()


class TestLab:
    def test_white_point_y_is_one(self):
        assert WHITE_XYZ.y == pytest.approx(1.0, abs=1e-6)

    def test_white_and_black_anchors(self):
        assert srgb8_to_lab(Srgb8(255, 255, 255)) == pytest.approx((100.0, 0.0, 0.0), abs=1e-9)
        assert srgb8_to_lab(Srgb8(0, 0, 0)) == pytest.approx((0.0, 0.0, 0.0), abs=1e-9)

    @pytest.mark.parametrize(
        "c,expected",
        [
            # frozen against a longhand CIE 1976 evaluation with explicit
            # cube-root / linear branch selection per component
            ((118, 118, 118), (49.637014, 0.0, 0.0)),
            ((255, 0, 0), (53.222215, 80.11764, 67.174471)),
            ((50, 100, 150), (41.20662, -0.17199, -32.317165)),
        ],
    )
    def test_reference_values(self, c, expected):
        assert srgb8_to_lab(Srgb8(*c)) == pytest.approx(expected, abs=1e-6)

    @given(st.integers(0, 255))
    def test_gray_axis_is_neutral(self, v):
        lab = srgb8_to_lab(Srgb8(v, v, v))
        assert abs(lab.a) < 1e-9
        assert abs(lab.b) < 1e-9

    def test_lightness_monotone_in_gray_level(self):
        ls = [srgb8_to_lab(Srgb8(v, v, v)).l for v in range(256)]
        assert all(a < b for a, b in zip(ls, ls[1:]))

    def test_out_of_gamut_xyz_stays_finite(self):
        # negative linear channels (possible for real curves) must not NaN
        lab = xyz_to_lab(xyz_from_linear_rgb(LinearRgb(-0.17, 0.47, 0.37)))
        assert np.all(np.isfinite(lab))

    def test_xyz_solve_inverts_matrix(self):
        rgb = LinearRgb(0.2, 0.7, 0.4)
        xyz = xyz_from_linear_rgb(rgb)
        assert np.asarray(SRGB_M) @ np.asarray(xyz) == pytest.approx(np.asarray(rgb), abs=1e-12)

    def test_bad_white_point_rejected(self):
        with pytest.raises(DomainError):
            xyz_to_lab(Xyz(0.5, 0.5, 0.5), white=Xyz(1.0, 0.0, 1.0))
