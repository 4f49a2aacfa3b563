"""Tests for sampling, arc length, resampling, and the distance diagnostics.

Frozen arc-length and gap values were cross-checked against a one-million
segment chordal sum computed with an independent numpy evaluation before
being pinned here.
"""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fermatcurves import (
    IDENTITY,
    TWO_PI,
    AffineFrame,
    InvalidAngle,
    QuadratureFailure,
    SampledCurve,
    TooFewSamples,
    arc_length,
    convergence_gap,
    curve_point,
    oracle_polyline,
    polyline_hausdorff,
    radial_factor,
    resample_by_arclength,
    sample_uniform_theta,
)
from fermatcurves.sampling import _adaptive_simpson, _split_at_kinks

QUARTER = math.pi / 2.0


def unit_square(shift=(0.0, 0.0)):
    dx, dy = shift
    return [(dx, dy), (1.0 + dx, dy), (1.0 + dx, 1.0 + dy), (dx, 1.0 + dy)]


class TestSampledCurve:
    def test_valid_construction_and_len(self):
        curve = sample_uniform_theta(2, count=8)
        assert len(curve) == 8
        assert curve.closed
        assert curve.exponent == 2
        assert curve.frame is IDENTITY

    def test_rejects_mismatched_lengths(self):
        with pytest.raises(ValueError, match="lengths differ"):
            SampledCurve((0.0, 1.0, 2.0), ((1.0, 0.0),), True, 1, IDENTITY)

    def test_rejects_too_few_samples(self):
        with pytest.raises(TooFewSamples):
            SampledCurve((0.0, 1.0), (curve_point(0.0, 1), curve_point(1.0, 1)), True, 1, IDENTITY)

    def test_rejects_thetas_outside_one_period(self):
        pts = tuple(curve_point(t, 1) for t in (0.1, 0.2, 0.3))
        with pytest.raises(ValueError, match="period"):
            SampledCurve((-0.1, 0.2, 0.3), pts, True, 1, IDENTITY)
        with pytest.raises(ValueError, match="period"):
            SampledCurve((0.1, 0.2, 7.0), pts, True, 1, IDENTITY)

    def test_rejects_unsorted_thetas(self):
        pts = tuple(curve_point(t, 1) for t in (0.3, 0.2, 0.4))
        with pytest.raises(ValueError, match="strictly increasing"):
            SampledCurve((0.3, 0.2, 0.4), pts, True, 1, IDENTITY)

    def test_rejects_points_off_the_curve(self):
        thetas = (0.1, 0.2, 0.3)
        pts = tuple(curve_point(t, 2) for t in thetas)
        bad = (pts[0], (pts[1][0] * 1.001, pts[1][1] * 1.001), pts[2])
        with pytest.raises(ValueError, match="off the curve"):
            SampledCurve(thetas, bad, False, 2, IDENTITY)

    def test_rejects_non_frame(self):
        thetas = (0.1, 0.2, 0.3)
        pts = tuple(curve_point(t, 1) for t in thetas)
        with pytest.raises(TypeError, match="AffineFrame"):
            SampledCurve(thetas, pts, True, 1, (1, 0, 0, 0, 1, 0))


class TestSampleUniformTheta:
    def test_grid_is_the_exact_uniform_formula(self):
        curve = sample_uniform_theta(5, count=12)
        assert curve.thetas == tuple((TWO_PI * k) / 12.0 for k in range(12))

    def test_first_sample_is_the_right_crossing(self):
        for n in (1, 3, 10**6):
            curve = sample_uniform_theta(n, count=4)
            assert curve.points[0] == (1.0, 0.0)

    def test_default_count(self):
        assert len(sample_uniform_theta(1)) == 256

    def test_count_too_small(self):
        with pytest.raises(TooFewSamples):
            sample_uniform_theta(1, count=2)


class TestArcLength:
    def test_circle_full_turn_is_exactly_two_pi(self):
        assert arc_length(1) == TWO_PI

    def test_circle_quarter_is_exactly_half_pi(self):
        assert arc_length(1, theta_a=0.0, theta_b=QUARTER) == QUARTER

    def test_additive_over_subdivision(self):
        n = 7
        mid = 2.3
        whole = arc_length(n, theta_a=0.0, theta_b=5.0)
        parts = arc_length(n, theta_a=0.0, theta_b=mid) + arc_length(n, theta_a=mid, theta_b=5.0)
        assert parts == pytest.approx(whole, abs=1e-12)

    def test_four_quadrants_are_congruent(self):
        n = 9
        quadrants = [
            arc_length(n, theta_a=k * QUARTER, theta_b=(k + 1) * QUARTER) for k in range(4)
        ]
        for q in quadrants[1:]:
            assert q == pytest.approx(quadrants[0], abs=1e-13)

    def test_offset_full_turn_matches_the_closed_circuit(self):
        start = 1.234
        assert arc_length(1, theta_a=start, theta_b=start + TWO_PI) == pytest.approx(
            TWO_PI, abs=1e-12
        )

    def test_monotone_in_the_exponent_and_bounded_by_square(self):
        lengths = [arc_length(2**k) for k in range(13)]
        for a, b in zip(lengths, lengths[1:]):
            assert b > a
        for value in lengths:
            assert value < 8.0

    def test_large_exponent_frozen_value(self):
        assert arc_length(10**4) == pytest.approx(7.99977868373251, abs=1e-9)

    def test_longer_than_inscribed_polyline(self):
        curve = sample_uniform_theta(3, count=1024)
        chord = 0.0
        pts = curve.points + (curve.points[0],)
        for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
            chord += math.hypot(x1 - x0, y1 - y0)
        assert arc_length(3) > chord

    def test_zero_span(self):
        assert arc_length(5, theta_a=1.3, theta_b=1.3) == 0.0

    def test_rejects_bad_spans(self):
        with pytest.raises(ValueError, match="span"):
            arc_length(2, theta_a=1.0, theta_b=0.5)
        with pytest.raises(ValueError, match="span"):
            arc_length(2, theta_a=0.0, theta_b=7.0)
        with pytest.raises(InvalidAngle):
            arc_length(2, theta_a=math.nan, theta_b=1.0)

    def test_span_barely_over_a_turn_is_clamped(self):
        b = math.nextafter(TWO_PI, 7.0)
        assert arc_length(1, theta_a=0.0, theta_b=b) == TWO_PI

    def test_rejects_sub_precision_tolerance(self):
        with pytest.raises(ValueError, match="tol"):
            arc_length(3, tol=1e-16)
        with pytest.raises(ValueError, match="tol"):
            arc_length(3, tol=0.0)

    def test_quadrature_failure_on_a_singular_integrand(self):
        def singular(x):
            return 1.0 / x if x > 0.0 else math.inf

        with pytest.raises(QuadratureFailure):
            _adaptive_simpson(singular, 0.0, 1.0, 1e-10)

    def test_split_at_kinks_covers_the_span(self):
        pieces = _split_at_kinks(0.1, 3.0)
        assert pieces[0][0] == 0.1
        assert pieces[-1][1] == 3.0
        for (a0, b0), (a1, b1) in zip(pieces, pieces[1:]):
            assert b0 == a1
        interior = [b for _, b in pieces[:-1]]
        for cut in interior:
            ratio = cut / (math.pi / 4.0)
            assert round(ratio) == pytest.approx(ratio, abs=1e-12)


class TestResampleByArclength:
    def test_circle_comes_back_uniform(self):
        curve = resample_by_arclength(1, count=4)
        assert curve.thetas == pytest.approx(
            (0.0, QUARTER, math.pi, 1.5 * math.pi), abs=2e-10
        )
        assert curve.closed
        assert curve.thetas[0] == 0.0

    def test_equal_arc_gaps_at_large_exponent(self):
        count = 64
        curve = resample_by_arclength(100, count=count)
        gaps = []
        for i in range(count):
            t0 = curve.thetas[i]
            t1 = curve.thetas[i + 1] if i < count - 1 else TWO_PI
            gaps.append(arc_length(100, theta_a=t0, theta_b=t1))
        assert max(gaps) / min(gaps) - 1.0 <= 1e-6

    def test_thirds_split_the_total(self):
        curve = resample_by_arclength(2, count=3)
        total = arc_length(2)
        for i in range(3):
            t0 = curve.thetas[i]
            t1 = curve.thetas[i + 1] if i < 2 else TWO_PI
            assert arc_length(2, theta_a=t0, theta_b=t1) == pytest.approx(
                total / 3.0, abs=5e-9
            )

    def test_deterministic(self):
        a = resample_by_arclength(4, count=16)
        b = resample_by_arclength(4, count=16)
        assert a.thetas == b.thetas
        assert a.points == b.points


class TestConvergenceGap:
    def test_circle_gap_is_sqrt2_minus_one(self):
        assert convergence_gap(1) == pytest.approx(math.sqrt(2.0) - 1.0, abs=1e-12)

    def test_nonincreasing_in_the_exponent(self):
        gaps = [convergence_gap(2**k, resolution=1024) for k in range(11)]
        for a, b in zip(gaps, gaps[1:]):
            assert b <= a + 1e-15

    def test_matches_the_diagonal_bound(self):
        # the farthest point from the limit square sits on the diagonal,
        # where the distance is sqrt(2) * (1 - 2^(-1/(2N)))
        for n in (10, 1000):
            bound = math.sqrt(2.0) * (1.0 - 2.0 ** (-1.0 / (2.0 * n)))
            gap = convergence_gap(n)
            assert gap <= bound + 1e-12
            assert gap == pytest.approx(bound, rel=1e-6)
        assert convergence_gap(1000) <= 1e-3

    def test_translation_invariant(self):
        frame = AffineFrame(1.0, 0.0, 2.5, 0.0, 1.0, -4.0)
        assert convergence_gap(8, frame) == pytest.approx(convergence_gap(8), rel=1e-12)

    def test_rejects_tiny_resolution(self):
        with pytest.raises(ValueError):
            convergence_gap(2, resolution=8)


class TestPolylineHausdorff:
    def test_identical_curves_are_at_distance_zero(self):
        curve = sample_uniform_theta(3, count=64)
        assert polyline_hausdorff(curve, curve) == 0.0

    def test_shifted_unit_squares(self):
        a = unit_square()
        b = unit_square(shift=(0.1, 0.0))
        assert polyline_hausdorff(a, b) == pytest.approx(0.1, abs=1e-12)

    def test_square_against_the_circle(self):
        # corner-to-arc distance of the enclosing square is sqrt(2) - 1
        square = [(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)]
        circle = sample_uniform_theta(1, count=2048)
        got = polyline_hausdorff(square, circle)
        assert got == pytest.approx(math.sqrt(2.0) - 1.0, abs=1e-4)

    def test_translated_circles_and_triangle_inequality(self):
        base = sample_uniform_theta(1, count=512)
        shifted = {}
        for name, (dx, dy) in {"a": (0.0, 0.0), "b": (3.0, 0.0), "c": (0.0, 4.0)}.items():
            shifted[name] = [(x + dx, y + dy) for x, y in base.points]
        ab = polyline_hausdorff(shifted["a"], shifted["b"])
        ac = polyline_hausdorff(shifted["a"], shifted["c"])
        bc = polyline_hausdorff(shifted["b"], shifted["c"])
        assert ab == pytest.approx(3.0, abs=1e-9)
        assert ac == pytest.approx(4.0, abs=1e-9)
        assert bc == pytest.approx(5.0, abs=1e-9)
        assert ac <= ab + bc + 1e-12

    def test_closed_form_against_oracle(self):
        closed_form = sample_uniform_theta(100, count=2048)
        reference = oracle_polyline(100, count=2048)
        assert polyline_hausdorff(closed_form, reference) <= 1e-12

    @given(
        pts=st.lists(
            st.tuples(
                st.floats(min_value=-5.0, max_value=5.0),
                st.floats(min_value=-5.0, max_value=5.0),
            ),
            min_size=2,
            max_size=8,
        ),
        qts=st.lists(
            st.tuples(
                st.floats(min_value=-5.0, max_value=5.0),
                st.floats(min_value=-5.0, max_value=5.0),
            ),
            min_size=2,
            max_size=8,
        ),
    )
    def test_symmetric_and_nonnegative(self, pts, qts):
        d = polyline_hausdorff(pts, qts)
        assert d >= 0.0
        assert d == polyline_hausdorff(qts, pts)
        assert polyline_hausdorff(pts, pts) == 0.0

    def test_rejects_degenerate_input(self):
        with pytest.raises(ValueError):
            polyline_hausdorff([(0.0, 0.0)], [(1.0, 0.0), (2.0, 0.0)])
        with pytest.raises(ValueError):
            polyline_hausdorff([(0.0, 0.0), (math.nan, 1.0)], [(1.0, 0.0), (2.0, 0.0)])


class TestRadialNesting:
    def test_doubling_never_shrinks_anywhere(self):
        pairs = [(2**k, 2**(k + 1)) for k in range(8)]
        for small, big in pairs:
            for k in range(256):
                theta = TWO_PI * k / 256.0
                assert radial_factor(theta, big) >= radial_factor(theta, small) - 1e-15

    def test_strict_growth_on_the_diagonal(self):
        for small, big in [(1, 2), (4, 8), (64, 128)]:
            assert radial_factor(math.pi / 4.0, big) > radial_factor(math.pi / 4.0, small)
