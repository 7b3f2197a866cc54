from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ltfourier import make_field, newton_polygon
from ltfourier.newton import polynomial_newton_polygon


def brute_hull(points):
    # oracle: a point is a vertex iff no segment between two other points passes weakly below it
    pts = sorted(points)
    verts = [pts[0], pts[-1]]
    for k, (x, y) in enumerate(pts[1:-1], 1):
        below = False
        for (x1, y1), (x2, y2) in combinations(pts, 2):
            if x1 < x < x2:
                line = y1 + (y2 - y1) * Fraction(x - x1, x2 - x1)
                if line <= y:
                    below = True
                    break
        if not below:
            verts.append((x, y))
    return sorted(verts)


point_sets = st.dictionaries(st.integers(0, 12), st.fractions(-5, 5, max_denominator=6),
                             min_size=2, max_size=10)


@given(point_sets)
@settings(max_examples=150, deadline=None)
def test_vertices_match_brute_force(d):
    P = newton_polygon(d.items())
    assert list(P.vertices) == brute_hull(d.items())


@given(point_sets)
@settings(max_examples=100, deadline=None)
def test_slopes_increase_and_lengths_cover_span(d):
    P = newton_polygon(d.items())
    slopes = P.slopes
    assert all(a < b for a, b in zip(slopes, slopes[1:]))
    assert sum(n for _, n in P.segments) == max(d) - min(d)
    for i, v in d.items():
        # every point lies on or above the polygon
        for (i1, v1), (i2, v2) in zip(P.vertices, P.vertices[1:]):
            if i1 <= i <= i2:
                assert v >= v1 + (v2 - v1) * Fraction(i - i1, i2 - i1)


def test_eisenstein_polygon_is_one_segment():
    F = make_field(3)
    P = polynomial_newton_polygon([F(3), F(6), F(1)])
    assert P.root_valuations() == [(Fraction(1, 2), 2)]


def test_zero_coefficients_are_skipped():
    P = newton_polygon([(0, 2), (1, float("inf")), (3, 0)])
    assert P.root_valuations() == [(Fraction(2, 3), 3)]


def test_needs_two_points():
    with pytest.raises(ValueError):
        newton_polygon([(0, 1)])
