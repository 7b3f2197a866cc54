"""Newton polygons over exact rational valuations."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


@dataclass(frozen=True)
class NewtonPolygon:
    points: tuple[tuple[int, Fraction], ...]
    vertices: tuple[tuple[int, Fraction], ...]
    segments: tuple[tuple[Fraction, int], ...]  # (slope, horizontal length)

    def root_valuations(self) -> list[tuple[Fraction, int]]:
        """Valuations of the nonzero roots with multiplicities (negated slopes)."""
        return [(-slope, length) for slope, length in self.segments]

    @property
    def slopes(self) -> list[Fraction]:
        return [s for s, _ in self.segments]


def newton_polygon(points: Iterable[tuple[int, Fraction | int | float]]) -> NewtonPolygon:
    """Lower convex hull of ``(index, valuation)`` points.

    Points with infinite valuation (zero coefficients) are ignored.
    """
    finite = {}
    for i, v in points:
        if v == math.inf:
            continue
        v = Fraction(v)
        if i in finite:
            raise ValueError(f"duplicate index {i}")
        finite[i] = v
    if len(finite) < 2:
        raise ValueError("Newton polygon needs at least two finite points")
    pts = sorted(finite.items())
    hull: list[tuple[int, Fraction]] = []
    for pt in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    segments = []
    for (i1, v1), (i2, v2) in zip(hull, hull[1:]):
        segments.append((Fraction(v2 - v1, i2 - i1), i2 - i1))
    return NewtonPolygon(tuple(pts), tuple(hull), tuple(segments))


def _cross(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def polynomial_newton_polygon(coeffs: Sequence) -> NewtonPolygon:
    """Newton polygon of a polynomial given by p-adic coefficients (constant first)."""
    return newton_polygon((i, c.valuation()) for i, c in enumerate(coeffs))
