"""Exact planar predicates over rational coordinates.

Everything reduces to sign computations on fractions; nothing here rounds,
so equality-sensitive callers (nesting, simplicity) get exact answers.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or numeric string ('3', '1/2', '0.25') exactly.

    Floats are refused: they would smuggle binary rounding into predicates
    that are meant to be exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact coordinate: {value!r}")


@dataclass(frozen=True)
class Point2:
    """A point in the plane with exact rational coordinates."""

    x: Fraction
    y: Fraction

    @staticmethod
    def of(x, y) -> "Point2":
        return Point2(as_rational(x), as_rational(y))

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


class Location(enum.Enum):
    """Where a point sits relative to a simple polygon."""

    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


def orientation(p: Point2, q: Point2, r: Point2) -> int:
    """Sign of the cross product (q-p) x (r-p): +1 left turn, -1 right, 0 collinear."""
    cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    if cross > 0:
        return 1
    if cross < 0:
        return -1
    return 0


def on_segment(a: Point2, b: Point2, p: Point2) -> bool:
    """True iff p lies on the closed segment [a, b]."""
    if orientation(a, b, p) != 0:
        return False
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


def segments_intersect(p1: Point2, q1: Point2, p2: Point2, q2: Point2) -> bool:
    """True iff closed segments [p1,q1] and [p2,q2] share at least one point."""
    o1 = orientation(p1, q1, p2)
    o2 = orientation(p1, q1, q2)
    o3 = orientation(p2, q2, p1)
    o4 = orientation(p2, q2, q1)
    if o1 != o2 and o3 != o4:
        return True
    if o1 == 0 and on_segment(p1, q1, p2):
        return True
    if o2 == 0 and on_segment(p1, q1, q2):
        return True
    if o3 == 0 and on_segment(p2, q2, p1):
        return True
    if o4 == 0 and on_segment(p2, q2, q1):
        return True
    return False


def polygon_self_intersection(points: Sequence[Point2]) -> tuple[int, int] | None:
    """Return the first pair of edge indices witnessing non-simplicity, else None.

    Edge i joins points[i] to points[(i+1) % n].  Adjacent edges are allowed
    to meet only at their shared endpoint; any other contact (a crossing, a
    touch, or a collinear overlap) disqualifies the polygon.
    """
    n = len(points)
    if n < 3:
        return (0, 0)
    if len(set(points)) != n:
        # duplicate coordinates collapse an edge or pinch the polygon
        seen: dict[Point2, int] = {}
        for i, p in enumerate(points):
            if p in seen:
                return (seen[p], i)
            seen[p] = i
    for i in range(n):
        a1, b1 = points[i], points[(i + 1) % n]
        for j in range(i + 1, n):
            a2, b2 = points[j], points[(j + 1) % n]
            adjacent = (j == i + 1) or (i == 0 and j == n - 1)
            if adjacent:
                shared = b1 if j == i + 1 else a1
                other1 = a1 if j == i + 1 else b1
                other2 = b2 if j == i + 1 else a2
                if orientation(other1, shared, other2) == 0:
                    d = ((other1.x - shared.x) * (other2.x - shared.x)
                         + (other1.y - shared.y) * (other2.y - shared.y))
                    if d > 0:  # both ends on the same side: edges overlap
                        return (i, j)
                continue
            if segments_intersect(a1, b1, a2, b2):
                return (i, j)
    return None


def locate_in_polygon(point: Point2, polygon: Sequence[Point2]) -> Location:
    """Even-odd point location against a simple polygon, exact arithmetic.

    The boundary test runs first, so the crossing count below never hits the
    ambiguous ray-through-vertex case with the half-open rule used here.
    """
    n = len(polygon)
    for i in range(n):
        if on_segment(polygon[i], polygon[(i + 1) % n], point):
            return Location.BOUNDARY
    inside = False
    for i in range(n):
        a, b = polygon[i], polygon[(i + 1) % n]
        if (a.y > point.y) != (b.y > point.y):
            x_cross = a.x + (point.y - a.y) * (b.x - a.x) / (b.y - a.y)
            if x_cross > point.x:
                inside = not inside
    return Location.INSIDE if inside else Location.OUTSIDE
