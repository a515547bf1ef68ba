"""Exact predicates and constructions over rational 3-space.

Every coordinate is an exact rational (``gmpy2.mpq``, always in lowest
terms); nothing here compares against an epsilon. Hulls and segments are
closed sets.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple, Sequence

from gmpy2 import mpq

from .errors import DegenerateTriangle, DisjointnessViolated

Scalar = type(mpq(0))
ZERO = mpq(0)
ONE = mpq(1)
_LITERAL = re.compile(r"[+-]?\d+(/\d+)?")


def scalar(v) -> Scalar:
    """Coerce an int, Fraction or rational literal ("p/q", "-3") to an exact scalar."""
    if isinstance(v, Scalar):
        return v
    if isinstance(v, Fraction):
        return mpq(v.numerator, v.denominator)
    if isinstance(v, str):
        v = v.strip()
        if not _LITERAL.fullmatch(v):
            raise ValueError(f"not a rational literal: {v!r}")
        return mpq(v)
    if isinstance(v, int):
        return mpq(v)
    raise TypeError(f"cannot make an exact scalar from {type(v).__name__}")


class Point3(NamedTuple):
    x: Scalar
    y: Scalar
    z: Scalar

    def __str__(self):
        return f"({self.x}, {self.y}, {self.z})"


def point(x, y, z) -> Point3:
    return Point3(scalar(x), scalar(y), scalar(z))


def sub(a, b):
    return Point3(a[0] - b[0], a[1] - b[1], a[2] - b[2])


def add(a, b):
    return Point3(a[0] + b[0], a[1] + b[1], a[2] + b[2])


def scale(a, k):
    return Point3(a[0] * k, a[1] * k, a[2] * k)


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u, v):
    return Point3(
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def is_zero(v) -> bool:
    return v[0] == 0 and v[1] == 0 and v[2] == 0


def lerp(p, q, t):
    return Point3(p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]), p[2] + t * (q[2] - p[2]))


class Sign(enum.IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


def _sign(v) -> Sign:
    return Sign.POSITIVE if v > 0 else Sign.NEGATIVE if v < 0 else Sign.ZERO


def orient3d_value(a, b, c, d) -> Scalar:
    """Determinant with rows b-a, c-a, d-a."""
    return dot(sub(b, a), cross(sub(c, a), sub(d, a)))


def orient3d(a, b, c, d) -> Sign:
    return _sign(orient3d_value(a, b, c, d))


@dataclass(frozen=True)
class Segment:
    p: Point3
    q: Point3

    @property
    def degenerate(self) -> bool:
        return self.p == self.q


class Triangle(NamedTuple):
    """Three non-collinear vertices. Semantically the outline; ``<t>`` is the filled one."""

    v0: Point3
    v1: Point3
    v2: Point3

    @classmethod
    def of(cls, a, b, c) -> "Triangle":
        t = cls(Point3(*map(scalar, a)), Point3(*map(scalar, b)), Point3(*map(scalar, c)))
        if is_zero(t.normal):
            raise DegenerateTriangle(f"collinear vertices {a}, {b}, {c}")
        return t

    @property
    def normal(self) -> Point3:
        return cross(sub(self.v1, self.v0), sub(self.v2, self.v0))

    def edges(self):
        return ((self.v0, self.v1), (self.v1, self.v2), (self.v2, self.v0))

    def permuted(self, order: Sequence[int]) -> "Triangle":
        return Triangle(*(self[i] for i in order))

    def translated(self, offset) -> "Triangle":
        return Triangle(*(add(v, offset) for v in self))


# --- tagged results -------------------------------------------------------


class SetKind(enum.Enum):
    EMPTY = "Empty"
    POINT = "Point"
    SEGMENT = "Segment"
    POLYGON = "Polygon"


@dataclass(frozen=True)
class IntersectionSet:
    """Segment-versus-hull result: EMPTY, POINT (one point) or SEGMENT (two distinct points)."""

    kind: SetKind
    points: tuple = ()

    @property
    def empty(self) -> bool:
        return self.kind is SetKind.EMPTY


EMPTY = IntersectionSet(SetKind.EMPTY)


def _single(p) -> IntersectionSet:
    return IntersectionSet(SetKind.POINT, (p,))


def _interval(p, q, lo, hi) -> IntersectionSet:
    if lo > hi:
        return EMPTY
    if lo == hi:
        return _single(lerp(p, q, lo))
    return IntersectionSet(SetKind.SEGMENT, (lerp(p, q, lo), lerp(p, q, hi)))


@dataclass(frozen=True)
class ConvexSet:
    """Intersection of two filled triangles; polygon vertices are in cyclic convex order."""

    kind: SetKind
    points: tuple = ()

    def canonical(self):
        if self.kind is SetKind.POLYGON:
            return (self.kind, frozenset(self.points))
        return (self.kind, tuple(sorted(self.points)))


class ProfileKind(enum.Enum):
    EMPTY = "Empty"
    POINTS = "Points"
    CONTAINS_SEGMENT = "ContainsSegment"
    WHOLE_OUTLINE = "WholeOutline"


@dataclass(frozen=True)
class IntersectionProfile:
    kind: ProfileKind
    points: tuple = ()

    @property
    def count(self):
        """Number of points for EMPTY/POINTS, None when the intersection is infinite."""
        if self.kind is ProfileKind.EMPTY:
            return 0
        if self.kind is ProfileKind.POINTS:
            return len(self.points)
        return None

    def canonical(self):
        return (self.kind, frozenset(self.points))


# --- point and segment predicates -------------------------------------------


def barycentric_weights(p, a, b, c):
    """Unnormalized barycentric weights of a point coplanar with abc (they sum to |n|^2)."""
    n = cross(sub(b, a), sub(c, a))
    wa = dot(n, cross(sub(c, b), sub(p, b)))
    wb = dot(n, cross(sub(a, c), sub(p, c)))
    wc = dot(n, cross(sub(b, a), sub(p, a)))
    return wa, wb, wc


def point_in_filled_triangle(p, t) -> bool:
    a, b, c = t
    if orient3d_value(a, b, c, p) != 0:
        return False
    return all(w >= 0 for w in barycentric_weights(p, a, b, c))


def point_strictly_inside(p, t) -> bool:
    """p in the relative interior of <t> (coplanar, off the boundary edges)."""
    a, b, c = t
    if orient3d_value(a, b, c, p) != 0:
        return False
    return all(w > 0 for w in barycentric_weights(p, a, b, c))


def point_on_segment(x, p, q) -> bool:
    d = sub(q, p)
    w = sub(x, p)
    if not is_zero(cross(w, d)):
        return False
    t = dot(w, d)
    return 0 <= t <= dot(d, d)


def segment_segment(p, q, r, s) -> IntersectionSet:
    """Closed segment pq against closed segment rs; rs may be a single point."""
    u = sub(q, p)
    v = sub(s, r)
    w = sub(r, p)
    n = cross(u, v)
    if not is_zero(n):
        if dot(w, n) != 0:
            return EMPTY
        nn = dot(n, n)
        sp = dot(cross(w, v), n) / nn
        tr = dot(cross(w, u), n) / nn
        if 0 <= sp <= 1 and 0 <= tr <= 1:
            return _single(lerp(p, q, sp))
        return EMPTY
    if not is_zero(cross(w, u)):
        return EMPTY
    uu = dot(u, u)
    tr = dot(w, u) / uu
    ts = dot(sub(s, p), u) / uu
    lo, hi = (tr, ts) if tr <= ts else (ts, tr)
    return _interval(p, q, max(lo, ZERO), min(hi, ONE))


def segments_meet(p, q, r, s) -> bool:
    return not segment_segment(p, q, r, s).empty


def _hull_extremes(a, b, c):
    """Endpoints of the hull of three collinear points."""
    return max(combinations((a, b, c), 2), key=lambda e: dot(sub(e[1], e[0]), sub(e[1], e[0])))


def segment_hull3(p, q, a, b, c) -> IntersectionSet:
    """Closed segment pq against the closed hull of a, b, c.

    The hull may be degenerate (collinear points): it is then treated as the
    segment between the extreme points, which is how swept move faces such as
    <ACC> collapse.
    """
    n = cross(sub(b, a), sub(c, a))
    if is_zero(n):
        r, s = _hull_extremes(a, b, c)
        return segment_segment(p, q, r, s)
    dp = dot(n, sub(p, a))
    dq = dot(n, sub(q, a))
    if (dp > 0 and dq > 0) or (dp < 0 and dq < 0):
        return EMPTY
    if dp != 0 or dq != 0:
        x = lerp(p, q, dp / (dp - dq))
        if all(w >= 0 for w in barycentric_weights(x, a, b, c)):
            return _single(x)
        return EMPTY
    # coplanar: clip the parameter interval by the three inner half-planes
    lo, hi = ZERO, ONE
    for e0, e1 in ((a, b), (b, c), (c, a)):
        inward = cross(n, sub(e1, e0))
        f0 = dot(inward, sub(p, e0))
        f1 = dot(inward, sub(q, e0))
        if f0 < 0 and f1 < 0:
            return EMPTY
        if f0 < 0:
            lo = max(lo, f0 / (f0 - f1))
        elif f1 < 0:
            hi = min(hi, f0 / (f0 - f1))
        if lo > hi:
            return EMPTY
    return _interval(p, q, lo, hi)


def segment_filled_triangle(s, t) -> IntersectionSet:
    """Exact intersection of a closed segment with a closed filled triangle."""
    p, q = (s.p, s.q) if isinstance(s, Segment) else s
    return segment_hull3(p, q, *t)


def outlines_intersect(a, b) -> bool:
    return any(segments_meet(p, q, r, s) for p, q in a.edges() for r, s in b.edges())


def _dedupe(points):
    out = []
    for x in points:
        if x not in out:
            out.append(x)
    return out


def outline_hull_profile(a, b) -> IntersectionProfile:
    """Classify the outline of ``a`` against the filled triangle ``<b>``."""
    if outlines_intersect(a, b):
        raise DisjointnessViolated("triangle outlines intersect")
    hits = [segment_filled_triangle(e, b) for e in a.edges()]
    segs = [h for h in hits if h.kind is SetKind.SEGMENT]
    if segs:
        if len(segs) == 3 and all(
            set(h.points) == {p, q} for h, (p, q) in zip(hits, a.edges())
        ):
            return IntersectionProfile(ProfileKind.WHOLE_OUTLINE, tuple(a))
        return IntersectionProfile(ProfileKind.CONTAINS_SEGMENT)
    pts = _dedupe(h.points[0] for h in hits if h.kind is SetKind.POINT)
    if not pts:
        return IntersectionProfile(ProfileKind.EMPTY)
    return IntersectionProfile(ProfileKind.POINTS, tuple(sorted(pts)))


# --- filled triangle intersections -------------------------------------------


def _coplanar(a, b) -> bool:
    return all(orient3d_value(a.v0, a.v1, a.v2, v) == 0 for v in b)


def _clip_coplanar(poly, t):
    """Sutherland-Hodgman clip of a coplanar polygon by the closed filled triangle t."""
    n = t.normal
    for e0, e1 in ((t.v0, t.v1), (t.v1, t.v2), (t.v2, t.v0)):
        if not poly:
            break
        inward = cross(n, sub(e1, e0))
        out = []
        for i, cur in enumerate(poly):
            prev = poly[i - 1]
            fc = dot(inward, sub(cur, e0))
            fp = dot(inward, sub(prev, e0))
            if fc >= 0:
                if fp < 0:
                    out.append(lerp(prev, cur, fp / (fp - fc)))
                out.append(cur)
            elif fp > 0:
                out.append(lerp(prev, cur, fp / (fp - fc)))
        poly = out
    return poly


def _convex_cleanup(poly):
    """Drop repeated and collinear vertices from a cyclic convex polygon."""
    pts = []
    for x in poly:
        if not pts or pts[-1] != x:
            pts.append(x)
    while len(pts) > 1 and pts[0] == pts[-1]:
        pts.pop()
    changed = True
    while changed and len(pts) > 2:
        changed = False
        for i in range(len(pts)):
            prev, cur, nxt = pts[i - 1], pts[i], pts[(i + 1) % len(pts)]
            if is_zero(cross(sub(cur, prev), sub(nxt, cur))):
                del pts[i]
                changed = True
                break
    return pts


def _as_convex_set(pts) -> ConvexSet:
    if not pts:
        return ConvexSet(SetKind.EMPTY)
    if len(pts) == 1:
        return ConvexSet(SetKind.POINT, tuple(pts))
    if len(pts) == 2:
        return ConvexSet(SetKind.SEGMENT, tuple(sorted(pts)))
    return ConvexSet(SetKind.POLYGON, tuple(pts))


def filled_pair_intersection(a, b) -> ConvexSet:
    """Exact intersection of two closed filled triangles."""
    if _coplanar(a, b):
        return _as_convex_set(_convex_cleanup(_clip_coplanar(list(a), b)))
    # Non-coplanar: the intersection lies on the line of the two planes and
    # its endpoints sit on one of the two boundaries.
    cand = []
    for x, y in ((a, b), (b, a)):
        for e in x.edges():
            cand.extend(segment_filled_triangle(e, y).points)
    cand = _dedupe(cand)
    if len(cand) <= 1:
        return _as_convex_set(cand)
    d = cross(a.normal, b.normal)
    lo = min(cand, key=lambda x: dot(x, d))
    hi = max(cand, key=lambda x: dot(x, d))
    return _as_convex_set([lo] if lo == hi else [lo, hi])


def convex_set_meets_triangle(cs: ConvexSet, t) -> bool:
    if cs.kind is SetKind.EMPTY:
        return False
    if cs.kind is SetKind.POINT:
        return point_in_filled_triangle(cs.points[0], t)
    if cs.kind is SetKind.SEGMENT:
        return not segment_filled_triangle(cs.points, t).empty
    poly = cs.points
    for i in range(len(poly)):
        if not segment_filled_triangle((poly[i - 1], poly[i]), t).empty:
            return True
    fan = [(poly[0], poly[i], poly[i + 1]) for i in range(1, len(poly) - 1)]
    return any(
        not segment_hull3(p, q, *tri).empty for p, q in t.edges() for tri in fan
    )


def triple_common_point(a, b, c) -> bool:
    """Do the three closed filled triangles share a point?"""
    return convex_set_meets_triangle(filled_pair_intersection(b, c), a)
