"""Certified constructors for the five canonical three-triangle linkings.

Irrational coordinates are replaced by nearby rationals. Each constructor
checks its defining properties exactly and raises CertificationFailed rather
than return unverified geometry.
"""
from __future__ import annotations

import enum
import math
from fractions import Fraction
from math import isqrt

from .errors import CertificationFailed
from .invariants import Linking, ParityProfile, is_borromean, linking_parity, pairwise_parity_profile
from .kernel import Scalar, SetKind, Triangle, filled_pair_intersection, outline_hull_profile, point, scalar

DENOMINATOR = 10**6
ANGLE_TOLERANCE = 1e-3


class CanonicalClass(enum.Enum):
    UNLINK3 = "Unlink3"
    BORROMEAN = "Borromean"
    HOPF_SPLIT = "HopfSplit"
    CHAIN3 = "Chain3"
    NECKLACE = "Necklace"


def _check(cond, what):
    if not cond:
        raise CertificationFailed(what)


def _sqrt_rational(num, den, bound=DENOMINATOR) -> Scalar:
    """floor(sqrt(num/den) * bound) / bound, computed in integers."""
    return Scalar(isqrt(num * bound * bound // den), bound)


def _cycle(p):
    # x -> y -> z -> x: the old x coordinate becomes the new y, and so on
    return point(p.z, p.x, p.y)


def _cycled(t):
    return Triangle(*map(_cycle, t))


def _hulls_disjoint(a, b):
    return filled_pair_intersection(a, b).kind is SetKind.EMPTY


def unlink3() -> Linking:
    base = Triangle.of((0, 0, 0), (2, 0, 0), (0, 2, 0))
    L = Linking(tuple(base.translated(point(10 * k, 0, 0)) for k in range(3)))
    _check(all(_hulls_disjoint(L[i], L[j]) for i, j in ((0, 1), (0, 2), (1, 2))),
           "unlink3: hulls not pairwise disjoint")
    return L


def borromean_certified(bound: int = DENOMINATOR) -> Linking:
    x = _sqrt_rational(4, 5, bound)   # 2/sqrt(5)
    y = _sqrt_rational(1, 10, bound)  # 1/sqrt(10)
    d1 = Triangle.of((1, 0, 0), (-x, y, 0), (-x, -y, 0))
    d2 = _cycled(d1)
    d3 = _cycled(d2)
    L = Linking((d1, d2, d3))
    _check(is_borromean(L), "borromean: rounded triple is not Borromean")
    _check(pairwise_parity_profile(L) == ParityProfile((0, 0, 0)),
           "borromean: parity profile is not {0,0,0}")
    return L


def _hopf_pair():
    a = Triangle.of((0, 0, 0), (4, 0, 0), (0, 4, 0))
    b = Triangle.of((1, 1, -1), (1, 1, 1), (-3, 1, 2))
    return a, b


def hopf_split() -> Linking:
    a, b = _hopf_pair()
    c = Triangle.of((0, 0, 0), (2, 0, 0), (0, 2, 0)).translated(point(100, 0, 0))
    L = Linking((a, b, c))
    _check(outline_hull_profile(b, a).count == 1, "hopf: outline does not cross once")
    _check(linking_parity(a, b) == 1, "hopf: pair not linked mod 2")
    _check(_hulls_disjoint(a, c) and _hulls_disjoint(b, c), "hopf: third hull not disjoint")
    return L


def chain3() -> Linking:
    center = Triangle.of((0, 0, 0), (8, 0, 0), (0, 8, 0))
    left = Triangle.of((2, -1, -1), (2, -1, 1), (2, 3, Scalar(1, 2)))
    right = Triangle.of((-1, 6, -1), (-1, 6, 1), (3, 6, Scalar(1, 2)))
    L = Linking((center, left, right))
    _check(_hulls_disjoint(left, right), "chain3: outer hulls intersect")
    for t in (left, right):
        _check(outline_hull_profile(center, t).count == 1,
               "chain3: central outline does not meet an outer hull once")
        _check(linking_parity(center, t) == 1, "chain3: outer triangle not linked")
    return L


def _rational_rotation(angle=math.pi / 3, bound=100):
    """cos/sin of a rational point on the unit circle near ``angle``."""
    t = scalar(Fraction(math.tan(angle / 2)).limit_denominator(bound))
    den = 1 + t * t
    c, s = (1 - t * t) / den, 2 * t / den
    if abs(math.atan2(s, c) - angle) > ANGLE_TOLERANCE:
        raise CertificationFailed("rotation angle outside tolerance")
    return c, s


def _rotate_about_vertical(p, cx, cy, c, s):
    dx, dy = p.x - cx, p.y - cy
    return point(cx + c * dx - s * dy, cy + s * dx + c * dy, p.z)


# Sideways shift applied with each step; it moves each apex off the next
# triangle's plane, which the unshifted construction hits exactly.
NECKLACE_SHIFT = Scalar(1, 50)


def necklace_rational() -> Linking:
    h = scalar(Fraction(math.sqrt(3)).limit_denominator(1000))
    # apex is v2, altitude foot is the origin, altitude along +z
    t = Triangle.of((-1, 0, 0), (1, 0, 0), (0, 0, h))
    c, s = _rational_rotation()
    tris = [t]
    for _ in range(2):
        apex = t.v2
        foot = point((t.v0.x + t.v1.x) / 2, (t.v0.y + t.v1.y) / 2, (t.v0.z + t.v1.z) / 2)
        step = point(NECKLACE_SHIFT, 0, (apex.z - foot.z) / 3)
        t = Triangle.of(*(
            _rotate_about_vertical(v, apex.x, apex.y, c, s) for v in t
        )).translated(step)
        tris.append(t)
    L = Linking(tuple(tris))
    _check(pairwise_parity_profile(L) == ParityProfile((1, 1, 1)),
           "necklace: parity profile is not {1,1,1}")
    return L


CONSTRUCTORS = {
    CanonicalClass.UNLINK3: unlink3,
    CanonicalClass.BORROMEAN: borromean_certified,
    CanonicalClass.HOPF_SPLIT: hopf_split,
    CanonicalClass.CHAIN3: chain3,
    CanonicalClass.NECKLACE: necklace_rational,
}

# CLI names
BY_NAME = {
    "unlink3": unlink3,
    "borromean": borromean_certified,
    "hopf-split": hopf_split,
    "chain3": chain3,
    "necklace": necklace_rational,
}
