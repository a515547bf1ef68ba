"""Linking type, pairwise linking parity and the Borromean predicates."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import DisjointnessViolated, NonGeneric
from .kernel import (
    ProfileKind,
    SetKind,
    Triangle,
    dot,
    outline_hull_profile,
    outlines_intersect,
    point_strictly_inside,
    segment_filled_triangle,
    sub,
    triple_common_point,
)


@dataclass(frozen=True)
class Linking:
    """Two or three non-degenerate triangles with pairwise disjoint outlines."""

    triangles: tuple

    def __post_init__(self):
        tris = tuple(t if isinstance(t, Triangle) else Triangle.of(*t) for t in self.triangles)
        object.__setattr__(self, "triangles", tris)
        if len(tris) not in (2, 3):
            raise ValueError(f"a linking has 2 or 3 triangles, got {len(tris)}")
        for i, j in combinations(range(len(tris)), 2):
            if outlines_intersect(tris[i], tris[j]):
                raise DisjointnessViolated(f"outlines of triangles {i} and {j} intersect", (i, j))

    def __len__(self):
        return len(self.triangles)

    def __getitem__(self, i):
        return self.triangles[i]

    def __iter__(self):
        return iter(self.triangles)

    def replace(self, index, tri) -> "Linking":
        tris = list(self.triangles)
        tris[index] = tri
        return Linking(tuple(tris))

    def reordered(self, order) -> "Linking":
        return Linking(tuple(self.triangles[i] for i in order))


def _crossings(a, b):
    """Count transversal crossings of the outline of a with the open filled b.

    Raises NonGeneric on any contact that is not a transversal interior crossing.
    """
    n = b.normal
    count = 0
    for p, q in a.edges():
        hit = segment_filled_triangle((p, q), b)
        if hit.empty:
            continue
        if hit.kind is SetKind.SEGMENT:
            raise NonGeneric("an edge lies in the other triangle's plane and meets its hull")
        dp = dot(n, sub(p, b.v0))
        dq = dot(n, sub(q, b.v0))
        if dp == 0 or dq == 0:
            raise NonGeneric("a vertex lies in the other triangle's filled hull")
        if not point_strictly_inside(hit.points[0], b):
            raise NonGeneric("a crossing lies on the other triangle's boundary")
        count += 1
    return count


def is_generic_pair(a, b) -> bool:
    try:
        _crossings(a, b)
        _crossings(b, a)
    except NonGeneric:
        return False
    return True


def linking_parity(a, b) -> int:
    """Linking coefficient mod 2 of two disjoint triangles.

    Counts crossings of the outline of ``a`` with ``<b>``; the reverse
    direction is only checked for genericity, so swapping the arguments
    evaluates the count independently.
    """
    if outlines_intersect(a, b):
        raise DisjointnessViolated("triangle outlines intersect")
    count = _crossings(a, b)
    _crossings(b, a)
    return count % 2


@dataclass(frozen=True)
class ParityProfile:
    """Multiset of the three pairwise parities, stored in descending order."""

    values: tuple

    @classmethod
    def of(cls, values) -> "ParityProfile":
        return cls(tuple(sorted(values, reverse=True)))

    def __str__(self):
        return "{" + ",".join(map(str, self.values)) + "}"


def pairwise_parities(L):
    """Parity of each pair (i, j), i < j, keyed by the pair."""
    out = {}
    for i, j in combinations(range(len(L)), 2):
        try:
            out[(i, j)] = linking_parity(L[i], L[j])
        except NonGeneric as exc:
            raise NonGeneric(f"pair ({i}, {j}): {exc}", (i, j)) from exc
    return out


def pairwise_parity_profile(L) -> ParityProfile:
    if len(L) != 3:
        raise ValueError("parity profile is defined for three triangles")
    return ParityProfile.of(pairwise_parities(L).values())


def _profile_counts(L):
    """Point count of each directed outline/hull profile; None when infinite."""
    return {
        (i, j): outline_hull_profile(L[i], L[j]).count
        for i in range(3)
        for j in range(3)
        if i != j
    }


def is_borromean(L) -> bool:
    """Common point of all three hulls plus a cyclic order with two-point profiles."""
    if len(L) != 3:
        raise ValueError("the Borromean property is defined for three triangles")
    counts = _profile_counts(L)
    cyclic = any(
        all(counts[(o[j], o[(j + 1) % 3])] == 2 for j in range(3))
        for o in permutations(range(3))
    )
    return cyclic and triple_common_point(L[0], L[1], L[2])


def is_borromean_reduced(L) -> bool:
    """Reduced criterion: some enumeration (l0, l1, l2) with
    |d(l1) & <l2>| = 2, |d(l2) & <l0>| = 2, d(l1) & <l0> empty, and a common point.
    """
    if len(L) != 3:
        raise ValueError("the Borromean property is defined for three triangles")
    counts = _profile_counts(L)
    found = any(
        counts[(l1, l2)] == 2 and counts[(l2, l0)] == 2 and counts[(l1, l0)] == 0
        for l0, l1, l2 in permutations(range(3))
    )
    return found and triple_common_point(L[0], L[1], L[2])


def profile_is_clean(L) -> bool:
    """True when every directed profile is a finite point set."""
    return all(c is not None for c in _profile_counts(L).values())


__all__ = [
    "Linking",
    "ParityProfile",
    "ProfileKind",
    "is_borromean",
    "is_borromean_reduced",
    "is_generic_pair",
    "linking_parity",
    "pairwise_parities",
    "pairwise_parity_profile",
    "profile_is_clean",
]
