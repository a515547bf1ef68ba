"""Elementary moves: validation, application and random generation."""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from itertools import combinations

from .errors import DisjointnessViolated, ExhaustedAttempts, InvalidMove, NonGeneric
from .invariants import Linking, linking_parity
from .kernel import Point3, Scalar, Triangle, add, cross, is_zero, point, scalar, segment_hull3, sub

DEFAULT_BUDGET = 256
DEFAULT_DENOMINATOR = 2**16


@dataclass(frozen=True)
class MoveSpec:
    """Replace vertex ``pivot`` (the C of ABC) of triangle ``target`` by ``new_apex``."""

    target: int
    pivot: int
    new_apex: Point3

    def __str__(self):
        a = self.new_apex
        return f"move {self.target} {self.pivot} {a.x} {a.y} {a.z}"

    def reverse(self, L) -> "MoveSpec":
        """The move that undoes this one when applied to its result."""
        return MoveSpec(self.target, self.pivot, L[self.target][self.pivot])


class Reason(enum.Enum):
    APEX_ON_LINE_AB = "ApexOnLineAB"
    SWEEP_HITS_OUTLINE = "SweepHitsOutline"
    RESULT_NOT_DISJOINT = "ResultNotDisjoint"


@dataclass(frozen=True)
class MoveVerdict:
    reason: Reason | None = None
    other: int | None = None

    @property
    def valid(self) -> bool:
        return self.reason is None

    def __str__(self):
        if self.valid:
            return "Valid"
        if self.other is not None:
            return f"Invalid({self.reason.value}({self.other}))"
        return f"Invalid({self.reason.value})"


VALID = MoveVerdict()


def _kept(tri, pivot):
    return [tri[i] for i in range(3) if i != pivot]


def validate_move(L: Linking, m: MoveSpec) -> MoveVerdict:
    if not (0 <= m.target < len(L) and 0 <= m.pivot < 3):
        raise IndexError(f"target/pivot out of range: {m.target}, {m.pivot}")
    tri = L[m.target]
    a, b = _kept(tri, m.pivot)
    c, c2 = tri[m.pivot], m.new_apex
    if is_zero(cross(sub(b, a), sub(c2, a))):
        return MoveVerdict(Reason.APEX_ON_LINE_AB)
    for k, other in enumerate(L):
        if k == m.target:
            continue
        for p, q in other.edges():
            if not segment_hull3(p, q, a, c, c2).empty or not segment_hull3(p, q, b, c, c2).empty:
                return MoveVerdict(Reason.SWEEP_HITS_OUTLINE, k)
    try:
        _moved(L, m)
    except DisjointnessViolated:
        return MoveVerdict(Reason.RESULT_NOT_DISJOINT)
    return VALID


def _moved(L, m):
    verts = list(L[m.target])
    verts[m.pivot] = m.new_apex
    return L.replace(m.target, Triangle(*verts))


def apply_move(L: Linking, m: MoveSpec) -> Linking:
    verdict = validate_move(L, m)
    if not verdict.valid:
        raise InvalidMove(str(verdict))
    return _moved(L, m)


def apply_moves(L: Linking, moves) -> Linking:
    for m in moves:
        L = apply_move(L, m)
    return L


def _offset(rng: random.Random, scale: Scalar, denominator: int):
    return point(*(Scalar(rng.randint(-denominator, denominator), denominator) * scale
                   for _ in range(3)))


def propose_move(L, rng, scale, budget=DEFAULT_BUDGET, denominator=DEFAULT_DENOMINATOR):
    """Rejection-sample a valid move; returns ``(spec, attempts)``."""
    scale = scalar(scale)
    for attempt in range(1, budget + 1):
        target = rng.randrange(len(L))
        pivot = rng.randrange(3)
        apex = add(L[target][pivot], _offset(rng, scale, denominator))
        m = MoveSpec(target, pivot, apex)
        if validate_move(L, m).valid:
            return m, attempt
    raise ExhaustedAttempts(f"no valid move found in {budget} attempts")


def random_move(L, rng, scale, budget=DEFAULT_BUDGET, denominator=DEFAULT_DENOMINATOR) -> MoveSpec:
    """A valid random move, deterministic given the state of ``rng``.

    ``rng`` is a :class:`random.Random` or an int seed.
    """
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    return propose_move(L, rng, scale, budget, denominator)[0]


def nongeneric_pairs(L) -> int:
    """Number of triangle pairs whose parity is undefined by counting."""
    bad = 0
    for i, j in combinations(range(len(L)), 2):
        try:
            linking_parity(L[i], L[j])
        except NonGeneric:
            bad += 1
    return bad


def perturb_to_generic(L, rng, scale, budget=DEFAULT_BUDGET):
    """Move ``L`` by valid elementary moves until every pairwise parity is defined.

    Returns ``(linking, moves)``; replaying ``moves`` from ``L`` reproduces
    ``linking``. A move is kept only if it reduces the number of degenerate
    pairs.
    """
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    bad = nongeneric_pairs(L)
    moves = []
    attempts = 0
    while bad:
        if attempts >= budget:
            raise ExhaustedAttempts(f"still {bad} non-generic pair(s) after {budget} attempts")
        m, used = propose_move(L, rng, scale, budget)
        attempts += used
        cand = _moved(L, m)
        cand_bad = nongeneric_pairs(cand)
        if cand_bad < bad:
            L, bad = cand, cand_bad
            moves.append(m)
    return L, moves
