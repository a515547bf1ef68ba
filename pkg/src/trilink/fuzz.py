"""Randomized checks that the invariants survive elementary moves.

Reports serialize deterministically: the same seed and parameters give the
same bytes. Wall time is kept out of the serialized form unless asked for.
"""
from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field

from . import canonical
from .classifier import classify2, classify3
from .errors import DegenerateTriangle, DisjointnessViolated, ExhaustedAttempts, NonGeneric
from .invariants import (
    Linking,
    is_borromean,
    is_borromean_reduced,
    linking_parity,
    pairwise_parity_profile,
    profile_is_clean,
)
from .kernel import Scalar, Triangle, add, point, scalar
from .moves import DEFAULT_BUDGET, apply_move, perturb_to_generic, propose_move

DEFAULT_MOVES = 500
DEFAULT_TRIALS = 1000
DEFAULT_SCALE = Scalar(1, 4)


@dataclass
class FuzzReport:
    kind: str
    seed: int
    params: dict
    start_label: str | None = None
    attempted: int = 0
    accepted: int = 0
    skipped: int = 0
    steps: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    error: str | None = None
    wall_time: float | None = None

    @property
    def first_violation(self):
        return self.violations[0] if self.violations else None

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self, include_timing=False):
        d = asdict(self)
        d["first_violation"] = self.first_violation
        if not include_timing:
            d.pop("wall_time")
        return d

    def to_json(self, include_timing=False) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2, sort_keys=True)


def _invariants(L):
    """Invariant record of L, or None when a parity is undefined."""
    try:
        if len(L) == 2:
            return {"parity": linking_parity(L[0], L[1])}
        return {"parity": str(pairwise_parity_profile(L)), "borromean": is_borromean(L)}
    except NonGeneric:
        return None


def _label(L):
    return (classify2(L[0], L[1]) if len(L) == 2 else classify3(L)).value


def run_isotopy_fuzz(L0, n_moves=DEFAULT_MOVES, seed=0, scale=DEFAULT_SCALE,
                     budget=DEFAULT_BUDGET) -> FuzzReport:
    """Apply ``n_moves`` random valid moves and compare invariants with the start."""
    t0 = time.perf_counter()
    scale = scalar(scale)
    rng = random.Random(seed)
    report = FuzzReport("isotopy", seed, {"moves": n_moves, "scale": str(scale), "budget": budget},
                        start_label=_label(L0))
    reference = None

    def record(step, L, move=None, attempts=None):
        nonlocal reference
        inv = _invariants(L)
        entry = {"step": step, "move": None if move is None else str(move), "attempts": attempts,
                 "generic": inv is not None}
        if inv is None:
            report.skipped += 1
        else:
            entry.update(inv)
            if reference is None:
                reference = inv
            elif inv != reference:
                report.violations.append({"step": step, "expected": reference, "found": inv})
        report.steps.append(entry)

    L = L0
    record(0, L)
    step = 0
    try:
        for step in range(1, n_moves + 1):
            m, used = propose_move(L, rng, scale, budget)
            report.attempted += used
            L = apply_move(L, m)
            report.accepted += 1
            record(step, L, m, used)
        if not report.steps[-1]["generic"]:
            _, extra = perturb_to_generic(L, rng, scale, budget)
            for m in extra:
                step += 1
                L = apply_move(L, m)
                report.accepted += 1
                record(step, L, m)
                report.steps[-1]["perturbation"] = True
    except ExhaustedAttempts as exc:
        report.error = f"ExhaustedAttempts at step {step}: {exc}"
    report.wall_time = time.perf_counter() - t0
    return report


def random_triangle(rng, extent=1, denominator=64):
    while True:
        pts = [point(*(Scalar(rng.randint(-extent * denominator, extent * denominator), denominator)
                       for _ in range(3))) for _ in range(3)]
        try:
            return Triangle.of(*pts)
        except DegenerateTriangle:
            continue


def random_linking(rng, n=3, extent=1, denominator=64) -> Linking:
    """Random triangles in a box, resampled until the outlines are disjoint."""
    while True:
        try:
            return Linking(tuple(random_triangle(rng, extent, denominator) for _ in range(n)))
        except DisjointnessViolated:
            continue


def jittered(L, rng, amount, denominator=1024):
    """Every vertex of L moved by a random offset; resampled until the outlines are disjoint."""
    while True:
        tris = []
        try:
            for t in L:
                tris.append(Triangle.of(*(add(v, point(*(
                    Scalar(rng.randint(-denominator, denominator), denominator) * amount
                    for _ in range(3)))) for v in t)))
            return Linking(tuple(tris))
        except (DegenerateTriangle, DisjointnessViolated):
            continue


def _bordef_candidates(trials, rng, scale, budget):
    """Yield (source, linking): the constructors, then random triples, fuzz
    descendants and jittered Borromean triples in rotation."""
    chains = {c.value: ctor() for c, ctor in canonical.CONSTRUCTORS.items()}
    names = list(chains)
    for name in names:
        if trials <= 0:
            return
        trials -= 1
        yield name, chains[name]
    borromean = chains[canonical.CanonicalClass.BORROMEAN.value]
    i = 0
    while trials > 0:
        if i % 3 == 0:
            yield "random", random_linking(rng)
        elif i % 3 == 1:
            # straddles the boundary of the Borromean region
            yield "borromean-jitter", jittered(borromean, rng, Scalar(1, 2 ** rng.randint(1, 5)))
        else:
            name = names[(i // 3) % len(names)]
            L = chains[name]
            for _ in range(rng.randint(1, 3)):
                m, _ = propose_move(L, rng, scale, budget)
                L = apply_move(L, m)
            chains[name] = L
            yield f"{name}-descendant", L
        i += 1
        trials -= 1


def run_bordef_equivalence(trials=DEFAULT_TRIALS, seed=0, scale=DEFAULT_SCALE,
                           budget=DEFAULT_BUDGET) -> FuzzReport:
    """Compare the full and reduced Borromean predicates on generated triples."""
    t0 = time.perf_counter()
    scale = scalar(scale)
    rng = random.Random(seed)
    report = FuzzReport("bordef", seed, {"trials": trials, "scale": str(scale), "budget": budget})
    try:
        for k, (source, L) in enumerate(_bordef_candidates(trials, rng, scale, budget)):
            report.attempted += 1
            if not profile_is_clean(L) or _invariants(L) is None:
                report.skipped += 1
                report.steps.append({"trial": k, "source": source, "generic": False})
                continue
            full, reduced = is_borromean(L), is_borromean_reduced(L)
            report.accepted += 1
            report.steps.append({"trial": k, "source": source, "generic": True,
                                 "borromean": full, "reduced": reduced})
            if full != reduced:
                report.violations.append({"trial": k, "source": source, "borromean": full,
                                          "reduced": reduced,
                                          "linking": [[str(v) for v in t] for t in L]})
    except ExhaustedAttempts as exc:
        report.error = f"ExhaustedAttempts: {exc}"
    report.wall_time = time.perf_counter() - t0
    return report
