"""Acceptance criteria, one test each. Every test prints a single PASS/FAIL line."""
import random
import time
from contextlib import contextmanager
from importlib import resources
from itertools import combinations

import numpy as np

from conftest import ACCEPTANCE_LINES, segment_triangle_instances
from oracles import segment_triangle_oracle
from trilink import canonical
from trilink.classifier import ClassLabel2, classify2, classify3
from trilink.errors import NonGeneric
from trilink.fileformat import parse_linking, serialize_linking
from trilink.fuzz import random_linking, run_bordef_equivalence, run_isotopy_fuzz
from trilink.invariants import ParityProfile, is_borromean, linking_parity, pairwise_parity_profile
from trilink.kernel import Triangle, outline_hull_profile, point, segment_filled_triangle

FUZZ_MOVES = 500


@contextmanager
def criterion(number, title):
    detail = {}
    t0 = time.perf_counter()
    try:
        yield detail
    except BaseException:
        line = f"[FAIL] {number}. {title}"
        raise
    else:
        line = f"[PASS] {number}. {title}"
    finally:
        extra = " ".join(f"{k}={v}" for k, v in detail.items())
        line = f"{line} ({time.perf_counter() - t0:.2f}s) {extra}".rstrip()
        ACCEPTANCE_LINES.append(line)
        print(line)


def test_1_canonical_separation():
    with criterion(1, "canonical separation") as d:
        t0 = time.perf_counter()
        sigs, labels = {}, {}
        for name, ctor in canonical.BY_NAME.items():
            L = ctor()
            sigs[name] = (pairwise_parity_profile(L), is_borromean(L))
            labels[name] = classify3(L)
        elapsed = time.perf_counter() - t0
        assert sigs == {
            "unlink3": (ParityProfile((0, 0, 0)), False),
            "borromean": (ParityProfile((0, 0, 0)), True),
            "hopf-split": (ParityProfile((1, 0, 0)), False),
            "chain3": (ParityProfile((1, 1, 0)), False),
            "necklace": (ParityProfile((1, 1, 1)), False),
        }
        assert len(set(sigs.values())) == 5
        assert len(set(labels.values())) == 5
        d["labels"] = ",".join(l.value for l in labels.values())
        assert elapsed < 1.0, elapsed


def test_2_borromean_invariance():
    with criterion(2, "Borromean invariance over 500 moves") as d:
        t0 = time.perf_counter()
        r = run_isotopy_fuzz(canonical.borromean_certified(), FUZZ_MOVES, seed=2)
        elapsed = time.perf_counter() - t0
        generic = [s for s in r.steps if s["generic"]]
        d.update(accepted=r.accepted, generic=len(generic), violations=len(r.violations))
        assert r.error is None
        assert r.accepted == FUZZ_MOVES
        assert all(s["borromean"] is True and s["parity"] == "{0,0,0}" for s in generic)
        assert r.ok
        assert elapsed < 60, elapsed


def test_3_parity_invariance():
    with criterion(3, "parity invariance over 500 moves from the other constructors") as d:
        total = 0
        for name in ("unlink3", "hopf-split", "chain3", "necklace"):
            L = canonical.BY_NAME[name]()
            expected = str(pairwise_parity_profile(L))
            r = run_isotopy_fuzz(L, FUZZ_MOVES, seed=3)
            assert r.error is None and r.accepted == FUZZ_MOVES, name
            assert all(s["parity"] == expected for s in r.steps if s["generic"]), name
            assert r.ok, name
            total += len(r.violations)
        d["violations"] = total


def test_4_bordef_equivalence():
    with criterion(4, "reduced Borromean test agrees with the full definition") as d:
        r = run_bordef_equivalence(1000, seed=4)
        compared = sum(1 for s in r.steps if s["generic"])
        positives = sum(1 for s in r.steps if s.get("borromean"))
        d.update(trials=r.attempted, compared=compared, borromean=positives,
                 discrepancies=len(r.violations))
        assert r.attempted >= 1000
        assert compared >= 1000 - r.skipped and compared > 0
        assert 0 < positives < compared
        assert r.ok


def _as_float(rows):
    return np.array([[float(c) for c in v] for v in rows])


def test_5_kernel_oracle_agreement():
    with criterion(5, "segment/filled-triangle agrees with the float oracle") as d:
        inst = segment_triangle_instances(10_000, seed=5)
        hits, _, sep = segment_triangle_oracle(
            _as_float([i[0] for i in inst]), _as_float([i[1] for i in inst]),
            *(_as_float([i[2][k] for i in inst]) for k in range(3)))
        confident = sep > 1e-6
        agree = 0
        for (p, q, t), h, c in zip(inst, hits, confident):
            if c:
                agree += (not segment_filled_triangle((p, q), t).empty) == bool(h)
        n = int(confident.sum())
        d.update(instances=len(inst), confident=n, agreement=f"{agree}/{n}",
                 hits=int(hits[confident].sum()))
        assert n >= 9000
        assert agree == n


def test_6_parity_symmetry():
    with criterion(6, "parity and classify2 are symmetric") as d:
        rng = random.Random(6)
        checked = odd = 0
        while checked < 1000:
            a, b = random_linking(rng, n=2)
            try:
                ab = linking_parity(a, b)
            except NonGeneric:
                continue
            assert ab == linking_parity(b, a)
            assert classify2(a, b) is classify2(b, a)
            checked += 1
            odd += ab
        d.update(pairs=checked, hopf=odd)
        assert 0 < odd < checked


def test_7_two_triangle_labels():
    with criterion(7, "Hopf and split labels on two triangles"):
        a, b, _ = canonical.hopf_split()
        assert outline_hull_profile(b, a).count == 1
        assert classify2(a, b) is ClassLabel2.HOPF
        big = Triangle.of((0, 0, 0), (4, 0, 0), (0, 4, 0))
        assert classify2(big, big.translated(point(50, 0, 0))) is ClassLabel2.SPLIT
        twice = Triangle.of((1, 1, 1), (2, 1, -1), (3, 1, 1))
        assert outline_hull_profile(twice, big).count == 2
        assert classify2(twice, big) is ClassLabel2.SPLIT


def test_8_determinism_and_roundtrip():
    with criterion(8, "byte-identical reports and fixture round-trip") as d:
        L = canonical.borromean_certified()
        assert run_isotopy_fuzz(L, 100, seed=8).to_json() == run_isotopy_fuzz(L, 100, seed=8).to_json()
        assert run_bordef_equivalence(50, seed=8).to_json() == run_bordef_equivalence(50, seed=8).to_json()
        fixtures = resources.files("trilink").joinpath("fixtures")
        names = sorted(f.name for f in fixtures.iterdir() if f.name.endswith(".lnk"))
        for name in names:
            text = fixtures.joinpath(name).read_text()
            assert serialize_linking(parse_linking(text)) == text, name
        d["fixtures"] = len(names)
        assert len(names) == 5
