import random
from itertools import permutations

import pytest
from gmpy2 import mpq

from trilink.errors import DisjointnessViolated, NonGeneric
from trilink.fuzz import random_linking
from trilink.invariants import (
    Linking,
    ParityProfile,
    is_borromean,
    is_borromean_reduced,
    linking_parity,
    pairwise_parity_profile,
)
from trilink.kernel import ProfileKind, Triangle, outline_hull_profile, point, point_strictly_inside

BIG = Triangle.of((0, 0, 0), (4, 0, 0), (0, 4, 0))


def test_linking_rejects_intersecting_outlines():
    with pytest.raises(DisjointnessViolated) as exc:
        Linking((BIG, Triangle.of((0, 0, 0), (-1, 0, 1), (0, -1, 1))))
    assert exc.value.pair == (0, 1)


def test_linking_size():
    with pytest.raises(ValueError):
        Linking((BIG,))


def test_parity_examples(canon):
    assert linking_parity(BIG, BIG.translated(point(100, 0, 0))) == 0
    a, b, _ = canon["hopf-split"]
    assert linking_parity(a, b) == 1
    L = canon["borromean"]
    for i, j in [(0, 1), (0, 2), (1, 2)]:
        assert linking_parity(L[i], L[j]) == 0


def test_parity_pierced_twice_is_zero():
    v = Triangle.of((1, 1, 1), (2, 1, -1), (3, 1, 1))
    assert outline_hull_profile(v, BIG).count == 2
    assert linking_parity(v, BIG) == 0


@pytest.mark.parametrize("tri, why", [
    (Triangle.of((1, 1, 0), (1, 2, 2), (2, 1, 2)), "vertex"),
    (Triangle.of((1, 1, 0), (2, 1, 0), (1, 1, 3)), "edge"),
])
def test_parity_non_generic(tri, why):
    with pytest.raises(NonGeneric):
        linking_parity(tri, BIG)
    with pytest.raises(NonGeneric):
        linking_parity(BIG, tri)


def test_boundary_crossing_means_outlines_meet():
    # a crossing on the boundary of <BIG> touches BIG's outline
    with pytest.raises(DisjointnessViolated):
        linking_parity(Triangle.of((2, 2, -1), (2, 2, 1), (-3, 1, 2)), BIG)


def test_profile_examples(canon):
    assert pairwise_parity_profile(canon["unlink3"]) == ParityProfile((0, 0, 0))
    assert pairwise_parity_profile(canon["chain3"]) == ParityProfile((1, 1, 0))
    assert pairwise_parity_profile(canon["necklace"]) == ParityProfile((1, 1, 1))
    assert str(ParityProfile.of([0, 1, 0])) == "{1,0,0}"


def test_profile_names_offending_pair():
    far = BIG.translated(point(100, 0, 0))
    L = Linking((far, BIG, Triangle.of((1, 1, 0), (1, 2, 2), (2, 1, 2))))
    with pytest.raises(NonGeneric) as exc:
        pairwise_parity_profile(L)
    assert exc.value.pair == (1, 2)


def test_borromean_examples(canon):
    assert is_borromean(canon["borromean"])
    assert not is_borromean(canon["unlink3"])
    assert not is_borromean(canon["hopf-split"])
    assert is_borromean_reduced(canon["borromean"])
    assert not is_borromean_reduced(canon["unlink3"])


def test_reduced_enumeration_has_empty_reverse(canon):
    # enumeration (l0, l1, l2) = (L2, L0, L1): d(L0) & <L1> and d(L1) & <L2>
    # have two points each, and d(L0) & <L2> must be empty
    L = canon["borromean"]
    assert outline_hull_profile(L[0], L[1]).count == 2
    assert outline_hull_profile(L[1], L[2]).count == 2
    assert outline_hull_profile(L[0], L[2]).kind is ProfileKind.EMPTY


def test_reindexing_invariance(canon):
    for L in canon.values():
        ref = (pairwise_parity_profile(L), is_borromean(L), is_borromean_reduced(L))
        for order in permutations(range(3)):
            M = L.reordered(order)
            assert (pairwise_parity_profile(M), is_borromean(M), is_borromean_reduced(M)) == ref


def _generic_pairs(n, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        L = random_linking(rng, n=2)
        try:
            linking_parity(L[0], L[1])
        except NonGeneric:
            continue
        out.append(L)
    return out


def test_parity_symmetric_sample():
    pairs = _generic_pairs(200, seed=4)
    values = [linking_parity(a, b) for a, b in pairs]
    assert values == [linking_parity(b, a) for a, b in pairs]
    assert 0 < sum(values) < len(values)


def test_parity_is_profile_count_mod_two():
    for a, b in _generic_pairs(200, seed=5):
        prof = outline_hull_profile(a, b)
        count = prof.count
        assert all(point_strictly_inside(x, b) for x in prof.points)
        assert linking_parity(a, b) == count % 2


def test_bordef_equivalence_on_random_triples():
    rng = random.Random(6)
    for _ in range(100):
        L = random_linking(rng)
        assert is_borromean(L) == is_borromean_reduced(L)


def test_borromean_implies_reduced(canon):
    base = canon["borromean"]
    shrink = Linking(tuple(Triangle(*(point(*(c * mpq(9, 10) for c in v)) for v in t)) for t in base))
    assert is_borromean(shrink) and is_borromean_reduced(shrink)
