"""Isotopy class labels for linkings of two and three triangles."""
from __future__ import annotations

import enum

from .errors import NonGeneric
from .invariants import ParityProfile, is_borromean, linking_parity, pairwise_parity_profile


class ClassLabel2(enum.Enum):
    SPLIT = "Split"
    HOPF = "Hopf"
    NON_GENERIC = "NonGeneric"


class ClassLabel3(enum.Enum):
    BORROMEAN = "Borromean"
    HOPF_SPLIT = "HopfSplit"
    CHAIN3 = "Chain3"
    NECKLACE = "Necklace"
    # Unlink3 exactly when the five-class conjecture holds; never claimed outright.
    ZERO_PROFILE_NON_BORROMEAN = "ZeroProfileNonBorromean"
    NON_GENERIC = "NonGeneric"


_BY_PROFILE = {
    (1, 0, 0): ClassLabel3.HOPF_SPLIT,
    (1, 1, 0): ClassLabel3.CHAIN3,
    (1, 1, 1): ClassLabel3.NECKLACE,
}


def classify2(a, b) -> ClassLabel2:
    try:
        return ClassLabel2.HOPF if linking_parity(a, b) else ClassLabel2.SPLIT
    except NonGeneric:
        return ClassLabel2.NON_GENERIC


def classify3(L) -> ClassLabel3:
    try:
        profile = pairwise_parity_profile(L)
    except NonGeneric:
        return ClassLabel3.NON_GENERIC
    if profile.values in _BY_PROFILE:
        return _BY_PROFILE[profile.values]
    return ClassLabel3.BORROMEAN if is_borromean(L) else ClassLabel3.ZERO_PROFILE_NON_BORROMEAN


def signature(L):
    """(parity profile, is_borromean) for a three-triangle linking."""
    return pairwise_parity_profile(L), is_borromean(L)


def describe(label) -> str:
    if label is ClassLabel3.ZERO_PROFILE_NON_BORROMEAN:
        return f"{label.value} (Unlink3 under Conjecture)"
    return label.value


__all__ = ["ClassLabel2", "ClassLabel3", "ParityProfile", "classify2", "classify3", "describe", "signature"]
