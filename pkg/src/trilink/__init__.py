"""Exact invariants of linkings of two and three triangles in 3-space."""
from .canonical import borromean_certified, chain3, hopf_split, necklace_rational, unlink3
from .classifier import ClassLabel2, ClassLabel3, classify2, classify3
from .errors import (
    CertificationFailed,
    DegenerateTriangle,
    DisjointnessViolated,
    ExhaustedAttempts,
    InvalidMove,
    NonGeneric,
    ParseError,
    ValidationError,
)
from .fileformat import parse_linking, serialize_linking
from .invariants import (
    Linking,
    ParityProfile,
    is_borromean,
    is_borromean_reduced,
    linking_parity,
    pairwise_parity_profile,
)
from .kernel import Point3, Triangle, point
from .moves import MoveSpec, apply_move, perturb_to_generic, random_move, validate_move

__version__ = "0.1.0"
