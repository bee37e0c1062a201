"""Resource caps for the exponential enumerations."""

import os
from dataclasses import dataclass, replace

ENV_MAX_ENUM = "TORICBUNCH_MAX_ENUM"


@dataclass(frozen=True)
class Limits:
    """Caps guarding exponential searches.

    Attributes:
      max_faces: largest face lattice (or subset scan) we are willing to walk.
      max_enum: largest number of distinct projected faces (resp. faces of
        delta) fed into bunch or projectable-fan enumeration.
      max_verify_rank: largest rank of E accepted by bunch verification.
      max_iso_candidates: largest number of candidate maps tried by the
        free-bunch isomorphism search.
    """

    max_faces: int = 2**16
    max_enum: int = 24
    max_verify_rank: int = 16
    max_iso_candidates: int = 200_000


def default_limits() -> Limits:
    """Defaults, with TORICBUNCH_MAX_ENUM honoured when set."""
    limits = Limits()
    raw = os.environ.get(ENV_MAX_ENUM)
    if raw:
        limits = replace(limits, max_enum=int(raw))
    return limits


def resolve(limits):
    return default_limits() if limits is None else limits
