"""First Baues-Wirsching cohomology of free categories on finite quivers."""

from ._bwcoh import (
    DocumentError,
    Quiver,
    QuiverRep,
    check_equivalence,
    fuzz,
    gen_example,
    h1,
    matrices,
    oracle_h1,
    partition,
    regular_rep,
    validate_partition,
)

__all__ = [
    "DocumentError",
    "Quiver",
    "QuiverRep",
    "check_equivalence",
    "fuzz",
    "gen_example",
    "h1",
    "matrices",
    "oracle_h1",
    "partition",
    "regular_rep",
    "validate_partition",
]
