"""Pointed matroids with strong maps: minors, Hall and minor Hopf algebras, K0."""

from .canon import (
    IsoClass,
    automorphisms,
    canonical_form,
    catalog_upto,
    enumerate_matroids,
    find_isomorphism,
    is_isomorphic,
)
from .category import (
    ExactSequence,
    MorphismClass,
    Square,
    StrongMap,
    Tag,
    check_strong,
    classify,
    complete_pullback,
    complete_pushout,
    exact_sequences,
    lemma_square,
    verify_proto_exact,
)
from .errors import MatroidError, ParseError, ValidationError
from .hall import HallElement, delta, structure_constant
from .kth import FlagGrid, K0Class, decompose, degeneracy, face, flags, k0_class
from .matroid import (
    BASEPOINT,
    GroundSet,
    PointedMatroid,
    closure,
    cocircuits,
    components,
    contract,
    direct_sum,
    free_matroid,
    from_bases,
    from_flats,
    from_graph,
    rank,
    restrict,
    uniform,
    zero_matroid,
)
from .schmitt import MMElement, antipode, duality_check, mm_coproduct, mm_product

__all__ = [
    "BASEPOINT",
    "ExactSequence",
    "FlagGrid",
    "GroundSet",
    "HallElement",
    "IsoClass",
    "K0Class",
    "MMElement",
    "MatroidError",
    "MorphismClass",
    "ParseError",
    "PointedMatroid",
    "Square",
    "StrongMap",
    "Tag",
    "ValidationError",
    "antipode",
    "automorphisms",
    "canonical_form",
    "catalog_upto",
    "check_strong",
    "classify",
    "closure",
    "cocircuits",
    "complete_pullback",
    "complete_pushout",
    "components",
    "contract",
    "decompose",
    "degeneracy",
    "delta",
    "direct_sum",
    "duality_check",
    "enumerate_matroids",
    "exact_sequences",
    "face",
    "find_isomorphism",
    "flags",
    "free_matroid",
    "from_bases",
    "from_flats",
    "from_graph",
    "is_isomorphic",
    "k0_class",
    "lemma_square",
    "mm_coproduct",
    "mm_product",
    "rank",
    "restrict",
    "structure_constant",
    "uniform",
    "verify_proto_exact",
    "zero_matroid",
]
