"""Matroids as submodules of Boolean coordinate spaces.

A vector over the Boolean semifield is a bitmask over the ground indices
(join is bitwise or).  ``L(M)`` is the join-span of the cocircuit support
vectors; its elements are exactly the complements of the flats.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bits import bits, compress
from .category import index_map
from .errors import AmbientMismatch, BoundExceeded, SubsetContainsBasepoint, SubsetOutOfRange
from .matroid import GroundSet, PointedMatroid, cocircuits, contract, restrict

MAX_GENERATORS = 20


@dataclass(frozen=True)
class BVector:
    ambient: GroundSet
    mask: int

    def __post_init__(self):
        if self.mask & ~self.ambient.full:
            raise SubsetOutOfRange("vector has coordinates outside its ambient set")

    def __or__(self, other):
        if other.ambient != self.ambient:
            raise AmbientMismatch("vectors live in different ambient sets")
        return BVector(self.ambient, self.mask | other.mask)

    def __str__(self):
        return "".join(str(self.mask >> i & 1) for i in range(len(self.ambient)))


@dataclass(frozen=True)
class BSubmodule:
    ambient: GroundSet
    elements: frozenset

    def __contains__(self, v):
        return (v.mask if isinstance(v, BVector) else v) in self.elements

    def __len__(self):
        return len(self.elements)

    def __le__(self, other):
        return self.ambient == other.ambient and self.elements <= other.elements

    def vectors(self):
        return [BVector(self.ambient, v) for v in sorted(self.elements)]

    def dump(self):
        """One element per line as a 0/1 string in ground order."""
        width = len(self.ambient)
        rows = ["".join(str(v >> i & 1) for i in range(width)) for v in self.elements]
        return "\n".join(sorted(rows))


def _join_closure(masks):
    out = {0}
    for g in masks:
        out |= {e | g for e in out}
    return frozenset(out)


def span(generators, ambient=None):
    """All joins of subsets of ``generators`` (masks or :class:`BVector`)."""
    masks = []
    for g in generators:
        if isinstance(g, BVector):
            if ambient is None:
                ambient = g.ambient
            elif g.ambient != ambient:
                raise AmbientMismatch("generators live in different ambient sets")
            masks.append(g.mask)
        else:
            masks.append(int(g))
    if ambient is None:
        raise AmbientMismatch("an ambient ground set is required")
    if not isinstance(ambient, GroundSet):
        ambient = GroundSet(tuple(ambient))
    if any(m & ~ambient.full for m in masks):
        raise SubsetOutOfRange("generator has coordinates outside the ambient set")
    masks = sorted(set(masks))
    if len(masks) > MAX_GENERATORS:
        raise BoundExceeded(f"{len(masks)} generators exceed the join-closure limit")
    return BSubmodule(ambient, _join_closure(masks))


def L(M):
    return span(cocircuits(M), M.ground)


def _ambient_subset(Lm, S):
    if isinstance(S, int):
        if S & ~Lm.ambient.full:
            raise SubsetOutOfRange("subset outside the ambient set")
        return S
    return Lm.ambient.mask(S)


def project(Lm, S):
    """Coordinate projection onto ``S`` (the basepoint coordinate is always kept)."""
    keep = _ambient_subset(Lm, S) | 1
    ground = GroundSet(Lm.ambient.labels_of(keep))
    return BSubmodule(ground, frozenset(compress(v, keep) for v in Lm.elements))


def coordinate_section(Lm, S):
    """Elements vanishing on ``S``, re-ambiented to the complement of ``S``."""
    S = _ambient_subset(Lm, S)
    if S & 1:
        raise SubsetContainsBasepoint("cannot section along the basepoint coordinate")
    keep = Lm.ambient.full & ~S
    ground = GroundSet(Lm.ambient.labels_of(keep))
    return BSubmodule(ground, frozenset(compress(v, keep) for v in Lm.elements if not v & S))


def pull_back_vector(images, v):
    """``(f^v)_j = v_{f(j)}`` for an index map ``images``."""
    out = 0
    for j, y in enumerate(images):
        if v >> y & 1:
            out |= 1 << j
    return out


def dual_strong_check(f, N, M):
    """Whether the pointed map ``f: E_N -> E_M`` is strong, via ``f^v(L_M) <= L_N``."""
    images = index_map(f, N, M)
    if images[0] != 0:
        return False
    LN = L(N).elements
    return all(pull_back_vector(images, v) in LN for v in L(M).elements)


def verify_minor_correspondence(M, S):
    S = M.mask(S)
    LM = L(M)
    ok_restrict = L(restrict(M, S)) == project(LM, S | 1)
    ok_contract = L(contract(M, S)) == coordinate_section(LM, S)
    return ok_restrict and ok_contract


def matroid_of(Lm):
    """Recover the matroid: its flats are the complements of the module elements."""
    full = Lm.ambient.full
    return PointedMatroid(Lm.ambient, frozenset(full & ~v for v in Lm.elements))


def support_labels(Lm, v):
    return [Lm.ambient.labels[i] for i in bits(v)]
