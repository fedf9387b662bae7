"""Canonical labelling, isomorphism search and exhaustive enumeration."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import permutations, product

from .bits import bits, permute, popcount
from .errors import BoundExceeded, ExchangeViolated
from .matroid import (
    BASEPOINT,
    GroundSet,
    PointedMatroid,
    direct_sum,
    free_matroid,
    from_bases,
    uniform,
)

log = logging.getLogger(__name__)

DEFAULT_BOUND = 6
HARD_BOUND = 7


@dataclass(frozen=True, order=True)
class IsoClass:
    """Isomorphism class of pointed matroids.

    ``canon`` lists the flats as masks over the non-basepoint elements
    (bit ``i`` is element ``i + 1``), sorted ascending, in the canonical
    labelling.
    """

    degree: int
    canon: tuple
    k0: tuple = field(compare=False, default=None)

    def __post_init__(self):
        if self.k0 is None:
            M = self.matroid
            object.__setattr__(self, "k0", (M.rank, M.corank))

    @cached_property
    def matroid(self):
        """Representative on labels ``*, 1, ..., degree``."""
        ground = GroundSet((BASEPOINT, *(str(i) for i in range(1, self.degree + 1))))
        return PointedMatroid(ground, frozenset((F << 1) | 1 for F in self.canon))

    @property
    def rank(self):
        return self.k0[0]

    @property
    def hex(self):
        out = bytes([self.degree]) + b"".join(F.to_bytes(2, "big") for F in self.canon)
        return out.hex()

    @classmethod
    def from_hex(cls, text):
        raw = bytes.fromhex(text)
        if not raw or (len(raw) - 1) % 2:
            raise ValueError(f"bad canonical encoding {text!r}")
        canon = tuple(
            int.from_bytes(raw[i:i + 2], "big") for i in range(1, len(raw), 2)
        )
        return cls(raw[0], canon)

    def __repr__(self):
        return f"IsoClass({self.degree}, {self.hex})"


def _tilde_flats(M):
    return tuple(sorted(F >> 1 for F in M.flats))


def element_colours(n, flats):
    """Iterated colour refinement of the elements ``0..n-1``.

    Colours are small integers assigned in the sorted order of an
    isomorphism-invariant signature, so the result depends only on the
    isomorphism type.
    """
    ranks = _lattice_heights(flats)
    members = {F: bits(F) for F in flats}
    signature = [
        tuple(sorted((ranks[F], popcount(F)) for F in flats if F >> x & 1)) for x in range(n)
    ]
    ncells = 0
    while True:
        values = sorted(set(signature))
        colour = [values.index(s) for s in signature]
        if len(values) == ncells:
            return colour
        ncells = len(values)
        signature = [
            (
                colour[x],
                tuple(
                    sorted(
                        (ranks[F], tuple(sorted(colour[y] for y in members[F])))
                        for F in flats
                        if F >> x & 1
                    )
                ),
            )
            for x in range(n)
        ]


def _lattice_heights(flats):
    heights = {}
    for F in sorted(flats, key=popcount):
        below = [h for G, h in heights.items() if G & F == G and G != F]
        heights[F] = 1 + max(below) if below else 0
    return heights


def _cell_permutations(colour):
    """Index maps sending colour class ``c`` onto the positions reserved for it."""
    n = len(colour)
    order = sorted(range(n), key=lambda x: colour[x])
    cells = []
    start = 0
    while start < n:
        end = start
        while end < n and colour[order[end]] == colour[order[start]]:
            end += 1
        cells.append((order[start:end], list(range(start, end))))
        start = end
    choices = [
        [list(zip(elems, p)) for p in permutations(slots)] for elems, slots in cells
    ]
    for combo in product(*choices):
        perm = [0] * n
        for part in combo:
            for x, slot in part:
                perm[x] = slot
        yield perm


@lru_cache(maxsize=200_000)
def _canon_of(n, flats):
    """Memoized canonical flat tuple for a raw labelled encoding."""
    colour = element_colours(n, flats)
    best = None
    best_perm = None
    for perm in _cell_permutations(colour):
        enc = tuple(sorted(permute(F, perm) for F in flats))
        if best is None or enc < best:
            best = enc
            best_perm = perm
    return best, tuple(best_perm)


def canonical_labelling(M):
    """``(canon, perm)``: ``perm[i]`` is the canonical position of element ``i + 1``."""
    return _canon_of(M.degree, _tilde_flats(M))


def canonical_form(M):
    canon, _ = canonical_labelling(M)
    return IsoClass(M.degree, canon)


def iso_class(M):
    return canonical_form(M)


# --- isomorphism search -------------------------------------------------------


def _element_profile(M):
    out = []
    for x in range(len(M.labels)):
        out.append(tuple(sorted(popcount(F) for F in M.flats if F >> x & 1)))
    return out


def find_isomorphism(M, N):
    """A flat-preserving pointed bijection ``M -> N`` as a label dict, or ``None``.

    Plain backtracking with partial restriction checks; independent of
    :func:`canonical_form`.
    """
    if M.degree != N.degree or len(M.flats) != len(N.flats):
        return None
    pm, pn = _element_profile(M), _element_profile(N)
    if sorted(pm) != sorted(pn) or pm[0] != pn[0]:
        return None
    n = len(M.labels)
    images = [0] * n
    used = 1

    def consistent(k):
        # the map on indices 0..k must identify M|{0..k} with N|image
        dom = (1 << (k + 1)) - 1
        cod = 0
        for i in range(k + 1):
            cod |= 1 << images[i]
        traced = {F & dom for F in M.flats}
        target = {G & cod for G in N.flats}
        if len(traced) != len(target):
            return False
        for F in traced:
            img = 0
            for i in bits(F):
                img |= 1 << images[i]
            if img not in target:
                return False
        return True

    def search(k):
        nonlocal used
        if k == n:
            return True
        for y in range(1, n):
            if used >> y & 1 or pm[k] != pn[y]:
                continue
            images[k] = y
            used |= 1 << y
            if consistent(k) and search(k + 1):
                return True
            used &= ~(1 << y)
        return False

    images[0] = 0
    if n == 1:
        return {M.labels[0]: N.labels[0]} if M.flats == N.flats else None
    if not search(1):
        return None
    return {M.labels[i]: N.labels[images[i]] for i in range(n)}


def is_isomorphic(M, N):
    return find_isomorphism(M, N) is not None


def automorphisms(M):
    """All flat-preserving index permutations fixing the basepoint."""
    n = M.degree
    flats = M.flats
    out = []
    for p in permutations(range(1, n + 1)):
        perm = (0, *p)
        if all(permute(F, perm) in flats for F in flats):
            out.append(perm)
    return out


def automorphism_count(M):
    return len(automorphisms(M))


# --- enumeration ------------------------------------------------------------


def _labelled_copies(M):
    """Every distinct relabelling of ``M`` on its own label positions."""
    n = M.degree
    seen = set()
    out = []
    for p in permutations(range(1, n + 1)):
        perm = (0, *p)
        fl = frozenset(permute(F, perm) for F in M.flats)
        if fl not in seen:
            seen.add(fl)
            out.append(PointedMatroid(M.ground, fl))
    return out


def _extension_candidates(D, quotients):
    """Matroids on ``D``'s ground plus one element ``x`` with ``M \\ x = D``.

    ``quotients`` are labelled candidates for ``M / x``; a pair gives a matroid
    with bases ``B(D) + {B + x : B in B(C)}`` exactly when it passes the basis
    exchange check, and the flat containment below is a necessary condition
    that prunes most pairs cheaply.
    """
    n = D.degree
    new = str(n + 1)
    ground = GroundSet(D.labels + (new,))
    bit = 1 << (n + 1)
    yield direct_sum(D, uniform(0, 1))
    yield direct_sum(D, uniform(1, 1))
    r = D.rank
    if r == 0:
        return
    dbases = sorted(D.bases)
    for C in quotients:
        if C.rank != r - 1 or not C.flats <= D.flats:
            continue
        family = dbases + [B | bit for B in C.bases]
        try:
            yield from_bases(ground, family)
        except ExchangeViolated:
            continue


def _normalize_labels(M):
    ground = GroundSet((BASEPOINT, *(str(i) for i in range(1, M.degree + 1))))
    return PointedMatroid(ground, M.flats)


def _classes_from(previous, labelled_previous):
    found = {}
    for cls in previous:
        D = cls.matroid
        for M in _extension_candidates(D, labelled_previous):
            c = canonical_form(M)
            found.setdefault(c.canon, c)
    return sorted(found.values())


@lru_cache(maxsize=None)
def _enumerate(n):
    if n == 0:
        return (canonical_form(free_matroid(0)),)
    previous = _enumerate(n - 1)
    labelled = []
    for cls in previous:
        labelled.extend(_labelled_copies(_normalize_labels(cls.matroid)))
    out = tuple(_classes_from(previous, labelled))
    log.info("degree %d: %d classes", n, len(out))
    return out


_preloaded = {}


def preload_classes(n, classes):
    """Answer degree ``n`` from a stored catalog instead of enumerating."""
    _preloaded[n] = tuple(sorted(classes))


def enumerate_matroids(n, bound=DEFAULT_BOUND):
    """All isomorphism classes of pointed matroids with ``n`` non-basepoint elements."""
    if n < 0:
        raise BoundExceeded(f"negative degree {n}")
    if n > bound or n > HARD_BOUND:
        raise BoundExceeded(f"degree {n} exceeds enumeration bound {min(bound, HARD_BOUND)}")
    if n in _preloaded:
        return list(_preloaded[n])
    return list(_enumerate(n))


def catalog_upto(n, bound=DEFAULT_BOUND):
    out = []
    for d in range(n + 1):
        out.extend(enumerate_matroids(d, bound))
    return out


def permutation_count(M):
    """Size of the labelling search space after colour refinement (diagnostic)."""
    colour = element_colours(M.degree, _tilde_flats(M))
    counts = {}
    for c in colour:
        counts[c] = counts.get(c, 0) + 1
    return math.prod(math.factorial(k) for k in counts.values())
