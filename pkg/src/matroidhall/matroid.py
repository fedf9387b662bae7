"""Pointed matroids stored by their lattice of flats.

Subsets of a ground set are integer bit masks over ground indices, with the
basepoint at bit 0.  Every public operation also accepts an iterable of
labels wherever a subset is expected.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .bits import bits, compress, from_indices, permute, popcount, submasks
from .errors import (
    DanglingEndpoint,
    EmptyBasisFamily,
    ExchangeAxiomViolated,
    ExchangeViolated,
    GroundNotFlat,
    InvalidGroundSet,
    MissingBasepointInFlat,
    MissingDistinguishedLoop,
    NotIntersectionClosed,
    RankExceedsSize,
    SubsetContainsBasepoint,
    SubsetOutOfRange,
)

BASEPOINT = "*"
MAX_ELEMENTS = 16


@dataclass(frozen=True)
class GroundSet:
    """Ordered element labels; index 0 is the basepoint."""

    labels: tuple

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise InvalidGroundSet("ground set must contain the basepoint")
        if len(set(labels)) != len(labels):
            raise InvalidGroundSet(f"duplicate labels in {labels}")
        if len(labels) - 1 > MAX_ELEMENTS:
            raise InvalidGroundSet(
                f"at most {MAX_ELEMENTS} non-basepoint elements are supported"
            )

    @classmethod
    def of(cls, names, basepoint=BASEPOINT):
        """Ground set ``basepoint, *names``; ``names`` must not repeat the basepoint."""
        names = [str(x) for x in names]
        if basepoint in names:
            raise InvalidGroundSet("basepoint listed among ordinary elements")
        return cls((basepoint, *names))

    @property
    def basepoint(self):
        return self.labels[0]

    def __len__(self):
        return len(self.labels)

    @property
    def degree(self):
        return len(self.labels) - 1

    @property
    def full(self):
        return (1 << len(self.labels)) - 1

    @property
    def tilde(self):
        """Mask of the non-basepoint elements."""
        return self.full & ~1

    @cached_property
    def _index(self):
        return {x: i for i, x in enumerate(self.labels)}

    def index(self, label):
        try:
            return self._index[str(label)]
        except KeyError:
            raise SubsetOutOfRange(f"unknown element {label!r}") from None

    def mask(self, subset):
        """Bit mask for ``subset`` given as a mask or an iterable of labels."""
        if isinstance(subset, int):
            if subset < 0 or subset & ~self.full:
                raise SubsetOutOfRange(f"mask {subset:#x} exceeds ground set")
            return subset
        if isinstance(subset, str):
            subset = [subset]
        return from_indices(self.index(x) for x in subset)

    def labels_of(self, mask):
        return tuple(self.labels[i] for i in bits(mask))


@dataclass(frozen=True)
class PointedMatroid:
    """A pointed matroid given by its flats.

    The constructor does not validate; use :func:`from_flats` for untrusted
    input.  Operations in this package only produce valid matroids.
    """

    ground: GroundSet
    flats: frozenset

    @property
    def labels(self):
        return self.ground.labels

    @property
    def degree(self):
        """Number of non-basepoint elements."""
        return self.ground.degree

    def mask(self, subset):
        return self.ground.mask(subset)

    @cached_property
    def flat_list(self):
        return sorted(self.flats)

    @cached_property
    def loops(self):
        """The flat closure of the empty set (contains the basepoint)."""
        out = self.ground.full
        for F in self.flats:
            out &= F
        return out

    @cached_property
    def rank(self):
        return rank(self)

    @cached_property
    def corank(self):
        return self.degree - self.rank

    @cached_property
    def flat_ranks(self):
        """Height of each flat in the lattice of flats."""
        heights = {}
        for F in sorted(self.flats, key=popcount):
            below = [heights[G] for G in heights if G != F and G & F == G]
            heights[F] = 1 + max(below) if below else 0
        return heights

    @cached_property
    def bases(self):
        r = self.rank
        return frozenset(
            I for I in _subsets_of_size(self.ground.tilde, r) if rank(self, I) == r
        )

    def __repr__(self):
        flats = ", ".join(
            "{" + ",".join(self.ground.labels_of(F)) + "}" for F in self.flat_list
        )
        return f"PointedMatroid({list(self.labels)}, [{flats}])"


def _subsets_of_size(mask, k):
    return [from_indices(c) for c in combinations(bits(mask), k)]


def _ground(ground):
    if isinstance(ground, GroundSet):
        return ground
    return GroundSet(tuple(ground))


def _tilde_subset(M, S):
    mask = M.mask(S)
    if mask & 1:
        raise SubsetContainsBasepoint("pass a subset of the non-basepoint elements")
    return mask


# --- constructors -----------------------------------------------------------


def from_flats(ground, flats):
    """Validated pointed matroid from a family of flats."""
    ground = _ground(ground)
    fl = frozenset(ground.mask(F) for F in flats)
    validate_flats(ground, fl)
    return PointedMatroid(ground, fl)


def validate_flats(ground, flats):
    full = ground.full
    for F in flats:
        if not F & 1:
            raise MissingBasepointInFlat(ground.labels_of(F))
    if full not in flats:
        raise GroundNotFlat(f"the full ground set {list(ground.labels)} is not a flat")
    fl = sorted(flats)
    for i, F in enumerate(fl):
        for G in fl[i + 1:]:
            if F & G not in flats:
                raise NotIntersectionClosed(ground.labels_of(F), ground.labels_of(G))
    # Exchange only needs checking on flats: cl(S + x) = cl(cl(S) + x).
    for F in fl:
        for x in bits(full & ~F):
            Fx = _closure(fl, full, F | 1 << x)
            for y in bits(Fx & ~F):
                if not _closure(fl, full, F | 1 << y) >> x & 1:
                    raise ExchangeAxiomViolated(
                        ground.labels_of(F), ground.labels[x], ground.labels[y]
                    )


def _closure(flat_list, full, S):
    out = full
    for F in flat_list:
        if F & S == S:
            out &= F
    return out


def _flats_from_rank(ground, rank_of):
    full = ground.full
    flats = set()
    for S in submasks(ground.tilde):
        F = S | 1
        r = rank_of(F)
        if all(rank_of(F | 1 << x) > r for x in bits(full & ~F)):
            flats.add(F)
    return frozenset(flats)


def from_bases(ground, bases):
    """Pointed matroid with the given bases (subsets of the non-basepoint elements)."""
    ground = _ground(ground)
    family = set()
    for B in bases:
        mask = ground.mask(B)
        if mask & 1:
            raise SubsetContainsBasepoint("bases may not contain the basepoint")
        family.add(mask)
    if not family:
        raise EmptyBasisFamily("a matroid needs at least one basis")
    sizes = {popcount(B) for B in family}
    if len(sizes) != 1:
        raise ExchangeViolated(f"bases of different sizes {sorted(sizes)}")
    for B1 in family:
        for B2 in family:
            for x in bits(B1 & ~B2):
                if not any((B1 & ~(1 << x)) | 1 << y in family for y in bits(B2 & ~B1)):
                    raise ExchangeViolated(
                        f"no exchange for {ground.labels_of(B1)} - {ground.labels[x]!r} "
                        f"from {ground.labels_of(B2)}"
                    )
    fam = list(family)

    def rank_of(S):
        return max(popcount(S & B) for B in fam)

    return PointedMatroid(ground, _flats_from_rank(ground, rank_of))


def from_graph(vertices, edges, loop=BASEPOINT):
    """Cycle matroid of a graph whose edge ``loop`` is a loop and becomes the basepoint.

    ``edges`` is a sequence of ``(name, u, v)`` triples.
    """
    vertices = [str(v) for v in vertices]
    vset = set(vertices)
    edges = [(str(name), str(u), str(v)) for name, u, v in edges]
    ends = {}
    for name, u, v in edges:
        for w in (u, v):
            if w not in vset:
                raise DanglingEndpoint(f"edge {name!r} has unknown endpoint {w!r}")
        ends[name] = (u, v)
    loop = str(loop)
    if loop not in ends or ends[loop][0] != ends[loop][1]:
        raise MissingDistinguishedLoop(f"no loop edge named {loop!r}")
    names = [loop] + [name for name, _, _ in edges if name != loop]
    ground = GroundSet(tuple(names))
    vidx = {v: i for i, v in enumerate(vertices)}
    endpoints = [(vidx[ends[x][0]], vidx[ends[x][1]]) for x in names]

    def closure(S):
        parent = list(range(len(vertices)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for i in bits(S):
            u, v = endpoints[i]
            parent[find(u)] = find(v)
        out = 0
        for i, (u, v) in enumerate(endpoints):
            if find(u) == find(v):
                out |= 1 << i
        return out

    flats = frozenset(closure(S) for S in submasks(ground.full))
    return PointedMatroid(ground, flats)


def _numbered(n):
    return GroundSet((BASEPOINT, *(str(i) for i in range(1, n + 1))))


def uniform(r, n):
    """Pointed uniform matroid U*_{r,n} on elements ``1..n``."""
    if r < 0 or n < 0 or r > n:
        raise RankExceedsSize(f"need 0 <= r <= n, got r={r}, n={n}")
    ground = _numbered(n)
    flats = {S | 1 for S in submasks(ground.tilde) if popcount(S) < r}
    flats.add(ground.full)
    return PointedMatroid(ground, frozenset(flats))


def free_matroid(E):
    """Free pointed matroid: every subset containing the basepoint is a flat.

    ``E`` is either a count of non-basepoint elements or a label sequence
    whose first entry is the basepoint.
    """
    ground = _numbered(E) if isinstance(E, int) else _ground(E)
    return PointedMatroid(ground, frozenset(S | 1 for S in submasks(ground.tilde)))


def zero_matroid():
    return uniform(0, 0)


# --- closure, rank, cocircuits ---------------------------------------------


def closure(M, S):
    """Smallest flat containing ``S``."""
    return _closure(M.flat_list, M.ground.full, M.mask(S))


def rank(M, S=None):
    """Size of a maximal independent subset of ``S`` (default: whole ground set)."""
    S = M.ground.full if S is None else M.mask(S)
    fl = M.flat_list
    full = M.ground.full
    indep = 0
    span = M.loops
    for x in bits(S & ~1):
        if not span >> x & 1:
            indep |= 1 << x
            span = _closure(fl, full, indep | 1)
    return popcount(indep)


def hyperplanes(M):
    r = M.rank
    ranks = M.flat_ranks
    return sorted(F for F in M.flats if ranks[F] == r - 1)


def cocircuits(M):
    """Complements of hyperplanes (never containing the basepoint)."""
    full = M.ground.full
    return sorted(full & ~H for H in hyperplanes(M))


def is_loop(M, x):
    return bool(M.loops >> M.ground.index(x) & 1)


def check_closure_axioms(M):
    """Exhaustively test F1-F4 for the closure induced by the flats.

    Returns a list of violation descriptions (empty when all hold).
    """
    full = M.ground.full
    cl = {S: closure(M, S) for S in submasks(full)}
    problems = []
    for S, cS in cl.items():
        if S & ~cS:
            problems.append(("F1", S))
        if cl[cS] != cS:
            problems.append(("F2", S))
        for x in bits(full & ~S):
            T = S | 1 << x
            if cS & ~cl[T]:
                problems.append(("F3", S, T))
            for y in bits(cl[T] & ~cS):
                if not cl[S | 1 << y] >> x & 1:
                    problems.append(("F4", S, x, y))
    return problems


# --- minors and sums -------------------------------------------------------


def restrict(M, S):
    """Restriction to ``S`` plus the basepoint; ``S`` must avoid the basepoint."""
    keep = _tilde_subset(M, S) | 1
    ground = GroundSet(M.ground.labels_of(keep))
    flats = frozenset(compress(F & keep, keep) for F in M.flats)
    return PointedMatroid(ground, flats)


def contract(M, S):
    """Contraction by ``S`` (a subset of the non-basepoint elements)."""
    S = _tilde_subset(M, S)
    keep = M.ground.full & ~S
    ground = GroundSet(M.ground.labels_of(keep))
    flats = frozenset(compress(F & keep, keep) for F in M.flats if F & S == S)
    return PointedMatroid(ground, flats)


def minor(M, S, T):
    """``(M|S)/T`` for ``T`` contained in ``S``, both avoiding the basepoint."""
    return contract(restrict(M, S), M.ground.labels_of(M.mask(T)))


def direct_sum(M, N):
    """Pointed direct sum; colliding labels of ``N`` are primed."""
    used = set(M.labels)
    names = []
    for x in N.labels[1:]:
        while x in used:
            x = x + "'"
        used.add(x)
        names.append(x)
    ground = GroundSet(M.labels + tuple(names))
    shift = len(M.labels)
    right = [(F >> 1) << shift for F in N.flats]
    flats = frozenset(F | G for F in M.flats for G in right)
    return PointedMatroid(ground, flats)


def direct_sum_all(matroids):
    out = zero_matroid()
    for M in matroids:
        out = direct_sum(out, M)
    return out


def is_separator(M, A):
    """True if ``M = M|A (+) M|rest`` for the split of the non-basepoint elements at ``A``."""
    A = M.mask(A) & ~1
    B = M.ground.tilde & ~A
    left = {F & (A | 1) for F in M.flats}
    right = {F & (B | 1) for F in M.flats}
    # F -> (F & A, F & B) is injective; it is onto the product exactly when split.
    return len(left) * len(right) == len(M.flats)


def component_blocks(M):
    """Masks of the connected components of the non-basepoint elements."""
    blocks = []
    rest = M.ground.tilde
    while rest:
        low = rest & -rest
        others = rest & ~low
        found = rest
        for k in range(0, popcount(others)):
            for extra in _subsets_of_size(others, k):
                A = low | extra
                if is_separator(M, A):
                    found = A
                    break
            else:
                continue
            break
        blocks.append(found)
        rest &= ~found
    return blocks


def components(M):
    """Indecomposable summands, as restrictions, ordered by least element."""
    return [restrict(M, B) for B in component_blocks(M)]


def is_connected(M):
    return len(component_blocks(M)) == 1


def relabel(M, mapping):
    """Rename elements via ``mapping`` (label -> new label); positions are kept."""
    ground = GroundSet(tuple(str(mapping.get(x, x)) for x in M.labels))
    return PointedMatroid(ground, M.flats)


def permuted(M, perm):
    """Move the element at index ``i`` to index ``perm[i]`` (``perm[0] == 0``)."""
    if perm[0] != 0:
        raise InvalidGroundSet("permutation must fix the basepoint")
    labels = [None] * len(M.labels)
    for i, x in enumerate(M.labels):
        labels[perm[i]] = x
    return PointedMatroid(
        GroundSet(tuple(labels)), frozenset(permute(F, perm) for F in M.flats)
    )
