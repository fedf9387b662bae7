"""Strong maps, the admissible classes, and the proto-exact axiom checker."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import product

from .bits import bits, popcount, submasks
from .canon import automorphisms, canonical_form
from .errors import (
    BadNesting,
    BasepointNotPreserved,
    FlatPreimageViolated,
    NotAdmissible,
    SubsetOutOfRange,
)
from .matroid import contract, restrict, zero_matroid


@dataclass(frozen=True)
class StrongMap:
    """A pointed function between ground sets, stored as target indices."""

    source: object
    target: object
    images: tuple

    def __call__(self, label):
        return self.target.labels[self.images[self.source.ground.index(label)]]

    def as_dict(self):
        return {x: self.target.labels[y] for x, y in zip(self.source.labels, self.images)}

    def preimage(self, mask):
        out = 0
        for i, y in enumerate(self.images):
            if mask >> y & 1:
                out |= 1 << i
        return out

    def image(self, mask):
        out = 0
        for i in bits(mask):
            out |= 1 << self.images[i]
        return out

    @property
    def is_injective(self):
        return len(set(self.images)) == len(self.images)

    @property
    def is_surjective(self):
        return len(set(self.images)) == len(self.target.labels)

    def then(self, other):
        """``other`` after ``self``."""
        if other.source != self.target:
            raise ValueError("maps are not composable")
        return StrongMap(self.source, other.target, tuple(other.images[y] for y in self.images))

    def __repr__(self):
        return f"StrongMap({self.as_dict()})"


def index_map(f, M, N):
    if isinstance(f, StrongMap):
        return f.images
    if isinstance(f, dict):
        try:
            return tuple(N.ground.index(f.get(x, f.get(i))) for i, x in enumerate(M.labels))
        except SubsetOutOfRange:
            raise
    if callable(f):
        return tuple(N.ground.index(f(x)) for x in M.labels)
    images = tuple(int(y) for y in f)
    if len(images) != len(M.labels) or any(not 0 <= y < len(N.labels) for y in images):
        raise SubsetOutOfRange("index map does not fit the ground sets")
    return images


def strong_violation(M, N, images):
    """First flat of ``N`` whose preimage is not a flat of ``M`` (or ``None``)."""
    for A in N.flat_list:
        pre = 0
        for i, y in enumerate(images):
            if A >> y & 1:
                pre |= 1 << i
        if pre not in M.flats:
            return A
    return None


def check_strong(f, M, N):
    """Validate ``f`` (dict, callable or index sequence) as a strong map ``M -> N``."""
    images = index_map(f, M, N)
    if images[0] != 0:
        raise BasepointNotPreserved(f"basepoint sent to {N.labels[images[0]]!r}")
    bad = strong_violation(M, N, images)
    if bad is not None:
        raise FlatPreimageViolated(N.ground.labels_of(bad))
    return StrongMap(M, N, images)


def is_strong(f, M, N):
    images = index_map(f, M, N)
    return images[0] == 0 and strong_violation(M, N, images) is None


def identity(M):
    return StrongMap(M, M, tuple(range(len(M.labels))))


def map_by_labels(M, N, mapping):
    """Strong map sending each label through ``mapping``; unmapped labels go to the basepoint."""
    base = N.labels[0]
    return check_strong({x: mapping.get(x, base) for x in M.labels}, M, N)


def zero_map(M, N):
    return StrongMap(M, N, (0,) * len(M.labels))


def canonical_inclusion(M, S):
    """``i_S: M|S -> M`` for ``S`` inside the non-basepoint elements."""
    S = M.mask(S)
    sub = restrict(M, S)
    return StrongMap(sub, M, tuple(bits(S | 1)))


def canonical_contraction(M, S):
    """``c_S: M -> M/S``: elements of ``S`` go to the basepoint."""
    S = M.mask(S)
    quo = contract(M, S)
    pos = {}
    for j, i in enumerate(bits(M.ground.full & ~S)):
        pos[i] = j
    return StrongMap(M, quo, tuple(pos.get(i, 0) for i in range(len(M.labels))))


# --- classification -------------------------------------------------------


class Tag(enum.Enum):
    ISO = "Iso"
    ADMISSIBLE_MONO = "AdmissibleMono"
    ADMISSIBLE_EPI = "AdmissibleEpi"
    MONO = "Mono"
    EPI = "Epi"
    GENERAL = "General"


@dataclass(frozen=True)
class MorphismClass:
    tag: Tag
    witness: int = None
    mono_witness: int = None
    epi_witness: int = None


def is_isomorphism(f):
    if not (f.is_injective and f.is_surjective):
        return False
    N = f.target
    return len(f.source.flats) == len(N.flats) and all(f.image(F) in N.flats for F in f.source.flats)


def admissible_mono_witness(f):
    """``S`` with ``f`` an isomorphism onto ``target|S`` followed by ``i_S``, else ``None``."""
    if f.images[0] != 0 or not f.is_injective:
        return None
    keep = f.image(f.source.ground.full)
    traces = {G & keep for G in f.target.flats}
    if len(traces) != len(f.source.flats):
        return None
    if all(f.image(F) in traces for F in f.source.flats):
        return keep & ~1
    return None


def admissible_epi_witness(f):
    """``S = f^-1(*) - *`` when ``f`` is ``c_S`` followed by an isomorphism, else ``None``."""
    if f.images[0] != 0 or not f.is_surjective:
        return None
    S = f.preimage(1) & ~1
    M = f.source
    rest = M.ground.full & ~S
    if popcount(rest) != len(f.target.labels):
        return None
    quotient = {F & ~S for F in M.flats if F & S == S}
    if len(quotient) != len(f.target.flats):
        return None
    if all(f.image(F) in f.target.flats for F in quotient):
        return S
    return None


def in_mono_class(f):
    return admissible_mono_witness(f) is not None


def in_epi_class(f):
    return admissible_epi_witness(f) is not None


def classify(f):
    mono = admissible_mono_witness(f)
    epi = admissible_epi_witness(f)
    if is_isomorphism(f):
        tag, witness = Tag.ISO, None
    elif mono is not None:
        tag, witness = Tag.ADMISSIBLE_MONO, mono
    elif epi is not None:
        tag, witness = Tag.ADMISSIBLE_EPI, epi
    elif f.is_injective:
        tag, witness = Tag.MONO, None
    elif f.is_surjective:
        tag, witness = Tag.EPI, None
    else:
        tag, witness = Tag.GENERAL, None
    return MorphismClass(tag, witness, mono, epi)


# --- squares ------------------------------------------------------------------


@dataclass(frozen=True)
class Square:
    """``top: tl -> tr``, ``left: tl -> bl``, ``right: tr -> br``, ``bottom: bl -> br``."""

    top: StrongMap
    left: StrongMap
    right: StrongMap
    bottom: StrongMap

    @property
    def corners(self):
        return (self.top.source, self.top.target, self.bottom.source, self.bottom.target)

    def commutes(self):
        a = self.top.then(self.right).images
        b = self.left.then(self.bottom).images
        return a == b

    @property
    def horizontal_in_mono_class(self):
        return in_mono_class(self.top) and in_mono_class(self.bottom)

    @property
    def vertical_in_epi_class(self):
        return in_epi_class(self.left) and in_epi_class(self.right)

    def is_set_pullback(self):
        """Underlying pointed-set square is Cartesian."""
        pairs = {
            (t, b)
            for t in range(len(self.top.target.labels))
            for b in range(len(self.bottom.source.labels))
            if self.right.images[t] == self.bottom.images[b]
        }
        got = [(self.top.images[x], self.left.images[x]) for x in range(len(self.top.source.labels))]
        return len(set(got)) == len(got) and set(got) == pairs

    def is_set_pushout(self):
        """Underlying pointed-set square is coCartesian."""
        a = len(self.top.target.labels)
        b = len(self.bottom.source.labels)
        parent = list(range(a + b))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for x in range(len(self.top.source.labels)):
            parent[find(self.top.images[x])] = find(a + self.left.images[x])
        induced = {}
        for t in range(a):
            induced.setdefault(find(t), set()).add(self.right.images[t])
        for s in range(b):
            induced.setdefault(find(a + s), set()).add(self.bottom.images[s])
        if any(len(v) != 1 for v in induced.values()):
            return False
        values = [next(iter(v)) for v in induced.values()]
        return len(set(values)) == len(values) == len(self.bottom.target.labels)


def square_failures(sq, require_bicartesian=True):
    out = []
    if not sq.commutes():
        out.append("square does not commute")
    for name in ("top", "bottom"):
        if not in_mono_class(getattr(sq, name)):
            out.append(f"{name} arrow is not an admissible mono")
    for name in ("left", "right"):
        if not in_epi_class(getattr(sq, name)):
            out.append(f"{name} arrow is not an admissible epi")
    if require_bicartesian:
        if not sq.is_set_pullback():
            out.append("not Cartesian on underlying pointed sets")
        if not sq.is_set_pushout():
            out.append("not coCartesian on underlying pointed sets")
    return out


@dataclass(frozen=True)
class ExactSequence:
    """``B|S -> B -> B/S`` for a subset ``S`` of the non-basepoint elements of ``B``."""

    sub: int
    B: object
    left: object
    right: object

    @property
    def inclusion(self):
        return canonical_inclusion(self.B, self.sub)

    @property
    def projection(self):
        return canonical_contraction(self.B, self.sub)

    def square(self):
        zero = zero_matroid()
        return Square(
            top=self.inclusion,
            left=zero_map(self.left, zero),
            right=self.projection,
            bottom=zero_map(zero, self.right),
        )


def exact_sequences(B):
    return [
        ExactSequence(S, B, restrict(B, S), contract(B, S)) for S in submasks(B.ground.tilde)
    ]


def lemma_square(M, S, T):
    """The square ``M|S -> M`` over ``(M|S)/T -> M/T``; ``S`` contains the basepoint, ``T`` does not."""
    S, T = M.mask(S), M.mask(T)
    if not S & 1 or T & 1 or T & ~S:
        raise BadNesting("need T inside S with the basepoint in S but not in T")
    top = canonical_inclusion(M, S & ~1)
    sub = top.source
    left = canonical_contraction(sub, M.ground.labels_of(T))
    right = canonical_contraction(M, T)
    labels = {x: x for x in left.target.labels}
    bottom = map_by_labels(left.target, right.target, labels)
    return Square(top, left, right, bottom)


def complete_pullback(i_prime, j_prime):
    """Complete ``P -> Q <- N`` (admissible mono, admissible epi) to a biCartesian square."""
    S = admissible_mono_witness(i_prime)
    T = admissible_epi_witness(j_prime)
    if S is None:
        raise NotAdmissible("first arrow is not an admissible mono")
    if T is None:
        raise NotAdmissible("second arrow is not an admissible epi")
    if i_prime.target != j_prime.target:
        raise NotAdmissible("arrows do not share a target")
    N = j_prime.source
    A = j_prime.preimage(S | 1)
    i = canonical_inclusion(N, A & ~1)
    back = {y: x for x, y in enumerate(i_prime.images)}
    j = check_strong(
        tuple(back[j_prime.images[x]] for x in bits(A)), i.source, i_prime.source
    )
    return Square(top=i, left=j, right=j_prime, bottom=i_prime)


def complete_pushout(j, i):
    """Complete ``P <- M -> N`` (admissible epi, admissible mono) to a biCartesian square."""
    T = admissible_epi_witness(j)
    S = admissible_mono_witness(i)
    if T is None:
        raise NotAdmissible("first arrow is not an admissible epi")
    if S is None:
        raise NotAdmissible("second arrow is not an admissible mono")
    if i.source != j.source:
        raise NotAdmissible("arrows do not share a source")
    N = i.target
    fT = i.image(T)
    j_prime = canonical_contraction(N, fT)
    back = {}
    for x, p in enumerate(j.images):
        if not T >> x & 1:
            back[p] = x
    i_prime = check_strong(
        tuple(j_prime.images[i.images[back[p]]] for p in range(len(j.target.labels))),
        j.target,
        j_prime.target,
    )
    return Square(top=i, left=j, right=j_prime, bottom=i_prime)


# --- universal property checks (bounded) ----------------------------------------


def strong_maps(M, N):
    """Every strong map ``M -> N`` (brute force over pointed functions)."""
    out = []
    for rest in product(range(len(N.labels)), repeat=len(M.labels) - 1):
        images = (0, *rest)
        if strong_violation(M, N, images) is None:
            out.append(StrongMap(M, N, images))
    return out


def universal_pullback_failures(sq, test_objects):
    out = []
    tl, tr, bl, br = sq.corners
    for X in test_objects:
        into_tl = strong_maps(X, tl)
        for a in strong_maps(X, tr):
            for b in strong_maps(X, bl):
                if a.then(sq.right).images != b.then(sq.bottom).images:
                    continue
                hits = [
                    g for g in into_tl
                    if g.then(sq.top).images == a.images and g.then(sq.left).images == b.images
                ]
                if len(hits) != 1:
                    out.append((X, a, b, len(hits)))
    return out


def universal_pushout_failures(sq, test_objects):
    out = []
    tl, tr, bl, br = sq.corners
    for X in test_objects:
        out_of_br = strong_maps(br, X)
        for a in strong_maps(tr, X):
            for b in strong_maps(bl, X):
                if sq.top.then(a).images != sq.left.then(b).images:
                    continue
                hits = [
                    g for g in out_of_br
                    if sq.right.then(g).images == a.images and sq.bottom.then(g).images == b.images
                ]
                if len(hits) != 1:
                    out.append((X, a, b, len(hits)))
    return out


# --- proto-exact checker --------------------------------------------------------


@dataclass
class ProtoExactReport:
    counts: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    observations: dict = field(default_factory=dict)

    def record(self, prop, ok, detail=None):
        inst, fail = self.counts.get(prop, (0, 0))
        self.counts[prop] = (inst + 1, fail + (not ok))
        if not ok:
            self.counterexamples.append((prop, detail))

    @property
    def failures(self):
        return sum(f for _, f in self.counts.values())

    @property
    def ok(self):
        return self.failures == 0

    def lines(self):
        return [f"PROP{k} {i} {f}" for k, (i, f) in sorted(self.counts.items())]


def _minor_objects(catalog):
    seen = {}
    for M in catalog:
        for S in submasks(M.ground.tilde):
            R = restrict(M, S)
            for T in submasks(R.ground.tilde):
                m = contract(R, T)
                seen.setdefault(canonical_form(m), m)
    return [seen[c] for c in sorted(seen)]


def _automorphism_maps(M):
    return [StrongMap(M, M, tuple(p)) for p in automorphisms(M)]


def _check_prop1(report, objects):
    zero = zero_matroid()
    for M in objects:
        into = [f for f in strong_maps(zero, M)]
        out = [f for f in strong_maps(M, zero)]
        ok = len(into) == 1 and len(out) == 1
        ok = ok and in_mono_class(into[0]) and in_epi_class(out[0])
        report.record(1, ok, M)


def _check_prop2(report, objects):
    for M in objects:
        auts = _automorphism_maps(M)
        for a in auts:
            report.record(2, in_mono_class(a) and in_epi_class(a), ("iso", M, a))
        tilde = M.ground.tilde
        for S in submasks(tilde):
            g = canonical_inclusion(M, S)
            for T in submasks(S):
                f = canonical_inclusion(g.source, M.ground.labels_of(T))
                for beta in _automorphism_maps(g.source):
                    h = f.then(beta).then(g)
                    report.record(2, in_mono_class(h), ("mono", M, S, T))
            c = canonical_contraction(M, S)
            Q = c.target
            for T in submasks(Q.ground.tilde):
                d = canonical_contraction(Q, T)
                for beta in _automorphism_maps(Q):
                    h = c.then(beta).then(d)
                    report.record(2, in_epi_class(h), ("epi", M, S, T))


def _check_prop3(report, objects):
    for M in objects:
        tilde = M.ground.tilde
        for S in submasks(tilde):
            for T in submasks(S):
                for extra in submasks(tilde & ~S):
                    top = canonical_inclusion(M, S)
                    left = canonical_contraction(top.source, M.ground.labels_of(T))
                    right = canonical_contraction(M, T | extra)
                    names = {x: x for x in left.target.labels}
                    try:
                        bottom = map_by_labels(left.target, right.target, names)
                    except (FlatPreimageViolated, SubsetOutOfRange):
                        continue
                    sq = Square(top, left, right, bottom)
                    if not (sq.commutes() and sq.horizontal_in_mono_class and sq.vertical_in_epi_class):
                        continue
                    ok = sq.is_set_pullback() == sq.is_set_pushout()
                    report.record(3, ok, sq)
                    if extra == 0:
                        report.record(3, sq.is_set_pullback(), sq)


def _check_prop4(report, objects):
    for N in objects:
        for T in submasks(N.ground.tilde):
            j_prime = canonical_contraction(N, T)
            Q = j_prime.target
            for S in submasks(Q.ground.tilde):
                base = canonical_inclusion(Q, S)
                for alpha in _automorphism_maps(base.source):
                    i_prime = alpha.then(base)
                    sq = complete_pullback(i_prime, j_prime)
                    problems = square_failures(sq)
                    report.record(4, not problems, (sq, problems))


def _check_prop5(report, objects):
    for N in objects:
        for S in submasks(N.ground.tilde):
            base = canonical_inclusion(N, S)
            M = base.source
            for alpha in _automorphism_maps(M):
                i = alpha.then(base)
                for T in submasks(M.ground.tilde):
                    j = canonical_contraction(M, T)
                    sq = complete_pushout(j, i)
                    problems = square_failures(sq)
                    report.record(5, not problems, (sq, problems))


def verify_proto_exact(catalog):
    """Check properties 1-5 over diagrams built from minors of ``catalog``."""
    objects = _minor_objects(catalog)
    report = ProtoExactReport()
    _check_prop1(report, objects)
    _check_prop2(report, objects)
    _check_prop3(report, objects)
    _check_prop4(report, objects)
    _check_prop5(report, objects)
    both = 0
    iso = 0
    for M in objects:
        for N in objects:
            for f in strong_maps(M, N):
                if in_mono_class(f) and in_epi_class(f):
                    both += 1
                    iso += is_isomorphism(f)
    report.observations["mono_and_epi_class_maps"] = both
    report.observations["of_which_isomorphisms"] = iso
    return report
