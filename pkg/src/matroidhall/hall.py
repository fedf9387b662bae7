"""The Hall algebra of pointed matroids.

Elements are finite rational combinations of isomorphism classes.  The
product counts admissible subobjects, which for a matroid ``B`` are exactly
the restrictions ``B|S`` for subsets ``S`` of the non-basepoint elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as cartesian

from .bits import submasks
from .canon import (
    DEFAULT_BOUND,
    IsoClass,
    automorphism_count,
    canonical_form,
    enumerate_matroids,
    find_isomorphism,
)
from .errors import DegreeBoundExceeded
from .linear import Combination, Tensor, bilinear_map, linear_map, takeuchi_antipode
from .matroid import components, contract, direct_sum_all, free_matroid, restrict


class HallElement(Combination):
    __slots__ = ()


def as_class(M):
    return M if isinstance(M, IsoClass) else canonical_form(M)


ZERO = canonical_form(free_matroid(0))


def delta(M):
    return HallElement({as_class(M): 1})


def one():
    return delta(ZERO)


def degree(cls):
    """``(rank, corank)``; their sum is the number of non-basepoint elements."""
    return cls.k0


@lru_cache(maxsize=None)
def subset_minors(B):
    """``(class of B/S, class of B|S)`` for every subset ``S``, in subset order."""
    M = B.matroid
    return tuple(
        (canonical_form(contract(M, S)), canonical_form(restrict(M, S)))
        for S in submasks(M.ground.tilde)
    )


def _classes(n, bound):
    if n > bound:
        raise DegreeBoundExceeded(f"product needs degree {n}, bound is {bound}")
    return enumerate_matroids(n, bound)


def product(f, g, bound=DEFAULT_BOUND):
    """``(f . g)[B] = sum_S f[B/S] g[B|S]``."""
    fdeg = {k.degree for k in f.terms}
    gdeg = {k.degree for k in g.terms}
    out = {}
    for n in sorted({a + b for a in fdeg for b in gdeg}):
        for B in _classes(n, bound):
            total = 0
            for quo, sub in subset_minors(B):
                a = f.terms.get(quo)
                if a:
                    b = g.terms.get(sub)
                    if b:
                        total += a * b
            if total:
                out[B] = total
    return HallElement._make(out)


def product_all(elements, bound=DEFAULT_BOUND):
    out = one()
    for x in elements:
        out = product(out, x, bound)
    return out


def structure_constant(A, C, B):
    """``#{S : B|S ~ C and B/S ~ A}`` by direct isomorphism search."""
    A, C, B = (x.matroid if isinstance(x, IsoClass) else x for x in (A, C, B))
    count = 0
    for S in submasks(B.ground.tilde):
        if bin(S).count("1") != C.degree:
            continue
        if find_isomorphism(restrict(B, S), C) is None:
            continue
        if find_isomorphism(contract(B, S), A) is not None:
            count += 1
    return count


def _identify(M, classes):
    for cls in classes:
        if find_isomorphism(M, cls.matroid) is not None:
            return cls
    raise LookupError("matroid not found among the catalog classes")


def structure_constants(B, bound=DEFAULT_BOUND):
    """All nonzero ``g^B_{A,C}`` as ``{(A, C): count}``.

    Minors are identified against catalog representatives by isomorphism
    search, never through canonical forms.
    """
    M = B.matroid if isinstance(B, IsoClass) else B
    by_degree = {d: enumerate_matroids(d, bound) for d in range(M.degree + 1)}
    out = {}
    for S in submasks(M.ground.tilde):
        sub = restrict(M, S)
        quo = contract(M, S)
        C = _identify(sub, by_degree[sub.degree])
        A = _identify(quo, by_degree[quo.degree])
        out[A, C] = out.get((A, C), 0) + 1
    return out


def extension_count(A, C, B):
    """``g^B_{A,C} |Aut A| |Aut C|``: exact sequences ``C -> B -> A`` with fixed ends."""
    A, C, B = (x.matroid if isinstance(x, IsoClass) else x for x in (A, C, B))
    return structure_constant(A, C, B) * automorphism_count(A) * automorphism_count(C)


# --- coalgebra ----------------------------------------------------------------


@lru_cache(maxsize=None)
def component_splits(B):
    """Distinct pairs ``(A, C)`` of classes with ``A (+) C ~ B``."""
    comps = components(B.matroid)
    pairs = set()
    for choice in cartesian((0, 1), repeat=len(comps)):
        left = [c for c, side in zip(comps, choice) if side == 0]
        right = [c for c, side in zip(comps, choice) if side == 1]
        pairs.add((canonical_form(direct_sum_all(left)), canonical_form(direct_sum_all(right))))
    return tuple(sorted(pairs))


def _coproduct_basis(B):
    return Tensor({pair: 1 for pair in component_splits(B)})


def coproduct(f):
    """``Delta(f)([A], [C]) = f([A (+) C])``."""
    return linear_map(f, _coproduct_basis, Tensor)


def counit(f):
    return f[ZERO]


def is_connected_class(B):
    return B.degree > 0 and len(components(B.matroid)) == 1


def is_primitive(f):
    unit = ZERO
    expected = {}
    for k, v in f.terms.items():
        expected[k, unit] = expected.get((k, unit), 0) + v
        expected[unit, k] = expected.get((unit, k), 0) + v
    return coproduct(f) == Tensor(expected)


def primitives_upto(n, bound=DEFAULT_BOUND):
    return [B for d in range(1, n + 1) for B in enumerate_matroids(d, bound) if is_connected_class(B)]


def tensor_product(S, T, bound=DEFAULT_BOUND):
    """Legwise product ``(a (x) b)(c (x) d) = ac (x) bd``."""

    def basis(k1, k2):
        left = product(delta(k1[0]), delta(k2[0]), bound)
        right = product(delta(k1[1]), delta(k2[1]), bound)
        return Tensor({(a, b): x * y for a, x in left.terms.items() for b, y in right.terms.items()})

    return bilinear_map(S, T, basis, Tensor)


def tensor_apply(T, left=None, right=None):
    """``(left (x) right)(T)`` for linear maps on elements (``None`` is the identity)."""
    out = {}
    for (a, b), c in T.terms.items():
        la = left(delta(a)) if left else delta(a)
        rb = right(delta(b)) if right else delta(b)
        for x, u in la.terms.items():
            for y, v in rb.terms.items():
                out[x, y] = out.get((x, y), 0) + c * u * v
    return Tensor._make(out)


def multiply(T, bound=DEFAULT_BOUND):
    out = HallElement()
    for (a, b), c in T.terms.items():
        out = out + product(delta(a), delta(b), bound) * c
    return out


@lru_cache(maxsize=None)
def _antipode_basis(B, bound):
    return takeuchi_antipode(
        B,
        basis=delta,
        unit=one(),
        coproduct=_coproduct_basis,
        product=lambda x, y: product(x, y, bound),
        counit=lambda k: 1 if k == ZERO else 0,
        degree=lambda k: k.degree,
    )


def antipode(f, bound=DEFAULT_BOUND):
    return linear_map(f, lambda B: _antipode_basis(B, bound), HallElement)


# --- axiom checks --------------------------------------------------------------


@dataclass
class HopfReport:
    counts: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)

    def record(self, name, ok, detail=None):
        inst, fail = self.counts.get(name, (0, 0))
        self.counts[name] = (inst + 1, fail + (not ok))
        if not ok:
            self.counterexamples.append((name, detail))

    @property
    def ok(self):
        return all(f == 0 for _, f in self.counts.values())

    def lines(self):
        return [f"{name} {i} {f}" for name, (i, f) in sorted(self.counts.items())]


def _coassociative(B):
    D = _coproduct_basis(B)
    left, right = {}, {}
    for (a, b), c in D.terms.items():
        for (x, y), u in _coproduct_basis(a).terms.items():
            left[x, y, b] = left.get((x, y, b), 0) + c * u
        for (x, y), u in _coproduct_basis(b).terms.items():
            right[a, x, y] = right.get((a, x, y), 0) + c * u
    return Tensor(left) == Tensor(right)


def _counital(B):
    D = coproduct(delta(B))
    left = HallElement({b: c for (a, b), c in D.terms.items() if a == ZERO})
    right = HallElement({a: c for (a, b), c in D.terms.items() if b == ZERO})
    return left == delta(B) == right


def check_hopf(nmax, bound=DEFAULT_BOUND, antipode_checks=True):
    """Exhaustive bialgebra and Hopf checks on basis elements of degree at most ``nmax``."""
    report = HopfReport()
    classes = [B for d in range(nmax + 1) for B in enumerate_matroids(d, bound)]
    unit = one()
    for x in classes:
        dx = delta(x)
        report.record("unit", product(unit, dx, bound) == dx == product(dx, unit, bound), x)
        report.record("coassociativity", _coassociative(x), x)
        report.record("counit", _counital(x), x)
        D = coproduct(dx)
        report.record("cocommutativity", D == D.swap(), x)
        if antipode_checks:
            eps = unit * counit(dx)
            S = lambda y: antipode(y, bound)  # noqa: E731
            report.record("antipode_left", multiply(tensor_apply(D, left=S), bound) == eps, x)
            report.record("antipode_right", multiply(tensor_apply(D, right=S), bound) == eps, x)
    for x in classes:
        for y in classes:
            if x.degree + y.degree > nmax:
                continue
            xy = product(delta(x), delta(y), bound)
            lhs = coproduct(xy)
            rhs = tensor_product(coproduct(delta(x)), coproduct(delta(y)), bound)
            report.record("bialgebra", lhs == rhs, (x, y))
            for z in classes:
                if x.degree + y.degree + z.degree > nmax:
                    continue
                a = product(xy, delta(z), bound)
                b = product(delta(x), product(delta(y), delta(z), bound), bound)
                report.record("associativity", a == b, (x, y, z))
    return report
