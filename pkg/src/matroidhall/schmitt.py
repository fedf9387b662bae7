"""The matroid-minor Hopf algebra: product is direct sum, coproduct splits by minors."""

from __future__ import annotations

from functools import lru_cache

from .bits import submasks
from .canon import DEFAULT_BOUND, IsoClass, canonical_form
from .hall import ZERO, as_class, structure_constants
from .linear import Combination, Tensor, bilinear_map, linear_map, takeuchi_antipode
from .matroid import contract, direct_sum, restrict


class MMElement(Combination):
    __slots__ = ()


def basis(M):
    return MMElement({as_class(M): 1})


def one():
    return basis(ZERO)


@lru_cache(maxsize=None)
def _sum_class(A, B):
    return canonical_form(direct_sum(A.matroid, B.matroid))


def mm_product(x, y):
    return bilinear_map(x, y, lambda A, B: MMElement({_sum_class(A, B): 1}), MMElement)


@lru_cache(maxsize=None)
def _coproduct_basis(B):
    M = B.matroid
    out = {}
    for S in submasks(M.ground.tilde):
        key = (canonical_form(restrict(M, S)), canonical_form(contract(M, S)))
        out[key] = out.get(key, 0) + 1
    return Tensor(out)


def mm_coproduct(x):
    """``Delta[M] = sum_S [M|S] (x) [M/S]``."""
    return linear_map(x, _coproduct_basis, Tensor)


def counit(x):
    """Coefficient of the zero class (the class with no non-basepoint elements)."""
    return x[ZERO]


@lru_cache(maxsize=None)
def _antipode_basis(B):
    return takeuchi_antipode(
        B,
        basis=lambda k: MMElement({k: 1}),
        unit=one(),
        coproduct=_coproduct_basis,
        product=mm_product,
        counit=lambda k: 1 if k == ZERO else 0,
        degree=lambda k: k.degree,
    )


def antipode(x):
    return linear_map(x, _antipode_basis, MMElement)


def multiply(T):
    out = MMElement()
    for (a, b), c in T.terms.items():
        out = out + MMElement({_sum_class(a, b): c})
    return out


def tensor_apply(T, left=None, right=None):
    out = {}
    for (a, b), c in T.terms.items():
        la = left(basis(a)) if left else basis(a)
        rb = right(basis(b)) if right else basis(b)
        for x, u in la.terms.items():
            for y, v in rb.terms.items():
                out[x, y] = out.get((x, y), 0) + c * u * v
    return Tensor._make(out)


def tensor_product(S, T):
    def legs(k1, k2):
        return Tensor({(_sum_class(k1[0], k2[0]), _sum_class(k1[1], k2[1])): 1})

    return bilinear_map(S, T, legs, Tensor)


def antipode_axioms(B):
    """``(m(S (x) id)Delta, m(id (x) S)Delta, u eps)`` evaluated on ``[B]``."""
    x = basis(B)
    D = mm_coproduct(x)
    return (
        multiply(tensor_apply(D, left=antipode)),
        multiply(tensor_apply(D, right=antipode)),
        one() * counit(x),
    )


def duality_check(B, bound=DEFAULT_BOUND):
    """Hall structure constants ``g^B_{A,C}`` equal the coefficients of ``[C] (x) [A]`` in ``Delta[B]``."""
    B = as_class(B)
    hall_side = structure_constants(B, bound)
    coalgebra_side = {(A, C): int(c) for (C, A), c in _coproduct_basis(B).terms.items()}
    return hall_side == coalgebra_side


def family_closed(classes, predicate, product_degree=None):
    """Failures of products and coproducts of ``classes`` to stay inside ``predicate``.

    Products whose degree exceeds ``product_degree`` are skipped.
    """
    failures = []
    for A in classes:
        for (L, R) in _coproduct_basis(A).terms:
            for part in (L, R):
                if not predicate(part):
                    failures.append(("coproduct", A, part))
        for B in classes:
            if product_degree is not None and A.degree + B.degree > product_degree:
                continue
            P = _sum_class(A, B)
            if not predicate(P):
                failures.append(("product", A, B))
    return failures


def is_class(x):
    return isinstance(x, IsoClass)
