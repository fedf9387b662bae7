"""Grothendieck group classes and flag grids of minors."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .bits import bits
from .category import lemma_square, square_failures
from .errors import BoundExceeded, IndexOutOfRange
from .matroid import contract, is_loop, restrict, zero_matroid

MAX_FLAG_LENGTH = 6


@dataclass(frozen=True, order=True)
class K0Class:
    r: int
    c: int

    def __add__(self, other):
        return K0Class(self.r + other.r, self.c + other.c)

    def __str__(self):
        return f"r={self.r} c={self.c}"


def k0_class(M):
    """``(rank, |non-basepoint elements| - rank)``."""
    return K0Class(M.rank, M.degree - M.rank)


def decompose(M, order=None):
    """Peel elements one at a time through ``M|e -> M -> M/e``.

    Returns a list of ``"a"`` (the peeled element was not a loop) and ``"b"``.
    """
    order = list(order) if order is not None else list(M.labels[1:])
    word = []
    current = M
    for x in order:
        word.append("b" if is_loop(current, x) else "a")
        current = contract(current, [x])
    return word


# --- flags ---------------------------------------------------------------------


@dataclass(frozen=True)
class FlagGrid:
    """Chain ``0 = S_0 <= S_1 <= ... <= S_n`` of non-basepoint subsets of ``base``."""

    base: object
    chain: tuple

    @property
    def n(self):
        return len(self.chain) - 1

    def entry(self, i, j):
        """``(base|S_j)/S_i``; the zero matroid on the diagonal."""
        if not 0 <= i <= j <= self.n:
            raise IndexOutOfRange(f"no grid entry ({i}, {j})")
        if i == j:
            return zero_matroid()
        sub = restrict(self.base, self.chain[j])
        return contract(sub, self.base.ground.labels_of(self.chain[i]))

    @cached_property
    def grid(self):
        return {(i, j): self.entry(i, j) for j in range(self.n + 1) for i in range(j + 1)}

    def squares(self):
        """Unit squares ``(i, j), (i, j+1), (i+1, j), (i+1, j+1)`` of the grid."""
        out = []
        S = self.chain
        for i in range(self.n):
            for j in range(i + 1, self.n):
                ambient = contract(restrict(self.base, S[j + 1]), self.base.ground.labels_of(S[i]))
                inner = self.base.ground.labels_of(S[j] & ~S[i])
                peel = self.base.ground.labels_of(S[i + 1] & ~S[i])
                out.append(((i, j), lemma_square(ambient, (ambient.labels[0],) + inner, peel)))
        return out

    def describe(self):
        return [list(self.base.ground.labels_of(S)) for S in self.chain]


def flags(M, n):
    """Every flag of length ``n`` on ``M``; there are ``(n + 1)^|non-basepoint elements|``."""
    if n < 0 or n > MAX_FLAG_LENGTH:
        raise BoundExceeded(f"flag length {n} outside 0..{MAX_FLAG_LENGTH}")
    elems = list(bits(M.ground.tilde))
    out = []
    # level[k] = first index of the chain containing element k (n + 1 means never)
    for levels in product(range(1, n + 2), repeat=len(elems)):
        chain = [0] * (n + 1)
        for x, lev in zip(elems, levels):
            for t in range(lev, n + 1):
                chain[t] |= 1 << x
        out.append(FlagGrid(M, tuple(chain)))
    return out


def face(F, k):
    """Drop ``S_k``; for ``k = 0`` the base is contracted by ``S_1``."""
    if not 0 <= k <= F.n or F.n == 0:
        raise IndexOutOfRange(f"face index {k} invalid for length {F.n}")
    if k > 0:
        return FlagGrid(F.base, F.chain[:k] + F.chain[k + 1:])
    first = F.chain[1]
    base = contract(F.base, F.base.ground.labels_of(first))
    chain = tuple(base.mask(F.base.ground.labels_of(S & ~first)) for S in F.chain[1:])
    return FlagGrid(base, chain)


def degeneracy(F, k):
    """Repeat ``S_k``."""
    if not 0 <= k <= F.n:
        raise IndexOutOfRange(f"degeneracy index {k} invalid for length {F.n}")
    return FlagGrid(F.base, F.chain[:k + 1] + F.chain[k:])


def simplicial_identity_failures(F):
    """Check every simplicial identity applicable to ``F``; returns failing labels."""
    n = F.n
    bad = []
    if n >= 2:
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                if face(face(F, j), i) != face(face(F, i), j - 1):
                    bad.append(("dd", i, j))
    for j in range(n + 1):
        s = degeneracy(F, j)
        if face(s, j) != F or face(s, j + 1) != F:
            bad.append(("ds=id", j))
        for i in range(n + 2):
            if i < j and n >= 1:
                if face(s, i) != degeneracy(face(F, i), j - 1):
                    bad.append(("ds<", i, j))
            elif i > j + 1 and n >= 1:
                if face(s, i) != degeneracy(face(F, i - 1), j):
                    bad.append(("ds>", i, j))
        for i in range(j + 1):
            if degeneracy(degeneracy(F, j), i) != degeneracy(degeneracy(F, i), j + 1):
                bad.append(("ss", i, j))
    return bad


def grid_square_failures(F):
    """Problems with the unit squares of ``F``'s grid (empty when all are biCartesian)."""
    out = []
    for (i, j), sq in F.squares():
        tl, tr, bl, br = sq.corners
        expect = (F.entry(i, j), F.entry(i, j + 1), F.entry(i + 1, j), F.entry(i + 1, j + 1))
        if (tl, tr, bl, br) != expect:
            out.append(((i, j), "corners differ from grid entries"))
        out.extend(((i, j), p) for p in square_failures(sq))
    return out
