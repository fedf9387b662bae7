"""Finite-support linear combinations with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction


class Combination:
    """Map from basis keys to nonzero ``Fraction`` coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out = {}
        for key, coeff in dict(terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                out[key] = coeff
        self.terms = out

    @classmethod
    def _make(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = {k: v for k, v in terms.items() if v}
        return obj

    def __getitem__(self, key):
        return self.terms.get(key, Fraction(0))

    def __iter__(self):
        return iter(sorted(self.terms))

    def __len__(self):
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def support(self):
        return sorted(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Combination):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return self._make(out)

    def __neg__(self):
        return self._make({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        scalar = Fraction(scalar)
        return self._make({k: v * scalar for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __repr__(self):
        if not self.terms:
            return f"{type(self).__name__}(0)"
        body = " + ".join(f"{v}*{k!r}" for k, v in self.items())
        return f"{type(self).__name__}({body})"

    def text(self):
        """``<coeff> <hex> [<hex> ...]`` per term."""
        rows = []
        for key, coeff in self.items():
            keys = key if isinstance(key, tuple) else (key,)
            rows.append(" ".join([str(coeff), *(k.hex for k in keys)]))
        return "\n".join(rows)

    def to_json(self):
        out = []
        for key, coeff in self.items():
            keys = key if isinstance(key, tuple) else (key,)
            out.append({"coeff": str(coeff), "classes": [k.hex for k in keys]})
        return out


def accumulate(cls, pairs):
    """Sum ``coeff * key`` over an iterable of ``(key, coeff)`` pairs."""
    out = {}
    for key, coeff in pairs:
        out[key] = out.get(key, 0) + coeff
    return cls._make({k: Fraction(v) for k, v in out.items()})


def linear_map(x, fn, cls):
    """Extend ``fn: key -> Combination`` linearly."""
    out = {}
    for key, coeff in x.terms.items():
        for k, v in fn(key).terms.items():
            out[k] = out.get(k, 0) + coeff * v
    return cls._make(out)


def bilinear_map(x, y, fn, cls):
    out = {}
    for k1, c1 in x.terms.items():
        for k2, c2 in y.terms.items():
            for k, v in fn(k1, k2).terms.items():
                out[k] = out.get(k, 0) + c1 * c2 * v
    return cls._make(out)


class Tensor(Combination):
    """Combination keyed by tuples of basis keys."""

    __slots__ = ()

    def swap(self):
        return Tensor._make({tuple(reversed(k)): v for k, v in self.terms.items()})


def takeuchi_antipode(key, basis, unit, coproduct, product, counit, degree):
    """``sum_i (-1)^i m^(i-1) pi^(x i) Delta^(i-1)`` on one basis key.

    ``coproduct(key)`` returns a :class:`Tensor` on pairs, ``product`` multiplies
    two combinations, ``unit`` is the unit element, ``degree(key)`` is the grading; ``pi`` kills degree 0.
    """
    total = unit * counit(key)
    layer = {(key,): Fraction(1)}
    sign = -1
    while True:
        layer = {k: v for k, v in layer.items() if all(degree(x) > 0 for x in k)}
        if not layer:
            return total
        for legs, coeff in layer.items():
            term = basis(legs[0])
            for x in legs[1:]:
                term = product(term, basis(x))
            total = total + term * (sign * coeff)
        nxt = {}
        for legs, coeff in layer.items():
            for (left, right), c in coproduct(legs[-1]).terms.items():
                k = legs[:-1] + (left, right)
                nxt[k] = nxt.get(k, 0) + coeff * c
        layer = nxt
        sign = -sign
