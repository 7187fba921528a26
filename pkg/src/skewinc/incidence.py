"""The incidence algebra I(X,K) of a finite poset.

Elements are sparse maps from comparable pairs to nonzero raw field values.
The product is convolution over intervals, ``*`` on :class:`IncidenceElement`
is that product, and the Hadamard (pointwise) product is :func:`hadamard`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping, Optional

from .errors import (Mismatch, NotComparable, NotInvertible, NotMultiplicative,
                     PathInconsistent, ValidationError, ZeroEntry)
from .fields import Field
from .poset import Poset, PosetAutomorphism, identity_automorphism


class IncidenceElement:
    """f : X^2_<= -> K, stored sparsely (absent pairs are zero)."""

    __slots__ = ("poset", "field", "entries")

    def __init__(self, poset: Poset, field: Field, entries: Optional[Mapping] = None):
        self.poset = poset
        self.field = field
        clean = {}
        if entries:
            for (x, y), v in entries.items():
                if not poset.le(x, y):
                    raise NotComparable(x, y)
                v = field.coerce(v)
                if v != field.zero:
                    clean[(x, y)] = v
        self.entries = clean

    @classmethod
    def _raw(cls, poset, field, entries):
        # trusted constructor: keys comparable, values canonical and nonzero
        obj = cls.__new__(cls)
        obj.poset = poset
        obj.field = field
        obj.entries = entries
        return obj

    def __getitem__(self, pair):
        return self.entries.get(pair, self.field.zero)

    def __call__(self, x, y):
        return self.entries.get((x, y), self.field.zero)

    def _check(self, other):
        if not isinstance(other, IncidenceElement):
            raise TypeError("expected an IncidenceElement, got %r" % type(other).__name__)
        if other.poset != self.poset or other.field != self.field:
            raise Mismatch("elements of different incidence algebras")

    def __eq__(self, other):
        return (isinstance(other, IncidenceElement) and self.poset == other.poset
                and self.field == other.field and self.entries == other.entries)

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def __repr__(self):
        F = self.field
        body = ", ".join("(%s,%s): %s" % (x, y, F.format(v))
                         for (x, y), v in sorted(self.entries.items(),
                                                 key=lambda kv: self.poset.pair_index[kv[0]]))
        return "IncidenceElement({%s})" % body

    def is_zero(self):
        return not self.entries

    def __add__(self, other):
        self._check(other)
        out = dict(self.entries)
        self.field.row_axpy(out, self.field.one, other.entries)
        return IncidenceElement._raw(self.poset, self.field, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.entries)
        self.field.row_axpy(out, self.field.neg(self.field.one), other.entries)
        return IncidenceElement._raw(self.poset, self.field, out)

    def __neg__(self):
        F = self.field
        return IncidenceElement._raw(self.poset, F, {k: F.neg(v) for k, v in self.entries.items()})

    def scale(self, c):
        F = self.field
        c = F.coerce(c)
        if c == F.zero:
            return zero(self.poset, F)
        return IncidenceElement._raw(self.poset, F, {k: F.mul(c, v) for k, v in self.entries.items()})

    def __mul__(self, other):
        return multiply(self, other)

    def diagonal(self, x):
        return self.entries.get((x, x), self.field.zero)

    def vector(self) -> list:
        """Coordinates in the basis e_xy, pairs in canonical order."""
        z = self.field.zero
        return [self.entries.get(pr, z) for pr in self.poset.pairs]

    @classmethod
    def from_vector(cls, poset, field, vec):
        return cls._raw(poset, field, {pr: v for pr, v in zip(poset.pairs, vec)
                                       if v != field.zero})

    def inverse(self):
        return invert(self)


def zero(p: Poset, field: Field) -> IncidenceElement:
    return IncidenceElement._raw(p, field, {})


def delta_identity(p: Poset, field: Field) -> IncidenceElement:
    return IncidenceElement._raw(p, field, {(x, x): field.one for x in p.elements})


def zeta(p: Poset, field: Field) -> IncidenceElement:
    return IncidenceElement._raw(p, field, {pr: field.one for pr in p.pairs})


def e(p: Poset, field: Field, x, y=None) -> IncidenceElement:
    """Matrix unit e_xy; ``e(p, K, x)`` is the idempotent e_x."""
    if y is None:
        y = x
    if not p.le(x, y):
        raise NotComparable(x, y)
    return IncidenceElement._raw(p, field, {(x, y): field.one})


def basis(p: Poset, field: Field):
    return [IncidenceElement._raw(p, field, {pr: field.one}) for pr in p.pairs]


def multiply(f: IncidenceElement, g: IncidenceElement) -> IncidenceElement:
    """Convolution (fg)(x,y) = sum over x<=z<=y of f(x,z) g(z,y)."""
    f._check(g)
    F = f.field
    add, mul = F.add, F.mul
    by_first = {}
    for (z, y), v in g.entries.items():
        by_first.setdefault(z, []).append((y, v))
    out = {}
    for (x, z), a in f.entries.items():
        for y, b in by_first.get(z, ()):
            k = (x, y)
            out[k] = add(out.get(k, F.zero), mul(a, b))
    return IncidenceElement._raw(f.poset, F, {k: v for k, v in out.items() if v != F.zero})


def invert(f: IncidenceElement) -> IncidenceElement:
    """Inverse by recursion over intervals.

    g(x,x) = f(x,x)^-1 and, for x < y,
    g(x,y) = -f(x,x)^-1 * sum over x<z<=y of f(x,z) g(z,y).
    """
    p, F = f.poset, f.field
    for x in p.elements:
        if f.diagonal(x) == F.zero:
            raise NotInvertible(x)
    g = {}
    # process pairs (x, y) by increasing interval size so g(z, y) is known
    order = sorted(p.pairs, key=lambda pr: len(p.interval(*pr)))
    for x, y in order:
        inv_xx = F.inv(f.diagonal(x))
        if x == y:
            g[(x, x)] = inv_xx
            continue
        acc = F.zero
        for z in p.interval(x, y):
            if z == x:
                continue
            a = f.entries.get((x, z))
            if a is not None:
                acc = F.add(acc, F.mul(a, g[(z, y)]))
        g[(x, y)] = F.neg(F.mul(inv_xx, acc))
    return IncidenceElement._raw(p, F, {k: v for k, v in g.items() if v != F.zero})


def hadamard(s: IncidenceElement, f: IncidenceElement) -> IncidenceElement:
    s._check(f)
    F = f.field
    out = {}
    for k, v in f.entries.items():
        a = s.entries.get(k)
        if a is not None:
            out[k] = F.mul(a, v)
    return IncidenceElement._raw(f.poset, F, out)


def pointwise_inverse(s: IncidenceElement) -> IncidenceElement:
    F = s.field
    for pr in s.poset.pairs:
        if pr not in s.entries:
            raise ZeroEntry(*pr)
    return IncidenceElement._raw(s.poset, F, {k: F.inv(v) for k, v in s.entries.items()})


@dataclass(frozen=True, eq=False)
class MultiplicativeElement:
    """A validated multiplicative sigma; build with :func:`validate_multiplicative`."""

    sigma: IncidenceElement

    @property
    def poset(self):
        return self.sigma.poset

    @property
    def field(self):
        return self.sigma.field

    def __call__(self, x, y):
        return self.sigma.entries[(x, y)]

    def __eq__(self, other):
        return isinstance(other, MultiplicativeElement) and self.sigma == other.sigma

    def __hash__(self):
        return hash(self.sigma)

    def __repr__(self):
        return "Multiplicative%s" % repr(self.sigma)[len("IncidenceElement"):]

    def star(self, other: "MultiplicativeElement") -> "MultiplicativeElement":
        return MultiplicativeElement(hadamard(self.sigma, other.sigma))

    def pointwise_inverse(self) -> "MultiplicativeElement":
        return MultiplicativeElement(pointwise_inverse(self.sigma))


def validate_multiplicative(s: IncidenceElement) -> MultiplicativeElement:
    p, F = s.poset, s.field
    for x, y in p.pairs:
        if s(x, y) == F.zero:
            raise ZeroEntry(x, y)
    for x, z in p.pairs:
        for y in p.interval(x, z):
            if s(x, z) != F.mul(s(x, y), s(y, z)):
                raise NotMultiplicative(x, y, z)
    return MultiplicativeElement(s)


def multiplicative_zeta(p: Poset, field: Field) -> MultiplicativeElement:
    return MultiplicativeElement(zeta(p, field))


def multiplicative_from_covers(p: Poset, field: Field, cover_values: Mapping) -> MultiplicativeElement:
    """Extend values on Hasse covers along saturated chains.

    Every saturated chain between two elements must give the same product,
    otherwise :class:`PathInconsistent` names the pair and two chains.
    """
    covers = set(p.covers)
    vals = {}
    for pr, v in cover_values.items():
        pr = tuple(pr)
        if pr not in covers:
            raise ValidationError("(%s, %s) is not a cover relation" % pr)
        v = field.coerce(v)
        if v == field.zero:
            raise ZeroEntry(*pr)
        vals[pr] = v
    for pr in p.covers:
        if pr not in vals:
            raise ValidationError("missing value for cover (%s, %s)" % pr)
    succ = {x: [b for (a, b) in p.covers if a == x] for x in p.elements}
    entries = {}
    for x in p.elements:
        value = {x: field.one}
        route = {x: (x,)}
        queue = deque([x])
        while queue:
            y = queue.popleft()
            for z in succ[y]:
                v = field.mul(value[y], vals[(y, z)])
                if z in value:
                    if value[z] != v:
                        raise PathInconsistent(x, z, route[z], route[y] + (z,))
                    continue
                value[z] = v
                route[z] = route[y] + (z,)
                queue.append(z)
        for y, v in value.items():
            entries[(x, y)] = v
    return MultiplicativeElement(IncidenceElement._raw(p, field, entries))


def fractional_from_eta(p: Poset, field: Field, eta: Mapping) -> MultiplicativeElement:
    """sigma(x,y) = eta(x) / eta(y)."""
    vals = {x: field.coerce(eta[x]) for x in p.elements}
    for x, v in vals.items():
        if v == field.zero:
            raise ZeroEntry(x, x)
    ent = {(x, y): field.div(vals[x], vals[y]) for (x, y) in p.pairs}
    return MultiplicativeElement(IncidenceElement._raw(p, field, ent))


@dataclass
class FractionalityResult:
    fractional: bool
    eta: Optional[dict] = None
    cycle: Optional[list] = None        # closed walk in the comparability graph
    cycle_product: object = None

    def __bool__(self):
        return self.fractional


def _step_factor(s: MultiplicativeElement, a, b):
    # factor of the walk step a -> b in the alternating cycle product
    F = s.field
    if s.poset.le(a, b):
        return s(a, b)
    return F.inv(s(b, a))


def cycle_product(s: MultiplicativeElement, cycle) -> object:
    F = s.field
    acc = F.one
    for a, b in zip(cycle, cycle[1:]):
        acc = F.mul(acc, _step_factor(s, a, b))
    return acc


def is_fractional(s: MultiplicativeElement) -> FractionalityResult:
    """Breadth-first search for eta with sigma(x,y) = eta(x)/eta(y).

    Each connected component of the comparability graph is rooted at its
    first element in canonical order with eta = 1.  On failure the result
    carries a closed walk whose alternating sigma-product is not 1.
    """
    p, F = s.poset, s.field
    nbrs = {x: [y for y in p.elements if y != x and p.comparable(x, y)] for x in p.elements}
    eta = {}
    parent = {}
    for root in p.elements:
        if root in eta:
            continue
        eta[root] = F.one
        parent[root] = None
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in nbrs[u]:
                # eta(v) = eta(u) / factor(u -> v)
                want = F.div(eta[u], _step_factor(s, u, v))
                if v not in eta:
                    eta[v] = want
                    parent[v] = u
                    queue.append(v)
                elif eta[v] != want:
                    cyc = _path_to_root(parent, v)[::-1] + _path_to_root(parent, u)
                    return FractionalityResult(False, None, cyc, cycle_product(s, cyc))
    return FractionalityResult(True, eta)


def _path_to_root(parent, x):
    out = [x]
    while parent[out[-1]] is not None:
        out.append(parent[out[-1]])
    return out


def are_equivalent(s: MultiplicativeElement, s2: MultiplicativeElement) -> bool:
    """True iff s2 = s * eta for a fractional eta."""
    s.sigma._check(s2.sigma)
    quotient = MultiplicativeElement(hadamard(s2.sigma, pointwise_inverse(s.sigma)))
    return is_fractional(quotient).fractional


@dataclass(frozen=True, eq=False)
class AutomorphismSpec:
    """phi = xi_beta o M_sigma o lambda-hat, supplied in factored form."""

    beta: IncidenceElement
    sigma: MultiplicativeElement
    lam: PosetAutomorphism

    def __post_init__(self):
        b = self.beta
        if b.poset != self.sigma.poset or b.field != self.sigma.field or self.lam.poset != b.poset:
            raise Mismatch("beta, sigma and lambda live over different data")
        for x in b.poset.elements:
            if b.diagonal(x) == b.field.zero:
                raise NotInvertible(x)
        object.__setattr__(self, "_beta_inv", invert(b))

    @property
    def poset(self):
        return self.beta.poset

    @property
    def field(self):
        return self.beta.field

    @property
    def beta_inverse(self):
        return self._beta_inv

    @property
    def psi(self) -> "AutomorphismSpec":
        """The same automorphism with beta replaced by the identity."""
        return AutomorphismSpec(delta_identity(self.poset, self.field), self.sigma, self.lam)

    @property
    def is_psi(self) -> bool:
        return self.beta == delta_identity(self.poset, self.field)

    def __call__(self, f):
        return apply_phi(self, f)


def make_spec(sigma: MultiplicativeElement, lam: Optional[PosetAutomorphism] = None,
              beta: Optional[IncidenceElement] = None) -> AutomorphismSpec:
    p, F = sigma.poset, sigma.field
    if lam is None:
        lam = identity_automorphism(p)
    if beta is None:
        beta = delta_identity(p, F)
    return AutomorphismSpec(beta, sigma, lam)


def apply_psi(sigma: MultiplicativeElement, lam: PosetAutomorphism, f: IncidenceElement):
    """psi(f)(x,y) = sigma(x,y) f(lambda^-1 x, lambda^-1 y)."""
    sigma.sigma._check(f)
    F = f.field
    out = {}
    for (a, b), v in f.entries.items():
        k = (lam(a), lam(b))
        out[k] = F.mul(sigma(*k), v)
    return IncidenceElement._raw(f.poset, F, out)


def apply_psi_inverse(sigma: MultiplicativeElement, lam: PosetAutomorphism, g: IncidenceElement):
    """Inverse of :func:`apply_psi`: f(x,y) = g(lambda x, lambda y) / sigma(lambda x, lambda y)."""
    sigma.sigma._check(g)
    F = g.field
    out = {}
    for (a, b), v in g.entries.items():
        out[(lam.inv(a), lam.inv(b))] = F.div(v, sigma(a, b))
    return IncidenceElement._raw(g.poset, F, out)


def apply_phi(spec: AutomorphismSpec, f: IncidenceElement) -> IncidenceElement:
    """phi(f) = beta psi(f) beta^-1."""
    g = apply_psi(spec.sigma, spec.lam, f)
    return multiply(multiply(spec.beta, g), spec.beta_inverse)
