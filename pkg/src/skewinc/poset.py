"""Finite posets, multichains and poset automorphisms.

Elements are opaque hashable tokens.  The order in which they are handed to
:func:`poset_from_covers` is the canonical order and every basis built on top
of a poset (comparable pairs, multichains, cochains) is sorted by element
position in that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import comb
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import (CycleError, NotAllComparable, NotBijective,
                     NotOrderPreserving, UnknownElement, NotComparable)

Element = Hashable


class Poset:
    """An immutable finite poset.

    Build instances with :func:`poset_from_covers`; the constructor expects
    ``le`` to already be a partial order given as a square boolean table
    indexed by element positions.
    """

    def __init__(self, elements: Sequence[Element], le: Sequence[Sequence[bool]]):
        self.elements = tuple(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate elements")
        n = len(self.elements)
        self._le = tuple(tuple(bool(v) for v in row) for row in le)
        els = self.elements
        self.leq = frozenset((els[i], els[j]) for i in range(n) for j in range(n)
                             if self._le[i][j])
        # comparable pairs sorted by positions: the basis of I(X,K)
        self.pairs = tuple((els[i], els[j]) for i in range(n) for j in range(n)
                           if self._le[i][j])
        self.pair_index = {pr: k for k, pr in enumerate(self.pairs)}
        self.covers = tuple(
            (els[i], els[j]) for i in range(n) for j in range(n)
            if i != j and self._le[i][j]
            and not any(k != i and k != j and self._le[i][k] and self._le[k][j]
                        for k in range(n)))
        self._up = {x: tuple(els[j] for j in range(n) if self._le[self.index[x]][j])
                    for x in els}
        self._down = {x: tuple(els[i] for i in range(n) if self._le[i][self.index[x]])
                      for x in els}
        self._chains = {}

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.index

    def __eq__(self, other):
        return (isinstance(other, Poset) and self.elements == other.elements
                and self._le == other._le)

    def __hash__(self):
        return hash((self.elements, self._le))

    def __repr__(self):
        return "Poset(%s, covers=%s)" % (list(self.elements), list(self.covers))

    def le(self, x, y) -> bool:
        return self._le[self.index[x]][self.index[y]]

    def lt(self, x, y) -> bool:
        return x != y and self.le(x, y)

    def comparable(self, x, y) -> bool:
        return self.le(x, y) or self.le(y, x)

    def up(self, x):
        """Elements y with x <= y, in canonical order."""
        return self._up[x]

    def down(self, x):
        return self._down[x]

    def interval(self, x, y):
        if not self.le(x, y):
            raise NotComparable(x, y)
        return tuple(z for z in self._up[x] if self.le(z, y))

    def upper_covers(self, x):
        return tuple(b for (a, b) in self.covers if a == x)

    def strict_chains(self, k: int):
        """Strict chains with ``k`` elements, as position-lexicographic tuples."""
        return tuple(c for c in self.multichains(k - 1) if len(set(c)) == len(c))

    def multichains(self, n: int):
        if n not in self._chains:
            self._chains[n] = tuple(_weak_chains(self, n + 1))
        return self._chains[n]

    def adjoin_bottom(self, token) -> "Poset":
        if token in self.index:
            raise ValueError("token %r already present" % (token,))
        rel = list(self.covers) + [(token, x) for x in self.elements]
        return poset_from_covers([token] + list(self.elements), rel)


def _weak_chains(p: Poset, length: int):
    if length <= 0:
        return
    stack = [(x,) for x in reversed(p.elements)]
    while stack:
        c = stack.pop()
        if len(c) == length:
            yield c
            continue
        for y in reversed(p.up(c[-1])):
            stack.append(c + (y,))


def poset_from_covers(elements: Iterable[Element],
                      relations: Iterable[tuple[Element, Element]] = ()) -> Poset:
    """Poset generated by ``relations`` (any generating set, not only covers)."""
    elements = list(elements)
    index = {}
    for x in elements:
        if x in index:
            raise ValueError("duplicate element %r" % (x,))
        index[x] = len(index)
    n = len(elements)
    le = [[i == j for j in range(n)] for i in range(n)]
    for a, b in relations:
        for t in (a, b):
            if t not in index:
                raise UnknownElement(t)
        le[index[a]][index[b]] = True
    for k in range(n):
        lk = le[k]
        for i in range(n):
            if le[i][k]:
                li = le[i]
                for j in range(n):
                    if lk[j]:
                        li[j] = True
    for i in range(n):
        for j in range(i + 1, n):
            if le[i][j] and le[j][i]:
                raise CycleError(_find_cycle(elements, index, relations, i, j))
    return Poset(elements, le)


def _find_cycle(elements, index, relations, i, j):
    # BFS path i -> j -> i through the input relations, for the diagnostic
    succ = {}
    for a, b in relations:
        succ.setdefault(index[a], []).append(index[b])

    def path(s, t):
        prev = {s: None}
        queue = [s]
        for u in queue:
            if u == t:
                break
            for v in succ.get(u, ()):
                if v not in prev:
                    prev[v] = u
                    queue.append(v)
        out = [t]
        while out[-1] != s:
            out.append(prev[out[-1]])
        return out[::-1]

    cyc = path(i, j) + path(j, i)[1:]
    return [elements[k] for k in cyc]


def chain(n: int) -> Poset:
    """The chain 1 < 2 < ... < n with integer tokens."""
    return poset_from_covers(range(1, n + 1), [(i, i + 1) for i in range(1, n)])


def multichains(p: Poset, n: int):
    """All (n+1)-tuples x0 <= ... <= xn, lexicographic in element positions."""
    return p.multichains(n)


def count_multichains(p: Poset, n: int) -> int:
    """Number of weak (n+1)-chains, counted through strict chains.

    A weak chain whose underlying set is a strict chain with k+1 elements
    corresponds to a composition of n+1 into k+1 positive parts.
    """
    total = 0
    for k in range(len(p)):
        total += len(p.strict_chains(k + 1)) * comb(n, k)
    return total


@dataclass(frozen=True)
class PosetAutomorphism:
    poset: Poset
    forward: Mapping
    inverse: Mapping

    def __call__(self, x):
        return self.forward[x]

    def inv(self, x):
        return self.inverse[x]

    def __eq__(self, other):
        return (isinstance(other, PosetAutomorphism) and self.poset == other.poset
                and dict(self.forward) == dict(other.forward))

    def __hash__(self):
        return hash((self.poset, tuple(self.forward[x] for x in self.poset.elements)))

    def __repr__(self):
        moved = ["%s->%s" % (x, self.forward[x]) for x in self.poset.elements
                 if self.forward[x] != x]
        return "PosetAutomorphism(%s)" % (", ".join(moved) or "id")

    @property
    def is_identity(self):
        return all(self.forward[x] == x for x in self.poset.elements)

    def compose(self, other: "PosetAutomorphism") -> "PosetAutomorphism":
        """self o other"""
        return validate_automorphism(
            self.poset, {x: self.forward[other.forward[x]] for x in self.poset.elements})

    def inverted(self) -> "PosetAutomorphism":
        return PosetAutomorphism(self.poset, self.inverse, self.forward)


def identity_automorphism(p: Poset) -> PosetAutomorphism:
    ident = {x: x for x in p.elements}
    return PosetAutomorphism(p, ident, dict(ident))


def validate_automorphism(p: Poset, mapping: Mapping) -> PosetAutomorphism:
    for x in p.elements:
        if x not in mapping:
            raise NotBijective("map is undefined at %r" % (x,))
    for x in mapping:
        if x not in p.index:
            raise UnknownElement(x)
    forward = {x: mapping[x] for x in p.elements}
    for y in forward.values():
        if y not in p.index:
            raise UnknownElement(y)
    inverse = {}
    for x, y in forward.items():
        if y in inverse:
            raise NotBijective("%r and %r both map to %r" % (inverse[y], x, y))
        inverse[y] = x
    for x in p.elements:
        for y in p.elements:
            if p.le(x, y) != p.le(forward[x], forward[y]):
                raise NotOrderPreserving(x, y)
    return PosetAutomorphism(p, forward, inverse)


def automorphisms(p: Poset):
    """All automorphisms of ``p`` by backtracking over partial bijections."""
    els = p.elements
    n = len(els)
    out = []
    image = [None] * n
    used = [False] * n
    le = p._le

    def extend(i):
        if i == n:
            fwd = {els[k]: els[image[k]] for k in range(n)}
            out.append(PosetAutomorphism(p, fwd, {v: k for k, v in fwd.items()}))
            return
        for c in range(n):
            if used[c]:
                continue
            if any(le[i][k] != le[c][image[k]] or le[k][i] != le[image[k]][c]
                   for k in range(i)):
                continue
            used[c] = True
            image[i] = c
            extend(i + 1)
            used[c] = False
        image[i] = None

    extend(0)
    return out


def all_comparable_elements(p: Poset):
    return frozenset(x for x in p.elements
                     if all(p.comparable(x, y) for y in p.elements))


def check_vanishing_condition(p: Poset, lam: PosetAutomorphism, x0) -> bool:
    """Sufficient condition for vanishing of first cohomology at all-comparable x0."""
    if x0 not in all_comparable_elements(p):
        raise NotAllComparable("%r is not comparable to every element" % (x0,))
    lx0 = lam(x0)
    for x in p.elements:
        premise = ((p.le(x0, x) and p.le(lx0, x))
                   or (p.le(x, x0) and p.le(lam(x), x0)))
        if premise and not p.le(lam(x), x):
            return False
    return True


def poset_length(p: Poset) -> int:
    """Largest number of elements in a strict chain, minus one."""
    memo = {}

    def height(x):
        if x not in memo:
            memo[x] = max((1 + height(y) for y in p.up(x) if y != x), default=0)
        return memo[x]

    return max((height(x) for x in p.elements), default=0)


def permutations_of(p: Poset):
    """Every bijection of the ground set, as dicts (test helper)."""
    for perm in permutations(p.elements):
        yield dict(zip(p.elements, perm))
