"""Skew derivations of I(X,K).

A linear map on I(X,K) is a :class:`LinearEndomorphism`, stored as its
matrix in the basis e_xy (pairs in canonical order): column j holds the
coordinates of d(e_j).  Subspaces of maps are handled by flattening each map
column by column into a vector of length m^2 and doing exact elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .errors import (Mismatch, NotADerivation, NotInvertible, ValidationError,
                     ViolatesCocycle, ViolatesVanishing)
from .fields import Field
from .incidence import (AutomorphismSpec, IncidenceElement, MultiplicativeElement,
                        apply_phi, basis, delta_identity, e, invert, make_spec, multiply)
from .linalg import Echelon, solve_linear
from .poset import Poset, PosetAutomorphism


class LinearEndomorphism:

    __slots__ = ("poset", "field", "columns")

    def __init__(self, poset: Poset, field: Field, columns):
        m = len(poset.pairs)
        cols = [list(c) for c in columns]
        if len(cols) != m or any(len(c) != m for c in cols):
            raise ValidationError("expected a %dx%d matrix" % (m, m))
        self.poset = poset
        self.field = field
        self.columns = cols

    @classmethod
    def from_function(cls, poset, field, fn: Callable[[IncidenceElement], IncidenceElement]):
        return cls(poset, field, [fn(b).vector() for b in basis(poset, field)])

    @classmethod
    def from_flat(cls, poset, field, flat):
        m = len(poset.pairs)
        return cls(poset, field, [flat[j * m:(j + 1) * m] for j in range(m)])

    @classmethod
    def zero(cls, poset, field):
        m = len(poset.pairs)
        return cls(poset, field, [[field.zero] * m for _ in range(m)])

    @property
    def dimension(self):
        return len(self.columns)

    def flat(self) -> list:
        return [v for c in self.columns for v in c]

    def matrix(self) -> list:
        """Row-major matrix, rows indexed by output coordinates."""
        m = len(self.columns)
        return [[self.columns[j][i] for j in range(m)] for i in range(m)]

    def on_basis(self, x, y) -> IncidenceElement:
        j = self.poset.pair_index[(x, y)]
        return IncidenceElement.from_vector(self.poset, self.field, self.columns[j])

    def __call__(self, f: IncidenceElement) -> IncidenceElement:
        if f.poset != self.poset or f.field != self.field:
            raise Mismatch("argument lives in another incidence algebra")
        F = self.field
        out = {}
        for pr, a in f.entries.items():
            col = self.columns[self.poset.pair_index[pr]]
            for i, v in enumerate(col):
                if v != F.zero:
                    out[i] = F.add(out.get(i, F.zero), F.mul(a, v))
        pairs = self.poset.pairs
        return IncidenceElement._raw(self.poset, F,
                                     {pairs[i]: v for i, v in out.items() if v != F.zero})

    def _check(self, other):
        if other.poset != self.poset or other.field != self.field:
            raise Mismatch("maps on different incidence algebras")

    def __eq__(self, other):
        return (isinstance(other, LinearEndomorphism) and self.poset == other.poset
                and self.field == other.field and self.columns == other.columns)

    def __add__(self, other):
        self._check(other)
        F = self.field
        return LinearEndomorphism(self.poset, F, [[F.add(a, b) for a, b in zip(c1, c2)]
                                                  for c1, c2 in zip(self.columns, other.columns)])

    def __sub__(self, other):
        self._check(other)
        F = self.field
        return LinearEndomorphism(self.poset, F, [[F.sub(a, b) for a, b in zip(c1, c2)]
                                                  for c1, c2 in zip(self.columns, other.columns)])

    def scale(self, c):
        F = self.field
        c = F.coerce(c)
        return LinearEndomorphism(self.poset, F, [[F.mul(c, a) for a in col] for col in self.columns])

    def left_multiply(self, u: IncidenceElement) -> "LinearEndomorphism":
        """The map a -> u d(a)."""
        P, F = self.poset, self.field
        cols = []
        for col in self.columns:
            img = IncidenceElement.from_vector(P, F, col)
            cols.append(multiply(u, img).vector())
        return LinearEndomorphism(P, F, cols)

    def is_zero(self):
        z = self.field.zero
        return all(v == z for c in self.columns for v in c)

    def __repr__(self):
        F = self.field
        rows = [" ".join(F.format(v) for v in r) for r in self.matrix()]
        return "LinearEndomorphism[\n  %s\n]" % "\n  ".join(rows)


@dataclass
class DerivationCheck:
    ok: bool
    witness: Optional[tuple] = None     # (pair a, pair b) with d(e_a e_b) wrong

    def __bool__(self):
        return self.ok


def _phi_images(spec: AutomorphismSpec):
    return [apply_phi(spec, b) for b in basis(spec.poset, spec.field)]


def is_phi_derivation(d: LinearEndomorphism, spec: AutomorphismSpec) -> DerivationCheck:
    """Leibniz rule d(ab) = d(a) b + phi(a) d(b) on every pair of basis elements."""
    if d.poset != spec.poset or d.field != spec.field:
        raise Mismatch("map and automorphism over different data")
    P, F = d.poset, d.field
    B = basis(P, F)
    phis = _phi_images(spec)
    images = [d(b) for b in B]
    for i, a in enumerate(P.pairs):
        for j, b in enumerate(P.pairs):
            lhs = d(multiply(B[i], B[j])) if a[1] == b[0] else None
            rhs = multiply(images[i], B[j]) + multiply(phis[i], images[j])
            if lhs is None:
                if not rhs.is_zero():
                    return DerivationCheck(False, (a, b))
            elif lhs != rhs:
                return DerivationCheck(False, (a, b))
    return DerivationCheck(True)


def inner_derivation(a: IncidenceElement, spec: AutomorphismSpec) -> LinearEndomorphism:
    """D_a(b) = a b - phi(b) a."""
    if a.poset != spec.poset or a.field != spec.field:
        raise Mismatch("element and automorphism over different data")
    return LinearEndomorphism.from_function(
        a.poset, a.field, lambda b: multiply(a, b) - multiply(apply_phi(spec, b), a))


def transport_by_beta(d: LinearEndomorphism, beta: IncidenceElement,
                      direction: str = "to_psi") -> LinearEndomorphism:
    """Move a derivation between phi = xi_beta o psi and psi.

    ``"to_psi"`` returns beta^-1 d, ``"to_phi"`` returns beta d.
    """
    for x in beta.poset.elements:
        if beta.diagonal(x) == beta.field.zero:
            raise NotInvertible(x)
    if direction == "to_psi":
        return d.left_multiply(invert(beta))
    if direction == "to_phi":
        return d.left_multiply(beta)
    raise ValueError("direction must be 'to_psi' or 'to_phi'")


# additive and potential elements

@dataclass(frozen=True, eq=False)
class AdditiveElement:
    tau: IncidenceElement
    sigma: MultiplicativeElement
    lam: PosetAutomorphism

    def __call__(self, x, y):
        return self.tau(x, y)


@dataclass
class PotentialWitness:
    epsilon: dict

    def __call__(self, x):
        return self.epsilon[x]


def validate_additive(tau: IncidenceElement, sigma: MultiplicativeElement,
                      lam: PosetAutomorphism) -> AdditiveElement:
    P, F = tau.poset, tau.field
    for x, y in P.pairs:
        if not P.le(lam(x), y) and tau(x, y) != F.zero:
            raise ViolatesVanishing(x, y)
    for x, z in P.pairs:
        for y in P.interval(x, z):
            rhs = F.add(tau(x, y), F.mul(sigma(lam(x), lam(y)), tau(y, z)))
            if tau(x, z) != rhs:
                raise ViolatesCocycle(x, y, z)
    return AdditiveElement(tau, sigma, lam)


def L_tau(t: AdditiveElement) -> LinearEndomorphism:
    """L(e_xy) = tau(x,y) e_{lambda(x) y} when lambda(x) <= y, else 0."""
    P, F = t.tau.poset, t.tau.field
    m = len(P.pairs)
    cols = []
    for x, y in P.pairs:
        col = [F.zero] * m
        lx = t.lam(x)
        if P.le(lx, y):
            col[P.pair_index[(lx, y)]] = t.tau(x, y)
        cols.append(col)
    return LinearEndomorphism(P, F, cols)


def tau_from_epsilon(eps: PotentialWitness, sigma: MultiplicativeElement,
                     lam: PosetAutomorphism) -> AdditiveElement:
    """tau(x,y) = eps(x) - sigma(lambda x, lambda y) eps(y)."""
    P, F = sigma.poset, sigma.field
    vals = {x: F.coerce(eps.epsilon.get(x, F.zero)) for x in P.elements}
    for x in P.elements:
        if not P.le(lam(x), x) and vals[x] != F.zero:
            raise ValidationError("epsilon(%s) must vanish since lambda(%s) is not <= %s"
                                  % (x, x, x))
    ent = {(x, y): F.sub(vals[x], F.mul(sigma(lam(x), lam(y)), vals[y])) for x, y in P.pairs}
    tau = IncidenceElement(P, F, ent)
    return AdditiveElement(tau, sigma, lam)


@dataclass
class PotentialResult:
    potential: bool
    witness: Optional[PotentialWitness] = None

    def __bool__(self):
        return self.potential


def _epsilon_system(sigma, lam):
    P, F = sigma.poset, sigma.field
    free = [x for x in P.elements if P.le(lam(x), x)]
    col = {x: i for i, x in enumerate(free)}
    rows = []
    for x, y in P.pairs:
        r = {}
        if x in col:
            r[col[x]] = F.one
        if y in col:
            c = F.neg(sigma(lam(x), lam(y)))
            r[col[y]] = F.add(r.get(col[y], F.zero), c)
        rows.append({k: v for k, v in r.items() if v != F.zero})
    return free, rows


def is_potential(t: AdditiveElement) -> PotentialResult:
    """Solve tau(x,y) = eps(x) - sigma(lambda x, lambda y) eps(y) for eps."""
    P, F = t.tau.poset, t.tau.field
    free, rows = _epsilon_system(t.sigma, t.lam)
    rhs = [t.tau(x, y) for x, y in P.pairs]
    eps = {x: F.zero for x in P.elements}
    if not free:
        if all(v == F.zero for v in rhs):
            return PotentialResult(True, PotentialWitness(eps))
        return PotentialResult(False)
    sol = solve_linear(F, rows, rhs, ncols=len(free))
    if not sol.consistent:
        return PotentialResult(False)
    for x, v in zip(free, sol.particular):
        eps[x] = v
    return PotentialResult(True, PotentialWitness(eps))


def additive_basis(sigma: MultiplicativeElement, lam: PosetAutomorphism) -> list:
    """Basis of the (sigma, lambda)-additive elements, straight from their definition."""
    P, F = sigma.poset, sigma.field
    unk = [pr for pr in P.pairs if P.le(lam(pr[0]), pr[1])]
    col = {pr: i for i, pr in enumerate(unk)}
    rows = []
    for x, z in P.pairs:
        for y in P.interval(x, z):
            r = {}
            for pr, c in (((x, z), F.one), ((x, y), F.neg(F.one)),
                          ((y, z), F.neg(sigma(lam(x), lam(y))))):
                if pr in col:
                    r[col[pr]] = F.add(r.get(col[pr], F.zero), c)
            r = {k: v for k, v in r.items() if v != F.zero}
            if r:
                rows.append(r)
    if not unk:
        return []
    E = Echelon(F, len(unk))
    E.extend(rows)
    out = []
    for v in E.kernel():
        tau = IncidenceElement._raw(P, F, {unk[k]: a for k, a in v.items()})
        out.append(AdditiveElement(tau, sigma, lam))
    return out


def potential_basis(sigma: MultiplicativeElement, lam: PosetAutomorphism) -> list:
    """tau_eps for eps running over point masses at elements with lambda(x) <= x."""
    P, F = sigma.poset, sigma.field
    out = []
    for x in P.elements:
        if P.le(lam(x), x):
            out.append(tau_from_epsilon(PotentialWitness({x: F.one}), sigma, lam))
    return out


# decomposition

@dataclass
class Decomposition:
    f: IncidenceElement
    tau: AdditiveElement
    inner: LinearEndomorphism
    additive: LinearEndomorphism


def decompose(d: LinearEndomorphism, sigma: MultiplicativeElement,
              lam: PosetAutomorphism, check: bool = True) -> Decomposition:
    """Split a psi-derivation as D_f + L_tau, psi = M_sigma o lambda-hat.

    f(x,y) = d(e_y)(x,y); the rest d1 = d - D_f kills every e_x and
    tau(x,y) = d1(e_xy)(lambda x, y).
    """
    P, F = d.poset, d.field
    spec = make_spec(sigma, lam)
    if check:
        res = is_phi_derivation(d, spec)
        if not res:
            raise NotADerivation("Leibniz rule fails on basis pair %s, %s" % res.witness)
    ent = {}
    for x, y in P.pairs:
        v = d.on_basis(y, y)(x, y)
        if v != F.zero:
            ent[(x, y)] = v
    f = IncidenceElement._raw(P, F, ent)
    Df = inner_derivation(f, spec)
    d1 = d - Df
    tau_ent = {}
    for x, y in P.pairs:
        lx = lam(x)
        if P.le(lx, y):
            v = d1.on_basis(x, y)(lx, y)
            if v != F.zero:
                tau_ent[(x, y)] = v
    tau = IncidenceElement._raw(P, F, tau_ent)
    try:
        t = validate_additive(tau, sigma, lam)
    except ValidationError as exc:
        raise NotADerivation("extracted tau is not additive: %s" % exc) from exc
    L = L_tau(t)
    if Df + L != d:
        raise NotADerivation("d differs from D_f + L_tau")
    return Decomposition(f, t, Df, L)


# brute-force spaces of maps

@dataclass
class SpaceResult:
    dim: int
    basis: list

    def flats(self):
        return [b.flat() for b in self.basis]


def leibniz_system(spec: AutomorphismSpec, kill_idempotents: bool = False):
    """Rows of the linear system on the m^2 matrix entries of d.

    Unknown j*m + i is d(e_j) at coordinate i.  For basis pairs a=(x,y),
    b=(z,w) and output pair (u,v) the Leibniz rule reads
    [y=z] d(e_xw)(u,v) - [v=w] d(e_a)(u,z) - sum_k phi(e_a)(u,k) d(e_b)(k,v) = 0.
    """
    P, F = spec.poset, spec.field
    pairs, idx = P.pairs, P.pair_index
    m = len(pairs)
    phis = _phi_images(spec)
    one, neg_one = F.one, F.neg(F.one)
    rows = []
    for ia, (x, y) in enumerate(pairs):
        phi_a = {}
        for (u, k), c in phis[ia].entries.items():
            phi_a.setdefault(u, []).append((k, c))
        for ib, (z, w) in enumerate(pairs):
            for iu, (u, v) in enumerate(pairs):
                r = {}
                if y == z:
                    r[idx[(x, w)] * m + iu] = one
                if v == w and P.le(u, z):
                    key = ia * m + idx[(u, z)]
                    r[key] = F.add(r.get(key, F.zero), neg_one)
                for k, c in phi_a.get(u, ()):
                    if P.le(k, v):
                        key = ib * m + idx[(k, v)]
                        r[key] = F.sub(r.get(key, F.zero), c)
                r = {kk: vv for kk, vv in r.items() if vv != F.zero}
                if r:
                    rows.append(r)
    if kill_idempotents:
        for xx in P.elements:
            j = idx[(xx, xx)]
            for i in range(m):
                rows.append({j * m + i: one})
    return rows


def derivation_space(spec: AutomorphismSpec) -> SpaceResult:
    """All phi-derivations, by solving the Leibniz rule for the matrix of d."""
    P, F = spec.poset, spec.field
    m = len(P.pairs)
    E = Echelon(F, m * m)
    E.extend(leibniz_system(spec))
    maps = [LinearEndomorphism.from_flat(P, F, _dense(v, m * m, F)) for v in E.kernel()]
    return SpaceResult(len(maps), maps)


def additive_derivation_space(sigma: MultiplicativeElement, lam: PosetAutomorphism) -> SpaceResult:
    """psi-derivations vanishing on every e_x (the additive ones)."""
    spec = make_spec(sigma, lam)
    P, F = spec.poset, spec.field
    m = len(P.pairs)
    E = Echelon(F, m * m)
    E.extend(leibniz_system(spec, kill_idempotents=True))
    maps = [LinearEndomorphism.from_flat(P, F, _dense(v, m * m, F)) for v in E.kernel()]
    return SpaceResult(len(maps), maps)


def inner_space(spec: AutomorphismSpec) -> SpaceResult:
    """Span of the inner derivations D_{e_uv}; basis = the independent generators."""
    P, F = spec.poset, spec.field
    m = len(P.pairs)
    E = Echelon(F, m * m)
    chosen = []
    for b in basis(P, F):
        D = inner_derivation(b, spec)
        if E.add(D.flat()):
            chosen.append(D)
    return SpaceResult(len(chosen), chosen)


def _dense(v: dict, n: int, F: Field) -> list:
    out = [F.zero] * n
    for k, a in v.items():
        out[k] = a
    return out


def span_dimension(maps, field: Field, n: Optional[int] = None) -> int:
    maps = list(maps)
    if not maps:
        return 0
    vecs = [mp.flat() if isinstance(mp, LinearEndomorphism) else mp for mp in maps]
    E = Echelon(field, n or len(vecs[0]))
    return E.extend(vecs)


def in_span(d: LinearEndomorphism, maps) -> bool:
    m2 = len(d.poset.pairs) ** 2
    E = Echelon(d.field, m2)
    E.extend(mp.flat() for mp in maps)
    return E.contains(d.flat())


def intersection_dimension(A: SpaceResult, B: SpaceResult, field: Field, n: int) -> int:
    return A.dim + B.dim - span_dimension(A.flats() + B.flats(), field, n)
