"""Random test instances: posets, multiplicative elements, automorphisms.

All generators take an explicit ``random.Random`` so runs are reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import lcm

from .derivations import AdditiveElement, additive_basis
from .fields import Field, PrimeField, QQ
from .incidence import (AutomorphismSpec, IncidenceElement, MultiplicativeElement,
                        delta_identity, fractional_from_eta, hadamard)
from .linalg import Echelon
from .poset import Poset, automorphisms, poset_from_covers


def random_poset(rng: random.Random, max_size: int = 5, min_size: int = 1,
                 density: float | None = None) -> Poset:
    """Closure of a random DAG on 1..n; canonical order is not a linear extension."""
    n = rng.randint(min_size, max_size)
    q = rng.uniform(0.2, 0.6) if density is None else density
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    rel = [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < q]
    return poset_from_covers(range(1, n + 1), rel)


def primitive_root(F: PrimeField) -> int:
    p = F.p
    if p == 2:
        return 1
    order = p - 1
    factors = [q for q in range(2, order + 1) if order % q == 0
               and all(q % r for r in range(2, q))]
    for g in range(2, p):
        if all(pow(g, order // q, p) != 1 for q in factors):
            return g
    raise ArithmeticError("no primitive root")


def _exponent_lattice(p: Poset):
    # integer solutions a of a(x,z) = a(x,y) + a(y,z) on strict pairs
    strict = [pr for pr in p.pairs if pr[0] != pr[1]]
    col = {pr: i for i, pr in enumerate(strict)}
    rows = []
    for x, z in strict:
        for y in p.interval(x, z):
            if y in (x, z):
                continue
            rows.append({col[(x, z)]: Fraction(1), col[(x, y)]: Fraction(-1),
                         col[(y, z)]: Fraction(-1)})
    if not strict:
        return strict, []
    E = Echelon(QQ, len(strict))
    E.extend(rows)
    basis = []
    for v in E.kernel():
        den = lcm(*(a.denominator for a in v.values()))
        basis.append({k: int(a * den) for k, a in v.items()})
    return strict, basis


def random_multiplicative(rng: random.Random, p: Poset, F: Field,
                          spread: int = 3) -> MultiplicativeElement:
    """g^a for a random integer exponent solution, times a random fractional element.

    g is a primitive root for F_p and 2 for Q.
    """
    strict, basis = _exponent_lattice(p)
    a = {pr: 0 for pr in strict}
    for b in basis:
        c = rng.randint(-spread, spread)
        for k, v in b.items():
            a[strict[k]] += c * v
    if isinstance(F, PrimeField):
        g = primitive_root(F)
        order = F.p - 1
        val = {pr: pow(g, e % order, F.p) if order else 1 for pr, e in a.items()}
    else:
        val = {pr: Fraction(2) ** e for pr, e in a.items()}
    ent = {(x, x): F.one for x in p.elements}
    ent.update({pr: F.coerce(v) for pr, v in val.items()})
    base = MultiplicativeElement(IncidenceElement(p, F, ent))
    return base.star(random_fractional(rng, p, F))


def random_fractional(rng: random.Random, p: Poset, F: Field) -> MultiplicativeElement:
    eta = {x: F.random(rng, nonzero=True) for x in p.elements}
    return fractional_from_eta(p, F, eta)


def random_element(rng: random.Random, p: Poset, F: Field) -> IncidenceElement:
    return IncidenceElement(p, F, {pr: F.random(rng) for pr in p.pairs})


def random_invertible(rng: random.Random, p: Poset, F: Field) -> IncidenceElement:
    return IncidenceElement(p, F, {pr: F.random(rng, nonzero=pr[0] == pr[1]) for pr in p.pairs})


def random_automorphism(rng: random.Random, p: Poset):
    return rng.choice(automorphisms(p))


def random_spec(rng: random.Random, p: Poset, F: Field, with_beta: bool = True) -> AutomorphismSpec:
    sigma = random_multiplicative(rng, p, F)
    lam = random_automorphism(rng, p)
    beta = random_invertible(rng, p, F) if with_beta else delta_identity(p, F)
    return AutomorphismSpec(beta, sigma, lam)


def random_instance(rng: random.Random, F: Field, max_size: int = 5, with_beta: bool = True,
                    min_size: int = 1):
    p = random_poset(rng, max_size, min_size)
    return p, random_spec(rng, p, F, with_beta)


def random_additive(rng: random.Random, sigma: MultiplicativeElement, lam) -> AdditiveElement:
    F = sigma.field
    p = sigma.poset
    tau = IncidenceElement(p, F, {})
    for b in additive_basis(sigma, lam):
        tau = tau + b.tau.scale(F.random(rng))
    return AdditiveElement(tau, sigma, lam)


def twist(sigma: MultiplicativeElement, eta: MultiplicativeElement) -> MultiplicativeElement:
    return MultiplicativeElement(hadamard(sigma.sigma, eta.sigma))
