"""The (sigma, lambda)-twisted cochain complex of weak chains.

Degree n cochains live on (n+1)-tuples x0 <= ... <= xn with lambda(x0) <= xn.
The differential is the alternating sum of faces, where face 0 drops x0 and
multiplies by sigma(lambda x0, lambda x1) and face i >= 1 drops x_i.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .derivations import (additive_derivation_space, derivation_space, inner_space,
                          span_dimension)
from .fields import Field
from .incidence import AutomorphismSpec, MultiplicativeElement, multiplicative_zeta
from .linalg import Echelon, dense, mat_mul
from .poset import Poset, PosetAutomorphism, identity_automorphism


@dataclass(frozen=True)
class CochainSpace:
    degree: int
    basis: tuple
    index: dict = dc_field(compare=False, repr=False)

    def __len__(self):
        return len(self.basis)


def cochain_basis(p: Poset, lam: PosetAutomorphism, n: int, restricted: bool = True) -> CochainSpace:
    """Weak (n+1)-chains, those with lambda(x0) <= xn unless ``restricted`` is False."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    chains = p.multichains(n)
    if restricted:
        chains = tuple(c for c in chains if p.le(lam(c[0]), c[-1]))
    return CochainSpace(n, chains, {c: i for i, c in enumerate(chains)})


def face_matrix(p: Poset, sigma: MultiplicativeElement, lam: PosetAutomorphism,
                n: int, i: int, restricted: bool = False):
    """Matrix of the i-th face map from degree n to degree n+1 cochains."""
    F = sigma.field
    src = cochain_basis(p, lam, n, restricted)
    dst = cochain_basis(p, lam, n + 1, restricted)
    M = [[F.zero] * len(src) for _ in dst.basis]
    for r, t in enumerate(dst.basis):
        s = t[:i] + t[i + 1:]
        c = src.index.get(s)
        if c is None:
            continue
        coef = sigma(lam(t[0]), lam(t[1])) if i == 0 else F.one
        M[r][c] = F.add(M[r][c], coef)
    return M


def differential_matrix(p: Poset, sigma: MultiplicativeElement, lam: PosetAutomorphism,
                        n: int, restricted: bool = True):
    """Matrix of the degree-n differential; rows index degree n+1 chains."""
    F = sigma.field
    src = cochain_basis(p, lam, n, restricted)
    dst = cochain_basis(p, lam, n + 1, restricted)
    M = [[F.zero] * len(src) for _ in dst.basis]
    minus_one = F.neg(F.one)
    for r, t in enumerate(dst.basis):
        row = M[r]
        c = src.index.get(t[1:])
        if c is not None:
            row[c] = F.add(row[c], sigma(lam(t[0]), lam(t[1])))
        for i in range(1, n + 2):
            c = src.index.get(t[:i] + t[i + 1:])
            if c is not None:
                row[c] = F.add(row[c], F.one if i % 2 == 0 else minus_one)
    return M


@dataclass
class CohomologyResult:
    degree: int
    dim_Z: int
    dim_B: int
    dim_H: int
    representatives: list
    space: Optional[CochainSpace] = None

    def as_dict(self, field: Optional[Field] = None):
        fmt = field.format if field is not None else str
        out = {"degree": self.degree, "dim_Z": self.dim_Z, "dim_B": self.dim_B,
               "dim_H": self.dim_H,
               "representatives": [[fmt(v) for v in rep] for rep in self.representatives]}
        if self.space is not None:
            out["basis"] = [[str(x) for x in c] for c in self.space.basis]
        return out


def _columns(M, ncols):
    return [[row[j] for row in M] for j in range(ncols)]


def cohomology(p: Poset, sigma: MultiplicativeElement, lam: PosetAutomorphism, n: int) -> CohomologyResult:
    F = sigma.field
    space = cochain_basis(p, lam, n)
    dim_C = len(space)
    D = differential_matrix(p, sigma, lam, n)
    Z = Echelon(F, dim_C)
    Z.extend(D)
    kernel = Z.kernel() if dim_C else []
    B = Echelon(F, dim_C)
    if n > 0:
        prev_dim = len(cochain_basis(p, lam, n - 1))
        B.extend(_columns(differential_matrix(p, sigma, lam, n - 1), prev_dim))
    dim_B = B.rank
    reps = []
    for v in kernel:
        if B.add(v):
            reps.append(dense(v, dim_C, F))
    return CohomologyResult(n, len(kernel), dim_B, len(kernel) - dim_B, reps, space)


def cohomology_dims(p, sigma, lam, max_degree: int = 3):
    return [cohomology(p, sigma, lam, n).dim_H for n in range(max_degree + 1)]


def is_cocycle(p, sigma, lam, n, vec) -> bool:
    D = differential_matrix(p, sigma, lam, n)
    F = sigma.field
    return all(v == F.zero for row in mat_mul(F, D, [[x] for x in vec]) for v in row)


def order_complex_h1(p: Poset, field: Field) -> int:
    """First cohomology of the order complex with constant coefficients.

    Independent of the weak-chain machinery: the cochains live on strict
    chains (simplices) and the coboundary is the textbook alternating sum.
    """
    simp = [p.strict_chains(k) for k in (1, 2, 3)]
    idx = [{c: i for i, c in enumerate(s)} for s in simp]

    def coboundary(k):
        # from k-simplices (k+1 elements) to (k+1)-simplices
        M = []
        for t in simp[k + 1]:
            row = [field.zero] * len(simp[k])
            for i in range(len(t)):
                j = idx[k][t[:i] + t[i + 1:]]
                row[j] = field.add(row[j], field.one if i % 2 == 0 else field.neg(field.one))
            M.append(row)
        return M

    d0, d1 = coboundary(0), coboundary(1)
    n1 = len(simp[1])
    Z = Echelon(field, n1)
    Z.extend(d1)
    dim_Z = n1 - Z.rank
    B = Echelon(field, n1)
    B.extend(_columns(d0, len(simp[0])))
    return dim_Z - B.rank


@dataclass
class CrossCheckReport:
    dim_phiD: int
    dim_iphiD: int
    dim_H1: int
    dim_Z1: int
    dim_B1: int
    dim_apsiD: int
    dim_ipsiD_cap_apsiD: int

    @property
    def quotient_matches(self):
        return self.dim_phiD - self.dim_iphiD == self.dim_H1

    @property
    def additive_matches(self):
        return self.dim_apsiD == self.dim_Z1

    @property
    def potential_matches(self):
        return self.dim_ipsiD_cap_apsiD == self.dim_B1

    @property
    def ok(self):
        return self.quotient_matches and self.additive_matches and self.potential_matches

    def as_dict(self):
        return {"dim_phiD": self.dim_phiD, "dim_iphiD": self.dim_iphiD,
                "dim_phiD_minus_iphiD": self.dim_phiD - self.dim_iphiD,
                "dim_H1": self.dim_H1, "dim_Z1": self.dim_Z1, "dim_B1": self.dim_B1,
                "dim_apsiD": self.dim_apsiD, "dim_ipsiD_cap_apsiD": self.dim_ipsiD_cap_apsiD,
                "ok": self.ok}


def h1_cross_check(spec: AutomorphismSpec) -> CrossCheckReport:
    """Compare derivation-space dimensions with degree-1 cohomology."""
    P, F = spec.poset, spec.field
    m2 = len(P.pairs) ** 2
    phiD = derivation_space(spec)
    iphiD = inner_space(spec)
    H1 = cohomology(P, spec.sigma, spec.lam, 1)
    psi = spec.psi
    ipsiD = inner_space(psi) if not spec.is_psi else iphiD
    apsiD = additive_derivation_space(spec.sigma, spec.lam)
    cap = ipsiD.dim + apsiD.dim - span_dimension(ipsiD.flats() + apsiD.flats(), F, m2)
    return CrossCheckReport(phiD.dim, iphiD.dim, H1.dim_H, H1.dim_Z, H1.dim_B, apsiD.dim, cap)


def zeta_identity_h1(p: Poset, field: Field) -> int:
    return cohomology(p, multiplicative_zeta(p, field), identity_automorphism(p), 1).dim_H
