"""Exact Gaussian elimination over a :class:`~skewinc.fields.Field`.

Matrices come in as dense lists of rows of raw field values; internally rows
are dicts ``{column: nonzero value}`` because the systems built elsewhere in
the package (Leibniz rule, twisted cocycle identities) have only a handful of
nonzeros per row.

The pivot of a row is its first nonzero column.  Since the reduced row echelon
form of a matrix is unique, every result here (rank, pivots, kernel basis,
particular solution) is independent of row order.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

from .errors import DimensionMismatch
from .fields import Field


def sparse(row, field: Field) -> dict:
    if isinstance(row, dict):
        return {k: v for k, v in row.items() if v != field.zero}
    return {j: v for j, v in enumerate(row) if v != field.zero}


def dense(row: dict, ncols: int, field: Field) -> list:
    out = [field.zero] * ncols
    for j, v in row.items():
        out[j] = v
    return out


class Echelon:
    """Incrementally maintained row echelon form.

    Stored rows are normalised (leading coefficient one) and keyed by pivot
    column.  They are not mutually reduced until :meth:`rref` is called.
    """

    def __init__(self, field: Field, ncols: int):
        self.field = field
        self.ncols = ncols
        self.rows: dict[int, dict] = {}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self):
        return len(self.rows)

    @property
    def pivots(self):
        return sorted(self.rows)

    def reduce(self, vec) -> dict:
        """Remainder of ``vec`` after eliminating every pivot column."""
        F = self.field
        v = sparse(vec, F)
        rows = self.rows
        heap = [k for k in v if k in rows]
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            a = v.get(c)
            if a is None:
                continue
            r = rows[c]
            F.row_axpy(v, F.neg(a), r)
            # duplicates in the heap are harmless: a cleared column is skipped
            for k in r:
                if k != c and k in rows:
                    heapq.heappush(heap, k)
        return v

    def add(self, vec) -> bool:
        """Insert ``vec``; return True iff it was independent of the rows so far."""
        v = self.reduce(vec)
        if not v:
            return False
        F = self.field
        c = min(v)
        s = F.inv(v[c])
        if s != F.one:
            v = {k: F.mul(s, x) for k, x in v.items()}
        self.rows[c] = v
        return True

    def extend(self, vecs) -> int:
        return sum(1 for v in vecs if self.add(v))

    def contains(self, vec) -> bool:
        return not self.reduce(vec)

    def rref(self) -> dict[int, dict]:
        """Fully reduced rows keyed by pivot (also stored back in place)."""
        F = self.field
        piv = sorted(self.rows)
        for c in reversed(piv):
            r = self.rows[c]
            for c2 in piv:
                if c2 >= c:
                    break
                r2 = self.rows[c2]
                a = r2.get(c)
                if a is not None:
                    F.row_axpy(r2, F.neg(a), r)
        return self.rows

    def kernel(self) -> list[dict]:
        """Basis of the null space of the row space, one vector per free column."""
        F = self.field
        rows = self.rref()
        free = [j for j in range(self.ncols) if j not in rows]
        # column j of the RREF, restricted to pivot rows
        col = {j: [] for j in free}
        for c, r in rows.items():
            for j, a in r.items():
                if j != c:
                    col[j].append((c, a))
        out = []
        for j in free:
            v = {j: F.one}
            for c, a in col[j]:
                v[c] = F.neg(a)
            out.append(v)
        return out


@dataclass
class LinearSolution:
    rank: int
    pivots: list
    kernel: list                      # dense kernel basis vectors
    particular: Optional[list] = None
    consistent: bool = True
    rref: list = dc_field(default_factory=list, repr=False)

    @property
    def nullity(self):
        return len(self.kernel)


def solve_linear(field: Field, A: Sequence[Sequence], b: Optional[Sequence] = None,
                 ncols: Optional[int] = None) -> LinearSolution:
    """Rank, kernel basis and (when ``b`` is given) a particular solution of Ax=b.

    The particular solution sets every free variable to zero. If the system is
    inconsistent, ``consistent`` is False and ``particular`` is None.
    """
    rows = list(A)
    if ncols is None:
        if not rows:
            raise DimensionMismatch("cannot infer the column count of an empty matrix")
        ncols = len(rows[0])
    for r in rows:
        if not isinstance(r, dict) and len(r) != ncols:
            raise DimensionMismatch("ragged matrix: row of length %d, expected %d"
                                    % (len(r), ncols))
    if b is not None and len(b) != len(rows):
        raise DimensionMismatch("right-hand side has %d entries for %d rows"
                                % (len(b), len(rows)))
    if b is None:
        E = Echelon(field, ncols)
        E.extend(rows)
        kern = [dense(v, ncols, field) for v in E.kernel()]
        return LinearSolution(E.rank, E.pivots, kern,
                              rref=[dense(E.rows[c], ncols, field) for c in E.pivots])

    E = Echelon(field, ncols + 1)
    for r, bi in zip(rows, b):
        v = sparse(r, field)
        if bi != field.zero:
            v[ncols] = bi
        E.add(v)
    rr = E.rref()
    consistent = ncols not in rr
    pivots = [c for c in sorted(rr) if c < ncols]
    # kernel of A alone: drop the augmented column from the picture
    A_only = Echelon(field, ncols)
    for c in pivots:
        A_only.rows[c] = {k: x for k, x in rr[c].items() if k < ncols}
    kern = [dense(v, ncols, field) for v in A_only.kernel()]
    part = None
    if consistent:
        part = [field.zero] * ncols
        for c in pivots:
            part[c] = rr[c].get(ncols, field.zero)
    return LinearSolution(len(pivots), pivots, kern, part, consistent,
                          rref=[dense(A_only.rows[c], ncols, field) for c in pivots])


def rank(field: Field, A, ncols=None) -> int:
    rows = list(A)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    E = Echelon(field, ncols)
    E.extend(rows)
    return E.rank


def mat_mul(field: Field, A, B):
    """Dense product of raw-valued matrices."""
    if A and len(A[0]) != len(B):
        raise DimensionMismatch("%dx%d times %dx?" % (len(A), len(A[0]), len(B)))
    ncols = len(B[0]) if B else 0
    add, mul, zero = field.add, field.mul, field.zero
    out = []
    for row in A:
        acc = [zero] * ncols
        for k, a in enumerate(row):
            if a == zero:
                continue
            for j, bkj in enumerate(B[k]):
                if bkj != zero:
                    acc[j] = add(acc[j], mul(a, bkj))
        out.append(acc)
    return out


def determinant(field: Field, A) -> object:
    """Determinant by elimination (square matrices only)."""
    n = len(A)
    if any(len(r) != n for r in A):
        raise DimensionMismatch("determinant of a non-square matrix")
    M = [list(r) for r in A]
    det = field.one
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != field.zero), None)
        if piv is None:
            return field.zero
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = field.neg(det)
        det = field.mul(det, M[c][c])
        inv = field.inv(M[c][c])
        for i in range(c + 1, n):
            if M[i][c] != field.zero:
                f = field.mul(M[i][c], inv)
                M[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(M[i], M[c])]
    return det


def intersection_dimension(field: Field, U, V, ncols: int) -> int:
    """dim(span U  and  span V) via dim U + dim V - dim(U + V)."""
    a = rank(field, U, ncols)
    b = rank(field, V, ncols)
    return a + b - rank(field, list(U) + list(V), ncols)
