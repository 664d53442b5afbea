"""Exact linear algebra over any field object from :mod:`lrcav.galois`.

A "field" here is anything with ``zero``, ``one``, ``add``, ``mul`` and
``inv`` (both BaseField and FieldTower qualify).  Matrices are plain
row-major lists of field elements; all operations are pure and
deterministic (first nonzero pivot, smallest column first).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence


@dataclass
class Matrix:
    field: object
    rows: int
    cols: int
    data: List[List[object]]

    @classmethod
    def from_rows(cls, field, rows: Sequence[Sequence[object]], cols: int | None = None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(field, len(rows), cols, rows)

    @classmethod
    def zeros(cls, field, rows: int, cols: int):
        z = field.zero
        return cls(field, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field, n: int):
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.data[i][i] = field.one
        return m

    def copy(self) -> "Matrix":
        return Matrix(self.field, self.rows, self.cols, [list(r) for r in self.data])

    def transpose(self) -> "Matrix":
        data = [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return Matrix(self.field, self.cols, self.rows, data)

    def row(self, i: int) -> List[object]:
        return self.data[i]

    def col(self, j: int) -> List[object]:
        return [self.data[i][j] for i in range(self.rows)]

    def mul_vec(self, v: Sequence[object]) -> List[object]:
        f = self.field
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        out = []
        for row in self.data:
            acc = f.zero
            for a, x in zip(row, v):
                if a != f.zero and x != f.zero:
                    acc = f.add(acc, f.mul(a, x))
            out.append(acc)
        return out

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        f = self.field
        out = Matrix.zeros(f, self.rows, other.cols)
        for i in range(self.rows):
            for k in range(self.cols):
                a = self.data[i][k]
                if a == f.zero:
                    continue
                orow = other.data[k]
                trow = out.data[i]
                for j in range(other.cols):
                    if orow[j] != f.zero:
                        trow[j] = f.add(trow[j], f.mul(a, orow[j]))
        return out


def rref(M: Matrix):
    """Reduced row echelon form.  Returns (R, rank, pivot columns)."""
    f = M.field
    R = M.copy()
    pivots: List[int] = []
    prow = 0
    for col in range(R.cols):
        pr = None
        for i in range(prow, R.rows):
            if R.data[i][col] != f.zero:
                pr = i
                break
        if pr is None:
            continue
        R.data[prow], R.data[pr] = R.data[pr], R.data[prow]
        inv = f.inv(R.data[prow][col])
        if inv != f.one:
            R.data[prow] = [f.mul(inv, x) for x in R.data[prow]]
        for i in range(R.rows):
            if i != prow and R.data[i][col] != f.zero:
                c = R.data[i][col]
                R.data[i] = [f.add(x, f.mul(c, y))
                             for x, y in zip(R.data[i], R.data[prow])]
        pivots.append(col)
        prow += 1
        if prow == R.rows:
            break
    return R, len(pivots), pivots


def rank(M: Matrix) -> int:
    return rref(M)[1]


def solve(A: Matrix, b: Sequence[object]):
    """One solution of Ax = b (free variables zero), or None if inconsistent."""
    if len(b) != A.rows:
        raise ValueError("dimension mismatch")
    f = A.field
    aug = Matrix.from_rows(f, [list(r) + [bv] for r, bv in zip(A.data, b)],
                           A.cols + 1)
    R, rk, pivots = rref(aug)
    if A.cols in pivots:
        return None
    x = [f.zero] * A.cols
    for i, col in enumerate(pivots):
        x[col] = R.data[i][A.cols]
    return x


def nullspace(M: Matrix) -> List[List[object]]:
    """Basis of the right nullspace (cols - rank vectors)."""
    f = M.field
    R, rk, pivots = rref(M)
    free = [j for j in range(M.cols) if j not in set(pivots)]
    basis = []
    for fc in free:
        v = [f.zero] * M.cols
        v[fc] = f.one
        for i, pc in enumerate(pivots):
            # char 2: negation is identity
            v[pc] = R.data[i][fc]
        basis.append(v)
    return basis


def rank_over_base(tower, vectors) -> int:
    """Rank of extension-field elements viewed as base-field coordinate rows."""
    vectors = list(vectors)
    if not vectors:
        return 0
    if tower.base.w == 1:
        return _gf2_rank([sum(bit << i for i, bit in enumerate(v)) for v in vectors])
    M = Matrix.from_rows(tower.base, [list(v) for v in vectors], tower.m)
    return rank(M)


def _gf2_rank(rows: List[int]) -> int:
    """Rank of bit-packed GF(2) rows (fast path)."""
    rk = 0
    basis: List[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
            rk += 1
    return rk


class Gf2RankTracker:
    """Incremental GF(2) rank of bit-packed rows (greedy survivor selection)."""

    def __init__(self):
        self.basis: List[int] = []

    @property
    def rank(self) -> int:
        return len(self.basis)

    def add(self, row: int) -> bool:
        """Add a row; True iff it increased the rank."""
        for b in self.basis:
            row = min(row, row ^ b)
        if row:
            self.basis.append(row)
            self.basis.sort(reverse=True)
            return True
        return False
