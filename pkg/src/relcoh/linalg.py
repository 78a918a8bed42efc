"""Sparse exact linear algebra over QQ or GF(p).

Vectors and matrix rows are dicts ``{column: nonzero value}``.
"""

from __future__ import annotations

from .poly import Field


class Echelon:
    """Incrementally maintained row echelon form (pivot = smallest column)."""

    def __init__(self, field: Field):
        self.field = field
        self.pivots: dict[int, dict] = {}

    def _reduce(self, row):
        F = self.field
        row = {c: F(v) for c, v in row.items() if v}
        while row:
            c = min(row)
            prow = self.pivots.get(c)
            if prow is None:
                return row, c
            factor = row[c]
            for k, v in prow.items():
                s = F.add(row.get(k, 0), F.neg(F.mul(factor, v)))
                if s:
                    row[k] = s
                else:
                    row.pop(k, None)
        return None, None

    def add(self, row) -> bool:
        """Insert a row; False if it was dependent on the rows so far."""
        row, c = self._reduce(row)
        if row is None:
            return False
        inv = self.field.inv(row[c])
        self.pivots[c] = {k: self.field.mul(inv, v) for k, v in row.items()}
        return True

    def contains(self, row) -> bool:
        return self._reduce(row)[0] is None

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduced_rows(self):
        """Fully reduced echelon form: pivot column -> row."""
        F = self.field
        out = {}
        for c in sorted(self.pivots, reverse=True):
            row = dict(self.pivots[c])
            for k in [k for k in row if k != c and k in out]:
                factor = row.get(k)
                if not factor:
                    continue
                for j, v in out[k].items():
                    s = F.add(row.get(j, 0), F.neg(F.mul(factor, v)))
                    if s:
                        row[j] = s
                    else:
                        row.pop(j, None)
            out[c] = row
        return out


def rank(rows, field: Field) -> int:
    ech = Echelon(field)
    for r in rows:
        ech.add(r)
    return ech.rank


def nullspace(rows, ncols: int, field: Field) -> list[dict]:
    """Basis of {v : A v = 0} where A has the given rows over columns 0..ncols-1."""
    ech = Echelon(field)
    for r in rows:
        ech.add(r)
    rref = ech.reduced_rows()
    F = field
    basis = []
    for free in range(ncols):
        if free in rref:
            continue
        v = {free: F(1)}
        for p, row in rref.items():
            x = row.get(free)
            if x:
                v[p] = F.neg(x)
        basis.append(v)
    return basis


def transpose(rows, ncols: int) -> list[dict]:
    cols = [dict() for _ in range(ncols)]
    for i, r in enumerate(rows):
        for j, v in r.items():
            cols[j][i] = v
    return cols


def matmul(A, B, field: Field, ncols_B: int) -> list[dict]:
    """A (rows over k) times B (rows over ncols_B); B given by rows indexed by k."""
    F = field
    out = []
    for r in A:
        acc: dict = {}
        for k, a in r.items():
            for j, b in B[k].items():
                s = F.add(acc.get(j, 0), F.mul(a, b))
                if s:
                    acc[j] = s
                else:
                    acc.pop(j, None)
        out.append(acc)
    return out


def apply(rows, vec, field: Field) -> dict:
    """A v for A given by rows; result indexed by row number."""
    F = field
    out = {}
    for i, r in enumerate(rows):
        s = 0
        for k, a in r.items():
            b = vec.get(k)
            if b:
                s = F.add(s, F.mul(a, b))
        if s:
            out[i] = s
    return out
