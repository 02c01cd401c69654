"""Exact Gaussian elimination over RadicalScalar.

Pivots are chosen among the admissible entries by fewest radicand terms so
that coefficient growth stays small.  Rank decisions are exact.
"""

from __future__ import annotations

from typing import Hashable, Sequence

from .scalar import ONE, ZERO, RadicalScalar, as_scalar

__all__ = ["rref", "nullspace", "rank", "inverse_matrix", "SpanSolver", "matmul"]

Matrix = list[list[RadicalScalar]]


def _weight(x: RadicalScalar) -> int:
    return x.nterms()


def rref(matrix: Sequence[Sequence], ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    rows = [[as_scalar(x) for x in row] for row in matrix]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        cand = [i for i in range(r, len(rows)) if rows[i][col]]
        if not cand:
            continue
        best = min(cand, key=lambda i: (_weight(rows[i][col]), i))
        rows[r], rows[best] = rows[best], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [x * inv if x else x for x in rows[r]]
        pr = rows[r]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][col]
                if f:
                    rows[i] = [x - f * p if p else x for x, p in zip(rows[i], pr)]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix: Sequence[Sequence]) -> int:
    if not matrix:
        return 0
    return len(rref(matrix)[1])


def nullspace(matrix: Sequence[Sequence], ncols: int | None = None) -> list[list[RadicalScalar]]:
    """Kernel basis; each vector has a 1 in its own free column."""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    if not matrix:
        return [[ONE if i == j else ZERO for i in range(ncols)] for j in range(ncols)]
    R, pivots = rref(matrix, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -R[i][f]
        basis.append(v)
    return basis


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    out = [[ZERO] * p for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(m):
            x = ai[k]
            if not x:
                continue
            bk = b[k]
            for j in range(p):
                if bk[j]:
                    oi[j] = oi[j] + x * bk[j]
    return out


def inverse_matrix(matrix: Sequence[Sequence]) -> Matrix:
    n = len(matrix)
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(matrix)]
    R, pivots = rref(aug, n)
    if pivots != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R]


class SpanSolver:
    """Incremental echelon basis of sparse vectors with coordinate recovery.

    Vectors are dicts ``key -> RadicalScalar``.  ``coordinates(v)`` returns the
    expansion of ``v`` in the *original* vectors, or ``None`` when ``v`` lies
    outside their span.
    """

    def __init__(self, vectors: Sequence[dict] = ()):
        self._pivots: list[Hashable] = []
        self._rows: list[dict] = []
        self._transforms: list[dict] = []
        self.dependent: list[int] = []
        self.size = 0
        for v in vectors:
            self.add(v)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(self, v: dict) -> tuple[dict, dict]:
        v = dict(v)
        coeffs: dict = {}
        for p, row, tr in zip(self._pivots, self._rows, self._transforms):
            f = v.get(p)
            if not f:
                continue
            for k, x in row.items():
                y = v.get(k, ZERO) - f * x
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
            for k, x in tr.items():
                y = coeffs.get(k, ZERO) + f * x
                if y:
                    coeffs[k] = y
                else:
                    coeffs.pop(k, None)
        return v, coeffs

    def add(self, v: dict) -> bool:
        """Append a vector; returns False (and records it) if dependent."""
        index = self.size
        self.size += 1
        residual, coeffs = self._reduce(v)
        if not residual:
            self.dependent.append(index)
            return False
        piv = min(residual, key=lambda k: (_weight(residual[k]), _sort_key(k)))
        inv = residual[piv].inverse()
        row = {k: x * inv for k, x in residual.items()}
        # transform: row = (e_index - coeffs) * inv
        tr = {k: -x * inv for k, x in coeffs.items()}
        tr[index] = inv
        self._pivots.append(piv)
        self._rows.append(row)
        self._transforms.append(tr)
        return True

    def residual(self, v: dict) -> dict:
        return self._reduce(v)[0]

    def contains(self, v: dict) -> bool:
        return not self._reduce(v)[0]

    def coordinates(self, v: dict) -> list[RadicalScalar] | None:
        residual, coeffs = self._reduce(v)
        if residual:
            return None
        return [coeffs.get(i, ZERO) for i in range(self.size)]


def _sort_key(k):
    return repr(k) if not isinstance(k, (int, tuple)) else k
