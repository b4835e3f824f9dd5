"""Exact matrix ranks over F2 and Q, plus the sparse matrix used by chain complexes."""

from __future__ import annotations

from math import gcd


def rank_f2(rows) -> int:
    """Rank over F2; each row is an integer bitmask of its nonzero columns."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            low = row & -row
            seen = pivots.get(low)
            if seen is None:
                pivots[low] = row
                rank += 1
                break
            row ^= seen
    return rank


def _combine(a, b, ca, cb):
    """ca*a + cb*b for dict rows, rescaled by the gcd of the result."""
    out = {}
    for col, v in a.items():
        w = ca * v + cb * b.get(col, 0)
        if w:
            out[col] = w
    for col, v in b.items():
        if col not in a:
            w = cb * v
            if w:
                out[col] = w
    if out:
        g = 0
        for v in out.values():
            g = gcd(g, v)
        if g > 1:
            out = {c: v // g for c, v in out.items()}
    return out


def rank_q(rows) -> int:
    """Rank over Q of an integer matrix; each row is a dict column -> value.

    Integer Gauss-Jordan: stored pivot rows never contain another pivot's
    column, so each incoming row needs a single elimination pass. All
    arithmetic is cross-multiplication followed by a gcd rescale, keeping
    every intermediate value an exact integer.
    """
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        row = {c: v for c, v in raw.items() if v}
        for col, prow in pivots.items():
            v = row.get(col)
            if v:
                row = _combine(row, prow, prow[col], -v)
        if not row:
            continue
        pcol = min(row, key=lambda c: (abs(row[c]), c))
        for col in list(pivots):
            prow = pivots[col]
            w = prow.get(pcol)
            if w:
                pivots[col] = _combine(prow, row, row[pcol], -w)
        pivots[pcol] = row
    return len(pivots)


class SparseMatrix:
    """Integer matrix stored by columns; entries are exact integers.

    cols[j] maps row index -> value. Over F2 only parity matters; callers
    pass field="f2" or field="q" to rank and zero tests.
    """

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols=None):
        self.nrows = nrows
        self.ncols = ncols
        self.cols = [dict(c) for c in cols] if cols is not None else [dict() for _ in range(ncols)]
        if len(self.cols) != ncols:
            raise ValueError("column count mismatch")

    def add(self, row: int, col: int, value: int) -> None:
        if not 0 <= row < self.nrows or not 0 <= col < self.ncols:
            raise IndexError((row, col))
        d = self.cols[col]
        w = d.get(row, 0) + value
        if w:
            d[row] = w
        else:
            d.pop(row, None)

    def rows(self):
        """Rows as dicts col -> value."""
        out = [dict() for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                out[i][j] = v
        return out

    def rank(self, field: str) -> int:
        if field == "f2":
            masks = [0] * self.nrows
            for j, col in enumerate(self.cols):
                bit = 1 << j
                for i, v in col.items():
                    if v & 1:
                        masks[i] |= bit
            return rank_f2(masks)
        if field == "q":
            return rank_q(self.rows())
        raise ValueError(f"unknown field {field!r}")

    def compose(self, other: "SparseMatrix") -> "SparseMatrix":
        """Matrix product self @ other (apply other first)."""
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in composition")
        out = SparseMatrix(self.nrows, other.ncols)
        for j, ocol in enumerate(other.cols):
            acc = out.cols[j]
            for k, v in ocol.items():
                for i, w in self.cols[k].items():
                    u = acc.get(i, 0) + w * v
                    if u:
                        acc[i] = u
                    else:
                        acc.pop(i, None)
        return out

    def is_zero(self, field: str) -> bool:
        if field == "f2":
            return all(v % 2 == 0 for col in self.cols for v in col.values())
        return all(not col for col in self.cols)
