"""Linear algebra over GF(2) with rows stored as bit masks."""

from __future__ import annotations

from .errors import DimensionMismatch


class F2Matrix:
    """Row-major bit matrix; row i is the integer whose bit j is entry (i, j)."""

    def __init__(self, rows, cols, bits=None):
        self.rows = rows
        self.cols = cols
        self.bits = list(bits) if bits is not None else [0] * rows
        assert len(self.bits) == rows

    @classmethod
    def from_lists(cls, rows_of_bits):
        rows = len(rows_of_bits)
        cols = len(rows_of_bits[0]) if rows else 0
        bits = []
        for row in rows_of_bits:
            assert len(row) == cols
            m = 0
            for j, v in enumerate(row):
                if v & 1:
                    m |= 1 << j
            bits.append(m)
        return cls(rows, cols, bits)

    def row_list(self, i):
        return [(self.bits[i] >> j) & 1 for j in range(self.cols)]

    def __repr__(self):
        return f"F2Matrix({[self.row_list(i) for i in range(self.rows)]})"


def solve_f2(M, rhs):
    """Particular solution of M x = rhs over GF(2), or None.

    Deterministic: Gaussian elimination with first-pivot selection, all
    free variables set to 0.
    """
    if len(rhs) != M.rows:
        raise DimensionMismatch(f"rhs length {len(rhs)} != {M.rows} rows")
    rows = list(M.bits)
    b = [v & 1 for v in rhs]
    n, cols = M.rows, M.cols
    pivot_of_col = {}
    r = 0
    for c in range(cols):
        piv = next(
            (i for i in range(r, n) if (rows[i] >> c) & 1), None
        )
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        b[r], b[piv] = b[piv], b[r]
        for i in range(n):
            if i != r and (rows[i] >> c) & 1:
                rows[i] ^= rows[r]
                b[i] ^= b[r]
        pivot_of_col[c] = r
        r += 1
    for i in range(r, n):
        if b[i]:
            return None
    x = [0] * cols
    for c, i in pivot_of_col.items():
        x[c] = b[i]
    return x
