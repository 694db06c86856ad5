"""Sparse exact-rational matrices and nullspaces.

Matrices are dictionaries of nonzero entries over ``fractions.Fraction``;
blocks in this problem stay small (tens of rows), so elimination works on a
dense copy.  All results are exact: kernels found here are certificates, not
approximations.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionError


class RatMat:
    """Sparse matrix with exact rational entries and a fixed shape."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows, ncols, entries=None):
        if nrows < 0 or ncols < 0:
            raise ValueError("matrix shape must be nonnegative")
        self.nrows = nrows
        self.ncols = ncols
        self.entries = {}
        if entries:
            for (i, j), value in entries.items():
                self[i, j] = value

    @classmethod
    def identity(cls, n, scale=1):
        mat = cls(n, n)
        if scale != 0:
            for i in range(n):
                mat.entries[(i, i)] = Fraction(scale)
        return mat

    def __getitem__(self, key):
        return self.entries.get(key, Fraction(0))

    def __setitem__(self, key, value):
        i, j = key
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(f"entry {key} outside shape {self.shape}")
        value = Fraction(value)
        if value == 0:
            self.entries.pop(key, None)
        else:
            self.entries[key] = value

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_same_shape(other)
        out = RatMat(self.nrows, self.ncols)
        out.entries = dict(self.entries)
        for key, value in other.entries.items():
            out[key] = out[key] + value
        return out

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c):
        c = Fraction(c)
        out = RatMat(self.nrows, self.ncols)
        if c != 0:
            out.entries = {key: c * v for key, v in self.entries.items()}
        return out

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise DimensionError(
                f"cannot multiply shapes {self.shape} and {other.shape}"
            )
        # group the right factor by row to keep the product sparse
        by_row = {}
        for (i, j), value in other.entries.items():
            by_row.setdefault(i, []).append((j, value))
        out = RatMat(self.nrows, other.ncols)
        acc = {}
        for (i, l), a in self.entries.items():
            for j, b in by_row.get(l, ()):
                key = (i, j)
                acc[key] = acc.get(key, Fraction(0)) + a * b
        for key, value in acc.items():
            if value != 0:
                out.entries[key] = value
        return out

    def matvec(self, vec):
        if len(vec) != self.ncols:
            raise DimensionError(
                f"vector of length {len(vec)} against {self.ncols} columns"
            )
        out = [Fraction(0)] * self.nrows
        for (i, j), value in self.entries.items():
            out[i] += value * vec[j]
        return out

    def sorted_entries(self):
        return sorted(self.entries.items())

    def dense(self):
        rows = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for (i, j), value in self.entries.items():
            rows[i][j] = value
        return rows

    def __eq__(self, other):
        if not isinstance(other, RatMat):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.shape, frozenset(self.entries.items())))

    def __repr__(self):
        return f"RatMat({self.nrows}x{self.ncols}, {len(self.entries)} entries)"

    @classmethod
    def vstack(cls, mats):
        mats = list(mats)
        if not mats:
            raise ValueError("vstack of no matrices")
        ncols = mats[0].ncols
        for m in mats:
            if m.ncols != ncols:
                raise DimensionError("vstack requires equal column counts")
        out = cls(sum(m.nrows for m in mats), ncols)
        offset = 0
        for m in mats:
            for (i, j), value in m.entries.items():
                out.entries[(offset + i, j)] = value
            offset += m.nrows
        return out

    def rref(self):
        """Reduced row echelon form; returns (dense rows, pivot column list)."""
        rows = self.dense()
        pivots = []
        r = 0
        for c in range(self.ncols):
            pivot_row = None
            for i in range(r, self.nrows):
                if rows[i][c] != 0:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            inv = 1 / rows[r][c]
            rows[r] = [v * inv for v in rows[r]]
            for i in range(self.nrows):
                if i != r and rows[i][c] != 0:
                    factor = rows[i][c]
                    rows[i] = [vi - factor * vr for vi, vr in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        return rows, pivots

    def rank(self):
        return len(self.rref()[1])

    def nullspace(self):
        """Canonical kernel basis: one vector per free column, unit there.

        The basis is deterministic (free columns in increasing order) and
        exact; callers re-verify M v = 0 where the kernel is a claim.
        """
        rows, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for fc in free:
            vec = [Fraction(0)] * self.ncols
            vec[fc] = Fraction(1)
            for r, pc in enumerate(pivots):
                vec[pc] = -rows[r][fc]
            basis.append(vec)
        return basis
