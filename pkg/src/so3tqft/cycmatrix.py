"""Dense matrices over a cyclotomic field.

CycMatrix is the carrier for every representation matrix in the package.
Entries are CycNumber; all operations are exact.  Matrix products and scalar
products route through an int64 einsum kernel (convolution of coefficient
blocks contracted against the field's reduction table) whenever a worst-case
magnitude bound shows that int64 cannot overflow, and fall back to big-int
arithmetic otherwise.
"""

from __future__ import annotations

from math import gcd

import numpy as np

from .cyclo import CycField, CycNumber, _INT64_GUARD

__all__ = ["CycMatrix"]


def _lcm(a, b):
    return a // gcd(a, b) * b


class CycMatrix:
    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: CycField, rows: int, cols: int, entries):
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = list(entries)

    # -- constructors --------------------------------------------------------

    @staticmethod
    def from_rows(field, rows):
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows")
            flat.extend(row)
        return CycMatrix(field, r, c, flat)

    @staticmethod
    def identity(field, n):
        flat = [field.one if i == j else field.zero for i in range(n) for j in range(n)]
        return CycMatrix(field, n, n, flat)

    @staticmethod
    def diagonal(field, diag):
        n = len(diag)
        flat = [diag[i] if i == j else field.zero for i in range(n) for j in range(n)]
        return CycMatrix(field, n, n, flat)

    # -- access ---------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    # -- packing for the fast kernel -------------------------------------------

    def _pack(self):
        """(int64 array (rows, cols, degree), common denominator) or None
        when the scaled coefficients do not safely fit."""
        d = self.field.degree
        den = 1
        for e in self.entries:
            den = _lcm(den, e.den)
            if den > (1 << 40):
                return None
        arr = np.zeros((self.rows, self.cols, d), dtype=np.int64)
        maxabs = 0
        for i in range(self.rows):
            for j in range(self.cols):
                e = self.entries[i * self.cols + j]
                f = den // e.den
                m = e.max_abs_coeff() * f
                if m > maxabs:
                    maxabs = m
                if m >= (1 << 50):
                    return None
                if m:
                    arr[i, j] = np.array(e.num, dtype=np.int64) * f
        return arr, den, maxabs

    def _unpack(self, arr, den):
        f = self.field
        flat = [
            CycNumber(f, arr[i, j], den)
            for i in range(arr.shape[0])
            for j in range(arr.shape[1])
        ]
        return CycMatrix(f, arr.shape[0], arr.shape[1], flat)

    # -- arithmetic -------------------------------------------------------------

    def __matmul__(self, other: "CycMatrix") -> "CycMatrix":
        if self.cols != other.rows or self.field is not other.field:
            raise ValueError("incompatible matrices")
        f = self.field
        d = f.degree
        if f.pq is not None:
            pa = self._pack()
            pb = other._pack()
            if pa is not None and pb is not None:
                a, da, ma = pa
                b, db, mb = pb
                if ma * mb * self.cols * d * (1 + d * f.red_max) < _INT64_GUARD:
                    raw = np.einsum("ijp,jkq->ikpq", a, b).reshape(
                        self.rows, other.cols, d * d
                    )
                    out = raw @ f.pq
                    return self._unpack(out, da * db)
        # exact fallback
        flat = []
        for i in range(self.rows):
            for k in range(other.cols):
                acc = f.zero
                for j in range(self.cols):
                    acc = acc + self.entries[i * self.cols + j] * other.entries[
                        j * other.cols + k
                    ]
                flat.append(acc)
        return CycMatrix(f, self.rows, other.cols, flat)

    def scalar_mul(self, c: CycNumber) -> "CycMatrix":
        f = self.field
        d = f.degree
        if f.pq is not None:
            pa = self._pack()
            if pa is not None:
                a, da, ma = pa
                mc = c.max_abs_coeff()
                if ma * mc * d * (1 + d * f.red_max) < _INT64_GUARD:
                    cv = np.array(c.num, dtype=np.int64)
                    raw = np.einsum("ijp,q->ijpq", a, cv).reshape(
                        self.rows, self.cols, d * d
                    )
                    out = raw @ f.pq
                    return self._unpack(out, da * c.den)
        return CycMatrix(f, self.rows, self.cols, [e * c for e in self.entries])

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        return CycMatrix(
            self.field,
            self.rows,
            self.cols,
            [a + b for a, b in zip(self.entries, other.entries)],
        )

    def __sub__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        return CycMatrix(
            self.field,
            self.rows,
            self.cols,
            [a - b for a, b in zip(self.entries, other.entries)],
        )

    def __neg__(self):
        return CycMatrix(self.field, self.rows, self.cols, [-e for e in self.entries])

    def matpow(self, k: int) -> "CycMatrix":
        if self.rows != self.cols:
            raise ValueError("matrix power needs a square matrix")
        if k < 0:
            raise ValueError("negative matrix powers are not supported")
        out = CycMatrix.identity(self.field, self.rows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            if k > 1:
                base = base @ base
            k >>= 1
        return out

    def conj_transpose(self) -> "CycMatrix":
        flat = [
            self.entries[j * self.cols + i].conj()
            for i in range(self.cols)
            for j in range(self.rows)
        ]
        return CycMatrix(self.field, self.cols, self.rows, flat)

    def transpose(self) -> "CycMatrix":
        flat = [
            self.entries[j * self.cols + i]
            for i in range(self.cols)
            for j in range(self.rows)
        ]
        return CycMatrix(self.field, self.cols, self.rows, flat)

    # -- predicates ---------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, CycMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self.entries)))

    def key(self):
        """Canonical hashable key (used by the group-closure hash set)."""
        return (
            self.rows,
            self.cols,
            tuple((e.num, e.den) for e in self.entries),
        )

    def is_zero(self):
        return all(e.is_zero() for e in self.entries)

    def is_identity(self):
        if self.rows != self.cols:
            return False
        f = self.field
        for i in range(self.rows):
            for j in range(self.cols):
                want = f.one if i == j else f.zero
                if self.entries[i * self.cols + j] != want:
                    return False
        return True

    def is_scalar(self):
        """Off-diagonal entries exactly zero and diagonal entries exactly equal."""
        if self.rows != self.cols or self.rows == 0:
            return False
        d0 = self.entries[0]
        for i in range(self.rows):
            for j in range(self.cols):
                e = self.entries[i * self.cols + j]
                if i == j:
                    if e != d0:
                        return False
                elif not e.is_zero():
                    return False
        return True

    def scalar_value(self):
        if not self.is_scalar():
            raise ValueError("matrix is not scalar")
        return self.entries[0]

    def is_symmetric(self):
        if self.rows != self.cols:
            return False
        return all(
            self.entries[i * self.cols + j] == self.entries[j * self.cols + i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def is_unitary(self):
        if self.rows != self.cols:
            return False
        return (self @ self.conj_transpose()).is_identity()

    def is_diagonal(self):
        return all(
            self.entries[i * self.cols + j].is_zero()
            for i in range(self.rows)
            for j in range(self.cols)
            if i != j
        )

    # -- output ---------------------------------------------------------------------

    def embed(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=complex)
        for i in range(self.rows):
            for j in range(self.cols):
                out[i, j] = self.entries[i * self.cols + j].embed()
        return out

    def to_json(self):
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [e.to_json() for e in self.entries],
        }

    def __repr__(self):
        return f"CycMatrix({self.rows}x{self.cols} over Q(zeta_{self.field.n}))"
