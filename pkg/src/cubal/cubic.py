"""Cubic matrices with exact entries and the operation-parameterized product.

A cubic matrix is a dense m*m*m array over an exact scalar field; the basis
element with a single 1 at position (i, j, k) is written E(i, j, k).  The
product attached to an associative operation a multiplies basis elements by

    E(i, j, k) * E(l, n, r)  =  E(i, a(j, n), r)   when k = l, else 0,

and extends bilinearly: entry (i, j, r) of a product is the sum of
A[i, l, k] * B[k, n, r] over all k and all pairs (l, n) with a(l, n) = j.
"""

from __future__ import annotations

from . import linalg
from .errors import FormatError
from .operations import Operation


class CubicMatrix:
    """An immutable m x m x m array of exact scalars."""

    __slots__ = ("m", "entries", "_nz")

    def __init__(self, m: int, entries):
        entries = tuple(entries)
        if len(entries) != m * m * m:
            raise FormatError(f"expected {m}**3 entries, got {len(entries)}")
        self.m = m
        self.entries = entries
        self._nz = None

    @classmethod
    def zero(cls, m: int) -> "CubicMatrix":
        return cls(m, (0,) * (m * m * m))

    @classmethod
    def basis(cls, m: int, i: int, j: int, k: int) -> "CubicMatrix":
        """E(i, j, k): the single-entry matrix with a 1 at (i, j, k)."""
        for idx in (i, j, k):
            if not 1 <= idx <= m:
                raise FormatError(f"index {idx} outside 1..{m}")
        entries = [0] * (m * m * m)
        entries[((i - 1) * m + (j - 1)) * m + (k - 1)] = 1
        return cls(m, entries)

    @classmethod
    def from_nested(cls, nested) -> "CubicMatrix":
        """Build from nested lists indexed [i-1][j-1][k-1]."""
        m = len(nested)
        entries = []
        for plane in nested:
            if len(plane) != m:
                raise FormatError("ragged cubic array")
            for row in plane:
                if len(row) != m:
                    raise FormatError("ragged cubic array")
                entries.extend(row)
        return cls(m, entries)

    def to_nested(self) -> list:
        m = self.m
        return [
            [list(self.entries[(i * m + j) * m : (i * m + j) * m + m]) for j in range(m)]
            for i in range(m)
        ]

    def entry(self, i: int, j: int, k: int):
        return self.entries[((i - 1) * self.m + (j - 1)) * self.m + (k - 1)]

    def nonzero_items(self):
        """Cached tuple of (flat_index, value) over nonzero entries."""
        if self._nz is None:
            self._nz = tuple(
                (idx, val) for idx, val in enumerate(self.entries) if val != 0
            )
        return self._nz

    def is_zero(self) -> bool:
        return not self.nonzero_items()

    def _require_same_size(self, other: "CubicMatrix"):
        if not isinstance(other, CubicMatrix):
            raise TypeError(f"expected a CubicMatrix, got {type(other).__name__}")
        if self.m != other.m:
            raise ValueError(f"dimension mismatch: {self.m} vs {other.m}")

    def __add__(self, other):
        self._require_same_size(other)
        return CubicMatrix(self.m, (a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        self._require_same_size(other)
        return CubicMatrix(self.m, (a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        return CubicMatrix(self.m, (-a for a in self.entries))

    def scale(self, scalar) -> "CubicMatrix":
        return CubicMatrix(self.m, (scalar * a for a in self.entries))

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def mul(self, other: "CubicMatrix", op: Operation) -> "CubicMatrix":
        """The product of self and other under the operation's multiplication."""
        self._require_same_size(other)
        m = self.m
        if op.m != m:
            raise ValueError(f"operation acts on {op.m} symbols, matrices have m={m}")
        mm = m * m
        by_k: list[list] = [[] for _ in range(m)]
        for flat, val in other.nonzero_items():
            by_k[flat // mm].append((flat, val))
        out: list = [0] * (mm * m)
        rows = op.rows
        for aflat, aval in self.nonzero_items():
            i0, rem = divmod(aflat, mm)
            l0, k0 = divmod(rem, m)
            row_l = rows[l0]
            base = i0 * mm
            for bflat, bval in by_k[k0]:
                n0 = (bflat // m) % m
                j0 = row_l[n0] - 1
                idx = base + j0 * m + bflat % m
                out[idx] = out[idx] + aval * bval
        return CubicMatrix(m, out)

    def plenary_power(self, n: int, op: Operation) -> "CubicMatrix":
        """n successive squarings under the operation's multiplication."""
        if n < 0:
            raise ValueError("plenary power index must be nonnegative")
        result = self
        for _ in range(n):
            result = result.mul(result, op)
        return result

    def accompanying_matrix(self) -> "SquareMatrix":
        """The m x m matrix whose (i, k) entry sums the middle-index fiber."""
        m = self.m
        rows = []
        for i in range(m):
            row = []
            for k in range(m):
                total = 0
                for j in range(m):
                    total = total + self.entries[(i * m + j) * m + k]
                row.append(total)
            rows.append(row)
        return SquareMatrix(rows)

    def __eq__(self, other):
        return (
            isinstance(other, CubicMatrix)
            and self.m == other.m
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.m, self.entries))

    def __repr__(self):
        nz = ", ".join(
            f"({idx // (self.m * self.m) + 1},{(idx // self.m) % self.m + 1},{idx % self.m + 1})={val}"
            for idx, val in self.nonzero_items()
        )
        return f"CubicMatrix(m={self.m}, {{{nz or '0'}}})"


class SquareMatrix:
    """An immutable m x m matrix of exact scalars."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        m = len(rows)
        if any(len(r) != m for r in rows):
            raise FormatError("square matrix rows must all have length m")
        self.rows = rows

    @classmethod
    def zero(cls, m: int) -> "SquareMatrix":
        return cls(((0,) * m,) * m)

    @classmethod
    def identity(cls, m: int) -> "SquareMatrix":
        return cls(tuple(tuple(1 if i == k else 0 for k in range(m)) for i in range(m)))

    @property
    def m(self) -> int:
        return len(self.rows)

    def entry(self, i: int, k: int):
        return self.rows[i - 1][k - 1]

    def det(self):
        return linalg.det([list(r) for r in self.rows])

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def __matmul__(self, other: "SquareMatrix") -> "SquareMatrix":
        if self.m != other.m:
            raise ValueError("dimension mismatch")
        m = self.m
        return SquareMatrix(
            tuple(
                tuple(
                    sum(self.rows[i][j] * other.rows[j][k] for j in range(m))
                    for k in range(m)
                )
                for i in range(m)
            )
        )

    def __add__(self, other):
        if self.m != other.m:
            raise ValueError("dimension mismatch")
        return SquareMatrix(
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows))
        )

    def __eq__(self, other):
        return isinstance(other, SquareMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"SquareMatrix({[list(r) for r in self.rows]})"


def mul(a: CubicMatrix, b: CubicMatrix, op: Operation) -> CubicMatrix:
    return a.mul(b, op)


def plenary_power(a: CubicMatrix, n: int, op: Operation) -> CubicMatrix:
    return a.plenary_power(n, op)


def accompanying_matrix(a: CubicMatrix) -> SquareMatrix:
    return a.accompanying_matrix()
