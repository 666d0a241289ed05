"""Structural maps of cubic-matrix algebras.

Covers the basis-relabeling isomorphisms between equivalent operations, the
multiplicative-linear-form (character) decision procedure, the surjection
onto the m^2-dimensional matrix-unit algebra, exact zero-divisor solvers,
and the subalgebras and ideals spanned by basis matrices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cubic import CubicMatrix
from .errors import FormatError
from .linalg import kernel_basis
from .operations import (
    Operation,
    Permutation,
    enumerate_invariant_subsets,
    image,
    invariance_violation,
)


class AccompanyingElement:
    """An element of the matrix-unit algebra on units u(i, j), i, j in I.

    Units multiply by u(i, j) u(k, l) = u(i, l) when j = k and vanish
    otherwise, so coefficient matrices compose like ordinary m x m matrices.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(tuple(row) for row in coeffs)
        m = len(coeffs)
        if any(len(row) != m for row in coeffs):
            raise FormatError("coefficient matrix must be m x m")
        self.coeffs = coeffs

    @classmethod
    def zero(cls, m: int) -> "AccompanyingElement":
        return cls(((0,) * m,) * m)

    @classmethod
    def unit(cls, m: int, i: int, j: int) -> "AccompanyingElement":
        """The basis unit u(i, j)."""
        rows = [[0] * m for _ in range(m)]
        rows[i - 1][j - 1] = 1
        return cls(rows)

    @property
    def m(self) -> int:
        return len(self.coeffs)

    def coeff(self, i: int, j: int):
        return self.coeffs[i - 1][j - 1]

    def mul(self, other: "AccompanyingElement") -> "AccompanyingElement":
        """Bilinear extension of the unit rule; matrix product of coefficients."""
        if self.m != other.m:
            raise ValueError("dimension mismatch")
        m = self.m
        return AccompanyingElement(
            tuple(
                tuple(
                    sum(self.coeffs[i][j] * other.coeffs[j][l] for j in range(m))
                    for l in range(m)
                )
                for i in range(m)
            )
        )

    def __add__(self, other):
        if self.m != other.m:
            raise ValueError("dimension mismatch")
        return AccompanyingElement(
            tuple(
                tuple(a + b for a, b in zip(r1, r2))
                for r1, r2 in zip(self.coeffs, other.coeffs)
            )
        )

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.coeffs for x in row)

    def __eq__(self, other):
        return isinstance(other, AccompanyingElement) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"AccompanyingElement({[list(r) for r in self.coeffs]})"


def accompanying_image(x: CubicMatrix) -> AccompanyingElement:
    """The canonical surjection onto the matrix-unit algebra.

    Maps E(i, n, j) to u(i, j); on a general matrix the (i, j) coefficient
    is the middle-index fiber sum.  This is an algebra homomorphism for every
    operation's multiplication, and its coefficient matrix coincides with the
    accompanying matrix of x.
    """
    m = x.m
    rows = []
    for i in range(1, m + 1):
        row = []
        for j in range(1, m + 1):
            total = 0
            for n in range(1, m + 1):
                total = total + x.entry(i, n, j)
            row.append(total)
        rows.append(row)
    return AccompanyingElement(rows)


def permute_indices(pi: Permutation, x: CubicMatrix) -> CubicMatrix:
    """Linear extension of E(i, j, k) -> E(pi(i), pi(j), pi(k))."""
    m = x.m
    if pi.m != m:
        raise ValueError("size mismatch")
    entries = [0] * (m * m * m)
    for flat, val in x.nonzero_items():
        i0, rem = divmod(flat, m * m)
        j0, k0 = divmod(rem, m)
        entries[
            ((pi(i0 + 1) - 1) * m + (pi(j0 + 1) - 1)) * m + (pi(k0 + 1) - 1)
        ] = val
    return CubicMatrix(m, entries)


def verify_isomorphism(a: Operation, b: Operation, pi: Permutation) -> bool:
    """Check that relabeling by pi carries the product of a onto the product of b.

    True iff f(X *_a Y) = f(X) *_b f(Y) for all basis pairs, where f is the
    basis relabeling along pi.  When pi carries a onto b (act(pi, a) = b)
    this must hold.
    """
    m = a.m
    if b.m != m or pi.m != m:
        raise ValueError("size mismatch")
    units = [
        CubicMatrix.basis(m, i, j, k)
        for i, j, k in itertools.product(range(1, m + 1), repeat=3)
    ]
    mapped = [permute_indices(pi, e) for e in units]
    for s, e1 in enumerate(units):
        for t, e2 in enumerate(units):
            if permute_indices(pi, e1.mul(e2, a)) != mapped[s].mul(mapped[t], b):
                return False
    return True


class LinearForm:
    """A linear form on cubic matrices, one coefficient per basis entry."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != m * m * m:
            raise FormatError(f"expected {m}**3 coefficients, got {len(coeffs)}")
        self.m = m
        self.coeffs = coeffs

    @classmethod
    def from_entries(cls, m: int, values: dict) -> "LinearForm":
        """Build from a {(i, j, k): coefficient} mapping; missing entries are 0."""
        coeffs = [0] * (m * m * m)
        for (i, j, k), val in values.items():
            coeffs[((i - 1) * m + (j - 1)) * m + (k - 1)] = val
        return cls(m, coeffs)

    def coeff(self, i: int, j: int, k: int):
        return self.coeffs[((i - 1) * self.m + (j - 1)) * self.m + (k - 1)]

    def evaluate(self, x: CubicMatrix):
        if x.m != self.m:
            raise ValueError("size mismatch")
        return sum(self.coeffs[idx] * val for idx, val in x.nonzero_items())

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, LinearForm)
            and self.m == other.m
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def __repr__(self):
        m = self.m
        nz = ", ".join(
            f"({idx // (m * m) + 1},{(idx // m) % m + 1},{idx % m + 1})={val}"
            for idx, val in enumerate(self.coeffs)
            if val != 0
        )
        return f"LinearForm(m={m}, {{{nz or '0'}}})"


def is_character(chi: LinearForm, a: Operation) -> bool:
    """True iff chi is nonzero and multiplicative on every basis pair.

    Bilinearity of the product and linearity of chi make the basis check
    sufficient: chi(E(i,j,k)) chi(E(l,n,r)) must equal chi(E(i, a(j,n), r))
    when k = l and vanish otherwise.
    """
    if chi.m != a.m:
        raise ValueError("size mismatch")
    if chi.is_zero():
        return False
    m = a.m
    c = chi.coeff
    idx = range(1, m + 1)
    for i, j, k in itertools.product(idx, repeat=3):
        left = c(i, j, k)
        for l, n, r in itertools.product(idx, repeat=3):
            prod = left * c(l, n, r)
            if k == l:
                if prod != c(i, a(j, n), r):
                    return False
            elif prod != 0:
                return False
    return True


def character_search(a: Operation) -> list[LinearForm]:
    """All characters (nonzero multiplicative linear forms) of the algebra of a.

    The multiplicativity equations collapse quickly: coefficients with
    distinct outer indices square to zero, so the support lies on entries
    (k, j, k) of a single slice k0, where the values satisfy
    b(j) b(n) = b(a(j, n)).  For m >= 2 pairing the slice against any other
    slice k != k0 forces b(a(j, n)) = 0, so every b(j)^2 = 0 and the form
    vanishes.  For m = 1 the single coefficient solves c^2 = c, whose only
    nonzero root is 1.
    """
    if a.m >= 2:
        return []
    unit = LinearForm.from_entries(1, {(1, 1, 1): Fraction(1)})
    assert is_character(unit, a)
    return [unit]


def _solve_zero_product(
    fixed: CubicMatrix, op: Operation, side: str
) -> CubicMatrix | None:
    """A nonzero X with fixed * X = 0 (side="left") or X * fixed = 0 (side="right")."""
    m = fixed.m
    if op.m != m:
        raise ValueError("size mismatch")
    dim = m * m * m
    columns = []
    for flat in range(dim):
        i0, rem = divmod(flat, m * m)
        j0, k0 = divmod(rem, m)
        e = CubicMatrix.basis(m, i0 + 1, j0 + 1, k0 + 1)
        prod = fixed.mul(e, op) if side == "left" else e.mul(fixed, op)
        columns.append(prod.entries)
    rows = [[columns[c][r] for c in range(dim)] for r in range(dim)]
    for vec in kernel_basis(rows):
        return CubicMatrix(m, vec)
    return None


def left_zero_divisor_witness(a_mat: CubicMatrix, op: Operation) -> CubicMatrix | None:
    """A nonzero X with a_mat * X = 0, if one exists.

    The map X -> a_mat * X is linear, so the witness is an exact kernel
    vector of its m^3 x m^3 matrix.
    """
    return _solve_zero_product(a_mat, op, "left")


def right_zero_divisor_witness(a_mat: CubicMatrix, op: Operation) -> CubicMatrix | None:
    """A nonzero X with X * a_mat = 0, if one exists."""
    return _solve_zero_product(a_mat, op, "right")


@dataclass(frozen=True)
class SpannedSubspace:
    """The span of a set of basis matrices, identified by their index triples."""

    m: int
    triples: frozenset[tuple[int, int, int]]

    def __post_init__(self):
        for (i, j, k) in self.triples:
            for idx in (i, j, k):
                if not 1 <= idx <= self.m:
                    raise FormatError(f"triple ({i},{j},{k}) outside 1..{self.m}")

    def __contains__(self, triple) -> bool:
        return triple in self.triples

    def sorted_triples(self) -> list[tuple[int, int, int]]:
        return sorted(self.triples)


def subalgebra_span(op: Operation, members, i: int, k: int) -> SpannedSubspace:
    """The span of {E(i, j, k): j in members} for an invariant subset.

    Closed under the product because a(j, n) stays in the subset; the
    product is identically zero unless i = k.
    """
    m = op.m
    if not 1 <= i <= m or not 1 <= k <= m:
        raise FormatError(f"block indices ({i},{k}) outside 1..{m}")
    J = frozenset(members)
    if not J:
        raise ValueError("subset must be nonempty")
    violation = invariance_violation(J, op)
    if violation is not None:
        s, t, v = violation
        raise ValueError(f"subset is not invariant: a({s},{t}) = {v} escapes it")
    return SpannedSubspace(m, frozenset((i, j, k) for j in J))


def image_ideal_span(op: Operation) -> SpannedSubspace:
    """The span of all E(i, j, k) whose middle index lies in the image of op."""
    m = op.m
    J = image(op)
    return SpannedSubspace(
        m,
        frozenset(
            (i, j, k)
            for i in range(1, m + 1)
            for j in sorted(J)
            for k in range(1, m + 1)
        ),
    )


def in_kernel_ideal(x: CubicMatrix) -> bool:
    """True iff every middle-index fiber sum of x vanishes.

    These matrices form the kernel of the accompanying surjection and hence
    a two-sided ideal for every operation's multiplication.
    """
    return accompanying_image(x).is_zero()


def _basis_product_triple(op: Operation, s, t):
    """The product E(s) E(t) as a triple, or None when it vanishes."""
    if s[2] != t[0]:
        return None
    return (s[0], op(s[1], t[1]), t[2])


def is_subalgebra(span: SpannedSubspace, op: Operation) -> bool:
    """True iff every product of two spanning basis matrices stays in the span."""
    if span.m != op.m:
        raise ValueError("size mismatch")
    for s in span.triples:
        for t in span.triples:
            prod = _basis_product_triple(op, s, t)
            if prod is not None and prod not in span.triples:
                return False
    return True


def is_left_ideal(span: SpannedSubspace, op: Operation) -> bool:
    """True iff multiplying any basis matrix onto the span from the left stays inside."""
    if span.m != op.m:
        raise ValueError("size mismatch")
    everything = itertools.product(range(1, op.m + 1), repeat=3)
    for t in everything:
        for s in span.triples:
            prod = _basis_product_triple(op, t, s)
            if prod is not None and prod not in span.triples:
                return False
    return True


def is_right_ideal(span: SpannedSubspace, op: Operation) -> bool:
    """True iff multiplying any basis matrix onto the span from the right stays inside."""
    if span.m != op.m:
        raise ValueError("size mismatch")
    everything = itertools.product(range(1, op.m + 1), repeat=3)
    for t in everything:
        for s in span.triples:
            prod = _basis_product_triple(op, s, t)
            if prod is not None and prod not in span.triples:
                return False
    return True


def is_ideal(span: SpannedSubspace, op: Operation) -> bool:
    return is_left_ideal(span, op) and is_right_ideal(span, op)


def count_subalgebras_from_invariants(op: Operation) -> int:
    """The number of nonempty invariant subsets of the index set.

    Each one spans a subalgebra in every (i, k) block, so this is a lower
    bound on the subalgebra count of the algebra of op.
    """
    return sum(1 for J in enumerate_invariant_subsets(op) if J)
