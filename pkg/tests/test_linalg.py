"""Exact elimination: determinants, reduced echelon form, kernel bases."""

import random
from fractions import Fraction

import pytest

from cubal.linalg import det, kernel_basis, rank, rref
from cubal.scalars import PrimeFieldElement


def random_matrix(n, rng):
    return [[Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(n)] for _ in range(n)]


def naive_det(rows):
    """Cofactor expansion, independent of the elimination code."""
    n = len(rows)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for c in range(n):
        minor = [row[:c] + row[c + 1 :] for row in rows[1:]]
        term = Fraction(rows[0][c]) * naive_det(minor)
        total += term if c % 2 == 0 else -term
    return total


class TestDet:
    def test_singular_diagonal(self):
        assert det([[2, 0], [0, 0]]) == 0

    def test_identity(self):
        assert det([[1, 0], [0, 1]]) == 1

    def test_two_by_two(self):
        assert det([[1, 2], [3, 4]]) == -2

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            det([[1, 2, 3], [4, 5, 6]])

    def test_against_cofactor_expansion(self):
        rng = random.Random(21)
        for n in (2, 3, 4):
            for _ in range(15):
                mat = random_matrix(n, rng)
                assert det(mat) == naive_det(mat)

    def test_over_prime_field(self):
        g = lambda v: PrimeFieldElement(v, 5)
        assert det([[g(2), g(1)], [g(3), g(4)]]) == g(2 * 4 - 3)


class TestRref:
    def test_pivots_of_full_rank_matrix(self):
        reduced, pivots = rref([[2, 1], [1, 1]])
        assert pivots == [0, 1]
        assert reduced == [[1, 0], [0, 1]]

    def test_rank_deficient(self):
        _, pivots = rref([[1, 2], [2, 4]])
        assert pivots == [0]

    def test_rank(self):
        assert rank([[1, 2], [2, 4]]) == 1
        assert rank([[1, 0, 2], [0, 1, 3]]) == 2


class TestKernel:
    def test_trivial_kernel(self):
        assert kernel_basis([[1, 0], [0, 1]]) == []

    def test_one_dimensional_kernel(self):
        basis = kernel_basis([[1, 2], [2, 4]])
        assert len(basis) == 1
        (v,) = basis
        assert v[0] + 2 * v[1] == 0
        assert any(x != 0 for x in v)

    def test_vectors_annihilate_the_matrix(self):
        rng = random.Random(22)
        for _ in range(20):
            n = rng.choice((3, 4))
            mat = random_matrix(n, rng)
            # force rank deficiency half the time
            if rng.random() < 0.5:
                mat[-1] = [2 * x for x in mat[0]]
            basis = kernel_basis(mat)
            assert len(basis) == n - rank(mat)
            for vec in basis:
                for row in mat:
                    assert sum(a * b for a, b in zip(row, vec)) == 0
