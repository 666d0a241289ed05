"""Tour 2: cubic matrices and the operation-parameterized product.

Basis matrices multiply by a closed rule: E(i,j,k) E(l,n,r) vanishes unless
the inner indices match (k = l) and otherwise lands on E(i, a(j,n), r),
where a is the chosen associative operation.  Extending bilinearly gives an
associative, highly non-commutative algebra of dimension m^3, computed here
in exact rational arithmetic.
"""

import random
from fractions import Fraction

from cubal import CubicMatrix, Operation, collect_operations

E = CubicMatrix.basis

right_proj = Operation([[1, 2], [1, 2]])   # a(i, j) = j
cycle = Operation([[1, 2, 3], [2, 3, 1], [3, 1, 2]])  # the 3-cycle group

print("Basis products under the right projection on two symbols:")
print("  E(1,1,2) E(2,1,1) =", E(2, 1, 1, 2).mul(E(2, 2, 1, 1), right_proj))
print("  E(1,1,2) E(1,1,1) =", E(2, 1, 1, 2).mul(E(2, 1, 1, 1), right_proj), "(inner mismatch)")

print("\nUnder the cyclic-group table, middle indices add mod 3:")
print("  E(1,2,3) E(3,3,1) =", E(3, 1, 2, 3).mul(E(3, 3, 3, 1), cycle))

print("\nNon-commutativity is built in for m >= 2:")
a, b = E(2, 1, 1, 1), E(2, 1, 1, 2)
print("  E(1,1,1) E(1,1,2) =", a.mul(b, right_proj))
print("  E(1,1,2) E(1,1,1) =", b.mul(a, right_proj))

print("\nDense rational matrices multiply exactly; associativity is an identity:")
rng = random.Random(0)


def random_cubic(m):
    return CubicMatrix(
        m, [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(m**3)]
    )


x, y, z = random_cubic(3), random_cubic(3), random_cubic(3)
left = x.mul(y, cycle).mul(z, cycle)
right = x.mul(y.mul(z, cycle), cycle)
print("  (x y) z == x (y z):", left == right)
print("  a sample entry of the triple product:", left.entry(1, 1, 1))

print("\nThe identity holds for every operation of the m=2 census:")
for op in collect_operations(2):
    x, y, z = random_cubic(2), random_cubic(2), random_cubic(2)
    assert x.mul(y, op).mul(z, op) == x.mul(y.mul(z, op), op)
print("  checked all 8 operations with fresh random matrices")
