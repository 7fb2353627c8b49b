"""Independent oracles shared by the test modules.

Everything here is deliberately naive: brute-force enumeration, O(n!)
determinants and permanents, Gauss-Jordan inversion.  None of it reuses the
library's own recursions, so agreement is evidence rather than tautology.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

# Frozen integer weight vector used wherever a "random but fixed" weight
# sequence is called for.  Chosen once (includes a negative entry) and kept
# stable so expected values never drift.
FROZEN_WEIGHTS = (7, -2, 5, 3)


def brute_force_vectors(n: int, k: int) -> set[tuple[int, ...]]:
    """All (a1..ak) with sum(j aj) = n, by bounded cartesian product."""
    ranges = [range(n // j + 1) for j in range(1, k + 1)]
    return {
        tup
        for tup in itertools.product(*ranges)
        if sum(j * a for j, a in enumerate(tup, start=1)) == n
    }


def partition_count(n: int, k: int) -> int:
    """p(n, parts <= k) by the textbook two-way recursion."""
    if n == 0:
        return 1
    if n < 0 or k == 0:
        return 0
    return partition_count(n, k - 1) + partition_count(n - k, k)


def perm_parity(perm: tuple[int, ...]) -> int:
    """+1 for even permutations, -1 for odd, by counting inversions."""
    inv = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return -1 if inv % 2 else 1


def naive_det(rows: list[list[Fraction]]) -> Fraction:
    """Signed permutation sum; O(n!) on purpose."""
    n = len(rows)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        prod = Fraction(perm_parity(perm))
        for i in range(n):
            prod *= rows[i][perm[i]]
            if prod == 0:
                break
        total += prod
    return total


def naive_perm(rows: list[list[Fraction]]) -> Fraction:
    """Unsigned permutation sum; O(n!) on purpose."""
    n = len(rows)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        prod = Fraction(1)
        for i in range(n):
            prod *= rows[i][perm[i]]
            if prod == 0:
                break
        total += prod
    return total


def mat_mul(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(a)
    return [
        [sum((a[i][l] * b[l][j] for l in range(n)), Fraction(0)) for j in range(n)]
        for i in range(n)
    ]


def mat_identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_inv(a: list[list[Fraction]]) -> list[list[Fraction]]:
    """Gauss-Jordan with exact pivoting; raises on singular input."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        scale = Fraction(1) / aug[col][col]
        aug[col] = [x * scale for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def mat_pow(a: list[list[Fraction]], m: int) -> list[list[Fraction]]:
    if m < 0:
        return mat_pow(mat_inv(a), -m)
    out = mat_identity(len(a))
    for _ in range(m):
        out = mat_mul(out, a)
    return out
