"""Subgroup counting in free groups of finite rank.

M(n), the number of index-n subgroups of the rank-r free group, satisfies
Hall's recursion

    M(n) = n * (n!)^(r-1) - sum_{i=1}^{n-1} ((n-i)!)^(r-1) * M(i)

and the number N(n) of conjugacy classes of index-n subgroups reduces to
a divisor sum over M with Jordan-totient weights:

    N(n) = (1/n) * sum_{d | n} phi_{(r-1)d+1}(n/d) * M(d).

Everything is exact; the divisor sum's integrality is asserted because a
failure there would be an implementation bug, not bad input.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from math import factorial

from .arith import divisors, jordan_phi

INDEX_GUARD = 12
BRUTE_FORCE_GUARD = 20_000


def _check_args(rank: int, index: int) -> None:
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    if index < 1:
        raise ValueError(f"index must be >= 1, got {index}")
    if index > INDEX_GUARD:
        raise ValueError(f"index {index} exceeds guard {INDEX_GUARD}")


@lru_cache(maxsize=None)
def free_group_subgroups(rank: int, index: int) -> int:
    """Number of index-`index` subgroups of the free group of rank `rank`."""
    _check_args(rank, index)
    n, r = index, rank
    total = n * factorial(n) ** (r - 1)
    for i in range(1, n):
        total -= factorial(n - i) ** (r - 1) * free_group_subgroups(r, i)
    return total


def free_group_conjugacy_classes(rank: int, index: int) -> int:
    """Number of conjugacy classes of index-`index` subgroups of F_rank."""
    _check_args(rank, index)
    n, r = index, rank
    total = 0
    for d in divisors(n):
        total += jordan_phi((r - 1) * d + 1, n // d) * free_group_subgroups(r, d)
    count, rem = divmod(total, n)
    if rem:
        raise ArithmeticError(
            f"divisor sum {total} not divisible by {n} at rank={r}, index={n}"
        )
    return count


def transitive_pair_counts(rank: int, index: int) -> tuple[int, int]:
    """(subgroups, conjugacy classes) by brute force, for cross-checking.

    Index-n subgroups of F_r correspond to transitive r-tuples of
    permutations of n points with a marked basepoint: divide the tuple
    count by (n-1)!.  Conjugacy classes of subgroups correspond to
    orbits of the tuples under simultaneous relabeling of all points.
    """
    _check_args(rank, index)
    n, r = index, rank
    if factorial(n) ** r > BRUTE_FORCE_GUARD:
        raise ValueError(
            f"brute force at rank={r}, index={n} exceeds guard {BRUTE_FORCE_GUARD}"
        )
    perms = list(permutations(range(n)))

    def transitive(tup) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for p in tup:
                if p[x] not in seen:
                    seen.add(p[x])
                    stack.append(p[x])
        return len(seen) == n

    tuples = [t for t in product(perms, repeat=r) if transitive(t)]
    subgroups, rem = divmod(len(tuples), factorial(n - 1))
    if rem:
        raise ArithmeticError("transitive tuple count not divisible by (n-1)!")

    pending = set(tuples)
    classes = 0
    while pending:
        seed = pending.pop()
        classes += 1
        for tau in perms:
            inv = [0] * n
            for i, v in enumerate(tau):
                inv[v] = i
            conj = tuple(
                tuple(tau[p[inv[i]]] for i in range(n)) for p in seed
            )
            pending.discard(conj)
    return subgroups, classes
