"""Counting maps on orientable surfaces: rooted counts and unrooted totals.

N_g(n) is the number of rooted maps with n edges on the genus-g surface,
extended by N_g(n) = 0 whenever n is negative or not an integer.  Genus 0
has a sum-free closed formula; higher genera are served from a shipped
data table.  theta() combines rooted counts with the cyclic-orbifold and
epimorphism machinery, Burnside-style, to count maps up to all
orientation-preserving isomorphisms rather than up to rooted ones.

A small exhaustive oracle over dart pairs (sigma, alpha) is included for
cross-checking both counts at tiny sizes.
"""

from __future__ import annotations

import csv
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from itertools import permutations
from math import comb, factorial
from typing import Optional, Union

from .epi import count_epi
from .orbifold import enumerate_orbifolds

Edges = Union[int, Fraction]


class MissingMapDataError(LookupError):
    """A rooted-map count was requested that the table does not carry.

    Distinct from the convention N_g(n) = 0 at non-integer or negative n:
    this error means the argument was legitimate but the data is absent.
    """


def planar_rooted_count(n: int) -> int:
    """Rooted planar maps with n edges: 2 * 3^n * (2n)! / (n! (n+2)!)."""
    return 2 * 3**n * factorial(2 * n) // (factorial(n) * factorial(n + 2))


class RootedMapTable:
    """Immutable (genus, edges) -> count table for rooted map numbers."""

    def __init__(self, entries: dict[tuple[int, int], int]):
        for (g, n), count in entries.items():
            if g < 0 or n < 0:
                raise ValueError(f"bad table key ({g}, {n})")
            if count < 0:
                raise ValueError(f"negative count at ({g}, {n})")
            if n == 0 and (g != 0 or count != 1):
                raise ValueError(
                    f"zero-edge row ({g}, {n}) = {count}: only (0, 0) = 1 is allowed"
                )
            if g == 0 and count != planar_rooted_count(n):
                raise ValueError(
                    f"genus-0 row at n = {n} is {count}, closed form gives "
                    f"{planar_rooted_count(n)}"
                )
        self._entries = dict(entries)

    def __contains__(self, key: tuple[int, int]) -> bool:
        return key in self._entries

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self._entries[key]

    def __len__(self) -> int:
        return len(self._entries)

    @classmethod
    def from_csv(cls, path) -> "RootedMapTable":
        entries: dict[tuple[int, int], int] = {}
        with open(path, newline="", encoding="utf-8") as handle:
            reader = csv.reader(handle)
            for lineno, row in enumerate(reader, start=1):
                if not row or (lineno == 1 and row == ["genus", "edges", "count"]):
                    continue
                if len(row) != 3:
                    raise ValueError(f"{path}:{lineno}: expected genus,edges,count")
                try:
                    key = (int(row[0]), int(row[1]))
                    count = int(row[2])
                except ValueError as exc:
                    raise ValueError(f"{path}:{lineno}: non-integer field") from exc
                if key in entries:
                    raise ValueError(f"{path}:{lineno}: duplicate row for {key}")
                entries[key] = count
        return cls(entries)


@lru_cache(maxsize=1)
def default_table() -> RootedMapTable:
    path = resources.files("orbicyclic").joinpath("data/rooted_maps.csv")
    with resources.as_file(path) as real:
        return RootedMapTable.from_csv(real)


def rooted_map_count(g: int, n: Edges, table: Optional[RootedMapTable] = None) -> int:
    """N_g(n), with N_g(n) = 0 for non-integer or negative n.

    The zero-edge map exists only on the sphere, so (g, 0) is answered in
    code and never looked up.  Genus 0 uses the closed formula; genus >= 1
    goes to the table and raises MissingMapDataError when absent.
    """
    if g < 0:
        raise ValueError(f"genus must be >= 0, got {g}")
    if isinstance(n, Fraction):
        if n.denominator != 1:
            return 0
        n = int(n)
    if n < 0:
        return 0
    if n == 0:
        return 1 if g == 0 else 0
    if g == 0:
        return planar_rooted_count(n)
    if table is None:
        table = default_table()
    if (g, n) not in table:
        raise MissingMapDataError(f"no rooted-map count for genus {g}, {n} edges")
    return table[(g, n)]


def _multinomial(top: Fraction, parts: list[int]) -> int:
    """top! / (parts[0]! ... parts[-1]! (top - sum(parts))!), else 0.

    Zero whenever top is not a nonnegative integer or the parts do not
    fit; the remainder bucket top - sum(parts) absorbs the slack.
    """
    if top.denominator != 1 or top < 0:
        return 0
    t = int(top)
    rest = t - sum(parts)
    if rest < 0:
        return 0
    value = factorial(t)
    for k in parts:
        value //= factorial(k)
    return value // factorial(rest)


def theta(
    gamma: int,
    n: int,
    table: Optional[RootedMapTable] = None,
    enumerator=enumerate_orbifolds,
) -> int:
    """Number of maps with n edges on the genus-gamma surface, unrooted.

    Burnside sum over cyclic symmetry orders ell | 2n and admissible
    quotient orbifolds; each term weights an epimorphism count by the
    ways to place branch points on the quotient map's cells and by the
    rooted count of quotient maps.  The grand total must come out
    divisible by 2n.

    enumerator exists for cross-checking: any callable with the
    enumerate_orbifolds contract may supply the orbifold lists.
    """
    if n < 1:
        raise ValueError(f"edge count must be >= 1, got {n}")
    if gamma < 0:
        raise ValueError(f"genus must be >= 0, got {gamma}")
    total = 0
    for ell in range(1, 2 * n + 1):
        if (2 * n) % ell != 0:
            continue
        for sig in enumerator(gamma, ell):
            mult = sig.branch_multiplicities()
            b2 = mult.get(2, 0)
            higher = [mult[i] for i in sorted(mult) if i > 2]
            epi = count_epi(sig, ell)
            sig_sum = 0
            for s2 in range(0, b2 + 1):
                ways = comb(2 * n // ell, s2)
                if ways == 0:
                    continue
                quotient_edges = Fraction(n, ell) - Fraction(s2, 2)
                placements = _multinomial(
                    quotient_edges + 2 - 2 * sig.g, [b2 - s2] + higher
                )
                if placements == 0:
                    continue
                sig_sum += ways * placements * rooted_map_count(
                    sig.g, quotient_edges, table
                )
            total += epi * sig_sum
    count, rem = divmod(total, 2 * n)
    if rem:
        raise ArithmeticError(
            f"Burnside sum {total} not divisible by {2 * n} at gamma={gamma}, n={n}"
        )
    return count


@lru_cache(maxsize=None)
def _dart_pair_census(n: int) -> dict[int, tuple[int, int]]:
    """Exhaustive (sigma, alpha_0) scan: genus -> (rooted, unrooted)."""
    darts = 2 * n
    alpha = tuple(i ^ 1 for i in range(darts))

    def cycle_count(perm) -> int:
        seen = [False] * darts
        count = 0
        for start in range(darts):
            if not seen[start]:
                count += 1
                i = start
                while not seen[i]:
                    seen[i] = True
                    i = perm[i]
        return count

    by_genus: dict[int, list[tuple[int, ...]]] = {}
    for sigma in permutations(range(darts)):
        seen = {0}
        stack = [0]
        while stack:
            d = stack.pop()
            for e in (sigma[d], alpha[d]):
                if e not in seen:
                    seen.add(e)
                    stack.append(e)
        if len(seen) < darts:
            continue
        euler = cycle_count(sigma) - n + cycle_count(
            tuple(sigma[alpha[i]] for i in range(darts))
        )
        genus = (2 - euler) // 2
        by_genus.setdefault(genus, []).append(sigma)

    # Conjugating alpha_0 across all fixed-point-free involutions scales
    # the pair count by (2n-1)!!; rooting divides by (2n-1)!.
    double_fact = 1
    for i in range(1, darts, 2):
        double_fact *= i
    centralizer = [
        tau for tau in permutations(range(darts))
        if all(tau[alpha[i]] == alpha[tau[i]] for i in range(darts))
    ]

    result: dict[int, tuple[int, int]] = {}
    for genus, sigmas in by_genus.items():
        rooted, rem = divmod(len(sigmas) * double_fact, factorial(darts - 1))
        if rem:
            raise ArithmeticError(f"rooted count not integral at genus {genus}")
        pending = set(sigmas)
        orbits = 0
        while pending:
            seed = pending.pop()
            orbits += 1
            inverse = [0] * darts
            for i, v in enumerate(seed):
                inverse[v] = i
            for tau in centralizer:
                tau_inv = [0] * darts
                for i, v in enumerate(tau):
                    tau_inv[v] = i
                conj = tuple(tau[seed[tau_inv[i]]] for i in range(darts))
                pending.discard(conj)
        result[genus] = (rooted, orbits)
    return result


def dart_pair_oracle(gamma: int, n: int) -> tuple[int, int]:
    """(rooted, unrooted) map counts at genus gamma with n edges, by brute force.

    Models a map as a permutation pair on 2n darts with a fixed
    fixed-point-free involution; genus comes from Euler's relation,
    unrooted counts from orbits under the involution's centralizer.
    """
    if n < 1:
        raise ValueError(f"edge count must be >= 1, got {n}")
    if n > 3:
        raise ValueError(f"oracle guard: n = {n} exceeds 3")
    return _dart_pair_census(n).get(gamma, (0, 0))
