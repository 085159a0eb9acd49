"""Cyclic orbifolds on orientable surfaces.

A signature (g; m_1, ..., m_r) records the quotient genus g and the
branch orders m_j >= 2 of a cyclic group action Z_ell on a surface of
genus gamma, tied together by the Riemann-Hurwitz relation

    2 - 2*gamma = ell * (2 - 2g - sum_j (1 - 1/m_j)).

This module provides the signature type, the Riemann-Hurwitz solver,
Harvey's admissibility conditions, the equivalent nonvanishing test on
the epimorphism count, and exhaustive enumeration and census of the
admissible orbifolds for a given gamma.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .arith import divisors, factorize
from .orbicyclic import PeriodTuple, local_profile

GAMMA_GUARD = 6
ELL_GUARD = 200


@dataclass(frozen=True)
class OrbifoldSignature:
    """Quotient genus plus branch orders, periods canonically ascending."""

    g: int
    periods: tuple[int, ...] = ()

    def __post_init__(self):
        if self.g < 0:
            raise ValueError(f"quotient genus must be >= 0, got {self.g}")
        object.__setattr__(self, "periods", tuple(sorted(self.periods)))
        for mj in self.periods:
            if not isinstance(mj, int) or mj < 2:
                raise ValueError(f"branch orders must be integers >= 2, got {mj!r}")

    @property
    def m(self) -> int:
        """lcm of the periods (1 for an unbranched signature)."""
        return math.lcm(*self.periods) if self.periods else 1

    @property
    def r(self) -> int:
        return len(self.periods)

    def branch_multiplicities(self) -> dict[int, int]:
        """Map i -> number of branch points of order i (absent i omitted)."""
        b: dict[int, int] = {}
        for mj in self.periods:
            b[mj] = b.get(mj, 0) + 1
        return b

    def __str__(self) -> str:
        inner = ",".join(str(mj) for mj in self.periods) if self.periods else "-"
        return f"({self.g};{inner})"


def rh_gamma(sig: OrbifoldSignature, ell: int) -> int | None:
    """Surface genus gamma solving Riemann-Hurwitz, or None.

    Returns the unique gamma >= 0 with
    2 - 2*gamma = ell * (2 - 2g - sum (1 - 1/m_j)), provided the right
    side makes gamma a nonnegative integer; None otherwise.
    """
    if ell < 1:
        raise ValueError(f"group order must be >= 1, got {ell}")
    excess = Fraction(2 - 2 * sig.g) - sum(Fraction(mj - 1, mj) for mj in sig.periods)
    gamma = Fraction(2 - ell * excess, 2)
    if gamma.denominator == 1 and gamma >= 0:
        return int(gamma)
    return None


def harvey_admissible(
    sig: OrbifoldSignature, ell: int, gamma: int
) -> tuple[bool, list[str]]:
    """Harvey's test for a genus-gamma surface admitting the orbifold.

    True iff Riemann-Hurwitz holds for (sig, ell, gamma) and

      H1  the lcm of any r-1 of the periods equals m = lcm of all r;
      H2  m | ell, and m = ell if g = 0;
      H3  r != 1, and r >= 3 if g = 0;
      H4  if m is even, the number of periods divisible by the maximal
          power of 2 dividing m is even;

    where for gamma = 0 the condition r = 2 replaces H3, and for
    gamma = 1 the extra constraint r in {0, 3, 4} supplements it
    (the test assumes ell >= 2; ell = 1 admits exactly the unbranched
    signature and is handled by the enumerator).
    """
    violated: list[str] = []
    if rh_gamma(sig, ell) != gamma:
        violated.append("RH")
    m = sig.m
    r = sig.r
    if r == 1:
        violated.append("H1")
    elif r >= 2:
        for j in range(r):
            if math.lcm(*(sig.periods[:j] + sig.periods[j + 1 :])) != m:
                violated.append("H1")
                break
    if ell % m != 0 or (sig.g == 0 and m != ell):
        violated.append("H2")
    if gamma == 0:
        if r != 2:
            violated.append("H3a")
    else:
        if r == 1 or (sig.g == 0 and r < 3):
            violated.append("H3")
        if gamma == 1 and r not in (0, 3, 4):
            violated.append("H3a")
    if m % 2 == 0:
        two_power = m & -m
        if sum(1 for mj in sig.periods if mj % two_power == 0) % 2 != 0:
            violated.append("H4")
    return not violated, violated


def epi_nonvanishing(sig: OrbifoldSignature, ell: int) -> tuple[bool, list[str]]:
    """Whether the order-preserving epimorphism count is nonzero.

    The count vanishes iff one of these holds:

      E1  m does not divide ell;
      E2  g = 0 and ell > m;
      E3  s(p) = 1 for some odd prime p | m;
      E4  m is even and s(2) is odd.
    """
    if ell < 1:
        raise ValueError(f"group order must be >= 1, got {ell}")
    violated: list[str] = []
    m = sig.m
    if ell % m != 0:
        violated.append("E1")
    if sig.g == 0 and ell > m:
        violated.append("E2")
    if sig.periods:
        t = PeriodTuple(sig.periods)
        for p, _ in factorize(m):
            s = local_profile(t, p).s
            if p == 2:
                if s % 2 == 1:
                    violated.append("E4")
            elif s == 1:
                violated.append("E3")
    violated.sort()
    return not violated, violated


def _period_multisets(
    ell: int, target: Fraction, max_parts: int
) -> Iterator[tuple[int, ...]]:
    """Multisets of divisors (>= 2) of ell with sum (1 - 1/m_j) = target."""
    divs = [d for d in divisors(ell) if d >= 2]
    divs.reverse()  # largest contribution first, for the pruning bound

    def rec(idx: int, left: Fraction, slots: int, acc: list[int]):
        if left == 0:
            yield tuple(reversed(acc))
            return
        if idx == len(divs) or slots == 0:
            return
        part = Fraction(divs[idx] - 1, divs[idx])
        if left > slots * part:
            return  # every remaining divisor contributes at most this much
        if part <= left:
            acc.append(divs[idx])
            yield from rec(idx, left - part, slots - 1, acc)
            acc.pop()
        yield from rec(idx + 1, left, slots, acc)

    yield from rec(0, target, max_parts, [])


def _candidate_signatures(gamma: int, ell: int) -> Iterator[OrbifoldSignature]:
    """Signatures solving Riemann-Hurwitz in the bounded search space."""
    if gamma < 0 or ell < 1:
        raise ValueError(f"need gamma >= 0 and ell >= 1, got {gamma}, {ell}")
    if gamma > GAMMA_GUARD or ell > ELL_GUARD:
        raise ValueError(
            f"(gamma={gamma}, ell={ell}) exceeds the guard "
            f"(gamma <= {GAMMA_GUARD}, ell <= {ELL_GUARD})"
        )
    r_cap = 2 * gamma + 2
    for g in range(gamma + 1):
        target = Fraction(2 - 2 * g) - Fraction(2 - 2 * gamma, ell)
        if target < 0:
            continue
        for periods in _period_multisets(ell, target, r_cap):
            yield OrbifoldSignature(g, periods)


def enumerate_orbifolds(gamma: int, ell: int) -> list[OrbifoldSignature]:
    """All signatures in Orb(S_gamma / Z_ell), sorted.

    Searches quotient genus g <= gamma and r <= 2*gamma + 2 branch
    points with orders dividing ell, keeps those satisfying
    Riemann-Hurwitz (exactly, by construction) whose epimorphism count
    is nonzero.  ell = 1 covers the surface by itself, giving exactly
    the unbranched signature (gamma; -).
    """
    if ell == 1:
        if gamma < 0 or gamma > GAMMA_GUARD:
            raise ValueError(f"gamma must be in [0, {GAMMA_GUARD}], got {gamma}")
        return [OrbifoldSignature(gamma, ())]
    found = [
        sig
        for sig in _candidate_signatures(gamma, ell)
        if epi_nonvanishing(sig, ell)[0]
    ]
    return sorted(found, key=lambda s: (s.g, s.r, s.periods))


def enumerate_orbifolds_via_harvey(gamma: int, ell: int) -> list[OrbifoldSignature]:
    """Same result as enumerate_orbifolds, filtered by Harvey's test instead.

    Kept as a genuinely independent route for cross-checking; the two
    enumerations must agree everywhere in the guarded range.
    """
    if ell == 1:
        if gamma < 0 or gamma > GAMMA_GUARD:
            raise ValueError(f"gamma must be in [0, {GAMMA_GUARD}], got {gamma}")
        return [OrbifoldSignature(gamma, ())]
    found = [
        sig
        for sig in _candidate_signatures(gamma, ell)
        if harvey_admissible(sig, ell, gamma)[0]
    ]
    return sorted(found, key=lambda s: (s.g, s.r, s.periods))


@dataclass(frozen=True)
class CensusResult:
    """Admissible orbifolds for one surface genus, across all group orders.

    a counts the orbifolds (signature together with its admitting ell);
    a_distinct counts distinct signatures.  For gamma >= 2 the bracket
    of Riemann-Hurwitz is nonzero, so a signature determines its ell
    and the two counts coincide (asserted during construction).
    """

    gamma: int
    orbifolds: tuple[tuple[int, OrbifoldSignature], ...]
    a: int
    a_by_g: dict[int, int] = field(compare=False)
    a_distinct: int


def census(gamma: int) -> CensusResult:
    """Count all admissible orbifolds for surface genus gamma >= 2.

    The union over ell is finite for gamma >= 2 and exhausted by
    ell <= 4*gamma + 2 (Wiman's bound); gamma 0 and 1 are rejected as
    their orbifold families are infinite in ell.
    """
    if gamma in (0, 1):
        raise ValueError(f"census is infinite for gamma = {gamma}")
    if gamma < 0 or gamma > GAMMA_GUARD:
        raise ValueError(f"gamma must be in [2, {GAMMA_GUARD}], got {gamma}")
    entries: list[tuple[int, OrbifoldSignature]] = []
    seen: dict[OrbifoldSignature, int] = {}
    for ell in range(1, 4 * gamma + 3):
        for sig in enumerate_orbifolds(gamma, ell):
            if sig in seen:
                raise ArithmeticError(
                    f"signature {sig} admitted by both ell={seen[sig]} and ell={ell}"
                )
            seen[sig] = ell
            entries.append((ell, sig))
    entries.sort(key=lambda e: (e[0], e[1].g, e[1].r, e[1].periods))
    counts: dict[int, int] = {}
    for _, sig in entries:
        counts[sig.g] = counts.get(sig.g, 0) + 1
    a_by_g = {g: counts[g] for g in sorted(counts)}
    return CensusResult(
        gamma=gamma,
        orbifolds=tuple(entries),
        a=len(entries),
        a_by_g=a_by_g,
        a_distinct=len(seen),
    )
