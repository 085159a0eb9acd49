"""The orbicyclic multivariate function E(m_1, ..., m_r).

E is the mean over one period of a product of von Sterneck values,

    E(m_1, ..., m_r) = (1/M) * sum_{k=1..M} Phi(k, m_1) ... Phi(k, m_r),

where M is any common multiple of the m_j (M = lcm suffices; the value
does not depend on the choice).  E is symmetric, multiplicative, takes
nonnegative integer values, E() = E(1, ..., 1) = 1, and arguments equal
to 1 can be dropped.  The closed form multiplies one local factor

    E_p = (p-1)^(r(p)-s(p)+1) * p^v(p) * h_s(p)(p)

per prime p | lcm, where a(p) is the exponent of p in the lcm, s(p)
counts arguments attaining it, v(p) = sum_{p | m_j} (a_j(p)-1) - a(p) + 1,
r(p) counts arguments divisible by p, and h_s is the integer polynomial
h_s(x) = ((x-1)^(s-1) + (-1)^s) / x.
"""

from __future__ import annotations

import math
from itertools import product
from typing import Iterable, NamedTuple, Union

from .arith import euler_phi, factorize, von_sterneck


class PeriodTuple:
    """Multiset of integers >= 1, the argument tuple of E.

    Stored nonincreasing so that equality and hashing ignore input
    order.  Values equal to 1 are retained; reduced() drops them, which
    leaves E unchanged.
    """

    __slots__ = ("values", "m")

    def __init__(self, values: Iterable[int] = ()):
        vals = tuple(sorted(values, reverse=True))
        for v in vals:
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ValueError(f"period values must be integers >= 1, got {v!r}")
        self.values = vals
        self.m = math.lcm(*vals) if vals else 1

    def reduced(self) -> "PeriodTuple":
        """The same multiset with all 1s removed."""
        return PeriodTuple(v for v in self.values if v > 1)

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __eq__(self, other) -> bool:
        if isinstance(other, PeriodTuple):
            return self.values == other.values
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"PeriodTuple({list(self.values)!r})"


Periods = Union[PeriodTuple, Iterable[int]]


def _coerce(t: Periods) -> PeriodTuple:
    return t if isinstance(t, PeriodTuple) else PeriodTuple(t)


class LocalProfile(NamedTuple):
    """Per-prime parameters (a, s, v, r_p) of a period tuple at p."""

    p: int
    a: int
    s: int
    v: int
    r_p: int


def local_profile(t: Periods, p: int) -> LocalProfile:
    """Profile of the tuple at a prime p dividing its lcm.

    a = exponent of p in the lcm, s = number of arguments attaining it,
    v = sum over p-divisible arguments of (a_j - 1), minus a, plus 1,
    r_p = number of arguments divisible by p.
    """
    t = _coerce(t)
    if t.m % p != 0:
        raise ValueError(f"{p} does not divide lcm {t.m}")
    exps = []
    for mj in t.values:
        e = 0
        while mj % p == 0:
            e += 1
            mj //= p
        if e:
            exps.append(e)
    a = max(exps)
    return LocalProfile(
        p=p,
        a=a,
        s=sum(1 for e in exps if e == a),
        v=sum(e - 1 for e in exps) - a + 1,
        r_p=len(exps),
    )


def h_poly(s: int, x: int) -> int:
    """h_s(x) = ((x-1)^(s-1) + (-1)^s) / x, an integer polynomial.

    h_1 = 0, h_2 = 1, h_3(x) = x - 2, h_4(x) = x^2 - 3x + 3.  The
    numerator is divisible by x for every nonzero integer x, since
    (x-1)^(s-1) = (-1)^(s-1) mod x.
    """
    if s < 1:
        raise ValueError(f"h_poly index must be >= 1, got {s}")
    if x == 0:
        raise ValueError("h_poly is indeterminate at x = 0")
    q, rem = divmod((x - 1) ** (s - 1) + (-1) ** s, x)
    if rem:
        raise ArithmeticError(f"h_{s}({x}) is not an integer")
    return q


def E_local(profile: LocalProfile) -> int:
    """Local factor (p-1)^(r_p-s+1) * p^v * h_s(p) at one prime."""
    p = profile.p
    return (p - 1) ** (profile.r_p - profile.s + 1) * p**profile.v * h_poly(profile.s, p)


def E_closed(t: Periods) -> int:
    """E via the closed multiplicative formula (product of local factors)."""
    t = _coerce(t).reduced()
    result = 1
    for p, _ in factorize(t.m):
        result *= E_local(local_profile(t, p))
        if result == 0:
            return 0
    return result


def E_bruteforce(t: Periods, M: int | None = None, guard: int = 10**6) -> int:
    """E directly from the defining mean over k = 1..M.

    M defaults to the lcm of the tuple; an explicit common multiple may
    be passed to exercise independence of the choice.  The sum is always
    exactly divisible by M (a failure would be an internal error).
    """
    t = _coerce(t)
    if M is None:
        M = t.m
    elif any(M % mj for mj in t.values) or M < 1:
        raise ValueError(f"{M} is not a common multiple of {t.values}")
    if M > guard:
        raise ValueError(f"modulus {M} exceeds the brute-force guard {guard}")
    tables = {mj: [von_sterneck(k, mj) for k in range(mj)] for mj in set(t.values)}
    total = 0
    for k in range(M):
        term = 1
        for mj in t.values:
            term *= tables[mj][k % mj]
        total += term
    q, rem = divmod(total, M)
    if rem:
        raise ArithmeticError(f"brute-force sum {total} not divisible by {M}")
    return q


def vanishes(t: Periods) -> tuple[bool, str | None]:
    """Whether E(t) = 0, with the witnessing local condition.

    E vanishes iff some odd prime p | lcm has s(p) = 1, or the lcm is
    even and s(2) is odd.
    """
    t = _coerce(t).reduced()
    for p, _ in factorize(t.m):
        s = local_profile(t, p).s
        if p == 2:
            if s % 2 == 1:
                return True, f"s(2) = {s} is odd"
        elif s == 1:
            return True, f"s({p}) = 1"
    return False, None


def f_r(m: int, r: int) -> int:
    """E(m, ..., m) with r repetitions, via f_r(p^a) = (p-1) p^((r-1)(a-1)) h_r(p).

    r = 0 is the empty tuple, so f_0(m) = 1 for every m.
    """
    if m < 1:
        raise ValueError(f"f_r expects m >= 1, got {m}")
    if r < 0:
        raise ValueError(f"f_r expects r >= 0, got {r}")
    if r == 0:
        return 1
    result = 1
    for p, a in factorize(m):
        result *= (p - 1) * p ** ((r - 1) * (a - 1)) * h_poly(r, p)
        if result == 0:
            return 0
    return result


def enumerate_nonvanishing_triples(m: int, guard: int = 10**4) -> list[tuple[int, int, int]]:
    """All ordered triples (m_1, m_2, m_3) with lcm m and E != 0, sorted.

    Built per prime p | m: the p-parts of a nonvanishing triple are
    p^a, p^a, p^c with 0 <= c <= a = a(p), in three arrangements when
    c < a and one when c = a.  For p = 2 the all-equal choice c = a is
    excluded, since it forces s(2) = 3 and E = 0.  The total is
    therefore prod over odd p of (3a(p) + 1), times 3a(2) if m is even.
    """
    if m < 1:
        raise ValueError(f"lcm must be >= 1, got {m}")
    if m > guard:
        raise ValueError(f"lcm {m} exceeds the enumeration guard {guard}")
    per_prime: list[list[tuple[int, int, int]]] = []
    for p, a in factorize(m):
        options = [] if p == 2 else [(p**a, p**a, p**a)]
        for c in range(a):
            top, low = p**a, p**c
            options.extend([(low, top, top), (top, low, top), (top, top, low)])
        per_prime.append(options)
    triples = []
    for combo in product(*per_prime):
        triple = tuple(math.prod(parts) for parts in zip(*combo)) if combo else (1, 1, 1)
        triples.append(triple)
    return sorted(triples)


def equals_phi_classification(t: Periods) -> bool:
    """Structural test for E(t) = phi(lcm t).

    Holds iff for every prime p | lcm the p-parts of the arguments
    (with exponent-0 entries dropped) form one of:

      * a pair (p^a, p^a);
      * the triple (3, 3, 3) for p = 3;
      * (2^a, 2^a, 2, ..., 2) for p = 2, with r(2) >= 3 arguments and
        r(2) even when a = 1.
    """
    t = _coerce(t).reduced()
    for p, _ in factorize(t.m):
        prof = local_profile(t, p)
        a, s, r_p = prof.a, prof.s, prof.r_p
        if s == 2 and r_p == 2:
            continue
        if p == 3 and a == 1 and s == 3 and r_p == 3:
            continue
        # Dyadic chain: two top entries, the rest single 2s.  In profile
        # terms v = a - 1 together with s counting the top entries.
        if p == 2 and r_p >= 3 and prof.v == a - 1:
            if a == 1:
                if r_p % 2 == 0:
                    continue
            elif s == 2:
                continue
        return False
    return True
