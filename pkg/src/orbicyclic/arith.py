"""Elementary multiplicative number theory.

Factorization, the Mobius and Euler functions, the Jordan totient, the
von Sterneck function Phi(k, n), Ramanujan sums C_n(k), and the generic
periodic-average functional whose semi-multiplicativity underlies the
closed formulas elsewhere in this package.

All functions are pure and use exact integer (or Fraction) arithmetic.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Callable, Iterable

# A Factorization is an ordered list of (prime, exponent) pairs with the
# primes strictly increasing; [] represents 1.
Factorization = list[tuple[int, int]]

_TRIAL_LIMIT = 10_000

# Witness set making Miller-Rabin deterministic for n < 3.3 * 10**24,
# far beyond the desk-scale inputs this library is meant for.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for desk-scale integers."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """Return a nontrivial factor of an odd composite n (Brent's cycle variant)."""
    while True:
        c = random.randrange(1, n)
        f = lambda x: (x * x + c) % n
        x = y = random.randrange(n)
        d = 1
        while d == 1:
            x = f(x)
            y = f(f(y))
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def factorize(n: int) -> Factorization:
    """Factor n >= 1 into (prime, exponent) pairs, primes increasing.

    Trial division up to 10**4, then deterministic Miller-Rabin plus
    Pollard rho for any remaining cofactor.  Intended for desk-scale
    inputs (below 2**64); no sub-exponential machinery.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"factorize expects a positive integer, got {n!r}")
    exponents: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            exponents[p] = exponents.get(p, 0) + 1
            n //= p
    d = 7
    while d <= _TRIAL_LIMIT and d * d <= n:
        while n % d == 0:
            exponents[d] = exponents.get(d, 0) + 1
            n //= d
        d += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            exponents[m] = exponents.get(m, 0) + 1
        else:
            f = _pollard_rho(m)
            stack.append(f)
            stack.append(m // f)
    return sorted(exponents.items())


def divisors(n: int) -> list[int]:
    """All positive divisors of n >= 1, sorted increasing."""
    divs = [1]
    for p, a in factorize(n):
        divs = [d * p**e for d in divs for e in range(a + 1)]
    return sorted(divs)


def mobius(n: int) -> int:
    """mu(n): 0 if n has a squared prime factor, else (-1)^(number of primes)."""
    fac = factorize(n)
    if any(a > 1 for _, a in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(n: int) -> int:
    """phi(n), the number of 1 <= k <= n coprime to n."""
    result = 1
    for p, a in factorize(n):
        result *= (p - 1) * p ** (a - 1)
    return result


def jordan_phi(k: int, n: int) -> int:
    """Jordan totient phi_k(n) = n^k * prod_{p|n} (1 - p^(-k)).

    Equals sum_{d|n} d^k mu(n/d).  The k = 0 case degenerates to the
    unit: phi_0(1) = 1 and phi_0(n) = 0 for n > 1, which the product
    form already delivers (each local factor becomes 1 - 1 = 0).
    """
    if k < 0:
        raise ValueError(f"jordan_phi order must be >= 0, got {k}")
    result = 1
    for p, a in factorize(n):
        result *= p ** (a * k) - p ** ((a - 1) * k)
    return result


def von_sterneck(k: int, n: int) -> int:
    """The von Sterneck function Phi(k, n).

    Phi(k, n) = phi(n) / phi(n/g) * mu(n/g) with g = gcd(k, n), where k
    is first reduced mod n and k = 0 is treated as gcd n.  Evaluated
    multiplicatively over the prime powers p^a of n:

        Phi(k, p^a) = (p-1) p^(a-1)   if p^a     | k,
                    = -p^(a-1)        if p^(a-1) | k but p^a does not,
                    = 0               otherwise.
    """
    if n < 1:
        raise ValueError(f"von_sterneck modulus must be >= 1, got {n}")
    k %= n
    result = 1
    for p, a in factorize(n):
        pa = p**a
        if k % pa == 0:
            result *= (p - 1) * (pa // p)
        elif k % (pa // p) == 0:
            result *= -(pa // p)
        else:
            return 0
    return result


def ramanujan_sum(n: int, k: int) -> int:
    """Ramanujan's sum C_n(k) = sum_{d | gcd(k,n)} d * mu(n/d).

    The kernel is mu(n/d); a mu(k/d) sometimes seen in print is a
    misprint, and the test suite pins this form against von_sterneck
    (Hoelder's identity C_n(k) = Phi(k, n)).  gcd(0, n) counts as n.
    """
    if n < 1:
        raise ValueError(f"ramanujan_sum modulus must be >= 1, got {n}")
    g = math.gcd(k, n)
    return sum(d * mobius(n // d) for d in divisors(g))


def periodic_average(
    f: Callable[[int, int], int],
    periods: Iterable[int],
    modulus: int,
) -> Fraction:
    """Exact mean (1/M) * sum_{k=1..M} prod_j f(k, m_j).

    f(k, m) must be periodic in k modulo m (caller contract) and every
    period must divide the modulus M; the value is then independent of
    which admissible M is chosen.  Returns a Fraction since the mean
    need not be an integer (f = gcd is the standard example).
    """
    ms = list(periods)
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    for m in ms:
        if m < 1 or modulus % m != 0:
            raise ValueError(f"period {m} does not divide modulus {modulus}")
    total = 0
    for k in range(1, modulus + 1):
        term = 1
        for m in ms:
            term *= f(k, m)
        total += term
    return Fraction(total, modulus)
