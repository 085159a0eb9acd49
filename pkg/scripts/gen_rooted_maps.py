"""Generate data/rooted_maps.csv: rooted map counts N_g(n) on orientable surfaces.

Computes N_g(n) for genus g <= 3 and edge counts n <= 12 with the
Carrell-Chapuy recurrence, then refuses to write the table unless three
independent checks pass:

  1. genus 0 agrees with the sum-free closed formula for all n,
  2. all genera agree with brute-force enumeration of dart pairs
     (sigma, alpha_0) for n <= 4,
  3. N_3(6) equals the count of minimal one-vertex one-face gluings,
     (4g)! / ((2g+1)! 4^g) at g = 3, which is forced because a genus-3
     map with 6 edges must have v = f = 1.

Run from the repository root:  python scripts/gen_rooted_maps.py
"""

from fractions import Fraction
from itertools import permutations
from math import comb, factorial
from pathlib import Path

MAX_GENUS = 3
MAX_EDGES = 12

OUT = Path(__file__).resolve().parent.parent / "src" / "orbicyclic" / "data" / "rooted_maps.csv"


def carrell_chapuy(max_genus: int, max_edges: int) -> dict[tuple[int, int], int]:
    """All N_g(n) for g <= max_genus, n <= max_edges, exact arithmetic."""
    q: dict[tuple[int, int], Fraction] = {}

    def get(g: int, n: int) -> Fraction:
        if g < 0 or n < 0:
            return Fraction(0)
        if n == 0:
            return Fraction(1 if g == 0 else 0)
        return q[(g, n)]

    for n in range(1, max_edges + 1):
        for g in range(0, max_genus + 1):
            rhs = Fraction(4 * n - 2, 3) * get(g, n - 1)
            rhs += Fraction((2 * n - 3) * (2 * n - 2) * (2 * n - 1), 12) * get(g - 1, n - 2)
            pair_sum = Fraction(0)
            for k in range(1, n):
                l = n - k
                w = (2 * k - 1) * (2 * l - 1)
                for g1 in range(0, g + 1):
                    pair_sum += w * get(g1, k - 1) * get(g - g1, l - 1)
            rhs += pair_sum / 2
            q[(g, n)] = rhs * Fraction(6, n + 1)

    out: dict[tuple[int, int], int] = {(0, 0): 1}
    for (g, n), val in q.items():
        assert val.denominator == 1, f"non-integer N_{g}({n}) = {val}"
        out[(g, n)] = int(val)
    return out


def planar_closed_form(n: int) -> int:
    return 2 * 3**n * factorial(2 * n) // (factorial(n) * factorial(n + 2))


def dart_pair_counts(n: int) -> dict[int, int]:
    """Rooted map counts by genus from brute force over (sigma, alpha_0).

    alpha_0 is fixed; the count of transitive sigma at each genus, times
    (2n-1)!!/(2n-1)!, is the rooted count (conjugating alpha_0 over all
    fixed-point-free involutions multiplies by (2n-1)!!, rooting divides
    by (2n)!/(2n)).
    """
    darts = 2 * n
    alpha = [i ^ 1 for i in range(darts)]
    by_genus: dict[int, int] = {}
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
        v = _cycles(sigma)
        f = _cycles([sigma[alpha[i]] for i in range(darts)])
        euler = v - n + f
        assert euler % 2 == 0
        genus = (2 - euler) // 2
        by_genus[genus] = by_genus.get(genus, 0) + 1
    double_fact = 1
    for i in range(1, darts, 2):
        double_fact *= i
    rooted = {}
    for genus, count in by_genus.items():
        total, rem = divmod(count * double_fact, factorial(darts - 1))
        assert rem == 0, (genus, count)
        rooted[genus] = total
    return rooted


def _cycles(perm) -> int:
    seen = [False] * len(perm)
    count = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        count += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
    return count


def main() -> None:
    table = carrell_chapuy(MAX_GENUS, MAX_EDGES)

    for n in range(0, MAX_EDGES + 1):
        assert table[(0, n)] == planar_closed_form(n), n
    print("planar closed form: ok up to n =", MAX_EDGES)

    for n in range(1, 5):
        brute = dart_pair_counts(n)
        for g in range(0, MAX_GENUS + 1):
            assert table.get((g, n), 0) == brute.get(g, 0), (g, n, brute)
        print(f"dart-pair enumeration: ok at n = {n}  {brute}")

    g = 3
    minimal_monopoles = factorial(4 * g) // (factorial(2 * g + 1) * 4**g)
    assert table[(3, 6)] == minimal_monopoles == 1485, table[(3, 6)]
    print("minimal one-vertex one-face count: N_3(6) =", minimal_monopoles)

    OUT.parent.mkdir(parents=True, exist_ok=True)
    lines = ["genus,edges,count"]
    lines.append("0,0,1")
    for g in range(0, MAX_GENUS + 1):
        for n in range(1, MAX_EDGES + 1):
            lines.append(f"{g},{n},{table[(g, n)]}")
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {OUT} ({len(lines) - 1} rows)")

    for g in range(0, MAX_GENUS + 1):
        row = [table.get((g, n), 0) for n in range(1, 9)]
        print(f"N_{g}(1..8) = {row}")


if __name__ == "__main__":
    main()
