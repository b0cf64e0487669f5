"""Exact class counts for the torus rotation action.

Two independent routes: an analytic orbit count over the translation
group of the m x n torus (exact big integers, any shape), and an
exhaustive orbit partition used as the ground-truth oracle on small
shapes. The diagonal values match OEIS A179043.
"""

from dataclasses import dataclass
from math import gcd, lcm

from .codec import xi
from .errors import CapacityError, InternalError

# |classes| for shape (k, k), k = 1..12 (OEIS A179043)
A179043 = (
    2,
    7,
    64,
    4156,
    1342208,
    1908897152,
    11488774559744,
    288230376353050816,
    29850020237398264483840,
    12676506002282327791964489728,
    21970710674130840874443091905462272,
    154866286100907105149651981766316633972736,
)

_BRUTEFORCE_MAX_CELLS = 20


@dataclass(frozen=True)
class OrbitCount:
    value: int
    m: int
    n: int


def translation_cycle_count(i, j, m, n):
    """Number of cell cycles of the translation (i, j) on the m x n torus."""
    return m * n // lcm(m // gcd(i, m), n // gcd(j, n))


def count_burnside(shape):
    """Average fixed-point count over all m*n torus translations.

    Translation (i, j) fixes exactly 2^cycles matrices, one free bit per
    cell cycle. All arithmetic is exact; the divisibility of the sum by
    m*n is asserted rather than assumed.
    """
    m, n = shape.m, shape.n
    total = 0
    for i in range(m):
        for j in range(n):
            total += 1 << translation_cycle_count(i, j, m, n)
    if total % (m * n):
        raise InternalError(
            f"fixed-point sum {total} not divisible by {m * n}"
        )
    return OrbitCount(total // (m * n), m, n)


def count_bruteforce(shape):
    """Exhaustive orbit partition of all 2^(m*n) codes; test oracle only.

    Works on plain row tuples with the tuple-level rotations, fully
    independent of the sieve's word arithmetic.
    """
    m, n = shape.m, shape.n
    if m * n > _BRUTEFORCE_MAX_CELLS:
        raise CapacityError(
            f"brute force is guarded at {_BRUTEFORCE_MAX_CELLS} cells"
        )
    top = (1 << n) - 1
    seen = set()
    count = 0
    for w in range(1 << (m * n)):
        rows = tuple((w >> (n * (m - 1 - i))) & top for i in range(m))
        if rows in seen:
            continue
        count += 1
        seen.add(rows)
        stack = [rows]
        while stack:
            t = stack.pop()
            for u in (t[-1:] + t[:-1], tuple(xi(p, n) for p in t)):
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
    return OrbitCount(count, m, n)
