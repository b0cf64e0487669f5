"""Generic one-representative-per-class sieve over a numbered finite set.

Elements are scanned in ascending rank order; each unmarked element is
emitted as the representative of its class, then its whole class is
marked. The class generator must return the full orbit of its argument
(minus the argument itself is fine); the sieve marks exactly
{x} | set(generate(x)).
"""

from dataclasses import dataclass

from .errors import CapacityError

DEFAULT_BUDGET_BITS = 1 << 33  # 1 GiB of marking bits


@dataclass(frozen=True)
class NumberedSet:
    """A finite set addressed by a bijection onto {0, ..., size-1}."""

    size: int
    rank: callable
    unrank: callable


@dataclass(frozen=True)
class SieveResult:
    representatives: tuple
    class_count: int


def sieve(numbered, generate, memory_budget_bits=DEFAULT_BUDGET_BITS):
    """One representative per class, in ascending rank order of class minima.

    generate(x) must yield elements equivalent to x covering the whole
    class of x (a caller obligation; partial generators under-mark and
    produce duplicate representatives).
    """
    size = numbered.size
    if size > memory_budget_bits:
        raise CapacityError(
            f"{size} elements exceed the {memory_budget_bits}-bit budget"
        )
    marked = bytearray((size + 7) >> 3)
    reps = []
    for r in range(size):
        if (marked[r >> 3] >> (r & 7)) & 1:
            continue
        x = numbered.unrank(r)
        reps.append(x)
        marked[r >> 3] |= 1 << (r & 7)
        for y in generate(x):
            ry = numbered.rank(y)
            marked[ry >> 3] |= 1 << (ry & 7)
    return SieveResult(tuple(reps), len(reps))
