"""Integer partitions: cells, generalized arms and legs, hooks, contents,
enumeration, and the rank-2 blending bijection."""

from functools import lru_cache
from typing import Iterator, NamedTuple


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, so ``Partition([2, 1, 0])``
    equals ``Partition([2, 1])``.  The empty partition is ``Partition()``.
    """

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return format_partition(self)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (1-based), zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def transpose(self) -> "Partition":
        return _transpose(self)

    def cells(self) -> list[tuple[int, int]]:
        """Cells (i, j) of the diagram, 1-based, row by row."""
        return [(i, j) for i in range(1, len(self) + 1) for j in range(1, self[i - 1] + 1)]

    def contents(self) -> list[int]:
        return [j - i for i, j in self.cells()]

    def hooks(self) -> list[int]:
        t = _transpose(self)
        return [self[i] - j + t[j] - i - 1 for i in range(len(self)) for j in range(self[i])]

    def maya(self, depth: int, charge: int = 0) -> list[int]:
        """First ``depth`` entries of the index sequence mu_j - j + 1 + charge."""
        return [self.part(j) - j + 1 + charge for j in range(1, depth + 1)]


@lru_cache(maxsize=None)
def _transpose(mu: Partition) -> Partition:
    if not mu:
        return mu
    return Partition([sum(1 for p in mu if p > j) for j in range(mu[0])])


EMPTY = Partition()


def parse_partition(text: str) -> Partition:
    """Read the comma-separated text form; ``-`` is the empty partition."""
    text = text.strip()
    if text in ("-", ""):
        return EMPTY
    return Partition(sorted((int(s) for s in text.split(",")), reverse=True))


def format_partition(mu) -> str:
    return ",".join(str(p) for p in mu) if mu else "-"


def _enumerate(n: int, largest: int) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _enumerate(n - k, k):
            yield (k,) + rest


@lru_cache(maxsize=None)
def _enumerate_cached(n: int) -> tuple:
    return tuple(Partition(p) for p in _enumerate(n, n))


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse lexicographic order, (n) first."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_enumerate_cached(n))


def partitions_up_to(n: int) -> list[Partition]:
    return [mu for k in range(n + 1) for mu in _enumerate_cached(k)]


def arm(lam, cell) -> int:
    """lam_i - j, with lam_i = 0 past the last row.  May be negative."""
    i, j = cell
    return _part(lam, i) - j


def leg(lam, cell) -> int:
    """lam^t_j - i.  May be negative."""
    i, j = cell
    return _part(_transpose(Partition(lam)), j) - i


def _part(lam, i):
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def hook(mu, cell) -> int:
    i, j = cell
    if not (1 <= i <= len(mu) and 1 <= j <= mu[i - 1]):
        raise ValueError(f"cell {cell} is not in the diagram of {list(mu)}")
    return arm(mu, cell) + leg(mu, cell) + 1


def nu(b: int) -> Partition:
    """The staircase (2b, 2b-1, ..., 1) for b >= 0 and (-2b-1, ..., 1) for b < 0."""
    top = 2 * b if b >= 0 else -2 * b - 1
    return Partition(range(top, 0, -1))


class Blend(NamedTuple):
    charge: int
    first: Partition
    second: Partition


def blend(b: int, first, second) -> Partition:
    """Interleave two partitions with charge b.

    The index set {mu_j - j + 1} of the result is the disjoint union of the
    odd numbers 2(first_j - j - b) + 1 and the even numbers
    2(second_j - j + b) + 2.
    """
    first, second = Partition(first), Partition(second)
    depth = len(first) + len(second) + 2 * abs(b) + 4
    odd = [2 * (first.part(j) - j - b) + 1 for j in range(1, depth + 1)]
    even = [2 * (second.part(j) - j + b) + 2 for j in range(1, depth + 1)]
    # below this bound both classes are truncated, above it the union is exact
    floor = max(odd[-1], even[-1])
    indices = sorted((v for v in odd + even if v > floor), reverse=True)
    return Partition(v + j - 1 for j, v in enumerate(indices, start=1))


def charge(mu) -> int:
    """The blending charge b, read off the parity balance of the index set.

    Even indices count +1 above zero and -1 when missing at or below zero;
    odd indices count the opposite way.  The total is 2b.
    """
    mu = Partition(mu)
    total = 0
    for j in range(1, len(mu) + 1):
        v = mu[j - 1] - j + 1
        if v > 0:
            total += 1 if v % 2 == 0 else -1
    # vacancies at or below zero: values -j+1 for j <= len(mu) not hit
    present = {mu[j - 1] - j + 1 for j in range(1, len(mu) + 1)}
    for v in range(1 - len(mu), 1):
        if v not in present:
            total += -1 if v % 2 == 0 else 1
    return total // 2


def unblend(mu) -> Blend:
    mu = Partition(mu)
    b = charge(mu)
    depth = len(mu) + 2 * abs(b) + 4
    values = mu.maya(2 * depth)
    floor = values[-1]
    odd = sorted(((v - 1) // 2 for v in values if v % 2), reverse=True)
    even = sorted(((v - 2) // 2 for v in values if v % 2 == 0), reverse=True)
    # drop entries near the cut where a class may be incomplete
    limit = (floor - 2) // 2
    odd = [x for x in odd if x > limit]
    even = [x for x in even if x > limit]
    first = Partition(x + j + b for j, x in enumerate(odd, start=1))
    second = Partition(x + j - b for j, x in enumerate(even, start=1))
    return Blend(b, first, second)
