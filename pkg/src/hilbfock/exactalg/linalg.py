"""Exact Gaussian elimination."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional


@dataclass
class SolveResult:
    """Outcome of :func:`linear_solve`.

    ``failing_row`` is the 0-based index of the first equation that
    contradicts the others, or None when the system is consistent.
    """

    solution: Optional[list]
    rank: int
    consistent: bool
    unique: bool
    failing_row: Optional[int] = None
    pivots: list = field(default_factory=list)

    def report(self) -> str:
        if not self.consistent:
            return f"inconsistent at row {self.failing_row + 1}"
        kind = "unique" if self.unique else "underdetermined"
        return f"consistent, rank {self.rank}, {kind} solution"


def _zero(c):
    return c == 0


def linear_solve(A, b) -> SolveResult:
    """Solve A x = b exactly.

    Entries of A must form a field (Fraction, RatFun).  Entries of b only
    need to be a vector space over that field, so right-hand sides in Q[m]
    with a rational matrix are fine.  Free variables are set to 0.
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if len(b) != rows:
        raise ValueError("right-hand side length does not match")
    M = [[Fraction(x) if isinstance(x, int) else x for x in r] for r in A]
    rhs = [Fraction(x) if isinstance(x, int) else x for x in b]
    # remember original row numbers so inconsistencies point at the input
    origin = list(range(rows))
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if not _zero(M[i][c])), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        rhs[r], rhs[p] = rhs[p], rhs[r]
        origin[r], origin[p] = origin[p], origin[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        rhs[r] = rhs[r] * inv
        for i in range(rows):
            if i != r and not _zero(M[i][c]):
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
                rhs[i] = rhs[i] - rhs[r] * f
        pivots.append(c)
        r += 1
        if r == rows:
            break
    rank = r
    bad = [origin[i] for i in range(rank, rows) if not _zero(rhs[i])]
    if bad:
        return SolveResult(None, rank, False, False, min(bad), pivots)
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = rhs[i]
    return SolveResult(x, rank, True, rank == cols, None, pivots)


def rank(A) -> int:
    if not A:
        return 0
    return linear_solve(A, [Fraction(0)] * len(A)).rank
