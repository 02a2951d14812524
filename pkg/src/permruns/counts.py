"""Exact counts of permutations whose runs have bounded length.

A run is a maximal strictly monotonic block of consecutive entries; an
increasing run is a maximal strictly increasing block.  For a bound k this
module computes, in exact integer arithmetic,

- ``u_count(k, n)``: permutations of order n whose increasing runs all have
  length <= k,
- ``b_count(k, n)``: permutations whose monotonic runs all have length <= k,
- ``i_count(k, n)`` / ``a_count(k, n)``: permutations whose longest
  increasing / monotonic run has length exactly k,

together with the refined tables behind them: ``UTable`` holds U_j(n), the
count with the final increasing run additionally capped at j, and ``BTable``
holds B_{i,j}(n) with the initial decreasing run capped at i and the final
increasing run capped at j.  A permutation that starts with an ascent counts
as having an initial decreasing run of length 1, and symmetrically at the
end; a single element is a run of length 1.

The tables are filled bottom-up over n.  Removing the maximum element of a
permutation either shortens the initial decreasing run, shortens the final
increasing run, or splits the permutation in two at an interior peak; the
split contributes a binomial convolution in which the prefix's final
increasing run is capped at k - 1 (it is extended by the removed maximum).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

FAMILIES = ("U", "I", "B", "A")

#: Queries beyond this k or n are rejected by the convenience functions.
#: Counts stay cheap well past this point; the cap guards against typos
#: producing absurdly large tables, not against cost.
DEFAULT_LIMIT = 64


class BinomialTable:
    """Pascal-triangle cache of C(n, t) for 0 <= t <= n <= nmax."""

    def __init__(self, nmax: int):
        if nmax < 0:
            raise ValueError(f"nmax must be >= 0, got {nmax}")
        rows = [[1]]
        for n in range(1, nmax + 1):
            prev = rows[-1]
            row = [1] + [prev[t - 1] + prev[t] for t in range(1, n)] + [1]
            rows.append(row)
        self.nmax = nmax
        self._rows = rows

    def __call__(self, n: int, t: int) -> int:
        if not 0 <= n <= self.nmax:
            raise ValueError(f"n={n} outside cached range 0..{self.nmax}")
        if not 0 <= t <= n:
            raise ValueError(f"t={t} outside 0..{n}")
        return self._rows[n][t]


@dataclass(frozen=True)
class UTable:
    """U_j(n) for one bound k: all increasing runs <= k, final one <= j.

    ``entries[j - 1][n - 1]`` is U_j(n) for 1 <= j <= k, 1 <= n <= nmax.
    """

    k: int
    nmax: int
    entries: tuple[tuple[int, ...], ...]

    def value(self, j: int, n: int) -> int:
        _check_index("j", j, self.k)
        _check_index("n", n, self.nmax)
        return self.entries[j - 1][n - 1]

    def row(self, j: int) -> list[int]:
        """U_j(n) for n = 1..nmax."""
        _check_index("j", j, self.k)
        return list(self.entries[j - 1])

    def corner_row(self) -> list[int]:
        """U(n) = U_k(n) for n = 1..nmax: the unconditioned counts."""
        return self.row(self.k)


@dataclass(frozen=True)
class BTable:
    """B_{i,j}(n) for one bound k: monotonic runs <= k, initial decreasing
    run <= i, final increasing run <= j.

    ``entries[i - 1][j - 1][n - 1]`` is B_{i,j}(n).
    """

    k: int
    nmax: int
    entries: tuple[tuple[tuple[int, ...], ...], ...]

    def value(self, i: int, j: int, n: int) -> int:
        _check_index("i", i, self.k)
        _check_index("j", j, self.k)
        _check_index("n", n, self.nmax)
        return self.entries[i - 1][j - 1][n - 1]

    def row(self, i: int, j: int) -> list[int]:
        """B_{i,j}(n) for n = 1..nmax."""
        _check_index("i", i, self.k)
        _check_index("j", j, self.k)
        return list(self.entries[i - 1][j - 1])

    def corner_row(self) -> list[int]:
        """B(n) = B_{k,k}(n) for n = 1..nmax."""
        return self.row(self.k, self.k)


def _check_index(name: str, value: int, upper: int) -> None:
    if not 1 <= value <= upper:
        raise ValueError(f"{name}={value} outside 1..{upper}")


def _check_build_args(k: int, nmax: int) -> None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if nmax < 1:
        raise ValueError(f"nmax must be >= 1, got {nmax}")


def compute_u_table(k: int, nmax: int) -> UTable:
    """Fill U_j(n) for 1 <= j <= k, 1 <= n <= nmax.

    U_j(1) = 1 and, for n > 1,

        U_j(n) = U_j(n-1) + U_{j-1}(n-1)
                 + sum over t = 2..n-1 of C(n-1, t-1) U_{k-1}(t-1) U_j(n-t)

    with U_0 identically zero.  The convolution is skipped when n <= 2 (the
    sum is empty) or k = 1 (the prefix cap k - 1 = 0 kills every term).
    """
    _check_build_args(k, nmax)
    binom = BinomialTable(nmax - 1 if nmax > 1 else 0)
    # Index 0 in both axes is a zero guard: rows[0] is U_0, rows[j][0] is
    # the (absent) order-0 count, so the recurrence needs no special cases.
    rows = [[0] * (nmax + 1) for _ in range(k + 1)]
    for j in range(1, k + 1):
        rows[j][1] = 1
    for n in range(2, nmax + 1):
        for j in range(1, k + 1):
            total = rows[j][n - 1] + rows[j - 1][n - 1]
            if n > 2 and k > 1:
                prefix = rows[k - 1]
                suffix = rows[j]
                total += sum(
                    binom(n - 1, t - 1) * prefix[t - 1] * suffix[n - t]
                    for t in range(2, n)
                )
            rows[j][n] = total
    entries = tuple(tuple(rows[j][1:]) for j in range(1, k + 1))
    return UTable(k=k, nmax=nmax, entries=entries)


def compute_b_table(k: int, nmax: int) -> BTable:
    """Fill B_{i,j}(n) for 1 <= i, j <= k, 1 <= n <= nmax.

    B_{i,j}(1) = 1 and, for n > 1,

        B_{i,j}(n) = B_{i-1,j}(n-1) + B_{i,j-1}(n-1)
                     + sum over t = 2..n-1 of
                       C(n-1, t-1) B_{i,k-1}(t-1) B_{k-1,j}(n-t)

    with B_{0,j} and B_{i,0} identically zero.
    """
    _check_build_args(k, nmax)
    binom = BinomialTable(nmax - 1 if nmax > 1 else 0)
    grid = [[[0] * (nmax + 1) for _ in range(k + 1)] for _ in range(k + 1)]
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            grid[i][j][1] = 1
    for n in range(2, nmax + 1):
        for i in range(1, k + 1):
            for j in range(1, k + 1):
                total = grid[i - 1][j][n - 1] + grid[i][j - 1][n - 1]
                if n > 2 and k > 1:
                    prefix = grid[i][k - 1]
                    suffix = grid[k - 1][j]
                    total += sum(
                        binom(n - 1, t - 1) * prefix[t - 1] * suffix[n - t]
                        for t in range(2, n)
                    )
                grid[i][j][n] = total
    entries = tuple(
        tuple(tuple(grid[i][j][1:]) for j in range(1, k + 1))
        for i in range(1, k + 1)
    )
    return BTable(k=k, nmax=nmax, entries=entries)


# Tables are immutable, so memoized builds are safe to share; maxsize is
# generous enough for a full 18x18 sweep plus test traffic.
_u_table = functools.lru_cache(maxsize=512)(compute_u_table)
_b_table = functools.lru_cache(maxsize=512)(compute_b_table)


def _check_query(k: int, n: int) -> None:
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")


def u_count(k: int, n: int) -> int:
    """Permutations of order n whose increasing runs all have length <= k.

    k = 0 admits nothing; k >= n is no constraint, so the count is n!.
    """
    _check_query(k, n)
    if k == 0:
        return 0
    keff = min(k, n)
    return _u_table(keff, n).value(keff, n)


def b_count(k: int, n: int) -> int:
    """Permutations of order n whose monotonic runs all have length <= k."""
    _check_query(k, n)
    if k == 0:
        return 0
    keff = min(k, n)
    return _b_table(keff, n).value(keff, keff, n)


def i_count(k: int, n: int) -> int:
    """Permutations of order n whose longest increasing run is exactly k."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return u_count(k, n) - u_count(k - 1, n)


def a_count(k: int, n: int) -> int:
    """Permutations of order n whose longest monotonic run is exactly k."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return b_count(k, n) - b_count(k - 1, n)


def count(family: str, k: int, n: int) -> int:
    """Dispatch on the family letter: U, I, B or A."""
    try:
        fn = _FAMILY_FUNCS[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}, expected one of {FAMILIES}") from None
    return fn(k, n)


def family_row(family: str, k: int, nmax: int) -> list[int]:
    """One table row: counts for fixed family and k, n = 1..nmax."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}, expected one of {FAMILIES}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if nmax < 1:
        raise ValueError(f"nmax must be >= 1, got {nmax}")
    # Rows are constant in k once k >= n (the bound no longer binds), so
    # clamping k to nmax is exact and keeps table sizes at most nmax wide.
    base = _u_table if family in ("U", "I") else _b_table
    row = base(min(k, nmax), nmax).corner_row()
    if family in ("U", "B"):
        return row
    if k == 1:
        prev = [0] * nmax
    else:
        prev = base(min(k - 1, nmax), nmax).corner_row()
    return [hi - lo for hi, lo in zip(row, prev)]


def full_table(family: str, kmax: int, nmax: int) -> list[list[int]]:
    """Rows ``family_row(family, k, nmax)`` for k = 1..kmax."""
    if kmax < 1:
        raise ValueError(f"kmax must be >= 1, got {kmax}")
    return [family_row(family, k, nmax) for k in range(1, kmax + 1)]


_FAMILY_FUNCS = {"U": u_count, "I": i_count, "B": b_count, "A": a_count}
