"""Ground truth by exhaustion: run statistics measured on every permutation.

Everything here scans all n! permutations of 1..n and measures run lengths
directly from the definitions, with no recurrences involved, so the counts
can be checked against the dynamic-programming tables in ``counts``.  The
order cap (default 10, about 3.6M permutations) keeps accidental huge
enumerations from tying up the process.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Sequence

DEFAULT_ENUMERATION_CAP = 10


def is_permutation(p: Sequence[int]) -> bool:
    """True when p contains each of 1..len(p) exactly once."""
    return sorted(p) == list(range(1, len(p) + 1))


def _check_permutation(p: Sequence[int]) -> None:
    if len(p) < 1:
        raise ValueError("permutation must have order >= 1")
    if not is_permutation(p):
        raise ValueError(f"not a permutation of 1..{len(p)}: {tuple(p)}")


@dataclass(frozen=True)
class RunStats:
    """Run-length measurements of one permutation.

    A single element is a run of length 1; a permutation starting with an
    ascent has initial decreasing run 1, one ending with a descent has
    final increasing run 1.
    """

    longest_increasing: int
    longest_monotonic: int
    initial_decreasing: int
    final_increasing: int


def run_stats(p: Sequence[int]) -> RunStats:
    _check_permutation(p)
    n = len(p)
    best_inc = best_mono = inc = dec = 1
    for a, b in itertools.pairwise(p):
        if a < b:
            inc += 1
            dec = 1
        else:
            dec += 1
            inc = 1
        if inc > best_inc:
            best_inc = inc
        if max(inc, dec) > best_mono:
            best_mono = max(inc, dec)
    init_dec = 1
    while init_dec < n and p[init_dec - 1] > p[init_dec]:
        init_dec += 1
    final_inc = 1
    while final_inc < n and p[n - final_inc - 1] < p[n - final_inc]:
        final_inc += 1
    return RunStats(best_inc, best_mono, init_dec, final_inc)


def longest_increasing_run(p: Sequence[int]) -> int:
    """Length of the longest maximal increasing block of consecutive entries."""
    return run_stats(p).longest_increasing


def longest_monotonic_run(p: Sequence[int]) -> int:
    """Length of the longest maximal increasing or decreasing block."""
    return run_stats(p).longest_monotonic


def longest_decreasing_run(p: Sequence[int]) -> int:
    # Reversal turns decreasing blocks into increasing ones.
    _check_permutation(p)
    return run_stats(tuple(reversed(p))).longest_increasing


def initial_decreasing_run(p: Sequence[int]) -> int:
    return run_stats(p).initial_decreasing


def final_increasing_run(p: Sequence[int]) -> int:
    return run_stats(p).final_increasing


def _check_cap(n: int, cap: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > cap:
        raise ValueError(
            f"enumeration over {n}! permutations exceeds the cap of {cap}!; "
            "raise the cap explicitly if you really want this"
        )


@lru_cache(maxsize=32)
def _histograms(n: int) -> tuple[dict, dict]:
    """One pass over all n! permutations.

    Returns joint tallies keyed by (longest_increasing, final_increasing)
    and by (longest_monotonic, initial_decreasing, final_increasing); every
    conditioned count below is a partial sum over one of them.
    """
    inc: Counter = Counter()
    mono: Counter = Counter()
    # itertools.permutations walks successors in lexicographic order with
    # constant extra memory; the run scan is inlined for speed.
    for p in itertools.permutations(range(1, n + 1)):
        best_inc = best_mono = up = down = 1
        for idx in range(1, n):
            if p[idx - 1] < p[idx]:
                up += 1
                down = 1
                if up > best_inc:
                    best_inc = up
            else:
                down += 1
                up = 1
            if down > best_mono:
                best_mono = down
        if best_inc > best_mono:
            best_mono = best_inc
        init_dec = 1
        while init_dec < n and p[init_dec - 1] > p[init_dec]:
            init_dec += 1
        final_inc = 1
        while final_inc < n and p[n - final_inc - 1] < p[n - final_inc]:
            final_inc += 1
        inc[(best_inc, final_inc)] += 1
        mono[(best_mono, init_dec, final_inc)] += 1
    return dict(inc), dict(mono)


def enumerate_distributions(
    n: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> tuple[dict[int, int], dict[int, int]]:
    """Distributions of longest-increasing and longest-monotonic run length.

    Returns two maps run-length -> count over all n! permutations; absent
    keys mean zero.
    """
    _check_cap(n, cap)
    inc_hist, mono_hist = _histograms(n)
    inc_dist: Counter = Counter()
    mono_dist: Counter = Counter()
    for (longest, _final), c in inc_hist.items():
        inc_dist[longest] += c
    for (longest, _init, _final), c in mono_hist.items():
        mono_dist[longest] += c
    assert sum(inc_dist.values()) == sum(mono_dist.values()) == factorial(n)
    return dict(inc_dist), dict(mono_dist)


def oracle_u(k: int, n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """#permutations with every increasing run <= k, by enumeration."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    inc_dist, _ = enumerate_distributions(n, cap)
    return sum(c for length, c in inc_dist.items() if length <= k)


def oracle_b(k: int, n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """#permutations with every monotonic run <= k, by enumeration."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    _, mono_dist = enumerate_distributions(n, cap)
    return sum(c for length, c in mono_dist.items() if length <= k)


def oracle_u_cell(k: int, j: int, n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """#permutations with increasing runs <= k and final increasing run <= j."""
    if not 1 <= j <= k:
        raise ValueError(f"j={j} outside 1..{k}")
    _check_cap(n, cap)
    inc_hist, _ = _histograms(n)
    return sum(
        c for (longest, final), c in inc_hist.items() if longest <= k and final <= j
    )


def oracle_b_cell(
    k: int, i: int, j: int, n: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> int:
    """#permutations with monotonic runs <= k, initial decreasing run <= i,
    final increasing run <= j."""
    if not 1 <= i <= k:
        raise ValueError(f"i={i} outside 1..{k}")
    if not 1 <= j <= k:
        raise ValueError(f"j={j} outside 1..{k}")
    _check_cap(n, cap)
    _, mono_hist = _histograms(n)
    return sum(
        c
        for (longest, init, final), c in mono_hist.items()
        if longest <= k and init <= i and final <= j
    )
