"""Truncated exponential generating functions over exact integers.

A series of order N stores integer coefficients c_0..c_N and stands for
sum(c_n * x**n / n!) + O(x**(N+1)).  Multiplication is the binomial
convolution, so products of count series are again count series.  Every
series this package needs keeps integer coefficients: reciprocals are only
taken at constant term 1, where the inversion recurrence stays integral,
and nothing else introduces denominators.

Binary operations require equal orders; use ``truncate`` to line orders up
explicitly.  Differentiation shortens a series by one order, so an identity
consuming m derivatives of an order-N input is reported at order N - m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class EgfSeries:
    """Exact truncated EGF: coeffs (c_0, ..., c_N) for sum c_n x^n / n!."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise ValueError("a series needs at least a constant term")
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be exact ints, got {type(c).__name__}")
        object.__setattr__(self, "coeffs", coeffs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> EgfSeries:
        return cls((0,) * (order + 1))

    @classmethod
    def constant(cls, value: int, order: int) -> EgfSeries:
        return cls((value,) + (0,) * order)

    @classmethod
    def x(cls, order: int) -> EgfSeries:
        if order < 1:
            raise ValueError("the series x needs order >= 1")
        return cls((0, 1) + (0,) * (order - 1))

    # -- inspection --------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise ValueError(f"coefficient index {n} outside 0..{self.order}")
        return self.coeffs[n]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __repr__(self) -> str:
        return f"EgfSeries({list(self.coeffs)!r})"

    # -- arithmetic --------------------------------------------------------

    def _match(self, other: EgfSeries) -> None:
        if not isinstance(other, EgfSeries):
            raise TypeError(f"expected EgfSeries, got {type(other).__name__}")
        if self.order != other.order:
            raise ValueError(
                f"order mismatch: {self.order} vs {other.order}; truncate explicitly"
            )

    def __add__(self, other: EgfSeries) -> EgfSeries:
        self._match(other)
        return EgfSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: EgfSeries) -> EgfSeries:
        self._match(other)
        return EgfSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> EgfSeries:
        return self.scale(-1)

    def scale(self, factor: int) -> EgfSeries:
        if not isinstance(factor, int):
            raise TypeError("scale factor must be an exact int")
        return EgfSeries(tuple(factor * c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._match(other)
        a, b = self.coeffs, other.coeffs
        out = tuple(
            sum(math.comb(n, t) * a[t] * b[n - t] for t in range(n + 1))
            for n in range(len(a))
        )
        return EgfSeries(out)

    __rmul__ = __mul__

    def derivative(self, times: int = 1) -> EgfSeries:
        """Shift coefficients down: d/dx maps c_n x^n/n! to c_n x^(n-1)/(n-1)!."""
        if times < 0:
            raise ValueError("times must be >= 0")
        if times > self.order:
            raise ValueError(
                f"cannot take {times} derivatives of an order-{self.order} series"
            )
        return EgfSeries(self.coeffs[times:]) if times else self

    def reciprocal(self) -> EgfSeries:
        """Multiplicative inverse to the same order; requires c_0 = 1.

        b_0 = 1 and b_n = -sum(C(n, t) a_t b_{n-t} for t = 1..n), which is
        integral precisely because a_0 = 1.
        """
        if self.coeffs[0] != 1:
            raise ValueError(f"reciprocal needs constant term 1, got {self.coeffs[0]}")
        a = self.coeffs
        b = [1] + [0] * self.order
        for n in range(1, self.order + 1):
            b[n] = -sum(math.comb(n, t) * a[t] * b[n - t] for t in range(1, n + 1))
        return EgfSeries(tuple(b))

    def truncate(self, order: int) -> EgfSeries:
        if not 0 <= order <= self.order:
            raise ValueError(f"cannot truncate order {self.order} to {order}")
        return EgfSeries(self.coeffs[: order + 1])


def egf_from_counts(values: Sequence[int] | Iterable[int]) -> EgfSeries:
    """Series with coefficient 0 at n = 0 and the given counts at n >= 1."""
    return EgfSeries((0, *values))


def q_series(k: int, order: int) -> EgfSeries:
    """Coefficients +1, -1, 0 in residue classes 0, 1, others mod k + 1.

    Its reciprocal minus one generates the counts of permutations whose
    increasing runs have length <= k; see ``u_closed_form``.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    period = k + 1
    return EgfSeries(
        tuple(
            1 if n % period == 0 else -1 if n % period == 1 else 0
            for n in range(order + 1)
        )
    )


def u_closed_form(k: int, order: int) -> EgfSeries:
    """EGF whose coefficient at n is u_count(k, n): 1/q - 1 for the q-series."""
    q = q_series(k, order)
    return q.reciprocal() - EgfSeries.constant(1, order)


def u_j_from_y(k: int, j: int, order: int, y: EgfSeries | None = None) -> EgfSeries:
    """Series of the refined counts U_j via derivatives of y = q-series:

        U_j = -(1/y) * sum(y^(m) for m = 0..k-j)

    Consumes k - j derivatives, so y must carry that much guard order above
    the requested output order; by default a sufficiently long q-series is
    built internally.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if not 1 <= j <= k - 1:
        raise ValueError(f"j={j} outside 1..{k - 1}")
    guard = k - j
    if y is None:
        y = q_series(k, order + guard)
    elif y.order < order + guard:
        raise ValueError(
            f"insufficient guard order: need {order + guard}, got {y.order}"
        )
    total = EgfSeries.zero(order)
    for m in range(guard + 1):
        total = total + y.derivative(m).truncate(order)
    return total.scale(-1) * y.truncate(order).reciprocal()


def cos_series(order: int) -> EgfSeries:
    return EgfSeries(
        tuple((-1) ** (n // 2) if n % 2 == 0 else 0 for n in range(order + 1))
    )


def sin_series(order: int) -> EgfSeries:
    return EgfSeries(
        tuple((-1) ** (n // 2) if n % 2 == 1 else 0 for n in range(order + 1))
    )


def tan_sec_series(order: int) -> tuple[EgfSeries, EgfSeries]:
    """(tan, sec) to the given order: sec = 1/cos and tan = sin * sec."""
    sec = cos_series(order).reciprocal()
    tan = sin_series(order) * sec
    return tan, sec


def _check_zero_convention(label: str, series: EgfSeries) -> None:
    if not series.is_zero():
        raise ValueError(f"{label} must be the zero series (index-0 convention)")


def ode_residual_u(k: int, series: Sequence[EgfSeries]) -> list[EgfSeries]:
    """Residuals of the first-order system satisfied by the U_j series:

        U_j' = 1 + U_j + U_{j-1} + U_{k-1} * U_j      for j = 1..k.

    ``series`` lists U_0..U_k at a common order N, U_0 being the zero
    series; the j-th residual (U_j' minus the right side) is reported at
    order N - 1 and vanishes identically iff the system holds.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if len(series) != k + 1:
        raise ValueError(f"expected {k + 1} series for j = 0..{k}, got {len(series)}")
    order = series[0].order
    if order < 1:
        raise ValueError("series order must be >= 1 to differentiate")
    for s in series:
        if s.order != order:
            raise ValueError("all series must share one order")
    _check_zero_convention("series[0]", series[0])
    cut = [s.truncate(order - 1) for s in series]
    one = EgfSeries.constant(1, order - 1)
    return [
        series[j].derivative() - one - cut[j] - cut[j - 1] - cut[k - 1] * cut[j]
        for j in range(1, k + 1)
    ]


def ode_residual_b(k: int, grid: Sequence[Sequence[EgfSeries]]) -> list[list[EgfSeries]]:
    """Residuals of the system satisfied by the B_{i,j} series:

        B_{i,j}' = 1 + B_{i-1,j} + B_{i,j-1} + B_{i,k-1} * B_{k-1,j}

    for 1 <= i, j <= k.  ``grid[i][j]`` holds B_{i,j} for i, j = 0..k with
    zero series along row and column 0; the returned k x k grid is indexed
    [i-1][j-1] at order N - 1.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if len(grid) != k + 1 or any(len(row) != k + 1 for row in grid):
        raise ValueError(f"expected a {k + 1}x{k + 1} grid of series")
    order = grid[0][0].order
    if order < 1:
        raise ValueError("series order must be >= 1 to differentiate")
    for row in grid:
        for s in row:
            if s.order != order:
                raise ValueError("all series must share one order")
    for idx in range(k + 1):
        _check_zero_convention(f"grid[0][{idx}]", grid[0][idx])
        _check_zero_convention(f"grid[{idx}][0]", grid[idx][0])
    cut = [[s.truncate(order - 1) for s in row] for row in grid]
    one = EgfSeries.constant(1, order - 1)
    return [
        [
            grid[i][j].derivative()
            - one
            - cut[i - 1][j]
            - cut[i][j - 1]
            - cut[i][k - 1] * cut[k - 1][j]
            for j in range(1, k + 1)
        ]
        for i in range(1, k + 1)
    ]


def k3_autonomous_residual(y: EgfSeries) -> EgfSeries:
    """Third-order autonomous residual satisfied by the B_{2,2} series at
    bound 3:

        2 y''' - 6 y y'' - 7 y'^2 + 8 y^2 y' + 4 y' - y^4 - 2 y^2 - 5

    reported at order N - 3.
    """
    if y.order < 3:
        raise ValueError(f"need order >= 3, got {y.order}")
    cut = y.order - 3
    y0 = y.truncate(cut)
    y1 = y.derivative(1).truncate(cut)
    y2 = y.derivative(2).truncate(cut)
    y3 = y.derivative(3)
    return (
        2 * y3
        - 6 * (y0 * y2)
        - 7 * (y1 * y1)
        + 8 * (y0 * y0 * y1)
        + 4 * y1
        - y0 * y0 * y0 * y0
        - 2 * (y0 * y0)
        - EgfSeries.constant(5, cut)
    )


def q_linear_ode_residual(k: int, order: int) -> EgfSeries:
    """Sum of the 0th..kth derivatives of the q-series, at the given order.

    Any k + 1 consecutive coefficients of the q-series hold one +1, one -1
    and zeros, so the residual vanishes identically.
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    y = q_series(k, order + k)
    total = EgfSeries.zero(order)
    for m in range(k + 1):
        total = total + y.derivative(m).truncate(order)
    return total
