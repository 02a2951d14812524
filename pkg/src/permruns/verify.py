"""Cross-checks between the three computation paths and the shipped tables.

Four suites, each producing a ``VerificationReport``:

- ``verify_fixtures``: recompute all four reference tables for k, n <= 18
  and compare cell-by-cell with the transcription shipped in ``data/``.
- ``verify_bruteforce``: compare the recurrence tables, corner and inner
  cells alike, against exhaustive enumeration for small n.
- ``verify_egf``: check the generating-function identities (closed form,
  derivative identity, system residuals, tan/sec solution, the third-order
  autonomous equation) against the recurrence tables.
- ``verify_sums``: partition-of-n! checks plus symmetry and monotonicity
  invariants of the tables.

Reports are deterministic: same inputs, byte-identical serializations.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from importlib import resources
from math import factorial

from . import counts, egf, oracle

FIXTURE_KMAX = 18
FIXTURE_NMAX = 18

# Only these cells may be flagged as disagreeing with the 1966 tables.
ALLOWED_CORRECTED = frozenset(
    [("I", k, n) for k in (3, 4) for n in (16, 17, 18)]
    + [("A", k, n) for k in (3, 4, 5, 6) for n in (13, 14)]
)


@dataclass(frozen=True)
class Check:
    check_id: str
    expected: str
    actual: str

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return (
            f"{self.suite}: {status} "
            f"({len(self.checks)} checks, {len(self.failures())} failed)"
        )

    def to_text(self) -> str:
        lines = [
            f"{'ok  ' if c.passed else 'FAIL'} {c.check_id} "
            f"expected={c.expected} actual={c.actual}"
            for c in self.checks
        ]
        lines.append(self.summary())
        return "\n".join(lines) + "\n"

    def to_records(self) -> list[dict]:
        return [
            {
                "suite": self.suite,
                "id": c.check_id,
                "expected": c.expected,
                "actual": c.actual,
                "status": "pass" if c.passed else "fail",
            }
            for c in self.checks
        ]

    def to_jsonl(self) -> str:
        return "".join(
            json.dumps(rec, sort_keys=True) + "\n" for rec in self.to_records()
        )


@dataclass(frozen=True)
class TableFixture:
    """Transcription of the published tables: (family, k, n) -> decimal string."""

    entries: dict[tuple[str, int, int], str]
    corrected: frozenset[tuple[str, int, int]]

    def value(self, family: str, k: int, n: int) -> str:
        return self.entries[(family, k, n)]


def _data_path(name: str):
    return resources.files("permruns").joinpath("data").joinpath(name)


def fixture_sha256() -> dict[str, str]:
    """Digests of the shipped fixture files, for tamper detection in tests."""
    return {
        name: hashlib.sha256(_data_path(name).read_bytes()).hexdigest()
        for name in ("reference_tables.txt", "corrected_cells.txt")
    }


def _parse_records(text: str, path: str, nfields: int) -> list[list[str]]:
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != nfields:
            raise ValueError(
                f"{path}:{lineno}: expected {nfields} fields, got {len(fields)}"
            )
        rows.append(fields)
    return rows


def load_fixture(
    tables_path=None, corrected_path=None
) -> TableFixture:
    """Read the shipped fixture (or explicit files) and validate its shape."""
    tables_src = tables_path if tables_path is not None else _data_path("reference_tables.txt")
    corrected_src = (
        corrected_path if corrected_path is not None else _data_path("corrected_cells.txt")
    )
    entries: dict[tuple[str, int, int], str] = {}
    for fam, k, n, value in _parse_records(
        tables_src.read_text(), str(tables_src), 4
    ):
        if fam not in counts.FAMILIES:
            raise ValueError(f"unknown family {fam!r} in fixture")
        if not value.isdigit():
            raise ValueError(f"non-numeric fixture value {value!r}")
        key = (fam, int(k), int(n))
        if key in entries:
            raise ValueError(f"duplicate fixture cell {key}")
        entries[key] = value
    expected_keys = {
        (fam, k, n)
        for fam in counts.FAMILIES
        for k in range(1, FIXTURE_KMAX + 1)
        for n in range(1, FIXTURE_NMAX + 1)
    }
    if set(entries) != expected_keys:
        missing = sorted(expected_keys - set(entries))[:3]
        extra = sorted(set(entries) - expected_keys)[:3]
        raise ValueError(f"fixture shape wrong; missing={missing} extra={extra}")
    corrected = frozenset(
        (fam, int(k), int(n))
        for fam, k, n in _parse_records(corrected_src.read_text(), str(corrected_src), 3)
    )
    if not corrected <= ALLOWED_CORRECTED:
        raise ValueError(
            f"unexpected corrected cells: {sorted(corrected - ALLOWED_CORRECTED)}"
        )
    return TableFixture(entries=entries, corrected=corrected)


def _check(check_id, expected, actual) -> Check:
    return Check(check_id=check_id, expected=str(expected), actual=str(actual))


def verify_fixtures(fixture: TableFixture | None = None) -> VerificationReport:
    """Recompute every fixture cell and compare exactly."""
    if fixture is None:
        fixture = load_fixture()
    checks = []
    for fam in counts.FAMILIES:
        table = counts.full_table(fam, FIXTURE_KMAX, FIXTURE_NMAX)
        for k in range(1, FIXTURE_KMAX + 1):
            for n in range(1, FIXTURE_NMAX + 1):
                checks.append(
                    _check(
                        f"fixtures/{fam}/k={k}/n={n}",
                        fixture.value(fam, k, n),
                        table[k - 1][n - 1],
                    )
                )
    return VerificationReport(suite="fixtures", checks=tuple(checks))


def verify_bruteforce(
    nmax: int = 8, cap: int = oracle.DEFAULT_ENUMERATION_CAP
) -> VerificationReport:
    """Recurrences vs exhaustive enumeration, corner and inner cells."""
    if nmax < 1:
        raise ValueError(f"nmax must be >= 1, got {nmax}")
    checks = []
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            for fam, dp, brute in (
                ("U", counts.u_count, oracle.oracle_u),
                ("B", counts.b_count, oracle.oracle_b),
            ):
                checks.append(
                    _check(f"bruteforce/{fam}/k={k}/n={n}", brute(k, n, cap), dp(k, n))
                )
            checks.append(
                _check(
                    f"bruteforce/I/k={k}/n={n}",
                    oracle.oracle_u(k, n, cap) - oracle.oracle_u(k - 1, n, cap),
                    counts.i_count(k, n),
                )
            )
            checks.append(
                _check(
                    f"bruteforce/A/k={k}/n={n}",
                    oracle.oracle_b(k, n, cap) - oracle.oracle_b(k - 1, n, cap),
                    counts.a_count(k, n),
                )
            )
        # Inner cells: the conditioned counts catch index bugs that the
        # corner values U_k / B_{k,k} can mask.
        for k in range(1, n + 1):
            utable = counts.compute_u_table(k, n)
            for j in range(1, k + 1):
                checks.append(
                    _check(
                        f"bruteforce/U-cell/k={k}/j={j}/n={n}",
                        oracle.oracle_u_cell(k, j, n, cap),
                        utable.value(j, n),
                    )
                )
            btable = counts.compute_b_table(k, n)
            for i in range(1, k + 1):
                for j in range(1, k + 1):
                    checks.append(
                        _check(
                            f"bruteforce/B-cell/k={k}/i={i}/j={j}/n={n}",
                            oracle.oracle_b_cell(k, i, j, n, cap),
                            btable.value(i, j, n),
                        )
                    )
    return VerificationReport(suite="bruteforce", checks=tuple(checks))


def dp_u_series(k: int, order: int) -> list[egf.EgfSeries]:
    """[U_0, U_1, ..., U_k] as order-``order`` series from the recurrence table."""
    table = counts.compute_u_table(k, order)
    return [egf.EgfSeries.zero(order)] + [
        egf.egf_from_counts(table.row(j)) for j in range(1, k + 1)
    ]


def dp_b_series(k: int, order: int) -> list[list[egf.EgfSeries]]:
    """(k+1) x (k+1) grid of B_{i,j} series, zero along row and column 0."""
    table = counts.compute_b_table(k, order)
    zero = egf.EgfSeries.zero(order)
    grid = [[zero] * (k + 1)]
    for i in range(1, k + 1):
        grid.append(
            [zero] + [egf.egf_from_counts(table.row(i, j)) for j in range(1, k + 1)]
        )
    return grid


def verify_egf(kmax: int = 18, order: int = 18) -> VerificationReport:
    """Generating-function identities against the recurrence tables."""
    if kmax < 1 or order < 1:
        raise ValueError("kmax and order must be >= 1")
    checks = []
    zero_str = str([0] * order)

    # Closed form: coefficients of 1/q - 1 equal the unconditioned counts.
    for k in range(1, kmax + 1):
        closed = egf.u_closed_form(k, order)
        dp = egf.egf_from_counts(counts.family_row("U", k, order))
        checks.append(
            _check(f"egf/u-closed-form/k={k}", list(dp.coeffs), list(closed.coeffs))
        )

    # Derivative identity for the refined series, 2 <= k <= 6.
    d_order = min(order, 12)
    for k in range(2, min(kmax, 6) + 1):
        table = counts.compute_u_table(k, d_order)
        for j in range(1, k):
            derived = egf.u_j_from_y(k, j, d_order)
            dp = egf.egf_from_counts(table.row(j))
            checks.append(
                _check(
                    f"egf/u-from-y/k={k}/j={j}",
                    list(dp.coeffs),
                    list(derived.coeffs),
                )
            )

    # First-order system residuals over the recurrence series.
    u_order = min(order, 15)
    for k in range(1, min(kmax, 5) + 1):
        residuals = egf.ode_residual_u(k, dp_u_series(k, u_order))
        for j, res in enumerate(residuals, start=1):
            checks.append(
                _check(
                    f"egf/ode-u/k={k}/j={j}",
                    str([0] * u_order),
                    list(res.coeffs),
                )
            )
    b_order = min(order, 13)
    for k in range(1, min(kmax, 4) + 1):
        grid = egf.ode_residual_b(k, dp_b_series(k, b_order))
        for i in range(1, k + 1):
            for j in range(1, k + 1):
                checks.append(
                    _check(
                        f"egf/ode-b/k={k}/i={i}/j={j}",
                        str([0] * b_order),
                        list(grid[i - 1][j - 1].coeffs),
                    )
                )

    # Bound-2 solution: tan, tan + sec - 1, 2(tan + sec - 1) - x.
    tan, sec = egf.tan_sec_series(order)
    one = egf.EgfSeries.constant(1, order)
    closed = {
        (1, 1): tan,
        (1, 2): tan + sec - one,
        (2, 2): (tan + sec - one).scale(2) - egf.EgfSeries.x(order),
    }
    table2 = counts.compute_b_table(2, order)
    for (i, j), series in sorted(closed.items()):
        dp = egf.egf_from_counts(table2.row(i, j))
        checks.append(
            _check(f"egf/tan-sec/i={i}/j={j}", list(dp.coeffs), list(series.coeffs))
        )

    # Third-order autonomous equation for the bound-3 B_{2,2} series.
    k3_order = min(order, 18)
    y = egf.egf_from_counts(counts.compute_b_table(3, k3_order).row(2, 2))
    res = egf.k3_autonomous_residual(y)
    checks.append(
        _check("egf/k3-autonomous", str([0] * (k3_order - 2)), list(res.coeffs))
    )

    # Linear equation for the q-series: derivatives 0..k sum to zero.
    for k in range(1, min(kmax, 6) + 1):
        res = egf.q_linear_ode_residual(k, order)
        checks.append(
            _check(f"egf/q-linear-ode/k={k}", str([0] * (order + 1)), list(res.coeffs))
        )
    return VerificationReport(suite="egf", checks=tuple(checks))


def verify_sums(nmax: int = 18) -> VerificationReport:
    """Partition of n! by longest-run length, plus table invariants."""
    if nmax < 1:
        raise ValueError(f"nmax must be >= 1, got {nmax}")
    checks = []
    for n in range(1, nmax + 1):
        checks.append(
            _check(
                f"sums/I/n={n}",
                factorial(n),
                sum(counts.i_count(k, n) for k in range(1, n + 1)),
            )
        )
        checks.append(
            _check(
                f"sums/A/n={n}",
                factorial(n),
                sum(counts.a_count(k, n) for k in range(1, n + 1)),
            )
        )
    for k in range(1, nmax + 1):
        utable = counts.compute_u_table(k, nmax)
        bad = [
            (j, n)
            for j in range(1, k)
            for n in range(1, nmax + 1)
            if utable.value(j, n) > utable.value(j + 1, n)
        ]
        checks.append(_check(f"sums/u-monotone-j/k={k}", [], bad))
        btable = counts.compute_b_table(k, nmax)
        bad = [
            (i, j, n)
            for i in range(1, k + 1)
            for j in range(i + 1, k + 1)
            for n in range(1, nmax + 1)
            if btable.value(i, j, n) != btable.value(j, i, n)
        ]
        checks.append(_check(f"sums/b-symmetric/k={k}", [], bad))
        bad = [
            (i, j, n)
            for i in range(1, k + 1)
            for j in range(1, k + 1)
            for n in range(1, nmax + 1)
            if (i < k and btable.value(i, j, n) > btable.value(i + 1, j, n))
            or (j < k and btable.value(i, j, n) > btable.value(i, j + 1, n))
        ]
        checks.append(_check(f"sums/b-monotone-ij/k={k}", [], bad))
        bad = [
            n
            for n in range(1, nmax + 1)
            if counts.b_count(k, n) > counts.u_count(k, n)
        ]
        checks.append(_check(f"sums/b-le-u/k={k}", [], bad))
    return VerificationReport(suite="sums", checks=tuple(checks))


SUITES = ("fixtures", "bruteforce", "egf", "sums")


def run_suite(name: str, **kwargs) -> VerificationReport:
    if name == "fixtures":
        return verify_fixtures(**kwargs)
    if name == "bruteforce":
        return verify_bruteforce(**kwargs)
    if name == "egf":
        return verify_egf(**kwargs)
    if name == "sums":
        return verify_sums(**kwargs)
    raise ValueError(f"unknown suite {name!r}, expected one of {SUITES + ('all',)}")


def verify_all() -> list[VerificationReport]:
    return [run_suite(name) for name in SUITES]
