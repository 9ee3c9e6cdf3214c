"""Coefficient families a_{r,j}, b_{r,j} and verifiers for every identity
connecting p(n), S^(r)_{n,k}, mu and phi.

Each verifier sweeps a configurable range, compares independently computed
sides exactly, and returns a VerificationReport.  Failures are report
content, never exceptions: a sweep always covers its full range and keeps
up to a capped number of counterexamples as evidence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt
from typing import Optional

from mobius_partitions.arith import MultiplicativeTable, build_sieve, mobius, totient
from mobius_partitions.partitions import (
    ENUMERATION_CAP,
    PartitionTable,
    SrTable,
    backward_difference,
    count_restricted,
    enumerate_partitions,
    partition_table_pentagonal,
    sr_table_enum,
    sr_table_gf,
)
from mobius_partitions.series import TruncatedSeries, lambert_sum, pochhammer

DEFAULT_COUNTEREXAMPLE_CAP = 10

# Empirical support width of row r of the a-table: the recurrence is run on
# a generous index range and entries past this width are asserted zero.
def _a_support(r: int) -> int:
    return (r - 1) * (r - 2) // 2 + 1


def _b_width(r: int) -> int:
    return r * (r - 1) // 2 + 1


@dataclass(frozen=True)
class CoeffTables:
    """Jagged rows a_{r,.} and b_{r,.} for r = 1..rmax (row r at index r-1)."""

    rmax: int
    a: tuple
    b: tuple


@dataclass
class Counterexample:
    n: int
    lhs: int
    rhs: int

    def to_dict(self) -> dict:
        return {"n": self.n, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class VerificationReport:
    """Structured pass/fail evidence for one identity over one sweep."""

    identity: str
    params: dict
    checked: int = 0
    failures: int = 0
    counterexamples: list = field(default_factory=list)
    cap: int = DEFAULT_COUNTEREXAMPLE_CAP

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, n: int, lhs: int, rhs: int) -> None:
        self.checked += 1
        if lhs != rhs:
            self.failures += 1
            if len(self.counterexamples) < self.cap:
                self.counterexamples.append(Counterexample(n, lhs, rhs))

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": self.params,
            "checked": self.checked,
            "failures": self.failures,
            "passed": self.passed,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.identity} {self.params}: {self.checked} checks, {self.failures} failures"
        for c in self.counterexamples:
            line += f"\n  n={c.n}: lhs={c.lhs} rhs={c.rhs}"
        return line


def build_b(rmax: int) -> list:
    """Rows b_{r,.} for r = 1..rmax from the recurrence alone.

    b_{r+1,j} = b_{r,j} - b_{r,j-r} (second term only for j >= r), starting
    from b_1 = [1].  Row r has r(r-1)/2 + 1 entries.
    """
    if rmax < 1:
        raise ValueError(f"rmax must be >= 1, got {rmax}")
    rows = [[1]]
    for r in range(1, rmax):
        prev = rows[-1]
        width = _b_width(r + 1)
        row = []
        for j in range(width):
            v = prev[j] if j < len(prev) else 0
            if j >= r:
                v -= prev[j - r] if j - r < len(prev) else 0
            row.append(v)
        rows.append(row)
    return rows


def build_a(rmax: int, table: MultiplicativeTable) -> list:
    """Rows a_{r,.} for r = 1..rmax from the recurrence.

    a_{r+1,j} = a_{r,j+1} - mu(r) b_{r,j+1} - a_{r,j+1-r} (last term only
    for j+1 >= r), starting from a_1 = [1].  The recurrence is evaluated on
    a generous index range; the trailing entries beyond the observed
    support width are asserted zero and trimmed.
    """
    if rmax < 1:
        raise ValueError(f"rmax must be >= 1, got {rmax}")
    if table.limit < rmax:
        raise ValueError(f"sieve limit {table.limit} < rmax {rmax}")
    b_rows = build_b(rmax)
    rows = [[1]]
    for r in range(1, rmax):
        prev = rows[-1]
        b_prev = b_rows[r - 1]
        mu_r = mobius(table, r)

        def a_prev(j):
            return prev[j] if 0 <= j < len(prev) else 0

        def b_prev_at(j):
            return b_prev[j] if 0 <= j < len(b_prev) else 0

        span = (r + 1) * (r + 2) // 2 + 1
        row = []
        for j in range(span):
            v = a_prev(j + 1) - mu_r * b_prev_at(j + 1)
            if j + 1 >= r:
                v -= a_prev(j + 1 - r)
            row.append(v)
        width = _a_support(r + 1)
        tail = row[width:]
        if any(tail):
            raise AssertionError(
                f"a-row {r + 1} has support beyond expected width {width}: {row}"
            )
        rows.append(row[:width])
    return rows


def build_coeff_tables(rmax: int, table: Optional[MultiplicativeTable] = None) -> CoeffTables:
    if table is None:
        table = build_sieve(max(rmax, 1))
    a = build_a(rmax, table)
    b = build_b(rmax)
    return CoeffTables(rmax, tuple(tuple(r) for r in a), tuple(tuple(r) for r in b))


def _mobius_weighted_sum(sr: SrTable, table: MultiplicativeTable, n: int) -> int:
    """sum_{k=r}^{n+r} S^(r)_{n+r,k} mu(k)."""
    r = sr.r
    return sum(sr.count(n + r, k) * mobius(table, k) for k in range(r, n + r + 1))


def verify_theorem1(nmax: int, r: int, cap: int = DEFAULT_COUNTEREXAMPLE_CAP) -> VerificationReport:
    """p(n) = (-1)^(r-1) sum_k S^(r)_{n+r,k} mu(k) for r in {1, 2}."""
    if r not in (1, 2):
        raise ValueError(f"r must be 1 or 2, got {r}")
    report = VerificationReport("thm1", {"nmax": nmax, "r": r}, cap=cap)
    sieve = build_sieve(nmax + r)
    sr = sr_table_gf(r, nmax + r)
    p = partition_table_pentagonal(nmax)
    sign = (-1) ** (r - 1)
    for n in range(nmax + 1):
        report.record(n, p.value(n), sign * _mobius_weighted_sum(sr, sieve, n))
    return report


def verify_theorem2(nmax: int, rmax: int, cap: int = DEFAULT_COUNTEREXAMPLE_CAP) -> VerificationReport:
    """sum_k S^(r)_{n+r,k} mu(k) = sum_j a_{r,j} p(n-j) for r <= rmax."""
    report = VerificationReport("thm2", {"nmax": nmax, "rmax": rmax}, cap=cap)
    sieve = build_sieve(nmax + rmax)
    a_rows = build_a(rmax, sieve)
    p = partition_table_pentagonal(nmax)
    for r in range(1, rmax + 1):
        sr = sr_table_gf(r, nmax + r)
        a_row = a_rows[r - 1]
        for n in range(nmax + 1):
            lhs = _mobius_weighted_sum(sr, sieve, n)
            rhs = sum(c * p.value(n - j) for j, c in enumerate(a_row))
            report.record(n, lhs, rhs)
    return report


def verify_weighted_corollary(nmax: int, r: int, cap: int = DEFAULT_COUNTEREXAMPLE_CAP) -> VerificationReport:
    """p(n-r) = (-1)^(r-1) * sum over partitions of n with parts >= r of
    sum_k mu(k) * multiplicity(k), checked by full enumeration."""
    if r not in (1, 2):
        raise ValueError(f"r must be 1 or 2, got {r}")
    report = VerificationReport("weighted", {"nmax": nmax, "r": r}, cap=cap)
    sieve = build_sieve(max(nmax, 1))
    p = partition_table_pentagonal(nmax)
    sign = (-1) ** (r - 1)
    for n in range(nmax + 1):
        total = 0
        for part in enumerate_partitions(n, r):
            total += sum(
                mobius(sieve, k) * part.multiplicity(k) for k in set(part.parts)
            )
        report.record(n, p.value(n - r), sign * total)
    return report


# (table r, sum start k, S-table offset, difference expression, predicate, n start)
_COROLLARY_SPECS = {
    2: dict(r=3, offset=3, nmin=0),
    3: dict(r=4, offset=5, nmin=3),
    4: dict(r=5, offset=5, nmin=6),
}


def verify_corollary(
    which: int,
    nmax: int,
    cap: int = DEFAULT_COUNTEREXAMPLE_CAP,
    oracle_cap: int = ENUMERATION_CAP,
) -> VerificationReport:
    """Three-way check of the combinatorial corollaries.

    which=2: partitions with no 1's, nabla p(n)          vs -sum S^(3)_{n+3,k} mu(k)
    which=3: + largest part repeated, nabla^2 p(n)       vs -sum S^(4)_{n+5,k} mu(k)
    which=4: + at most one 2, nabla^2 p(n)-nabla^2 p(n-4) vs -sum S^(5)_{n+5,k} mu(k)

    The enumeration leg is only checked for n <= oracle_cap; the difference
    and Mobius legs cover the full range.
    """
    if which not in _COROLLARY_SPECS:
        raise ValueError(f"which must be 2, 3 or 4, got {which}")
    spec = _COROLLARY_SPECS[which]
    r, offset, nmin = spec["r"], spec["offset"], spec["nmin"]
    report = VerificationReport(f"cor{which}", {"nmax": nmax}, cap=cap)
    limit = nmax + offset
    sieve = build_sieve(limit)
    sr = sr_table_gf(r, limit)
    p = partition_table_pentagonal(max(nmax, 1))
    predicates = {
        2: "no-ones",
        3: "no-ones-and-largest-repeated",
        4: "no-ones-at-most-one-two-largest-repeated",
    }
    for n in range(nmin, nmax + 1):
        if which == 2:
            diff = backward_difference(p, 1, n)
        elif which == 3:
            diff = backward_difference(p, 2, n)
        else:
            diff = backward_difference(p, 2, n) - (
                backward_difference(p, 2, n - 4) if n >= 4 else 0
            )
        msum = -sum(
            sr.count(n + offset, k) * mobius(sieve, k) for k in range(r, n + offset + 1)
        )
        report.record(n, diff, msum)
        if n <= oracle_cap:
            report.record(n, diff, count_restricted(n, predicates[which]))
    return report


def verify_phi_identities(nmax: int, cap: int = DEFAULT_COUNTEREXAMPLE_CAP) -> VerificationReport:
    """Totient analogues: sum_k S^(1)_{n+1,k} phi(k) = sum_k (k+1) p(n-k)
    and sum_k S^(2)_{n+2,k} phi(k) = sum_k p(n-k) = S^(1)_{n+1,1}."""
    report = VerificationReport("phi", {"nmax": nmax}, cap=cap)
    sieve = build_sieve(nmax + 2)
    s1 = sr_table_gf(1, nmax + 2)
    s2 = sr_table_gf(2, nmax + 2)
    p = partition_table_pentagonal(nmax)
    for n in range(nmax + 1):
        lhs1 = sum(s1.count(n + 1, k) * totient(sieve, k) for k in range(1, n + 2))
        rhs1 = sum((k + 1) * p.value(n - k) for k in range(n + 1))
        report.record(n, lhs1, rhs1)
        lhs2 = sum(s2.count(n + 2, k) * totient(sieve, k) for k in range(2, n + 3))
        rhs2 = sum(p.value(n - k) for k in range(n + 1))
        report.record(n, lhs2, rhs2)
        report.record(n, rhs2, s1.count(n + 1, 1))
    return report


def verify_prime_corollary(
    nmax: int, alpha: int, which: str = "i", cap: int = DEFAULT_COUNTEREXAMPLE_CAP
) -> VerificationReport:
    """Identities weighting S^(1) or S^(2) by mu(alpha*k) for prime alpha.

    which="i":   sum_{k=1}^{n+1} S^(1)_{n+1,k} mu(alpha k)
                   = -sum_j p(n+1-alpha^j)
    which="ii":  sum_{k=2}^{n+2} S^(2)_{n+2,k} mu(alpha k)
                   = sum_j (p(n+1-alpha^j) - p(n+2-alpha^(j+1)))
    which="alternate-form": the rewrite of (i) as a double sum skipping
    k = 0 mod alpha, equal to +sum_j p(n+1-alpha^j).
    """
    if which not in ("i", "ii", "alternate-form"):
        raise ValueError(f"which must be i, ii or alternate-form, got {which!r}")
    sieve = build_sieve(max(alpha * (nmax + 2), alpha))
    if not sieve.is_prime(alpha):
        raise ValueError(f"alpha={alpha} is not prime")
    report = VerificationReport("prime-alpha", {"nmax": nmax, "alpha": alpha, "which": which}, cap=cap)
    p = partition_table_pentagonal(nmax + 2)
    if which == "ii":
        sr = sr_table_gf(2, nmax + 2)
    else:
        sr = sr_table_gf(1, nmax + 1)
    for n in range(nmax + 1):
        if which == "i":
            lhs = sum(
                sr.count(n + 1, k) * mobius(sieve, alpha * k) for k in range(1, n + 2)
            )
            rhs = 0
            power = 1
            while power <= n + 1:
                rhs -= p.value(n + 1 - power)
                power *= alpha
        elif which == "ii":
            lhs = sum(
                sr.count(n + 2, k) * mobius(sieve, alpha * k) for k in range(2, n + 3)
            )
            rhs = 0
            power = 1
            while power <= n + 2:
                rhs += p.value(n + 1 - power) - p.value(n + 2 - alpha * power)
                power *= alpha
        else:
            lhs = 0
            ceil_blocks = -((n + 1) // -alpha)
            for blk in range(1, ceil_blocks + 1):
                for d in range(1, alpha):
                    k = alpha * (blk - 1) + d
                    if k <= n + 1:
                        lhs += sr.count(n + 1, k) * mobius(sieve, k)
            rhs = 0
            power = 1
            while power <= n + 1:
                rhs += p.value(n + 1 - power)
                power *= alpha
        report.record(n, lhs, rhs)
    return report


def verify_b_symmetry(rmax: int, cap: int = DEFAULT_COUNTEREXAMPLE_CAP) -> VerificationReport:
    """b_{r,j} = b_{r-1,j} - (-1)^r b_{r-1, r(r-1)/2 - j} for r >= 2,
    reading out-of-support entries as zero."""
    if rmax < 2:
        raise ValueError(f"rmax must be >= 2, got {rmax}")
    report = VerificationReport("b-symmetry", {"rmax": rmax}, cap=cap)
    rows = build_b(rmax)
    for r in range(2, rmax + 1):
        cur, prev = rows[r - 1], rows[r - 2]

        def at(row, j):
            return row[j] if 0 <= j < len(row) else 0

        half = r * (r - 1) // 2
        for j in range(len(cur)):
            lhs = cur[j]
            rhs = at(prev, j) - (-1) ** r * at(prev, half - j)
            # encode (r, j) into the report's n slot as r*1000 + j
            report.record(r * 1000 + j, lhs, rhs)
    return report


def verify_lemma1(
    nmax: int, rmax: int, route: str = "gf", cap: int = DEFAULT_COUNTEREXAMPLE_CAP
) -> VerificationReport:
    """S^(r+1)_{n+r,k} = S^(r)_{n+r,k} - S^(r)_{n,k} for n >= k > r >= 1."""
    if route not in ("gf", "enum"):
        raise ValueError(f"route must be gf or enum, got {route!r}")
    build = sr_table_gf if route == "gf" else sr_table_enum
    report = VerificationReport("lemma1", {"nmax": nmax, "rmax": rmax, "route": route}, cap=cap)
    limit = nmax + rmax
    tables = {r: build(r, limit) for r in range(1, rmax + 2)}
    for r in range(1, rmax + 1):
        lo, hi = tables[r], tables[r + 1]
        for n in range(r + 1, nmax + 1):
            for k in range(r + 1, n + 1):
                lhs = hi.count(n + r, k)
                rhs = lo.count(n + r, k) - lo.count(n, k)
                report.record(n, lhs, rhs)
    return report


def verify_lambert(nmax: int, cap: int = DEFAULT_COUNTEREXAMPLE_CAP) -> VerificationReport:
    """The Lambert series sum_k mu(k) q^k/(1-q^k) collapses to q exactly."""
    report = VerificationReport("lambert", {"nmax": nmax}, cap=cap)
    sieve = build_sieve(max(nmax, 1))
    series = lambert_sum(lambda k: mobius(sieve, k), nmax)
    expected = TruncatedSeries.monomial(1, nmax) if nmax >= 1 else TruncatedSeries.zero(0)
    for n in range(nmax + 1):
        report.record(n, series.coefficient(n), expected.coefficient(n))
    return report


def verify_sr_oracle(nmax: int, rmax: int, cap: int = DEFAULT_COUNTEREXAMPLE_CAP) -> VerificationReport:
    """Generating-function S-tables against the enumeration oracle."""
    report = VerificationReport("oracle-sr", {"nmax": nmax, "rmax": rmax}, cap=cap)
    for r in range(1, rmax + 1):
        fast = sr_table_gf(r, nmax)
        slow = sr_table_enum(r, nmax)
        for n in range(nmax + 1):
            for k in range(r, n + 1):
                report.record(n, fast.count(n, k), slow.count(n, k))
    return report
