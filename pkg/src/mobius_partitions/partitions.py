"""Partition counts p(n), explicit enumeration with a smallest-part bound,
the statistic S^(r)_{n,k} by two independent routes, and backward
differences of p.

S^(r)_{n,k} is the total number of parts equal to k across all partitions
of n whose smallest part is at least r.  The enumeration route scans the
partitions themselves and is the oracle; the generating-function route
extracts the same numbers from q^k/(1-q^k) * 1/(q^r; q)_inf and scales to
much larger n.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

from mobius_partitions.series import TruncatedSeries, pochhammer, reciprocal

# Full enumeration stays sub-second up to about here (p(45) ~ 89k partitions).
ENUMERATION_CAP = 45

PREDICATES = (
    "no-ones",
    "no-ones-and-largest-repeated",
    "no-ones-at-most-one-two-largest-repeated",
    "min-part-at-least-r",
)


@dataclass(frozen=True)
class PartitionTable:
    """p(0..limit) as exact integers; p(n) = 0 for negative n by convention."""

    limit: int
    values: tuple

    def value(self, n: int) -> int:
        if n < 0:
            return 0
        if n > self.limit:
            raise IndexError(f"n={n} exceeds table limit {self.limit}")
        return self.values[n]


@dataclass(frozen=True)
class Partition:
    """A partition as a non-increasing tuple of positive parts."""

    parts: tuple

    @property
    def n(self) -> int:
        return sum(self.parts)

    def multiplicity(self, k: int) -> int:
        return self.parts.count(k)

    @property
    def smallest(self) -> int:
        return self.parts[-1]

    @property
    def largest(self) -> int:
        return self.parts[0]

    @property
    def largest_multiplicity(self) -> int:
        return self.parts.count(self.parts[0])


def partition_table_pentagonal(limit: int) -> PartitionTable:
    """p(0..limit) via Euler's pentagonal-number recurrence.

    Independent of the series module on purpose: this is the oracle the
    generating-function route is checked against.
    """
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    p = [0] * (limit + 1)
    p[0] = 1
    for n in range(1, limit + 1):
        total = 0
        k = 1
        while True:
            g1 = n - k * (3 * k - 1) // 2
            g2 = n - k * (3 * k + 1) // 2
            if g1 < 0 and g2 < 0:
                break
            term = (p[g1] if g1 >= 0 else 0) + (p[g2] if g2 >= 0 else 0)
            total += term if k % 2 == 1 else -term
            k += 1
        p[n] = total
    return PartitionTable(limit, tuple(p))


def partition_table_gf(limit: int) -> PartitionTable:
    """p(0..limit) as the coefficients of 1/(q;q)_inf."""
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    inv = reciprocal(pochhammer(1, None, limit))
    return PartitionTable(limit, inv.coeffs)


def enumerate_partitions(n: int, min_part: int = 1) -> Iterator[Partition]:
    """All partitions of n with every part >= min_part, each exactly once.

    Order is descending lexicographic on the part sequences, e.g. for n=6,
    min_part=2: (6), (4,2), (3,3), (2,2,2).  n = 0 yields the empty
    partition.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if min_part < 1:
        raise ValueError(f"min_part must be >= 1, got {min_part}")

    def gen(remaining, max_part, prefix):
        if remaining == 0:
            yield Partition(tuple(prefix))
            return
        for part in range(min(remaining, max_part), min_part - 1, -1):
            rest = remaining - part
            if rest == 0 or rest >= min_part:
                prefix.append(part)
                yield from gen(rest, part, prefix)
                prefix.pop()

    yield from gen(n, n, [])


class SrTable:
    """Dense table of S^(r)_{n,k} for 0 <= n <= limit, read-only after build."""

    __slots__ = ("r", "limit", "_rows")

    def __init__(self, r: int, limit: int, rows):
        self.r = r
        self.limit = limit
        self._rows = rows

    def count(self, n: int, k: int) -> int:
        """S^(r)_{n,k}; zero for k < r or k > n (including k beyond limit)."""
        if not 0 <= n <= self.limit:
            raise IndexError(f"n={n} outside 0..{self.limit}")
        if k < self.r or k > n:
            return 0
        return self._rows[n][k]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SrTable):
            return NotImplemented
        return (self.r, self.limit, self._rows) == (other.r, other.limit, other._rows)


def sr_table_enum(r: int, limit: int) -> SrTable:
    """S^(r) by scanning partitions; the brute-force oracle (limit <= ~45)."""
    _check_sr_args(r, limit)
    rows = [[0] * (limit + 1) for _ in range(limit + 1)]
    for n in range(r, limit + 1):
        row = rows[n]
        for part in enumerate_partitions(n, r):
            for k in set(part.parts):
                row[k] += part.multiplicity(k)
    return SrTable(r, limit, rows)


def sr_table_gf(r: int, limit: int) -> SrTable:
    """S^(r) via coefficient extraction from q^k/(1-q^k) * 1/(q^r; q)_inf."""
    _check_sr_args(r, limit)
    inv = reciprocal(pochhammer(r, None, limit)).coeffs
    rows = [[0] * (limit + 1) for _ in range(limit + 1)]
    for k in range(r, limit + 1):
        for mk in range(k, limit + 1, k):
            for n in range(mk, limit + 1):
                rows[n][k] += inv[n - mk]
    return SrTable(r, limit, rows)


def _check_sr_args(r: int, limit: int) -> None:
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if limit < r:
        raise ValueError(f"limit {limit} smaller than r={r}")


def backward_difference(table: PartitionTable, order: int, n: int) -> int:
    """Backward difference of p: sum_k (-1)^k C(order,k) p(n-k), p(<0) = 0."""
    if order < 0:
        raise ValueError(f"difference order must be >= 0, got {order}")
    if not 0 <= n <= table.limit:
        raise IndexError(f"n={n} outside 0..{table.limit}")
    return sum((-1) ** k * comb(order, k) * table.value(n - k) for k in range(order + 1))


def count_restricted(n: int, predicate: str, min_part: int | None = None) -> int:
    """Count partitions of n satisfying a named predicate, by enumeration.

    Predicates: "no-ones"; "no-ones-and-largest-repeated";
    "no-ones-at-most-one-two-largest-repeated"; "min-part-at-least-r"
    (takes the bound through min_part).
    """
    if predicate not in PREDICATES:
        raise ValueError(f"unknown predicate {predicate!r}")
    if predicate == "min-part-at-least-r":
        if min_part is None:
            raise ValueError("min-part-at-least-r needs min_part")
        return sum(1 for _ in enumerate_partitions(n, min_part))
    if predicate == "no-ones":
        return sum(1 for _ in enumerate_partitions(n, 2))
    if predicate == "no-ones-and-largest-repeated":
        return sum(
            1
            for p in enumerate_partitions(n, 2)
            if p.parts and p.largest_multiplicity > 1
        )
    # no parts equal to 1, at most one 2, largest part repeated
    return sum(
        1
        for p in enumerate_partitions(n, 2)
        if p.parts and p.multiplicity(2) <= 1 and p.largest_multiplicity > 1
    )
