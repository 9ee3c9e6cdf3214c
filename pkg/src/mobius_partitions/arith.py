"""Sieved arithmetic functions: Mobius mu, Euler's totient phi, smallest
prime factors.

A single linear sieve fills all three arrays up to a fixed limit; the
resulting table is immutable and safe to share between threads.
"""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class MultiplicativeTable:
    """mu, phi and smallest-prime-factor values for 1..limit.

    The internal arrays are 1-indexed (index 0 is a dead slot) so that
    table.mu[k] really is mu(k).  spf[1] = 1 by convention; mu(1) = phi(1) = 1.
    """

    limit: int
    mu: tuple = field(repr=False)
    phi: tuple = field(repr=False)
    spf: tuple = field(repr=False)

    def is_prime(self, k: int) -> bool:
        self._check_range(k)
        return k >= 2 and self.spf[k] == k

    def _check_range(self, k: int) -> None:
        if not 1 <= k <= self.limit:
            raise IndexError(f"k={k} outside sieved range 1..{self.limit}")


def build_sieve(limit: int) -> MultiplicativeTable:
    """Build mu, phi and spf for 1..limit with a linear sieve."""
    if limit < 1:
        raise ValueError(f"sieve limit must be >= 1, got {limit}")
    mu = [0] * (limit + 1)
    phi = [0] * (limit + 1)
    spf = [0] * (limit + 1)
    mu[1] = phi[1] = spf[1] = 1
    primes = []
    for n in range(2, limit + 1):
        if spf[n] == 0:
            spf[n] = n
            mu[n] = -1
            phi[n] = n - 1
            primes.append(n)
        for p in primes:
            if p > spf[n] or n * p > limit:
                break
            m = n * p
            spf[m] = p
            if n % p == 0:
                mu[m] = 0
                phi[m] = phi[n] * p
                break
            mu[m] = -mu[n]
            phi[m] = phi[n] * (p - 1)
    return MultiplicativeTable(limit, tuple(mu), tuple(phi), tuple(spf))


def mobius(table: MultiplicativeTable, k: int) -> int:
    """mu(k); raises IndexError for k outside 1..limit (mu(0) is undefined)."""
    table._check_range(k)
    return table.mu[k]


def totient(table: MultiplicativeTable, k: int) -> int:
    """phi(k); raises IndexError outside the sieved range."""
    table._check_range(k)
    return table.phi[k]


def mobius_scaled(table: MultiplicativeTable, alpha: int, k: int) -> int:
    """mu(alpha*k) for prime alpha.  Zero whenever alpha divides k."""
    if not (2 <= alpha <= table.limit and table.is_prime(alpha)):
        raise ValueError(f"alpha={alpha} is not a prime in the sieved range")
    if k < 1 or alpha * k > table.limit:
        raise IndexError(f"alpha*k={alpha * k} outside sieved range 1..{table.limit}")
    return table.mu[alpha * k]
