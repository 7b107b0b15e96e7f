"""Prime sieve and canonical prime factorizations."""

import threading
from dataclasses import dataclass

from .intarith import ArithmeticOverflow, check_bound, isqrt_floor, require_positive


SIEVE_CAP = 1 << 20


def primes_up_to(n_max):
    """All primes p <= n_max in ascending order (sieve of Eratosthenes)."""
    if n_max < 2:
        return []
    sieve = bytearray([1]) * (n_max + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt_floor(n_max) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, n_max + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


class _PrimeCache:
    # Grows by replacing the tuple wholesale, so readers never see a partial list.
    def __init__(self):
        self._limit = 1
        self._primes = ()
        self._lock = threading.Lock()

    def get(self, limit):
        if limit <= self._limit:
            return self._primes
        with self._lock:
            if limit > self._limit:
                new_limit = max(limit, 2 * self._limit, 1024)
                self._primes = tuple(primes_up_to(new_limit))
                self._limit = new_limit
        return self._primes


_cache = _PrimeCache()


@dataclass(frozen=True)
class PrimeFactorization:
    """Canonical factorization: (prime, exponent) pairs, primes strictly ascending."""

    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple((int(p), int(e)) for p, e in self.entries))
        prev = 1
        for p, e in self.entries:
            if p <= prev:
                raise ValueError(f"primes must be strictly ascending: {self.entries}")
            if e < 1:
                raise ValueError(f"exponent of {p} must be >= 1, got {e}")
            prev = p

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    @property
    def primes(self):
        return tuple(p for p, _ in self.entries)

    def __str__(self):
        return " · ".join(f"{p}^{e}" for p, e in self.entries)


def factorize(g):
    """Factor g >= 2 by trial division with sieved primes up to isqrt(g).

    >>> factorize(2352).entries
    ((2, 4), (3, 1), (7, 2))
    """
    require_positive(g, "g")
    if g < 2:
        raise ValueError("factorize requires g >= 2; 1 has an empty factorization")
    entries = []
    rest = g

    def strip(p):
        nonlocal rest
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        if e:
            entries.append((p, e))

    sieved = _cache.get(min(isqrt_floor(g), SIEVE_CAP))
    p = 1
    for p in sieved:
        if p * p > rest:
            break
        strip(p)
    else:
        # Past the sieve: odd candidates are enough, composites never divide.
        p = p + 2 if p > 2 else 3
        while p * p <= rest:
            strip(p)
            p += 2
    if rest > 1:
        entries.append((rest, 1))
    return PrimeFactorization(tuple(entries))


def reconstruct(pf, limit=None):
    """Product of p**e over *pf*; raises ArithmeticOverflow past *limit*."""
    value = 1
    for p, e in pf:
        for _ in range(e):
            value = check_bound(value * p, limit, "reconstructed value")
    return value


def exponent_of(pf, p):
    for q, e in pf:
        if q == p:
            return e
    return 0


__all__ = [
    "ArithmeticOverflow",
    "PrimeFactorization",
    "exponent_of",
    "factorize",
    "primes_up_to",
    "reconstruct",
]
