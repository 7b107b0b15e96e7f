"""Enumerate primitive Pythagorean triples by their gap d = c - b.

For an admissible d with decomposition d = f * n_fact**2 and a free
parameter r coprime to d (any r when d = 1), the triple is

    n = n_fact * r
    a = 2n + d
    b = 2n + 2r**2 / f
    c = b + d

and r must be large enough that a < b, i.e. 2r**2 > f*d.  Every primitive
triple arises exactly once this way.
"""

import enum
import itertools
from dataclasses import dataclass

from .admissibility import admissible_ds_up_to, decompose
from .intarith import check_bound, gcd, isqrt_floor, require_positive


@dataclass(frozen=True, order=True)
class GeneratedTriple:
    a: int
    b: int
    c: int
    d: int
    n: int
    r: int

    @property
    def sides(self):
        return (self.a, self.b, self.c)


class Order(enum.Enum):
    BY_R = "by-r"
    BY_AB = "by-ab"


@dataclass(frozen=True)
class GenConfig:
    """Enumeration bound: exactly one of max_count / a_max."""

    max_count: int = None
    a_max: int = None
    order: Order = Order.BY_AB

    def __post_init__(self):
        if (self.max_count is None) == (self.a_max is None):
            raise ValueError("set exactly one of max_count and a_max")
        if self.max_count is not None and self.max_count < 0:
            raise ValueError(f"max_count must be >= 0, got {self.max_count}")

    @classmethod
    def count(cls, max_count, order=Order.BY_R):
        return cls(max_count=max_count, order=order)

    @classmethod
    def bounded(cls, a_max, order=Order.BY_AB):
        return cls(a_max=a_max, order=order)


def r_min(dp):
    """Smallest r with 2r^2 > f*d, i.e. the first r giving a < b."""
    # 2r^2 > T  <=>  r^2 > T // 2.  f*d/2 is never a perfect square for
    # admissible d, so this equals ceil(sqrt(f*d/2)).
    return isqrt_floor(dp.f * dp.d // 2) + 1


def is_valid_r(dp, r):
    return r >= r_min(dp) and (dp.d == 1 or gcd(r, dp.d) == 1)


def next_valid_r(dp, start):
    """Smallest r >= max(start, r_min) that shares no prime with d."""
    require_positive(start, "start")
    r = max(start, r_min(dp))
    if dp.d == 1:
        return r
    primes = dp.prime_divisors
    while any(r % p == 0 for p in primes):
        r += 1
    return r


def valid_rs(dp, start=1):
    """Infinite ascending stream of valid r."""
    r = next_valid_r(dp, start)
    while True:
        yield r
        r = next_valid_r(dp, r + 1)


def raw_triple(dp, r):
    """The formula triple for any r >= 1, with no validity checks.

    Used to study skipped r; may be reducible or have a > b.
    """
    two_r_sq = 2 * r * r
    if two_r_sq % dp.f:
        raise ArithmeticError(f"2r^2/f not integral for r={r}, f={dp.f}")
    n = dp.n_fact * r
    a = 2 * n + dp.d
    b = 2 * n + two_r_sq // dp.f
    return a, b, b + dp.d


def triple_for(dp, r, limit=None):
    """The triple for a valid r.  Values above *limit* raise ArithmeticOverflow."""
    require_positive(r, "r")
    if not is_valid_r(dp, r):
        raise ValueError(f"r={r} is not valid for d={dp.d}")
    n = check_bound(dp.n_fact * r, limit, "n")
    check_bound(2 * r * r // dp.f, limit, "2r^2/f")
    a, b, c = raw_triple(dp, r)
    check_bound(a, limit, "a")
    check_bound(b, limit, "b")
    check_bound(c, limit, "c")
    return GeneratedTriple(a=a, b=b, c=c, d=dp.d, n=n, r=r)


def iter_for_d(d, limit=None):
    """Unbounded stream of triples for gap d, ascending in r (and in a)."""
    dp = decompose(d)
    for r in valid_rs(dp):
        yield triple_for(dp, r, limit)


def generate_for_d(d, cfg, limit=None):
    """Triples with gap d in ascending r, cut off by cfg.

    Raises InadmissibleGap when no triple has this d.
    """
    stream = iter_for_d(d, limit)
    if cfg.max_count is not None:
        return list(itertools.islice(stream, cfg.max_count))
    if cfg.a_max < 3:
        return []
    return list(itertools.takewhile(lambda t: t.a <= cfg.a_max, stream))


def generate_all(a_max, order=Order.BY_AB, limit=None):
    """Every primitive triple with smaller leg a <= a_max, each exactly once."""
    if a_max < 3:
        return []
    out = []
    # a = 2n + d >= d + 2 bounds the gaps worth visiting.
    for d in admissible_ds_up_to(a_max - 2):
        dp = decompose(d)
        for r in valid_rs(dp):
            if 2 * dp.n_fact * r + d > a_max:
                break
            out.append(triple_for(dp, r, limit))
    if order is Order.BY_AB:
        out.sort(key=lambda t: (t.a, t.b))
    return out


def family_first(n):
    """(2n+1, 2n^2+2n, 2n^2+2n+1): the triples with c - b = 1."""
    require_positive(n, "n")
    b = 2 * n * n + 2 * n
    return GeneratedTriple(a=2 * n + 1, b=b, c=b + 1, d=1, n=n, r=n)


def family_second(n):
    """(2n+2, n^2+2n, n^2+2n+2) for odd n >= 3: the triples with c - b = 2."""
    require_positive(n, "n")
    if n % 2 == 0 or n < 3:
        raise ValueError(f"second family needs odd n >= 3, got {n}")
    b = n * n + 2 * n
    return GeneratedTriple(a=2 * n + 2, b=b, c=b + 2, d=2, n=n, r=n)
