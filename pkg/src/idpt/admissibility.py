"""Which gaps d = c - b can carry a primitive triple, and their decomposition.

A gap d is admissible when it is 1, or when its exponent of 2 is odd (if 2
divides d at all) and every odd prime appears to an even power.  Equivalently
d is an odd square or twice a square.  Every admissible d splits as

    d = f * n_fact**2,   f = 2 if d is even else 1,

and the generator works with multiples n = n_fact * r.
"""

from dataclasses import dataclass

from .intarith import isqrt_floor, require_positive
from .primes import factorize


class InadmissibleGap(ValueError):
    """No primitive triple has this d.  Carries the offending prime and exponent."""

    def __init__(self, d, prime, exponent):
        parity = "even" if exponent % 2 == 0 else "odd"
        super().__init__(
            f"no IDPTs exist for d={d}: prime {prime} has {parity} exponent {exponent}"
        )
        self.d = d
        self.prime = prime
        self.exponent = exponent


@dataclass(frozen=True)
class DParams:
    d: int
    f: int
    # (prime, k) for every prime of d; k may be 0 (e.g. the 2 in d = 18).
    reduced_factors: tuple
    n_fact: int
    prime_divisors: frozenset

    def __post_init__(self):
        if self.f not in (1, 2):
            raise ValueError(f"f must be 1 or 2, got {self.f}")
        if self.f * self.n_fact**2 != self.d:
            raise ValueError(f"{self.f} * {self.n_fact}^2 != {self.d}")
        if (self.f == 2) != (2 in self.prime_divisors):
            raise ValueError("f must be 2 exactly when 2 divides d")


def _first_violation(d):
    for p, e in factorize(d):
        if (p == 2 and e % 2 == 0) or (p > 2 and e % 2 == 1):
            return p, e
    return None


def is_admissible(d):
    require_positive(d, "d")
    return d == 1 or _first_violation(d) is None


def decompose(d):
    """Split admissible d into f, the reduced exponents k and n_fact.

    >>> dp = decompose(18)
    >>> dp.f, dp.reduced_factors, dp.n_fact
    (2, ((2, 0), (3, 1)), 3)
    """
    require_positive(d, "d")
    if d == 1:
        return DParams(d=1, f=1, reduced_factors=(), n_fact=1, prime_divisors=frozenset())

    pf = factorize(d)
    reduced = []
    for p, e in pf:
        if p == 2:
            if e % 2 == 0:
                raise InadmissibleGap(d, p, e)
            k = (e - 1) // 2
        else:
            if e % 2 == 1:
                raise InadmissibleGap(d, p, e)
            k = e // 2
        reduced.append((p, k))

    n_fact = 1
    for p, k in reduced:
        n_fact *= p**k
    return DParams(
        d=d,
        f=2 if d % 2 == 0 else 1,
        reduced_factors=tuple(reduced),
        n_fact=n_fact,
        prime_divisors=frozenset(pf.primes),
    )


def admissible_ds_up_to(bound):
    """All admissible d <= bound, ascending.

    Uses the closed form (odd m**2 or 2*m**2) rather than factoring each candidate.
    """
    require_positive(bound, "bound")
    odd_squares = (m * m for m in range(1, isqrt_floor(bound) + 1, 2))
    twice_squares = (2 * m * m for m in range(1, isqrt_floor(bound // 2) + 1))
    return sorted([*odd_squares, *twice_squares])
