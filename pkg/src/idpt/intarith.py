"""Exact integer helpers shared by the rest of the package.

Python integers never wrap, so "overflow" here means exceeding an explicit
bound chosen by the caller (for instance :data:`U64_MAX` to mimic a 64-bit
build).  Functions that accept a ``limit`` raise :class:`ArithmeticOverflow`
instead of returning a value above it.
"""

import math

U64_MAX = 2**64 - 1


class ArithmeticOverflow(OverflowError):
    """A value exceeded the representable range requested by the caller."""

    def __init__(self, what, value, limit):
        super().__init__(f"{what} = {value} exceeds limit {limit}")
        self.what = what
        self.value = value
        self.limit = limit


def require_positive(value, name="value"):
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < 1:
        raise ValueError(f"{name} must be >= 1, got {value}")
    return value


def check_bound(value, limit, what="value"):
    """Return *value* unchanged, or raise if it exceeds *limit* (None = unbounded)."""
    if limit is not None and value > limit:
        raise ArithmeticOverflow(what, value, limit)
    return value


def gcd(x, y):
    require_positive(x, "x")
    require_positive(y, "y")
    while y:
        x, y = y, x % y
    return x


def gcd3(a, b, c):
    return gcd(gcd(a, b), c)


def divides(g, x):
    """True iff g | x.  Zero is divisible by every g >= 1."""
    require_positive(g, "g")
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x}")
    return x % g == 0


def isqrt_floor(x):
    """Largest s with s*s <= x, computed without floating point."""
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x}")
    # math.isqrt is an exact integer Newton iteration.
    return math.isqrt(x)
