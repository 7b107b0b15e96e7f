"""Independent checks that share no code path with the generator.

Triples here are plain ``(a, b, c)`` tuples so they can be compared as sets
against generator output.
"""

import enum
import os
from dataclasses import dataclass

from .intarith import check_bound, gcd, gcd3, require_positive

DEFAULT_SCAN_CAP = 1_000_000
SCAN_CAP_ENV = "IDPT_SCAN_CAP"


class Kind(enum.Enum):
    NOT_DPT = "not_dpt"
    REDUCIBLE_DPT = "reducible_dpt"
    IDPT = "idpt"


@dataclass(frozen=True)
class TripleVerdict:
    kind: Kind
    gcd: int

    def __post_init__(self):
        if self.kind is Kind.IDPT and self.gcd != 1:
            raise ValueError("an IDPT has gcd 1")
        if self.kind is Kind.REDUCIBLE_DPT and self.gcd <= 1:
            raise ValueError("a reducible DPT has gcd > 1")


class ScanCapReached(RuntimeError):
    """The n-scan stopped at its cap before finding enough triples.

    This is not a proof that no (further) triples exist.
    """

    def __init__(self, d, cap, found):
        super().__init__(f"no IDPTs with d={d} found for n <= {cap} ({len(found)} found)")
        self.d = d
        self.cap = cap
        self.found = found


def classify(a, b, c, limit=None):
    """Classify three sides in any order.  Squares above *limit* raise."""
    for name, v in (("a", a), ("b", b), ("c", c)):
        require_positive(v, name)
    x, y, z = sorted((a, b, c))
    sq = [check_bound(v * v, limit, "square") for v in (x, y, z)]
    g = gcd3(x, y, z)
    if sq[0] + sq[1] != sq[2]:
        return TripleVerdict(Kind.NOT_DPT, g)
    return TripleVerdict(Kind.IDPT if g == 1 else Kind.REDUCIBLE_DPT, g)


def is_idpt(a, b, c):
    return classify(a, b, c).kind is Kind.IDPT


def brute_force_by_a(a_max):
    """All primitive (a, b, c) with a < b < c and a <= a_max, by direct scan.

    For each a, a^2 = (c - b)(c + b); scan every gap g = c - b below a.
    """
    found = set()
    for a in range(3, a_max + 1):
        a2 = a * a
        for g in range(1, a):
            if a2 % g:
                continue
            twice_b = a2 // g - g
            if twice_b % 2:
                continue
            b = twice_b // 2
            c = b + g
            if b > a and a * a + b * b == c * c and gcd3(a, b, c) == 1:
                found.add((a, b, c))
    return found


def scan_cap_from_env():
    raw = os.environ.get(SCAN_CAP_ENV)
    if not raw:
        return DEFAULT_SCAN_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError(f"{SCAN_CAP_ENV} must be >= 1, got {cap}")
    return cap


def brute_force_by_d(d, max_count, cap=None):
    """First max_count primitive triples with c - b = d, scanning n = 1, 2, ...

    Keeps n with d | 2n^2 and builds (2n + d, 2n + 2n^2/d, b + d).  Raises
    ScanCapReached (with the partial list) if n passes *cap* first.
    """
    require_positive(d, "d")
    if cap is None:
        cap = scan_cap_from_env()
    out = []
    if max_count <= 0:
        return out
    for n in range(1, cap + 1):
        two_n_sq = 2 * n * n
        if two_n_sq % d:
            continue
        a = 2 * n + d
        b = 2 * n + two_n_sq // d
        c = b + d
        if a < b and is_idpt(a, b, c):
            out.append((a, b, c))
            if len(out) >= max_count:
                return out
    raise ScanCapReached(d, cap, out)


def euclid_enumerate(c_max):
    """Primitive triples with hypotenuse <= c_max via (m^2 - n^2, 2mn, m^2 + n^2)."""
    found = set()
    m = 2
    while m * m + 1 <= c_max:
        for n in range(1 + m % 2, m, 2):
            c = m * m + n * n
            if c > c_max:
                break
            if gcd(m, n) != 1:
                continue
            x, y = m * m - n * n, 2 * m * n
            found.add((min(x, y), max(x, y), c))
        m += 1
    return found


def euclid_by_a(a_max):
    """Euclid oracle restricted to smaller leg a <= a_max."""
    # b < c and a^2 = (c - b)(c + b) >= c + b, so c <= (a^2 + 1) // 2.
    c_max = (a_max * a_max + 1) // 2
    return {t for t in euclid_enumerate(c_max) if t[0] <= a_max}


def odd_run_sum(b, d):
    """Sum of the d consecutive odd numbers starting at 2b + 1."""
    require_positive(b, "b")
    require_positive(d, "d")
    return sum(2 * (b - 1 + i) + 1 for i in range(1, d + 1))


def odd_run_sum_from_top(b, d):
    """The same run summed downward from c = b + d."""
    c = b + d
    return sum(2 * (c - i) + 1 for i in range(1, d + 1))
