"""Exact elementary number theory: factorization, prime sieves, radicals,
the totient, primes in arithmetic progressions, and the auxiliary counting
functions behind the census sums.

All counting here is exact integer arithmetic (Python ints, so overflow is
impossible); the only floating-point results are the explicitly real-valued
summaries (`squarefree_harmonic`, `error_term`, `paper_log`).  Sieve output
arrays are cached and returned read-only, so they can be shared freely
across threads or forked workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "Factorization",
    "PrimePower",
    "is_prime",
    "factorize",
    "prime_power_decomposition",
    "radical",
    "radical4",
    "euler_phi",
    "is_squarefree",
    "sieve_primes",
    "prime_powers_up_to",
    "pi_progression",
    "error_term",
    "rho",
    "squarefree_numbers_up_to",
    "squarefree_harmonic",
    "paper_log",
    "paper_log_iter",
]

# Witness set making Miller-Rabin deterministic for all n < 3.3 * 10^24,
# comfortably past the 2^63 target range.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_LIMIT = 10**6


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin with a fixed witness set)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """An integer together with its sorted prime factorization.

    ``factors`` is a tuple of (prime, exponent) pairs with strictly
    increasing primes; it is empty exactly when ``n == 1``.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        prev = 1
        for p, e in self.factors:
            if p <= prev or e < 1:
                raise ValueError("factors must be sorted prime powers")
            prev = p
            prod *= p**e
        if prod != self.n:
            raise ValueError(f"factors do not multiply to {self.n}")

    @property
    def omega(self) -> int:
        """Number of distinct prime factors."""
        return len(self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def _brent_factor(n: int) -> int:
    """Return a nontrivial factor of composite n.

    Brent's cycle-finding variant of the rho method with a fixed starting
    point and a deterministic sequence of polynomial offsets, so repeated
    runs always split n the same way.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho splitter failed on {n}")  # pragma: no cover


@lru_cache(maxsize=1 << 16)
def factorize(n: int) -> Factorization:
    """Factor a positive integer into sorted (prime, exponent) pairs.

    Trial division handles all factors up to 10^6; anything left is split
    deterministically with Brent's rho method, so the routine is exact and
    reproducible for inputs up to the 2^63 design range (and beyond, just
    more slowly).
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError("n must be an int")
    if n < 1:
        raise ValueError("n must be >= 1")
    counts: dict[int, int] = {}
    rem = n
    for d in (2, 3, 5):
        while rem % d == 0:
            counts[d] = counts.get(d, 0) + 1
            rem //= d
    d = 7
    # 2,4,2,4,... steps skip multiples of 2 and 3
    step = 4
    while d * d <= rem and d <= _TRIAL_LIMIT:
        while rem % d == 0:
            counts[d] = counts.get(d, 0) + 1
            rem //= d
        d += step
        step = 6 - step
    stack = [rem] if rem > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        g = _brent_factor(m)
        stack.append(g)
        stack.append(m // g)
    return Factorization(n, tuple(sorted(counts.items())))


@lru_cache(maxsize=1 << 16)
def prime_power_decomposition(q: int) -> tuple[int, int] | None:
    """Return (p, r) with q = p^r if q is a prime power, else None."""
    if q < 2:
        return None
    f = factorize(q)
    if f.omega != 1:
        return None
    return f.factors[0]


def radical(t: int) -> int:
    """Product of the distinct primes dividing t; radical(1) == 1."""
    if t < 1:
        raise ValueError("t must be >= 1")
    out = 1
    for p in factorize(t).primes:
        out *= p
    return out


def radical4(t: int) -> int:
    """radical(t) when 4 does not divide t, otherwise 2 * radical(t)."""
    if t < 1:
        raise ValueError("t must be >= 1")
    r = radical(t)
    return 2 * r if t % 4 == 0 else r


def euler_phi(t: int) -> int:
    """Euler's totient, via the factorization product formula."""
    if t < 1:
        raise ValueError("t must be >= 1")
    out = t
    for p in factorize(t).primes:
        out = out // p * (p - 1)
    return out


def is_squarefree(t: int) -> bool:
    """True iff no prime divides t more than once."""
    if t < 1:
        raise ValueError("t must be >= 1")
    return all(e == 1 for _, e in factorize(t).factors)


# ---------------------------------------------------------------------------
# sieves

_SEGMENT = 1 << 20


def _sieve_mask(limit: int) -> np.ndarray:
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return mask


@lru_cache(maxsize=32)
def _prime_array(limit: int) -> np.ndarray:
    if limit < 2:
        arr = np.empty(0, dtype=np.int64)
    elif limit <= _SEGMENT:
        arr = np.flatnonzero(_sieve_mask(limit)).astype(np.int64)
    else:
        base = np.flatnonzero(_sieve_mask(math.isqrt(limit))).astype(np.int64)
        parts = []
        for low in range(0, limit + 1, _SEGMENT):
            high = min(low + _SEGMENT, limit + 1)
            seg = np.ones(high - low, dtype=bool)
            if low == 0:
                seg[:2] = False
            for p in base:
                p = int(p)
                start = max(p * p, (low + p - 1) // p * p)
                if start >= high:
                    if p * p >= high:
                        break
                    continue
                seg[start - low :: p] = False
            parts.append(np.flatnonzero(seg).astype(np.int64) + low)
        arr = np.concatenate(parts)
    arr.setflags(write=False)
    return arr


def sieve_primes(Q: int) -> np.ndarray:
    """All primes <= Q, ascending, as a read-only int64 array.

    Segmented sieve of Eratosthenes; results are cached per bound, so
    repeated calls with the same Q share one immutable array.
    """
    if Q < 1:
        raise ValueError("Q must be >= 1")
    return _prime_array(int(Q))


def _int_root(n: int, r: int) -> int:
    """Largest x with x^r <= n."""
    x = round(n ** (1.0 / r))
    while x**r > n:
        x -= 1
    while (x + 1) ** r <= n:
        x += 1
    return x


@dataclass(frozen=True)
class PrimePower:
    """q = p^r for a prime p and exponent r >= 1."""

    p: int
    r: int
    q: int

    def __post_init__(self):
        if self.r < 1 or self.p**self.r != self.q:
            raise ValueError("q must equal p^r with r >= 1")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")


def prime_powers_up_to(Q: int) -> list[PrimePower]:
    """All prime powers p^r <= Q with r >= 1, ascending by value."""
    if Q < 2:
        raise ValueError("Q must be >= 2")
    out = [PrimePower(int(p), 1, int(p)) for p in sieve_primes(Q)]
    r = 2
    while 1 << r <= Q:
        for p in sieve_primes(_int_root(Q, r)):
            p = int(p)
            out.append(PrimePower(p, r, p**r))
        r += 1
    out.sort(key=lambda pp: pp.q)
    return out


def pi_progression(Q: int, s: int, a: int) -> int:
    """Number of primes p <= Q with p congruent to a mod s."""
    if Q < 1 or s < 1:
        raise ValueError("Q and s must be >= 1")
    primes = sieve_primes(Q)
    return int(np.count_nonzero(primes % s == a % s))


def error_term(Q: int, t: int) -> float:
    """Worst discrepancy of the progression 1 mod t prime counter up to Q.

    Returns max over R <= Q of |pi(R; t, 1) - pi(R)/phi(t)|.  Both counters
    are step functions jumping only at primes, so the maximum is attained
    just after some prime; the scan below evaluates exactly those points
    (the value is exact, not sampled).
    """
    if Q < 2 or t < 1:
        raise ValueError("need Q >= 2 and t >= 1")
    primes = sieve_primes(Q)
    if len(primes) == 0:
        return 0.0
    phi = euler_phi(t)
    hits = np.cumsum(primes % t == 1 % t)
    total = np.arange(1, len(primes) + 1)
    # integer numerators keep the max exact before the single division
    dev = np.abs(hits * phi - total)
    return float(int(dev.max())) / phi


def rho(T: int, n: int) -> int:
    """Count integers t <= T whose radical divides n.

    Enumerates products of the primes dividing n by depth-first search,
    so the cost scales with the answer rather than with T.
    """
    if T < 1 or n < 1:
        raise ValueError("T and n must be >= 1")
    ps = factorize(n).primes

    def count_from(i: int, v: int) -> int:
        c = 1  # v itself
        for j in range(i, len(ps)):
            w = v * ps[j]
            while w <= T:
                c += count_from(j + 1, w)
                w *= ps[j]
        return c

    return count_from(0, 1)


@lru_cache(maxsize=8)
def _squarefree_mask(limit: int) -> np.ndarray:
    mask = np.ones(limit + 1, dtype=bool)
    mask[0] = False
    for p in range(2, math.isqrt(limit) + 1):
        mask[p * p :: p * p] = False
    mask.setflags(write=False)
    return mask


def squarefree_numbers_up_to(limit: int) -> np.ndarray:
    """Squarefree integers in [1, limit], ascending, read-only int64."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    arr = np.flatnonzero(_squarefree_mask(int(limit))).astype(np.int64)
    arr.setflags(write=False)
    return arr


def squarefree_harmonic(T: int) -> float:
    """Sum of 1/t over squarefree t <= T, accumulated in ascending order."""
    if T < 1:
        raise ValueError("T must be >= 1")
    total = 0.0
    for t in squarefree_numbers_up_to(T).tolist():
        total += 1.0 / t
    return total


def paper_log(x: float) -> float:
    """max(ln x, 2), the clamped logarithm used in all main terms."""
    if x <= 0:
        raise ValueError("x must be positive")
    return max(math.log(x), 2.0)


def paper_log_iter(x: float, k: int) -> float:
    """k-fold iterate of paper_log (k = 1 is paper_log itself)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    v = paper_log(x)
    for _ in range(k - 1):
        v = paper_log(v)
    return v
