"""Exact integer helpers: vanishing binomials and prime factorization.

Python ``int`` is the big integer type and :class:`fractions.Fraction` the
rational type throughout the package; nothing here ever rounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Fraction",
    "PrimeFactorization",
    "binomial",
    "factorize",
    "valuation",
    "as_integer",
]

FACTOR_LIMIT = 1 << 64

# trial division handles everything below this bound; larger cofactors go
# through Miller-Rabin / Pollard-Brent
_TRIAL_BOUND = 1 << 12
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def binomial(m: int, n: int) -> int:
    """C(m, n) with the convention C(m, n) = 0 whenever m < n.

    The convention also covers negative ``m``; ``n`` must be non-negative.
    """
    if n < 0:
        raise ValueError(f"binomial: lower index must be >= 0, got {n}")
    if m < n:
        return 0
    return math.comb(m, n)


def valuation(d: int, p: int) -> int:
    """Exponent of the prime ``p`` in ``d != 0``; no size limit."""
    if d == 0:
        raise ValueError("valuation of 0 is undefined")
    d = abs(d)
    v = 0
    while d % p == 0:
        d //= p
        v += 1
    return v


def as_integer(value: Fraction | int, what: str = "value") -> int:
    """Return ``value`` as an int, raising ArithmeticError on a residue."""
    if isinstance(value, int):
        return value
    if value.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {value}")
    return value.numerator


@dataclass(frozen=True)
class PrimeFactorization:
    """Ordered ``(prime, exponent)`` pairs with strictly increasing primes."""

    factors: tuple[tuple[int, int], ...]

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)

    def to_json(self) -> list[list[str | int]]:
        return [[str(p), e] for p, e in self.factors]


def _is_prime(n: int) -> bool:
    # deterministic for n < 3.3e24 with the first twelve prime bases
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """Return a non-trivial factor of the odd composite ``n``."""
    c = 1
    while True:
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if _is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    f = _pollard_brent(n)
    _split(f, out)
    _split(n // f, out)


def _wheel():
    yield 2
    yield 3
    i = 5
    while True:
        yield i
        yield i + 2
        i += 6


def factorize(d: int) -> PrimeFactorization:
    """Complete prime factorization of ``1 <= d < 2**64``."""
    if not isinstance(d, int) or isinstance(d, bool):
        raise TypeError(f"factorize expects an int, got {type(d).__name__}")
    if d < 1 or d >= FACTOR_LIMIT:
        raise ValueError(f"factorize: {d} outside the supported range [1, 2^64)")
    found: dict[int, int] = {}
    n = d
    for p in _wheel():
        if p > _TRIAL_BOUND or p * p > n:
            break
        while n % p == 0:
            n //= p
            found[p] = found.get(p, 0) + 1
    if n > 1:
        _split(n, found)
    return PrimeFactorization(tuple(sorted(found.items())))
