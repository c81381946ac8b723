"""Total degree, Chern and Pontrjagin coefficients and Euler characteristic
of a complete intersection ``X_n(d_1, ..., d_r)`` in ``CP^{n+r}``.

Classes are integers: ``c_k`` is the multiple of ``x**k`` and ``p_k`` the
multiple of ``x**(2k)``, where ``x`` is the hyperplane class.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable

from cinv.exactmath import as_integer
from cinv.symfun import elementary_from_power_sums, power_sums

log = logging.getLogger(__name__)


class IntegralityError(ArithmeticError):
    """A characteristic number came out non-integral (an internal bug)."""


@dataclass(frozen=True, init=False)
class MultiDegree:
    """Complex dimension ``n`` and a canonical degree multiset.

    Degrees are stored sorted in non-increasing order. Degree-1 entries are
    linear sections and are dropped: they shift every ``s_i`` and ``r`` by
    one, which cancels in ``n + r + 1 - s_i``.
    """

    n: int
    degrees: tuple[int, ...]

    def __init__(self, n: int, degrees: Iterable[int] = ()):
        degrees = tuple(degrees)
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"complex dimension must be an integer >= 1, got {n!r}")
        for d in degrees:
            if not isinstance(d, int) or isinstance(d, bool):
                raise TypeError(f"degrees must be integers, got {d!r}")
            if d < 1:
                raise ValueError(f"degrees must be >= 1, got {d}")
        object.__setattr__(self, "n", n)
        object.__setattr__(
            self, "degrees", tuple(sorted((d for d in degrees if d > 1), reverse=True))
        )

    @property
    def r(self) -> int:
        """Codimension."""
        return len(self.degrees)

    @property
    def N(self) -> int:
        """Dimension of the ambient projective space."""
        return self.n + len(self.degrees)

    def __str__(self) -> str:
        return f"X_{self.n}({','.join(map(str, self.degrees))})"


@dataclass(frozen=True)
class InvariantProfile:
    """Classification key ``(n, d, p_1..p_[n/2], e)``."""

    n: int
    d: int
    p: tuple[int, ...]
    e: int

    @property
    def e_over_d(self) -> Fraction:
        return Fraction(self.e, self.d)

    def key(self, include_euler: bool = True) -> tuple:
        if include_euler:
            return (self.n, self.d, self.p, self.e)
        return (self.n, self.d, self.p)

    def items(self):
        """``(name, value)`` pairs in comparison order: d, p_1, ..., e."""
        yield "d", self.d
        for k, pk in enumerate(self.p, 1):
            yield f"p_{k}", pk
        yield "e", self.e


def total_degree(md: MultiDegree) -> int:
    return prod(md.degrees)


def _shifted(md: MultiDegree, order: int) -> tuple[int, ...]:
    shift = md.n + md.r + 1
    return tuple(shift - s for s in power_sums(md.degrees, order))


def _integral(values, label: str, md: MultiDegree) -> tuple[int, ...]:
    try:
        return tuple(as_integer(v, f"{label}_{k}") for k, v in enumerate(values, 1))
    except ArithmeticError as exc:
        raise IntegralityError(f"{md}: {exc}") from None


def chern_coefficients(md: MultiDegree) -> tuple[int, ...]:
    """``(c_1, ..., c_n)``."""
    e = elementary_from_power_sums(_shifted(md, md.n))
    return _integral(e, "c", md)


def pontrjagin_coefficients(md: MultiDegree) -> tuple[int, ...]:
    """``(p_1, ..., p_[n/2])``; empty for ``n = 1``."""
    half = md.n // 2
    if half == 0:
        return ()
    t = _shifted(md, 2 * half)
    e = elementary_from_power_sums(t[1::2])
    return _integral(e, "p", md)


def euler_characteristic(md: MultiDegree) -> int:
    """``e = d * c_n``."""
    return total_degree(md) * chern_coefficients(md)[-1]


def invariant_profile(md: MultiDegree) -> InvariantProfile:
    c = chern_coefficients(md)
    d = total_degree(md)
    return InvariantProfile(md.n, d, pontrjagin_coefficients(md), d * c[-1])


def profile_document(md: MultiDegree, profile: InvariantProfile | None = None) -> dict:
    """JSON-ready profile with big integers as decimal strings."""
    if profile is None:
        profile = invariant_profile(md)
    q = profile.e_over_d
    return {
        "n": md.n,
        "degrees": list(md.degrees),
        "d": str(profile.d),
        "p": [str(v) for v in profile.p],
        "e": str(profile.e),
        "e_over_d": str(q.numerator) if q.denominator == 1 else None,
    }


def profile_from_document(doc: dict) -> tuple[MultiDegree, InvariantProfile]:
    md = MultiDegree(int(doc["n"]), [int(x) for x in doc["degrees"]])
    prof = InvariantProfile(
        n=md.n,
        d=int(doc["d"]),
        p=tuple(int(v) for v in doc["p"]),
        e=int(doc["e"]),
    )
    return md, prof
