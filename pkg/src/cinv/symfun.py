"""Power sums and Newton's identities.

``elementary_from_power_sums`` is the production route from power sums to
elementary symmetric values; ``g_explicit`` evaluates the six printed
polynomials g_1..g_6 term by term and exists to cross-check it.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence


def power_sums(degrees: Sequence[int], k: int) -> tuple[int, ...]:
    """Return ``(s_1, ..., s_k)`` with ``s_i = sum(d**i for d in degrees)``."""
    if k < 1:
        raise ValueError(f"power_sums: order must be >= 1, got {k}")
    sums = [0] * k
    for d in degrees:
        p = 1
        for i in range(k):
            p *= d
            sums[i] += p
    return tuple(sums)


def elementary_from_power_sums(t: Sequence[int]) -> tuple[Fraction, ...]:
    """Elementary symmetric values ``(e_1, ..., e_k)`` from power sums ``t``.

    Uses ``j * e_j = sum_{i=1..j} (-1)**(i-1) * e_{j-i} * t_i`` with
    ``e_0 = 1``. The ``t_i`` need not be power sums of actual numbers, so the
    results are kept as exact fractions; ``e_j`` equals ``g_j(t) / j!``.
    """
    if len(t) < 1:
        raise ValueError("elementary_from_power_sums needs at least one power sum")
    e = [Fraction(1)]
    for j in range(1, len(t) + 1):
        acc = Fraction(0)
        for i in range(1, j + 1):
            term = e[j - i] * t[i - 1]
            acc += term if i % 2 else -term
        e.append(acc / j)
    return tuple(e[1:])


def _g1(s):
    return s[0]


def _g2(s):
    s1, s2 = s[:2]
    return s1**2 - s2


def _g3(s):
    s1, s2, s3 = s[:3]
    return s1**3 - 3 * s1 * s2 + 2 * s3


def _g4(s):
    s1, s2, s3, s4 = s[:4]
    return s1**4 - 6 * s1**2 * s2 + 8 * s1 * s3 + 3 * s2**2 - 6 * s4


def _g5(s):
    s1, s2, s3, s4, s5 = s[:5]
    return (
        s1**5
        - 10 * s1**3 * s2
        + 20 * s1**2 * s3
        - 30 * s1 * s4
        + 15 * s1 * s2**2
        - 20 * s2 * s3
        + 24 * s5
    )


def _g6(s):
    s1, s2, s3, s4, s5, s6 = s[:6]
    return (
        s1**6
        - 15 * s1**4 * s2
        + 40 * s1**3 * s3
        - 90 * s1**2 * s4
        + 45 * s1**2 * s2**2
        - 120 * s1 * s2 * s3
        + 144 * s1 * s5
        - 15 * s2**3
        + 90 * s2 * s4
        + 40 * s3**2
        - 120 * s6
    )


_G = {1: _g1, 2: _g2, 3: _g3, 4: _g4, 5: _g5, 6: _g6}


def g_explicit(j: int, t: Sequence[int]) -> Fraction:
    """``g_j(t) / j!`` from the expanded polynomial, for ``1 <= j <= 6``."""
    if j not in _G:
        raise ValueError(f"no expanded formula for g_{j}; only 1 <= j <= 6")
    if len(t) < j:
        raise ValueError(f"g_{j} needs {j} arguments, got {len(t)}")
    return Fraction(_G[j](tuple(t)), factorial(j))
