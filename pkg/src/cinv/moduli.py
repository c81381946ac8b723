"""Moduli-space dimension of complete intersections and the composed
families built from a pair of multidegrees with equal power sums.

The dimension formula is

    m = 1 - (N+1)^2 + sum_i C(N+d_i, N)
          + sum_i sum_{j>=1} (-1)^j sum_{k_1<...<k_j} C(N+d_i-d_k1-...-d_kj, N)

where subsets range over all of {1..r} (including i) and C(m, N) = 0 for
m < N. Only subsets whose degree sum is at most d_i contribute, which keeps
the enumeration small for the families considered here.
"""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from cinv.classify import Verdict, classify_pair, traving_condition
from cinv.exactmath import as_integer, binomial
from cinv.invariants import MultiDegree, invariant_profile
from cinv.symfun import power_sums

FAMILY_DIMENSION = 5
DELTA_FLOOR = 3148
DELTA_FLOOR_LARGE_S = 4 * 10**24


def _check_moduli_input(md: MultiDegree) -> None:
    if md.n < 2:
        raise ValueError(f"moduli dimension formula needs n >= 2, got n={md.n}")


def _signed_subsets(values: Sequence[int], counts: dict[int, int], N: int, top: int) -> int:
    """sum over non-empty sub-multisets S with sum(S) <= top of
    (-1)^|S| * (number of index choices) * C(N + top - sum(S), N)."""

    def walk(start: int, budget: int, size: int, weight: int) -> int:
        acc = 0
        for pos in range(start, len(values)):
            v = values[pos]
            if v > budget:
                break
            cnt = counts[v]
            for c in range(1, cnt + 1):
                rem = budget - c * v
                if rem < 0:
                    break
                w_c = weight * binomial(cnt, c)
                sz = size + c
                term = w_c * binomial(N + rem, N)
                acc += -term if sz % 2 else term
                acc += walk(pos + 1, rem, sz, w_c)
        return acc

    return walk(0, top, 0, 1)


def moduli_dimension(md: MultiDegree) -> int:
    """Dimension m(d) via the multiplicity-grouped enumeration."""
    _check_moduli_input(md)
    N = md.N
    counts = Counter(md.degrees)
    values = sorted(counts)
    total = 1 - (N + 1) ** 2
    for top in values:
        inner = binomial(N + top, N) + _signed_subsets(values, counts, N, top)
        total += counts[top] * inner
    return total


def moduli_dimension_dfs(md: MultiDegree) -> int:
    """Same value as :func:`moduli_dimension`, enumerating index subsets one
    by one (pruned depth-first search over degrees sorted ascending)."""
    _check_moduli_input(md)
    N = md.N
    degs = sorted(md.degrees)

    def walk(start: int, budget: int, size: int) -> int:
        acc = 0
        for k in range(start, len(degs)):
            if degs[k] > budget:
                break
            rem = budget - degs[k]
            term = binomial(N + rem, N)
            acc += -term if (size + 1) % 2 else term
            acc += walk(k + 1, rem, size + 1)
        return acc

    total = 1 - (N + 1) ** 2
    for di in degs:
        total += binomial(N + di, N) + walk(0, di, 0)
    return total


@dataclass(frozen=True)
class BasePair:
    """Two equal-length degree lists ``first`` and ``second``."""

    first: tuple[int, ...]
    second: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "first", tuple(int(x) for x in self.first))
        object.__setattr__(self, "second", tuple(int(x) for x in self.second))
        if len(self.first) != len(self.second):
            raise ValueError("base pair lists must have equal length")
        if not self.first:
            raise ValueError("base pair lists must be non-empty")
        if min(self.first + self.second) < 2:
            raise ValueError("base pair degrees must be >= 2")

    @property
    def size(self) -> int:
        return len(self.first)

    def power_sums_match(self, k: int = FAMILY_DIMENSION) -> bool:
        return power_sums(self.first, k) == power_sums(self.second, k)

    @property
    def is_default(self) -> bool:
        return sorted(self.first) == sorted(DEFAULT_PAIR.first) and sorted(
            self.second
        ) == sorted(DEFAULT_PAIR.second)


DEFAULT_PAIR = BasePair((88, 77, 72, 54, 48, 31, 29), (87, 81, 64, 62, 44, 33, 28))
assert DEFAULT_PAIR.power_sums_match(5)


@dataclass(frozen=True)
class ComposedFamilyPoint:
    """``lam`` copies of ``pair.first`` followed by ``mu`` copies of
    ``pair.second``, as a 5-dimensional complete intersection."""

    pair: BasePair
    lam: int
    mu: int

    @property
    def s(self) -> int:
        return self.lam + self.mu

    @property
    def degrees(self) -> tuple[int, ...]:
        return self.pair.first * self.lam + self.pair.second * self.mu

    @property
    def multidegree(self) -> MultiDegree:
        return MultiDegree(FAMILY_DIMENSION, self.degrees)

    @property
    def N(self) -> int:
        return self.pair.size * self.s + FAMILY_DIMENSION


def compose(pair: BasePair, lam: int, mu: int) -> ComposedFamilyPoint:
    if lam < 0 or mu < 0:
        raise ValueError("repetition counts must be non-negative")
    if lam + mu < 1:
        raise ValueError("need lam + mu >= 1")
    return ComposedFamilyPoint(pair, lam, mu)


@dataclass(frozen=True)
class GammaTable:
    """Triple and pair binomial sums over the base lists ``a = pair.first``
    and ``b = pair.second``.

    ``xyz`` is sum over i in x, j in y, k in z of C(N + i - j - k, N);
    ``xy_lt`` is sum over i in x and index pairs k1 < k2 of y of
    C(N + i - y[k1] - y[k2], N).
    """

    N: int
    aaa: int
    bbb: int
    aab: int
    bba: int
    abb: int
    baa: int
    aa_lt: int
    ba_lt: int
    ab_lt: int
    bb_lt: int

    @property
    def aba(self) -> int:
        return self.aab

    @property
    def bab(self) -> int:
        return self.bba

    def to_json(self) -> dict:
        return {
            "N": self.N,
            **{k: str(getattr(self, k)) for k in _GAMMA_FIELDS},
        }


_GAMMA_FIELDS = ("aaa", "bbb", "aab", "bba", "abb", "baa", "aa_lt", "ba_lt", "ab_lt", "bb_lt")


def _triple(x, y, z, N: int) -> int:
    return sum(binomial(N + i - j - k, N) for i in x for j in y for k in z)


def _pair_lt(x, y, N: int) -> int:
    return sum(
        binomial(N + i - j - k, N) for i in x for j, k in itertools.combinations(y, 2)
    )


def _double(x, y, N: int) -> int:
    return sum(binomial(N + i - k, N) for i in x for k in y)


def gamma_table(pair: BasePair, N: int) -> GammaTable:
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    a, b = pair.first, pair.second
    return GammaTable(
        N=N,
        aaa=_triple(a, a, a, N),
        bbb=_triple(b, b, b, N),
        aab=_triple(a, a, b, N),
        bba=_triple(b, b, a, N),
        abb=_triple(a, b, b, N),
        baa=_triple(b, a, a, N),
        aa_lt=_pair_lt(a, a, N),
        ba_lt=_pair_lt(b, a, N),
        ab_lt=_pair_lt(a, b, N),
        bb_lt=_pair_lt(b, b, N),
    )


def delta_m0(pair: BasePair, N: int) -> int:
    return sum(binomial(N + d, N) for d in pair.first) - sum(
        binomial(N + d, N) for d in pair.second
    )


def delta_m1(pair: BasePair, lam: int, s: int, N: int) -> int:
    a, b = pair.first, pair.second
    return (
        (-2 * lam - 1) * _double(a, a, N)
        + (1 + 2 * lam - s) * (_double(a, b, N) + _double(b, a, N))
        + (2 * s - 2 * lam - 1) * _double(b, b, N)
    )


def delta_m2(g: GammaTable, lam: int, s: int) -> int:
    L = Fraction(lam)
    total = (
        (2 * L + 1) * g.aa_lt
        + L * (3 * L + 1) / 2 * g.aaa
        + ((L + 1) ** 2 * (s - L - 1) - L**2 * (s - L)) * g.aab
        + (s - 2 * L - 1) * (g.ab_lt + g.ba_lt)
        + (s - L - 1) * (s - 3 * L - 2) / 2 * g.abb
        + L * (2 * s - 3 * L - 1) / 2 * g.baa
        + ((L + 1) * (s - L - 1) ** 2 - L * (s - L) ** 2) * g.bab
        + (1 - 2 * s + 2 * L) * g.bb_lt
        + (s - L - 1) * (2 - 3 * s + 3 * L) / 2 * g.bbb
    )
    return as_integer(total, "M_2")


def delta_m3(lam: int, s: int, N: int) -> int:
    """Closed form of the three-element-subset part; valid for the default
    pair only (it hard-codes which degree combinations survive)."""
    L = Fraction(lam)
    c1, c2, c3, c4 = (binomial(N + k, N) for k in (1, 2, 3, 4))
    total = (
        Fraction(1, 6)
        * (
            12 - 21 * s + 12 * s**2 - 3 * s**3 + 44 * L - 54 * s * L + 18 * s**2 * L
            + 60 * L**2 - 48 * s * L**2 + 40 * L**3
        )
        + Fraction(1, 6)
        * (
            -6 + 9 * s - 3 * s**2 - 23 * L + 30 * s * L - 12 * s**2 * L
            - 33 * L**2 + 36 * s * L**2 - 28 * L**3
        )
        * c1
        - Fraction(1, 2) * (-1 + s - 2 * L) * (2 - 3 * s + s**2 + 4 * L - 4 * s * L + 4 * L**2) * c2
        + Fraction(1, 3) * (-1 + s - L) * (6 - 7 * s + 2 * s**2 + 13 * L - 7 * s * L + 8 * L**2) * c3
        + Fraction(1, 6) * (1 - s + L) * (2 - s + L) * (3 - s + 4 * L) * c4
    )
    return as_integer(total, "M_3")


@dataclass(frozen=True)
class DeltaReport:
    """``m(d_{lam+1, s-lam-1}) - m(d_{lam, s-lam})`` computed two ways."""

    lam: int
    s: int
    N: int
    m0: int
    m1: int
    m2: int
    m3: int | None
    direct: int

    @property
    def closed_form(self) -> int | None:
        if self.m3 is None:
            return None
        return self.m0 + self.m1 + self.m2 + self.m3

    @property
    def agreement(self) -> bool:
        return self.closed_form == self.direct

    def to_json(self) -> dict:
        cf = self.closed_form
        return {
            "lambda": self.lam,
            "s": self.s,
            "N": self.N,
            "M0": str(self.m0),
            "M1": str(self.m1),
            "M2": str(self.m2),
            "M3": None if self.m3 is None else str(self.m3),
            "closed_form": None if cf is None else str(cf),
            "direct": str(self.direct),
            "agreement": self.agreement,
        }


def delta_closed_form(
    pair: BasePair,
    lam: int,
    s: int,
    direct: int | None = None,
    gammas: GammaTable | None = None,
) -> DeltaReport:
    """Closed-form M_0..M_3 breakdown next to the directly computed delta.

    ``direct`` may be passed in when the two moduli dimensions are already
    known; otherwise both are computed here.
    """
    if not 0 <= lam < s:
        raise ValueError(f"need 0 <= lambda < s, got lambda={lam}, s={s}")
    N = pair.size * s + FAMILY_DIMENSION
    g = gammas if gammas is not None else gamma_table(pair, N)
    if g.N != N:
        raise ValueError(f"gamma table built for N={g.N}, need N={N}")
    m3 = delta_m3(lam, s, N) if pair.is_default else None
    if direct is None:
        direct = moduli_dimension(compose(pair, lam + 1, s - lam - 1).multidegree) - moduli_dimension(
            compose(pair, lam, s - lam).multidegree
        )
    return DeltaReport(
        lam=lam,
        s=s,
        N=N,
        m0=delta_m0(pair, N),
        m1=delta_m1(pair, lam, s, N),
        m2=delta_m2(g, lam, s),
        m3=m3,
        direct=direct,
    )


def _m_of(args: tuple[BasePair, int, int]) -> int:
    pair, lam, mu = args
    return moduli_dimension(compose(pair, lam, mu).multidegree)


def _map(fn, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items))


@dataclass(frozen=True)
class FamilyRow:
    lam: int
    m: int
    delta: DeltaReport | None  # step from the previous row; None for lam = 0

    def flags(self) -> dict:
        if self.delta is None:
            return {}
        d = self.delta.direct
        out = {"positive": d > 0, "above_floor": d > DELTA_FLOOR}
        if self.delta.s >= 3:
            out["above_large_s_floor"] = d > DELTA_FLOOR_LARGE_S
        if self.delta.closed_form is not None:
            out["closed_form_agrees"] = self.delta.agreement
        return out


@dataclass(frozen=True)
class FamilyReport:
    """All members ``d_{lam, s-lam}``, ``lam = 0..s``, for one ``s``."""

    pair: BasePair
    s: int
    rows: tuple[FamilyRow, ...]

    @property
    def N(self) -> int:
        return self.pair.size * self.s + FAMILY_DIMENSION

    @property
    def deltas(self) -> list[DeltaReport]:
        return [r.delta for r in self.rows if r.delta is not None]

    @property
    def min_delta(self) -> int:
        return min(d.direct for d in self.deltas)

    @property
    def strictly_increasing(self) -> bool:
        return all(x.m < y.m for x, y in zip(self.rows, self.rows[1:]))

    @property
    def disagreements(self) -> list[DeltaReport]:
        return [d for d in self.deltas if d.closed_form is not None and not d.agreement]

    @property
    def bounds_hold(self) -> bool:
        return all(all(r.flags().values()) for r in self.rows)

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "N": self.N,
            "rows": [
                {
                    "lambda": r.lam,
                    "mu": self.s - r.lam,
                    "m": str(r.m),
                    "delta": None if r.delta is None else str(r.delta.direct),
                    "closed_form": (
                        None
                        if r.delta is None or r.delta.closed_form is None
                        else str(r.delta.closed_form)
                    ),
                    "flags": r.flags(),
                }
                for r in self.rows
            ],
            "strictly_increasing": self.strictly_increasing,
        }


def _family_from_m(pair: BasePair, s: int, ms: Sequence[int]) -> FamilyReport:
    g = gamma_table(pair, pair.size * s + FAMILY_DIMENSION)
    rows = [FamilyRow(0, ms[0], None)]
    for lam in range(1, s + 1):
        rep = delta_closed_form(pair, lam - 1, s, direct=ms[lam] - ms[lam - 1], gammas=g)
        rows.append(FamilyRow(lam, ms[lam], rep))
    return FamilyReport(pair, s, tuple(rows))


def family_report(pair: BasePair, s: int, jobs: int = 1) -> FamilyReport:
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    ms = _map(_m_of, [(pair, lam, s - lam) for lam in range(s + 1)], jobs)
    return _family_from_m(pair, s, ms)


@dataclass(frozen=True)
class MonotonicityReport:
    families: tuple[FamilyReport, ...]

    @property
    def ok(self) -> bool:
        return all(
            f.bounds_hold and f.strictly_increasing and not f.disagreements for f in self.families
        )

    def min_delta_by_s(self) -> dict[int, int]:
        return {f.s: f.min_delta for f in self.families}

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "min_delta": {str(s): str(v) for s, v in self.min_delta_by_s().items()},
            "disagreements": [d.to_json() for f in self.families for d in f.disagreements],
            "families": [f.to_json() for f in self.families],
        }


def verify_monotonicity(pair: BasePair = DEFAULT_PAIR, s_max: int = 6, jobs: int = 1) -> MonotonicityReport:
    """Check that every family step for ``1 <= s <= s_max`` is positive and
    clears the stated floors. Points are evaluated in ``(s, lam)`` order and
    merged in that order whatever ``jobs`` is."""
    if s_max < 1:
        raise ValueError(f"s_max must be >= 1, got {s_max}")
    tasks = [(pair, lam, s - lam) for s in range(1, s_max + 1) for lam in range(s + 1)]
    ms = _map(_m_of, tasks, jobs)
    families = []
    pos = 0
    for s in range(1, s_max + 1):
        families.append(_family_from_m(pair, s, ms[pos : pos + s + 1]))
        pos += s + 1
    return MonotonicityReport(tuple(families))


@dataclass(frozen=True)
class FamilyWitness:
    """Diffeomorphic family members with pairwise distinct moduli dimensions."""

    s: int
    points: tuple[ComposedFamilyPoint, ...]
    moduli: tuple[int, ...]
    shared_profile: bool
    traving_holds: bool
    two_adic_valuation: int
    verdicts: tuple[Verdict, ...]

    @property
    def all_diffeomorphic(self) -> bool:
        return all(v is Verdict.DIFFEOMORPHIC for v in self.verdicts)

    @property
    def distinct_moduli(self) -> bool:
        return len(set(self.moduli)) == len(self.moduli)

    @property
    def ok(self) -> bool:
        return self.shared_profile and self.traving_holds and self.all_diffeomorphic and self.distinct_moduli


def family_witness(pair: BasePair = DEFAULT_PAIR, s: int = 4, jobs: int = 1) -> FamilyWitness:
    """Build the ``t = s + 1`` members ``d_{0,s}, ..., d_{s,0}`` and check
    that they are pairwise diffeomorphic with distinct moduli dimensions."""
    points = tuple(compose(pair, lam, s - lam) for lam in range(s + 1))
    mds = [p.multidegree for p in points]
    profiles = [invariant_profile(md) for md in mds]
    trav = traving_condition(FAMILY_DIMENSION, profiles[0].d)
    verdicts = tuple(
        classify_pair(mds[i], mds[j], (profiles[i], profiles[j])).verdict
        for i, j in itertools.combinations(range(len(mds)), 2)
    )
    ms = _map(_m_of, [(pair, p.lam, p.mu) for p in points], jobs)
    return FamilyWitness(
        s=s,
        points=points,
        moduli=tuple(ms),
        shared_profile=len(set(profiles)) == 1,
        traving_holds=trav.holds,
        two_adic_valuation=next((c.exponent for c in trav.checks if c.prime == 2), 0),
        verdicts=verdicts,
    )
