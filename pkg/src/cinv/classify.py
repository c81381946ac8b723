"""Pairwise classification of complete intersections from their invariants.

In complex dimensions 5, 6 and 7 two complete intersections are homeomorphic
exactly when total degree, Pontrjagin classes and Euler characteristic agree
(Fang-Wang). Traving's prime-exponent condition on the total degree then
upgrades homeomorphism to diffeomorphism.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from cinv.exactmath import valuation
from cinv.invariants import InvariantProfile, MultiDegree, invariant_profile

CRITERION_DIMENSIONS = frozenset({5, 6, 7})


class Verdict(str, enum.Enum):
    SAME_MULTIDEGREE = "SameMultidegree"
    DIFFEOMORPHIC = "Diffeomorphic"
    HOMEOMORPHIC_SMOOTHING_UNKNOWN = "HomeomorphicSmoothingUnknown"
    NOT_HOMEOMORPHIC = "NotHomeomorphic"
    INCONCLUSIVE = "InvariantsEqualInconclusive"


@dataclass(frozen=True)
class PrimeCheck:
    prime: int
    threshold: int
    exponent: int

    @property
    def ok(self) -> bool:
        return self.exponent >= self.threshold


@dataclass(frozen=True)
class TravingReport:
    n: int
    d: int
    checks: tuple[PrimeCheck, ...]

    @property
    def holds(self) -> bool:
        return all(c.ok for c in self.checks)

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": str(self.d),
            "holds": self.holds,
            "primes": [
                {"p": c.prime, "threshold": c.threshold, "exponent": c.exponent, "ok": c.ok}
                for c in self.checks
            ],
        }


def _primes_upto(limit: int) -> list[int]:
    return [p for p in range(2, limit + 1) if all(p % q for q in range(2, int(p**0.5) + 1))]


def traving_threshold(n: int, p: int) -> int:
    """Smallest exponent v with ``v >= (2n+1)/(2(p-1)) + 1``."""
    den = 2 * (p - 1)
    # ceil((2n+1)/den) + 1, all in integers
    return -(-(2 * n + 1) // den) + 1


def traving_condition(n: int, d: int) -> TravingReport:
    """Check ``nu_p(d) >= (2n+1)/(2(p-1)) + 1`` for every prime with
    ``p(p-1) <= n+1``."""
    if d < 1:
        raise ValueError(f"total degree must be >= 1, got {d}")
    primes = [p for p in _primes_upto(n + 2) if p * (p - 1) <= n + 1]
    checks = []
    for p in primes:
        v = valuation(d, p)
        thr = traving_threshold(n, p)
        # threshold is the least integer solution of the cross-multiplied form
        assert (2 * (p - 1) * thr >= 2 * n + 1 + 2 * (p - 1)) and not (
            2 * (p - 1) * (thr - 1) >= 2 * n + 1 + 2 * (p - 1)
        )
        checks.append(PrimeCheck(p, thr, v))
    return TravingReport(n, d, tuple(checks))


@dataclass(frozen=True)
class Witness:
    invariant: str
    first: int
    second: int

    def swapped(self) -> "Witness":
        return Witness(self.invariant, self.second, self.first)


@dataclass(frozen=True)
class ClassificationVerdict:
    verdict: Verdict
    first: MultiDegree
    second: MultiDegree
    witness: Witness | None = None
    traving: TravingReport | None = field(default=None, compare=False)

    def to_json(self) -> dict:
        doc = {
            "verdict": self.verdict.value,
            "n": self.first.n,
            "first": list(self.first.degrees),
            "second": list(self.second.degrees),
        }
        if self.witness is not None:
            doc["witness"] = {
                "invariant": self.witness.invariant,
                "first": str(self.witness.first),
                "second": str(self.witness.second),
            }
        if self.traving is not None:
            doc["traving"] = self.traving.to_json()
        return doc


def first_difference(a: InvariantProfile, b: InvariantProfile) -> Witness | None:
    for (name, x), (_, y) in zip(a.items(), b.items()):
        if x != y:
            return Witness(name, x, y)
    return None


def classify_pair(
    a: MultiDegree,
    b: MultiDegree,
    profiles: tuple[InvariantProfile, InvariantProfile] | None = None,
) -> ClassificationVerdict:
    """Compare two complete intersections of the same complex dimension.

    Differing invariants rule out a homeomorphism in any dimension. Equal
    invariants only decide the question for n in {5, 6, 7}.
    """
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")
    if a.degrees == b.degrees:
        return ClassificationVerdict(Verdict.SAME_MULTIDEGREE, a, b)
    pa, pb = profiles if profiles is not None else (invariant_profile(a), invariant_profile(b))
    witness = first_difference(pa, pb)
    if witness is not None:
        return ClassificationVerdict(Verdict.NOT_HOMEOMORPHIC, a, b, witness)
    if a.n not in CRITERION_DIMENSIONS:
        return ClassificationVerdict(Verdict.INCONCLUSIVE, a, b)
    report = traving_condition(a.n, pa.d)
    kind = Verdict.DIFFEOMORPHIC if report.holds else Verdict.HOMEOMORPHIC_SMOOTHING_UNKNOWN
    return ClassificationVerdict(kind, a, b, None, report)
