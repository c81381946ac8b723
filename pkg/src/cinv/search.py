"""Bounded enumeration of multidegrees and collision search on invariants.

The search space is cut into work units by the largest free degree. Units
are scanned independently (optionally in worker processes) and merged in
unit order, so the output does not depend on the number of workers.
"""

from __future__ import annotations

import itertools
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import prod
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from cinv import reference
from cinv.classify import ClassificationVerdict, classify_pair
from cinv.exactmath import factorize
from cinv.invariants import InvariantProfile, MultiDegree, invariant_profile
from cinv.moduli import DEFAULT_PAIR, delta_closed_form, moduli_dimension
from cinv.symfun import power_sums

log = logging.getLogger(__name__)


class SearchBudgetExceeded(RuntimeError):
    """Raised when the profile index outgrows ``max_entries``.

    ``checkpoint`` records the last fully indexed partition.
    """

    def __init__(self, message: str, checkpoint: dict):
        super().__init__(message)
        self.checkpoint = checkpoint


@dataclass(frozen=True)
class SearchConfig:
    n: int
    r_min: int
    r_max: int
    max_degree: int
    total_degree: int | None = None
    prefix: tuple[int, ...] = ()
    partitions: int | None = None  # None: one partition per leading degree

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(sorted(self.prefix, reverse=True)))
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.r_min < 1:
            raise ValueError("r_min must be >= 1")
        if self.r_max < self.r_min:
            raise ValueError("empty codimension range")
        if self.max_degree < 2:
            raise ValueError("max_degree must be >= 2")
        if self.prefix and min(self.prefix) < 2:
            raise ValueError("prefix degrees must be >= 2")
        if len(self.prefix) > self.r_max:
            raise ValueError("prefix longer than r_max")
        if self.total_degree is not None and self.total_degree < 1:
            raise ValueError("total_degree must be >= 1")
        if self.partitions is not None and self.partitions < 1:
            raise ValueError("partitions must be >= 1")

    @property
    def free_bound(self) -> int:
        if self.prefix:
            return min(self.max_degree, self.prefix[-1])
        return self.max_degree

    def to_json(self) -> dict:
        doc = asdict(self)
        doc["prefix"] = list(self.prefix)
        if self.total_degree is not None:
            doc["total_degree"] = str(self.total_degree)
        return doc


def _tails(k: int, hi: int, target: int | None) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of length ``k`` over ``[2, hi]``, optionally with
    product exactly ``target``."""
    if k == 0:
        if target is None or target == 1:
            yield ()
        return
    for v in range(hi, 1, -1):
        if target is None:
            for t in _tails(k - 1, v, None):
                yield (v,) + t
            continue
        if target % v:
            continue
        rest = target // v
        if rest < 2 ** (k - 1) or rest > v ** (k - 1):
            continue
        for t in _tails(k - 1, v, rest):
            yield (v,) + t


def _units(cfg: SearchConfig) -> list[int]:
    """Work units: the leading free degree, or 0 for 'no free slots'."""
    units = list(range(cfg.free_bound, 1, -1))
    if cfg.r_min <= len(cfg.prefix):
        units.append(0)
    return units


def _free_target(cfg: SearchConfig) -> int | None:
    if cfg.total_degree is None:
        return None
    head = prod(cfg.prefix)
    if cfg.total_degree % head:
        return -1
    return cfg.total_degree // head


def _enumerate_unit(cfg: SearchConfig, unit: int) -> Iterator[tuple[int, ...]]:
    target = _free_target(cfg)
    if target == -1:
        return
    if unit == 0:
        if target is None or target == 1:
            yield cfg.prefix
        return
    if target is not None and target % unit:
        return
    rest = None if target is None else target // unit
    for r in range(max(cfg.r_min, len(cfg.prefix) + 1), cfg.r_max + 1):
        k = r - len(cfg.prefix) - 1
        for tail in _tails(k, unit, rest):
            yield cfg.prefix + (unit,) + tail


def enumerate_multidegrees(cfg: SearchConfig) -> Iterator[MultiDegree]:
    """Every canonical multidegree allowed by ``cfg`` exactly once."""
    for unit in _units(cfg):
        for degs in _enumerate_unit(cfg, unit):
            yield MultiDegree(cfg.n, degs)


def partition_plan(cfg: SearchConfig) -> list[list[int]]:
    units = _units(cfg)
    if cfg.partitions is None or cfg.partitions >= len(units):
        return [[u] for u in units]
    size = -(-len(units) // cfg.partitions)
    return [units[i : i + size] for i in range(0, len(units), size)]


def _profile_key(profile: InvariantProfile, include_euler: bool) -> tuple:
    return profile.key(include_euler)


def _scan(args: tuple[SearchConfig, tuple[int, ...], bool]) -> list[tuple[tuple, tuple[int, ...]]]:
    cfg, units, include_euler = args
    out = []
    for unit in units:
        for degs in _enumerate_unit(cfg, unit):
            prof = invariant_profile(MultiDegree(cfg.n, degs))
            out.append((_profile_key(prof, include_euler), degs))
    return out


@dataclass(frozen=True)
class CollisionRecord:
    key: tuple
    members: tuple[MultiDegree, ...]
    verdicts: tuple[ClassificationVerdict, ...]

    @property
    def d(self) -> int:
        return self.key[1]

    def to_json(self) -> dict:
        n, d, p = self.key[:3]
        doc = {
            "n": n,
            "d": str(d),
            "p": [str(x) for x in p],
            "members": [list(m.degrees) for m in self.members],
            "verdicts": [v.to_json() for v in self.verdicts],
        }
        if len(self.key) == 4:
            doc["e"] = str(self.key[3])
        return doc


def _record(key: tuple, members: Sequence[MultiDegree], include_euler: bool) -> CollisionRecord:
    profiles = [invariant_profile(m) for m in members]
    for m, prof in zip(members, profiles):
        if _profile_key(prof, include_euler) != key:
            raise AssertionError(f"{m} does not recompute to its collision key")
    verdicts = tuple(
        classify_pair(members[i], members[j], (profiles[i], profiles[j]))
        for i, j in itertools.combinations(range(len(members)), 2)
    )
    return CollisionRecord(key, tuple(members), verdicts)


def _write_checkpoint(path: Path | None, doc: dict) -> None:
    if path is not None:
        Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def find_collisions(
    cfg: SearchConfig | None,
    seeds: Iterable[MultiDegree] = (),
    *,
    include_euler: bool = True,
    jobs: int = 1,
    max_entries: int | None = None,
    checkpoint: Path | str | None = None,
) -> list[CollisionRecord]:
    """Group multidegrees by ``(d, p_1.., e)`` and return groups of size >= 2.

    ``seeds`` are explicit multidegrees indexed alongside the enumerated
    space; with ``cfg=None`` only the seeds are compared. Passing
    ``include_euler=False`` keys on total degree and Pontrjagin classes only.
    """
    index: dict[tuple, list[tuple[int, ...]]] = {}
    seen: set[tuple[int, ...]] = set()
    n = cfg.n if cfg is not None else None
    entries = 0

    def add(key, degs):
        nonlocal entries
        if degs in seen:
            return
        seen.add(degs)
        index.setdefault(key, []).append(degs)
        entries += 1

    for md in seeds:
        if n is None:
            n = md.n
        elif md.n != n:
            raise ValueError(f"seed {md} has dimension {md.n}, expected {n}")
        add(_profile_key(invariant_profile(md), include_euler), md.degrees)

    if cfg is not None:
        plan = partition_plan(cfg)
        tasks = [(cfg, tuple(units), include_euler) for units in plan]
        if jobs > 1 and len(tasks) > 1:
            ex = ProcessPoolExecutor(max_workers=jobs)
            results = ex.map(_scan, tasks)
        else:
            ex = None
            results = map(_scan, tasks)
        try:
            for pid, chunk in enumerate(results):
                for key, degs in chunk:
                    add(key, degs)
                if max_entries is not None and entries > max_entries:
                    state = {
                        "config": cfg.to_json(),
                        "partitions": len(plan),
                        "last_completed_partition": pid - 1,
                        "entries_before_overflow": entries - len(chunk),
                    }
                    _write_checkpoint(checkpoint, state)
                    raise SearchBudgetExceeded(
                        f"profile index exceeded {max_entries} entries in partition {pid}", state
                    )
                _write_checkpoint(
                    checkpoint,
                    {"config": cfg.to_json(), "partitions": len(plan), "last_completed_partition": pid},
                )
        finally:
            if ex is not None:
                ex.shutdown(cancel_futures=True)

    records = []
    for key, group in index.items():
        if len(group) < 2:
            continue
        members = [MultiDegree(key[0], g) for g in sorted(group)]
        records.append(_record(key, members, include_euler))
    records.sort(key=lambda rec: (rec.d, rec.members[0].degrees))
    return records


def collisions_to_json(records: Sequence[CollisionRecord]) -> str:
    return json.dumps([r.to_json() for r in records], indent=2, sort_keys=True)


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_json(self) -> dict:
        def enc(v):
            if isinstance(v, bool) or v is None:
                return v
            if isinstance(v, int):
                return str(v)
            if isinstance(v, (tuple, list)):
                return [enc(x) for x in v]
            return v

        return {
            "name": self.name,
            "expected": enc(self.expected),
            "actual": enc(self.actual),
            "passed": self.passed,
        }


@dataclass
class PaperReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "total": len(self.checks),
            "failed": len(self.failures),
            "checks": [c.to_json() for c in self.checks],
        }


def verify_paper_examples(overrides: dict[str, object] | None = None) -> PaperReport:
    """Recompute every tabulated value and verdict and compare exactly.

    ``overrides`` replaces expected values by check name; it exists so the
    harness can be shown to fail on a wrong constant.
    """
    overrides = dict(overrides or {})
    report = PaperReport()

    def check(name: str, expected, actual) -> None:
        if name in overrides:
            expected = overrides.pop(name)
        report.checks.append(Check(name, expected, actual))

    verdicts: dict[str, str] = {}
    for case in reference.CASES:
        mds = []
        for label, row in zip(("first", "second"), case.rows):
            md = MultiDegree(case.n, row.degrees)
            mds.append(md)
            prof = invariant_profile(md)
            tag = f"{case.name}.{label}"
            if row.power_sums is not None:
                sums = power_sums(md.degrees, len(row.power_sums))
                for i, (want, got) in enumerate(zip(row.power_sums, sums), 1):
                    check(f"{tag}.s_{i}", want, got)
            if row.d is not None:
                check(f"{tag}.d", row.d, prof.d)
            if row.p is not None:
                for k, (want, got) in enumerate(zip(row.p, prof.p), 1):
                    check(f"{tag}.p_{k}", want, got)
            if row.e_over_d is not None:
                q = prof.e_over_d
                check(f"{tag}.e_over_d", row.e_over_d, q.numerator if q.denominator == 1 else q)
        if case.factorization is not None:
            got = factorize(invariant_profile(mds[0]).d).factors
            check(f"{case.name}.factorization", case.factorization, got)
        v = classify_pair(*mds).verdict.value
        verdicts[case.name] = v
        check(f"{case.name}.verdict", case.verdict, v)

    for degs, want in reference.MODULI.items():
        check(f"moduli.{','.join(map(str, degs))}", want, moduli_dimension(MultiDegree(5, degs)))

    for (lam, s), want in reference.FAMILY_STEPS.items():
        rep = delta_closed_form(DEFAULT_PAIR, lam, s)
        check(f"family_step.lambda={lam},s={s}.direct", want, rep.direct)
        check(f"family_step.lambda={lam},s={s}.closed_form", want, rep.closed_form)

    for remark, parts in reference.REMARKS.items():
        for case_name, want in parts:
            check(f"remark.{remark}.{case_name}", want, verdicts[case_name])

    if overrides:
        raise KeyError(f"unknown check names in overrides: {sorted(overrides)}")
    return report
