import itertools
import json

import pytest

from cinv.classify import (
    Verdict,
    classify_pair,
    traving_condition,
    traving_threshold,
)
from cinv.invariants import MultiDegree, invariant_profile

X = MultiDegree


def test_thresholds_n5_exact():
    rep = traving_condition(5, 1)
    assert {c.prime: c.threshold for c in rep.checks} == {2: 7, 3: 4}


def test_threshold_matches_real_inequality():
    # least integer v with v >= (2n+1)/(2(p-1)) + 1, checked by brute force
    for n in range(1, 40):
        for p in (2, 3, 5, 7):
            v = 0
            while not (2 * (p - 1) * (v - 1) >= 2 * n + 1):
                v += 1
            assert traving_threshold(n, p) == v


def test_relevant_primes():
    assert [c.prime for c in traving_condition(1, 1).checks] == [2]
    assert [c.prime for c in traving_condition(5, 1).checks] == [2, 3]
    assert [c.prime for c in traving_condition(19, 1).checks] == [2, 3, 5]


@pytest.mark.parametrize(
    "d, holds",
    [(340867118592, True), (2**7 * 3**4, True), (3**10, False), (2**6 * 3**4, False), (2**7 * 3**3, False)],
)
def test_traving_n5(d, holds):
    assert traving_condition(5, d).holds is holds


def test_traving_rejects_nonpositive():
    with pytest.raises(ValueError):
        traving_condition(5, 0)


def test_example_pairs():
    v = classify_pair(X(5, (66, 56, 45, 39, 16, 15, 8, 3)), X(5, (64, 60, 42, 39, 20, 11, 9, 3)))
    assert v.verdict is Verdict.DIFFEOMORPHIC

    a, b = X(5, (66, 56, 45, 39, 16, 15, 8)), X(5, (64, 60, 42, 39, 20, 11, 9))
    v = classify_pair(a, b)
    assert v.verdict is Verdict.NOT_HOMEOMORPHIC
    d = 12454041600
    assert (v.witness.invariant, v.witness.first, v.witness.second) == (
        "e",
        -30762573120 * d,
        -30762561840 * d,
    )

    v = classify_pair(X(4, (66, 56, 45, 39, 16, 15, 8, 3, 2)), X(4, (64, 60, 42, 39, 20, 11, 9, 3, 2)))
    assert v.verdict is Verdict.NOT_HOMEOMORPHIC and v.witness.invariant == "e"


def test_reflexive():
    md = X(5, (66, 56, 45, 39, 16, 15, 8, 3))
    assert classify_pair(md, X(5, (3, 8, 15, 16, 39, 45, 56, 66))).verdict is Verdict.SAME_MULTIDEGREE


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        classify_pair(X(5, [2]), X(4, [2]))


def test_smoothing_unknown_when_traving_fails():
    # equal profiles with an odd total degree, supplied directly
    a, b = X(5, (66, 56, 45, 39, 16, 15, 8, 3)), X(5, (64, 60, 42, 39, 20, 11, 9, 3))
    pa, pb = invariant_profile(a), invariant_profile(b)
    assert pa == pb
    fake = type(pa)(pa.n, 3**10, pa.p, pa.e)
    v = classify_pair(a, b, (fake, fake))
    assert v.verdict is Verdict.HOMEOMORPHIC_SMOOTHING_UNKNOWN
    assert not v.traving.holds


def test_inconclusive_outside_criterion_range():
    a, b = X(3, (66, 56, 45, 39, 16, 15, 8, 3)), X(3, (64, 60, 42, 39, 20, 11, 9, 3))
    prof = invariant_profile(a)
    v = classify_pair(a, b, (prof, prof))
    assert v.verdict is Verdict.INCONCLUSIVE


def test_symmetry_and_witness_recomputes():
    mds = [
        X(5, (66, 56, 45, 39, 16, 15, 8, 3)),
        X(5, (64, 60, 42, 39, 20, 11, 9, 3)),
        X(5, (66, 56, 45, 39, 16, 15, 8)),
        X(5, (64, 60, 42, 39, 20, 11, 9)),
        X(5, (46, 36, 34, 21, 14, 13, 12, 11, 3, 2, 2)),
        X(5, (44, 42, 26, 23, 18, 17, 7, 6, 6, 4)),
        X(5, (5, 4)),
        X(5, (10, 2)),
    ]
    for a, b in itertools.product(mds, repeat=2):
        ab, ba = classify_pair(a, b), classify_pair(b, a)
        assert ab.verdict is ba.verdict
        if ab.witness is not None:
            assert ba.witness == ab.witness.swapped()
            pa, pb = dict(invariant_profile(a).items()), dict(invariant_profile(b).items())
            assert pa[ab.witness.invariant] == ab.witness.first != ab.witness.second
            assert pb[ab.witness.invariant] == ab.witness.second


def test_verdict_json():
    v = classify_pair(X(5, (66, 56, 45, 39, 16, 15, 8, 3)), X(5, (64, 60, 42, 39, 20, 11, 9, 3)))
    doc = json.loads(json.dumps(v.to_json()))
    assert doc["verdict"] == "Diffeomorphic"
    assert doc["traving"]["primes"] == [
        {"p": 2, "threshold": 7, "exponent": 11, "ok": True},
        {"p": 3, "threshold": 4, "exponent": 6, "ok": True},
    ]
    v = classify_pair(X(5, (66, 56, 45, 39, 16, 15, 8)), X(5, (64, 60, 42, 39, 20, 11, 9)))
    assert v.to_json()["witness"]["invariant"] == "e"
