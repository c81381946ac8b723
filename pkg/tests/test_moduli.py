import itertools
import random

import pytest

from cinv.classify import Verdict, classify_pair
from cinv.invariants import MultiDegree, invariant_profile
from cinv.moduli import (
    DEFAULT_PAIR,
    DELTA_FLOOR,
    DELTA_FLOOR_LARGE_S,
    BasePair,
    compose,
    delta_closed_form,
    family_report,
    family_witness,
    gamma_table,
    moduli_dimension,
    moduli_dimension_dfs,
    verify_monotonicity,
)


def C(m, N):
    from math import comb

    return comb(m, N) if m >= N else 0


def naive_moduli(md):
    """Every subset of {1..r}, no pruning."""
    N, d = md.N, md.degrees
    r = len(d)
    total = 1 - (N + 1) ** 2
    for di in d:
        total += C(N + di, N)
        for mask in range(1, 1 << r):
            picked = [d[k] for k in range(r) if mask >> k & 1]
            total += (-1) ** len(picked) * C(N + di - sum(picked), N)
    return total


def test_published_values():
    assert moduli_dimension(MultiDegree(5, (88, 77, 72, 54, 48, 31, 29))) == 1382270197857128
    assert moduli_dimension(MultiDegree(5, (87, 81, 64, 62, 44, 33, 28))) == 1370693416581393


def test_single_quadric():
    md = MultiDegree(5, [2])
    assert moduli_dimension(md) == 1 - 49 + C(8, 6) - C(6, 6) == -21
    assert naive_moduli(md) == -21


def test_rejects_curves():
    with pytest.raises(ValueError):
        moduli_dimension(MultiDegree(1, [3]))


def test_pruned_matches_naive_random():
    rng = random.Random(42)
    for _ in range(500):
        md = MultiDegree(rng.randint(2, 7), [rng.randint(2, 12) for _ in range(rng.randint(0, 10))])
        want = naive_moduli(md)
        assert moduli_dimension_dfs(md) == want
        assert moduli_dimension(md) == want


def test_grouped_matches_dfs_on_family():
    for s in range(1, 7):
        for lam in range(s + 1):
            md = compose(DEFAULT_PAIR, lam, s - lam).multidegree
            assert moduli_dimension(md) == moduli_dimension_dfs(md)


def test_compose():
    p = compose(DEFAULT_PAIR, 1, 0)
    assert p.multidegree == MultiDegree(5, DEFAULT_PAIR.first) and p.N == 12
    p = compose(DEFAULT_PAIR, 1, 1)
    assert len(p.degrees) == 14 and p.N == 19
    p = compose(DEFAULT_PAIR, 0, 3)
    assert len(p.degrees) == 21 and p.N == 26 == p.multidegree.N
    with pytest.raises(ValueError):
        compose(DEFAULT_PAIR, 0, 0)


def test_base_pair_validation():
    assert DEFAULT_PAIR.power_sums_match(5)
    assert DEFAULT_PAIR.is_default
    with pytest.raises(ValueError):
        BasePair((3, 2), (3,))
    with pytest.raises(ValueError):
        BasePair((3, 1), (3, 2))


# brute-force triple loops run before the implementation, frozen here
GAMMA_N12 = {
    "aaa": 25220613213,
    "bbb": 23466696398,
    "aab": 27580072238,
    "bba": 21338906086,
    "abb": 29974348955,
    "baa": 19259516927,
    "aa_lt": 5643106223,
    "ba_lt": 4266393105,
    "ab_lt": 3974351292,
    "bb_lt": 2951594712,
}


def test_gamma_frozen_values():
    g = gamma_table(DEFAULT_PAIR, 12)
    assert {k: getattr(g, k) for k in GAMMA_N12} == GAMMA_N12


@pytest.mark.parametrize("N", [12, 19, 26])
def test_gamma_symmetries(N):
    a, b = DEFAULT_PAIR.first, DEFAULT_PAIR.second
    g = gamma_table(DEFAULT_PAIR, N)
    aba = sum(C(N + i - j - k, N) for i in a for j in b for k in a)
    bab = sum(C(N + i - j - k, N) for i in b for j in a for k in b)
    assert aba == g.aab == g.aba
    assert bab == g.bba == g.bab


@pytest.mark.parametrize(
    "lam, s, total",
    [(0, 1, 11576781275735), (1, 2, 34356628415559239284), (0, 2, 34347842980758828832)],
)
def test_published_differences(lam, s, total):
    rep = delta_closed_form(DEFAULT_PAIR, lam, s)
    assert rep.direct == rep.closed_form == total
    assert rep.agreement
    assert rep.m0 + rep.m1 + rep.m2 + rep.m3 == total


def test_m3_vanishes_for_single_copy():
    assert delta_closed_form(DEFAULT_PAIR, 0, 1).m3 == 0


def test_delta_rejects_bad_lambda():
    with pytest.raises(ValueError):
        delta_closed_form(DEFAULT_PAIR, 2, 2)


def test_closed_form_agrees_up_to_s6():
    for s in range(1, 7):
        for lam in range(s):
            assert delta_closed_form(DEFAULT_PAIR, lam, s).agreement


def test_custom_pair_has_no_m3():
    pair = BasePair((6, 5, 2), (6, 4, 3))
    rep = delta_closed_form(pair, 0, 1)
    assert rep.m3 is None and rep.closed_form is None and not rep.agreement
    assert rep.direct == moduli_dimension(MultiDegree(5, pair.first)) - moduli_dimension(
        MultiDegree(5, pair.second)
    )


def test_monotonicity_s1():
    rep = verify_monotonicity(DEFAULT_PAIR, 1)
    assert rep.ok
    assert rep.min_delta_by_s() == {1: 11576781275735}


def test_monotonicity_s2_chain():
    fam = family_report(DEFAULT_PAIR, 2)
    m = [r.m for r in fam.rows]
    assert m[0] < m[1] < m[2]
    deltas = [d.direct for d in fam.deltas]
    assert deltas == [34347842980758828832, 34356628415559239284]
    assert all(d > DELTA_FLOOR for d in deltas)


def test_monotonicity_s6():
    rep = verify_monotonicity(DEFAULT_PAIR, 6)
    deltas = [d for f in rep.families for d in f.deltas]
    assert len(deltas) == 21
    assert all(d.direct > 0 for d in deltas)
    assert all(d.direct > DELTA_FLOOR_LARGE_S for d in deltas if d.s >= 3)
    assert rep.ok


def test_monotonicity_parallel_is_identical():
    assert verify_monotonicity(DEFAULT_PAIR, 4, jobs=2).to_json() == verify_monotonicity(
        DEFAULT_PAIR, 4, jobs=1
    ).to_json()


@pytest.mark.parametrize("s", [1, 2, 3])
def test_family_members_are_diffeomorphic(s):
    mds = [compose(DEFAULT_PAIR, lam, s - lam).multidegree for lam in range(s + 1)]
    assert len({invariant_profile(md) for md in mds}) == 1
    for a, b in itertools.combinations(mds, 2):
        assert classify_pair(a, b).verdict is Verdict.DIFFEOMORPHIC


def test_family_witness_s4():
    w = family_witness(DEFAULT_PAIR, 4)
    assert len(w.points) == 5
    assert w.two_adic_valuation == 44
    assert w.ok
    assert all(p.N == 7 * 5 - 2 for p in w.points)
