"""Published reference values used by :func:`cinv.search.verify_paper_examples`.

Each case lists the multidegrees involved and the tabulated values; ``None``
means the value was not tabulated for that row.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Row:
    degrees: tuple[int, ...]
    power_sums: tuple[int, ...] | None = None
    d: int | None = None
    p: tuple[int, ...] | None = None
    e_over_d: int | None = None


@dataclass(frozen=True)
class Case:
    name: str
    n: int
    rows: tuple[Row, Row]
    verdict: str
    factorization: tuple[tuple[int, int], ...] | None = None
    notes: str = field(default="", compare=False)


CASES = (
    Case(
        "codim11_vs_codim10",
        5,
        (
            Row(
                (46, 36, 34, 21, 14, 13, 12, 11, 3, 2, 2),
                (194, 5656, 200600, 7790356, 317267984),
                340867118592,
                (-5639, 19794330),
                -6401091783,
            ),
            Row(
                (44, 42, 26, 23, 18, 17, 7, 6, 6, 4),
                (193, 5655, 200599, 7790355, 317267983),
                340867118592,
                (-5639, 19794330),
                -6401091783,
            ),
        ),
        "Diffeomorphic",
        ((2, 9), (3, 5), (7, 2), (11, 1), (13, 1), (17, 1), (23, 1)),
    ),
    Case(
        "codim8_pair",
        5,
        (
            Row(
                (66, 56, 45, 39, 16, 15, 8, 3),
                (248, 11592, 621566, 35343636, 2079657638),
                37362124800,
                (-11578, 84696853),
                -31485015068,
            ),
            Row(
                (64, 60, 42, 39, 20, 11, 9, 3),
                (248, 11592, 621638, 35343636, 2075677598),
                37362124800,
                (-11578, 84696853),
                -31485015068,
            ),
        ),
        "Diffeomorphic",
        ((2, 11), (3, 6), (5, 2), (7, 1), (11, 1), (13, 1)),
        "common degree 3 appended to a diffeomorphic pair",
    ),
    Case(
        "codim7_last_degree_removed",
        5,
        (
            Row((66, 56, 45, 39, 16, 15, 8), d=12454041600, e_over_d=-30762573120),
            Row((64, 60, 42, 39, 20, 11, 9), d=12454041600, e_over_d=-30762561840),
        ),
        "NotHomeomorphic",
        notes="cutting the common degree 3 breaks the equivalence",
    ),
    Case(
        "codim9_degree7_appended",
        5,
        (
            Row((66, 56, 45, 39, 16, 15, 8, 7, 3), d=261534873600, e_over_d=-33795490160),
            Row((64, 60, 42, 39, 20, 11, 9, 7, 3), d=261534873600, e_over_d=-33795524864),
        ),
        "NotHomeomorphic",
        notes="appending a further common degree 7 breaks the equivalence",
    ),
    Case(
        "dim4_quadric_section",
        4,
        (
            Row((66, 56, 45, 39, 16, 15, 8, 3, 2), d=74724249600, e_over_d=365019422),
            Row((64, 60, 42, 39, 20, 11, 9, 3, 2), d=74724249600, e_over_d=365025086),
        ),
        "NotHomeomorphic",
        notes="quadric sections of a diffeomorphic 5-dimensional pair",
    ),
    Case(
        "dim6_parent",
        6,
        (
            Row((66, 56, 45, 16, 15, 8, 3), d=958003200, e_over_d=1370218430570),
            Row((64, 60, 42, 20, 11, 9, 3), d=958003200, e_over_d=1369971514442),
        ),
        "NotHomeomorphic",
        notes="degree-39 sections of these are the diffeomorphic codim8 pair",
    ),
    Case(
        "codim7_base_pair",
        5,
        (
            Row(
                (88, 77, 72, 54, 48, 31, 29),
                (399, 25879, 1833489, 137438707, 10682130249),
                1136843237376,
                (-25866, 403244325),
                -296492615140,
            ),
            Row(
                (87, 81, 64, 62, 44, 33, 28),
                (399, 25879, 1833489, 137438707, 10682130249),
                1136843237376,
                (-25866, 403244325),
                -296492615140,
            ),
        ),
        "Diffeomorphic",
        ((2, 11), (3, 6), (7, 1), (11, 2), (29, 1), (31, 1)),
    ),
)

MODULI = {
    (88, 77, 72, 54, 48, 31, 29): 1382270197857128,
    (87, 81, 64, 62, 44, 33, 28): 1370693416581393,
}

# (lam, s) -> m(d_{lam+1, s-lam-1}) - m(d_{lam, s-lam})
FAMILY_STEPS = {
    (0, 1): 11576781275735,
    (1, 2): 34356628415559239284,
    (0, 2): 34347842980758828832,
}

# comparisons drawn from the tables above: (case, verdict) that must hold
# together for each cut / append / section observation
REMARKS = {
    "append_then_cut_or_extend": (
        ("codim8_pair", "Diffeomorphic"),
        ("codim7_last_degree_removed", "NotHomeomorphic"),
        ("codim9_degree7_appended", "NotHomeomorphic"),
    ),
    "section_of_diffeomorphic_pair": (
        ("codim8_pair", "Diffeomorphic"),
        ("dim4_quadric_section", "NotHomeomorphic"),
    ),
    "section_of_inequivalent_pair": (
        ("dim6_parent", "NotHomeomorphic"),
        ("codim8_pair", "Diffeomorphic"),
    ),
}
