import json
from fractions import Fraction
from itertools import product

import pytest

from qrwe.curve_census import (census_json, empirical_moment,
                               is_squarefree_quartic, j_special_census,
                               legendre_family_sum, quartic_census,
                               quartic_discriminant, quartic_point_count,
                               weierstrass_census)
from qrwe.finite_field import field
from qrwe.hecke_traces import moment_formula
from qrwe.isogeny_counts import weighted_count, weighted_count_full_2tors


def test_point_count_fourth_power_example():
    # f = y^4 over F_5: one root at (1, 0), square values elsewhere
    assert quartic_point_count(field(5, 1), (0, 0, 0, 0, 1)) == (11, 1)


def test_point_count_rejects_zero_polynomial():
    with pytest.raises(ValueError):
        quartic_point_count(field(5, 1), (0, 0, 0, 0, 0))


def test_point_count_parity():
    ctx = field(7, 1)
    for coeffs in [(1, 2, 3, 4, 5), (0, 1, 0, 6, 2), (3, 0, 0, 0, 1),
                   (1, 1, 1, 1, 1), (0, 0, 2, 0, 0)]:
        points, roots = quartic_point_count(ctx, coeffs)
        assert points % 2 == roots % 2


def test_point_count_works_on_singular_quartics():
    ctx = field(5, 1)
    # (x y)^2 has double roots at both (1, 0) and (0, 1)
    coeffs = (0, 0, 1, 0, 0)
    assert not is_squarefree_quartic(ctx, coeffs)
    points, roots = quartic_point_count(ctx, coeffs)
    assert roots == 2


@pytest.mark.parametrize("p,v", [(3, 1), (5, 1), (7, 1), (3, 2)])
def test_gcd_and_discriminant_smoothness_agree(p, v):
    ctx = field(p, v)
    for coeffs in product(range(ctx.q), repeat=5):
        if not any(coeffs):
            continue
        assert (is_squarefree_quartic(ctx, coeffs)
                == (quartic_discriminant(ctx, coeffs) != 0)), coeffs


@pytest.mark.parametrize("p,v", [(3, 1), (5, 1), (7, 1), (3, 2)])
def test_scalar_and_vector_census_agree(p, v):
    ctx = field(p, v)
    scalar = quartic_census(ctx, engine="scalar")
    vector = quartic_census(ctx, engine="vector")
    assert set(scalar.buckets) == set(vector.buckets)
    for t in scalar.traces():
        assert scalar.buckets[t].total == vector.buckets[t].total
        assert scalar.buckets[t].by_roots == vector.buckets[t].by_roots


def test_census_threads_deterministic(quartic_census_for):
    ctx = field(7, 1)
    serial = quartic_census(ctx)
    threaded = quartic_census(ctx, threads=3)
    assert {t: (b.total, b.by_roots) for t, b in serial.buckets.items()} \
        == {t: (b.total, b.by_roots) for t, b in threaded.buckets.items()}


def test_census_bucket_weights_match_closed_form(quartic_census_for):
    for q in (3, 5, 7, 9, 11, 13):
        census = quartic_census_for(q)
        for t in range(-8, 9):
            assert census.weighted_count(t) == weighted_count(q, t), (q, t)
            assert (census.weighted_count_full_2tors(t)
                    == weighted_count_full_2tors(q, t)), (q, t)


def test_two_torsion_bucket_proportions(quartic_census_for):
    # for even group order: 2-root and 4-root counts split along the
    # ordinary / full 2-torsion class weights
    for q in (5, 7, 9, 11, 13):
        census = quartic_census_for(q)
        scale = (q - 1) ** 2 * q * (q + 1)
        for t, bucket in census.buckets.items():
            if (q + 1 - t) % 2 != 0:
                continue
            n_all = weighted_count(q, t)
            n_full = weighted_count_full_2tors(q, t)
            assert bucket.by_roots[2] == (n_all - n_full) * scale / 2, (q, t)
            assert bucket.by_roots[4] == n_full * scale / 4, (q, t)


def test_weierstrass_census_totals_and_agreement(quartic_census_for):
    for q, (p, v) in {5: (5, 1), 7: (7, 1), 11: (11, 1), 13: (13, 1),
                      25: (5, 2)}.items():
        ctx = field(p, v)
        wcensus = weierstrass_census(ctx)
        singular_pairs = q  # 4a^3 = -27b^2 is a rational curve with q points
        assert sum(b.models for b in wcensus.buckets.values()) == q * q - singular_pairs
        qcensus = quartic_census_for(q)
        for t in set(wcensus.traces()) | set(qcensus.traces()):
            assert wcensus.weighted_count(t) == qcensus.weighted_count(t)
            assert (wcensus.weighted_count_full_2tors(t)
                    == qcensus.weighted_count_full_2tors(t))


def test_weierstrass_rejects_char_3():
    with pytest.raises(ValueError, match="p >= 5"):
        weierstrass_census(field(3, 2))


def test_weierstrass_odd_traces_have_no_2_torsion():
    census = weierstrass_census(field(7, 1))
    for t, bucket in census.buckets.items():
        if t % 2 != 0:
            assert bucket.full2tors == 0


def test_empirical_moment_examples(quartic_census_for):
    census5 = quartic_census_for(5)
    assert empirical_moment(census5, 0, "all") == 5
    assert empirical_moment(census5, 1, "all") == 24
    census7 = quartic_census_for(7)
    assert empirical_moment(census7, 0, "two_torsion") == Fraction(13, 3)


def test_empirical_matches_formula_small(quartic_census_for):
    for q in (3, 5, 7, 9):
        census = quartic_census_for(q)
        for flavor in ("all", "two_torsion", "full_two_torsion"):
            for R in range(3):
                assert (empirical_moment(census, R, flavor)
                        == moment_formula(q, R, flavor)), (q, R, flavor)


def test_legendre_family_sum_count_and_regression():
    for p in (3, 5, 7, 11):
        assert legendre_family_sum(p, 0) == (p - 1) ** 2
    assert legendre_family_sum(5, 1) == 72


def test_j_special_census_small():
    data5 = j_special_census(field(5, 1))
    assert data5["j0"]["class_total"] == 2
    assert data5["j0"]["classes"] == {0: 2}
    assert data5["j1728"]["class_total"] == 4
    assert all(t % 5 != 0 for t in data5["j1728"]["classes"])
    data7 = j_special_census(field(7, 1))
    assert data7["j0"]["class_total"] == 6
    assert data7["j1728"]["classes"] == {0: 2}


def test_j_special_rejects_char_3():
    with pytest.raises(ValueError):
        j_special_census(field(3, 3))


def test_census_json_shape(quartic_census_for):
    payload = census_json(quartic_census_for(5))
    assert payload["q"] == 5 and payload["kind"] == "quartic"
    assert payload["buckets"][0]["t"] == -4
    assert all(isinstance(b["total"], str) for b in payload["buckets"])
    json.dumps(payload)  # must be serializable as-is
    wpayload = census_json(weierstrass_census(field(5, 1)))
    assert wpayload["kind"] == "weierstrass"
    assert all(len(b["by_roots"]) == 4 for b in wpayload["buckets"])
