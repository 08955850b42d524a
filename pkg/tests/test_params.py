"""Construction of deformation parameter tables and their invariants."""

import itertools
import json
import random

import pytest

from orbifold.action import VGroupElement
from orbifold.group_algebra import GroupAlgebraElement as GA
from orbifold.params import (
    CoboundaryData,
    DeformationParams,
    add_coboundary,
    build_candidate,
    closed_form,
    implied_a,
    mu,
    params_to_ab,
)


def ga(p, text):
    return GA.from_text(p, text)


def running_example():
    """p = 3, b = 1 - g, a = -1 + g + g^2: the worked solution."""
    return ga(3, "-1+g+g^2"), ga(3, "1-g")


class TestBuildCandidate:
    def test_running_example_tables(self):
        a, b = running_example()
        params = build_candidate(a, b)
        assert params.lam[1][0] == ga(3, "g-g^2")
        assert params.lam[1][1] == ga(3, "g^2+1")
        assert params.kappaL == VGroupElement(ga(3, "-1"), ga(3, "-g"))
        assert params.kappaC.is_zero()

    def test_zero_pair_gives_zero_tables(self):
        z = GA.zero(3)
        assert build_candidate(z, z) == DeformationParams.zero(3)

    def test_identity_row_always_vanishes(self):
        rng = random.Random(3)
        for p in (3, 5):
            for _ in range(20):
                params = build_candidate(GA.random(rng, p), GA.random(rng, p))
                assert params.lam[0][0].is_zero() and params.lam[0][1].is_zero()

    def test_a0_enters_only_kappa(self):
        p = 3
        a_with, a_without = ga(p, "1+g"), ga(p, "g")
        b = ga(p, "1-g")
        with_a0 = build_candidate(a_with, b)
        without_a0 = build_candidate(a_without, b)
        assert with_a0.lam == without_a0.lam
        assert with_a0.kappaL.row1 == GA.one(p)
        assert without_a0.kappaL.row1 == GA.zero(p)

    def test_injective_on_pairs_p3(self):
        # The candidate family has exactly p^(2p) distinct points.
        seen = set()
        for a in GA.all_elements(3):
            for b in GA.all_elements(3):
                params = build_candidate(a, b)
                key = (params.lam, params.kappaL)
                assert key not in seen
                seen.add(key)
        assert len(seen) == 3**6


class TestAddCoboundary:
    def test_zero_map_is_identity(self):
        a, b = running_example()
        params = build_candidate(a, b)
        assert add_coboundary(params, CoboundaryData.zero(3)) == params

    def test_displayed_increments(self):
        # f(v1) = g shifts lambda(g, v2) by -g^2 and kappa^L by v1 g.
        p = 3
        base = DeformationParams.zero(p)
        shifted = add_coboundary(base, CoboundaryData(ga(p, "g"), GA.zero(p)))
        assert shifted.lam[1][0].is_zero()
        assert shifted.lam[1][1] == ga(p, "-g^2")
        assert shifted.kappaL == VGroupElement(ga(p, "g"), GA.zero(p))

    def test_f_v2_is_irrelevant(self):
        a, b = running_example()
        params = build_candidate(a, b)
        rng = random.Random(5)
        for _ in range(20):
            f2 = GA.random(rng, 3)
            assert add_coboundary(params, CoboundaryData(GA.zero(3), f2)) == params

    def test_kappa_c_unchanged(self):
        p = 3
        params = DeformationParams.zero(p).with_kappaC(ga(p, "1+g"))
        shifted = add_coboundary(params, CoboundaryData(ga(p, "1+g^2"), GA.zero(p)))
        assert shifted.kappaC == ga(p, "1+g")


class TestMu:
    def test_empty_d_vanishes(self):
        for j in range(5):
            assert mu(5, [], j) == 0

    def test_p3_single_d_at_j1(self):
        assert mu(3, [2], 1) == 2

    def test_p3_single_d_at_j0(self):
        assert mu(3, [2], 0) == 0

    def test_matches_direct_formula_p5(self):
        # Independent evaluation of the alternating binomial sum.
        from math import comb

        p = 5
        rng = random.Random(7)
        for _ in range(50):
            k = rng.randrange(p + 1)
            d = [rng.randrange(p) for _ in range(k)]
            for j in range(p):
                direct = (-1) ** (p - j) * sum(
                    (-1) ** (m + 1) * comb(p - m, p - j) * d[m - 1]
                    for m in range(1, k + 1)
                    if p - j <= p - m
                )
                assert mu(p, d, j) == direct % p


class TestClosedForm:
    def test_unit_b_implies_a_is_b1_g(self):
        p = 3
        for b in GA.all_elements(p):
            if b.augmentation() == 0:
                continue
            assert implied_a(b, []) == GA.monomial(p, 1, b.coeffs[1])
            params = closed_form(b, [])
            assert params_to_ab(params) == (GA.monomial(p, 1, b.coeffs[1]), b)

    def test_running_example_from_d(self):
        a, b = running_example()
        assert implied_a(b, [-1]) == a
        assert closed_form(b, [-1]) == build_candidate(a, b)

    def test_b_zero_all_d(self):
        p = 3
        z = GA.zero(p)
        for d in itertools.product(range(p), repeat=p):
            params = closed_form(z, list(d))
            assert params.kappaL.row2.is_zero()
            assert all(params.lam[i][0].is_zero() for i in range(p))

    def test_equals_candidate_plus_kappa_c(self):
        rng = random.Random(11)
        for p in (3, 5):
            for _ in range(30):
                b = GA.random(rng, p)
                k = b.gminus1_factor().k
                d = [rng.randrange(p) for _ in range(k)]
                kappaC = GA.random(rng, p)
                direct = closed_form(b, d, kappaC)
                via_candidate = build_candidate(implied_a(b, d), b).with_kappaC(kappaC)
                assert direct == via_candidate

    def test_d_length_must_match_class(self):
        b = ga(3, "1-g")  # k = 1
        with pytest.raises(ValueError, match="k=1"):
            closed_form(b, [1, 2])


class TestParamsToAb:
    def test_round_trip_all_pairs_p3(self):
        for a in GA.all_elements(3):
            for b in GA.all_elements(3):
                assert params_to_ab(build_candidate(a, b)) == (a, b)

    def test_corrupted_table_is_rejected(self):
        a, b = running_example()
        params = build_candidate(a, b)
        lam = list(params.lam)
        lam[2] = (lam[2][0] + GA.one(3), lam[2][1])
        corrupted = DeformationParams(3, tuple(lam), params.kappaC, params.kappaL)
        assert params_to_ab(corrupted) is None

    def test_kappa_c_is_ignored(self):
        a, b = running_example()
        params = build_candidate(a, b).with_kappaC(ga(3, "1+g"))
        assert params_to_ab(params) == (a, b)


class TestSerialization:
    def test_json_round_trip(self):
        rng = random.Random(13)
        for p in (3, 5):
            for _ in range(20):
                params = build_candidate(GA.random(rng, p), GA.random(rng, p))
                blob = json.dumps(params.to_json())
                assert DeformationParams.from_json(json.loads(blob)) == params

    def test_from_json_rejects_garbage(self):
        with pytest.raises(ValueError):
            DeformationParams.from_json({"p": 3})
        with pytest.raises(ValueError):
            DeformationParams.from_json("nope")

    def test_identity_row_enforced(self):
        p = 3
        bad = DeformationParams.zero(p).to_json()
        bad["lambda"][0][0] = [1, 0, 0]
        with pytest.raises(ValueError):
            DeformationParams.from_json(bad)

    def test_pretty_print_running_example(self):
        a, b = running_example()
        text = build_candidate(a, b).to_text()
        assert "lambda(g^1, v1) = g - g^2" in text
        assert "kappa^L = v1*(-1) + v2*(-g)" in text
