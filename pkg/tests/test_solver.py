"""The compatibility system, its linearization, kernels, enumeration, census."""

import random

import pytest

from orbifold.group_algebra import GroupAlgebraElement as GA, TooLarge, gminus1_power
from orbifold.solver import (
    a_from_c,
    c_from_ab,
    census,
    enumerate_solutions,
    kernel_basis,
    kernel_bruteforce,
    phi_b,
    records_to_csv,
    span,
    system_residual,
)


def ga(p, text):
    return GA.from_text(p, text)


class TestSystemResidual:
    def test_running_example_is_a_solution(self):
        assert system_residual(ga(3, "-1+g+g^2"), ga(3, "1-g")).is_zero()

    def test_zero_pair(self):
        assert system_residual(GA.zero(3), GA.zero(3)).is_zero()

    def test_hand_evaluated_nonsolution(self):
        # b = 1, a = g^2: only the j = 2, k = 0 summand survives at l = 2,
        # contributing 2*a_2*b_0 = 2.
        assert system_residual(ga(3, "g^2"), GA.one(3)) == ga(3, "2*g^2")


class TestCyclicPackaging:
    def test_running_example_c(self):
        a, b = ga(3, "-1+g+g^2"), ga(3, "1-g")
        assert c_from_ab(a, b) == ga(3, "-1-g-g^2")

    def test_zero_maps_to_zero(self):
        assert c_from_ab(GA.zero(3), GA.zero(3)).is_zero()

    def test_direct_substitution(self):
        # a = 0, b = g: c_2 = -C(2,2)*1 = -1, c_1 = -C(3,2)*0 = 0.
        assert c_from_ab(GA.zero(3), ga(3, "g")) == ga(3, "-g^2")

    def test_running_example_inverse(self):
        assert a_from_c(ga(3, "-1-g-g^2"), ga(3, "1-g")) == ga(3, "-1+g+g^2")

    def test_c_zero_unit_b(self):
        for b in GA.all_elements(3):
            if b.augmentation() != 0:
                assert a_from_c(GA.zero(3), b) == GA.monomial(3, 1, b.coeffs[1])

    def test_mutually_inverse_exhaustive_p3(self):
        for b in GA.all_elements(3):
            for c in GA.all_elements(3):
                assert c_from_ab(a_from_c(c, b), b) == c
            for a in GA.all_elements(3):
                assert a_from_c(c_from_ab(a, b), b) == a


class TestPhiB:
    def test_zero(self):
        assert phi_b(ga(3, "1-g"), GA.zero(3)).is_zero()

    def test_identity_coefficient_is_dot_product(self):
        rng = random.Random(3)
        for _ in range(50):
            b, c = GA.random(rng, 3), GA.random(rng, 3)
            expected = sum(bi * ci for bi, ci in zip(b.coeffs, c.coeffs)) % 3
            assert phi_b(b, c).coeffs[0] == expected

    def test_equivalent_to_system_exhaustive_p3(self):
        for b in GA.all_elements(3):
            for c in GA.all_elements(3):
                a = a_from_c(c, b)
                assert phi_b(b, c).is_zero() == system_residual(a, b).is_zero()

    def test_equivalent_to_system_random_p5(self):
        rng = random.Random(5)
        for _ in range(2000):
            a, b = GA.random(rng, 5), GA.random(rng, 5)
            c = c_from_ab(a, b)
            assert phi_b(b, c).is_zero() == system_residual(a, b).is_zero()


class TestKernel:
    def test_running_example_kernel(self):
        b = ga(3, "1-g")
        basis = kernel_basis(b)
        assert basis == (ga(3, "1+g+g^2"),)
        assert set(span(3, basis)) == {GA.zero(3), ga(3, "1+g+g^2"), ga(3, "-1-g-g^2")}

    def test_unit_b_trivial_kernel(self):
        assert kernel_basis(GA.one(3)) == ()
        assert kernel_bruteforce(GA.one(3)) == {GA.zero(3)}

    def test_zero_b_full_kernel(self):
        basis = kernel_basis(GA.zero(3))
        assert len(basis) == 3
        assert len(set(span(3, basis))) == 27

    def test_basis_elements_are_gminus1_powers(self):
        b = gminus1_power(5, 2)  # k = 2
        assert kernel_basis(b) == (gminus1_power(5, 4), gminus1_power(5, 3))

    def test_bruteforce_equals_span_p3(self):
        for b in GA.all_elements(3):
            assert kernel_bruteforce(b) == set(span(3, kernel_basis(b)))

    def test_bruteforce_guard(self):
        with pytest.raises(TooLarge):
            kernel_bruteforce(GA.one(11))


class TestEnumeration:
    def test_p3_total(self):
        records = enumerate_solutions(3)
        assert sum(len(r.solutions) for r in records) == 81

    def test_p3_gminus1_squared_row(self):
        records = enumerate_solutions(3)
        target = gminus1_power(3, 2)
        rec = next(r for r in records if r.b == target)
        avals = {a for _c, a in rec.solutions}
        assert len(avals) == 9
        for text in ("1", "g", "-g^2", "1+g+g^2"):
            assert ga(3, text) in avals

    def test_every_solution_solves_the_system(self):
        for rec in enumerate_solutions(3):
            assert len(rec.solutions) == 3**rec.k
            for c, a in rec.solutions:
                assert system_residual(a, rec.b).is_zero()
                assert phi_b(rec.b, c).is_zero()

    def test_brute_force_agrees_p3(self):
        closed = enumerate_solutions(3, "closed_form")
        brute = enumerate_solutions(3, "brute_force")
        assert len(closed) == len(brute) == 27
        for rc, rb in zip(closed, brute):
            assert rc.b == rb.b
            assert set(rc.solutions) == set(rb.solutions)

    def test_brute_force_guard(self):
        with pytest.raises(TooLarge):
            enumerate_solutions(7, "brute_force")

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            enumerate_solutions(3, "guess")

    def test_workers_partition_agrees(self):
        solo = enumerate_solutions(3, workers=1)
        pooled = enumerate_solutions(3, workers=2)
        assert solo == pooled


class TestCensus:
    def test_p3_rows(self):
        rows = {(r.k, r.b_class_size, r.a_class_size_per_b) for r in census(3)}
        assert rows == {(0, 18, 1), (1, 6, 3), (2, 2, 9), (3, 1, 27)}

    def test_census_matches_enumeration(self):
        records = enumerate_solutions(3)
        for row in census(3):
            group = [r for r in records if r.k == row.k]
            assert len(group) == row.b_class_size
            assert all(len(r.solutions) == row.a_class_size_per_b for r in group)

    def test_totals(self):
        for p in (3, 5, 7):
            assert sum(r.b_class_size * r.a_class_size_per_b for r in census(p)) == p ** (p + 1)
            assert sum(r.b_class_size for r in census(p)) == p**p


def test_csv_export_shape():
    records = enumerate_solutions(3)
    lines = records_to_csv(records).strip().splitlines()
    assert lines[0] == "b,a"
    assert len(lines) == 82


def test_closed_form_coordinates_match_kernel_description():
    # The free coordinates d weight the kernel basis: feeding
    # c = sum_m d_m (g-1)^(p-m) through a_from_c recovers the solved a.
    from orbifold.params import implied_a

    rng = random.Random(37)
    for p in (3, 5):
        for _ in range(60):
            b = GA.random(rng, p)
            k = b.gminus1_factor().k
            d = [rng.randrange(p) for _ in range(k)]
            c = GA.zero(p)
            for m, dm in enumerate(d, start=1):
                c = c + gminus1_power(p, p - m).scale(dm)
            assert a_from_c(c, b) == implied_a(b, d)
            assert phi_b(b, c).is_zero()
