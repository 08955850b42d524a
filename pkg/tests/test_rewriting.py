"""The rewriting system: rules, normal forms, confluence, the two certificates."""

import random

import pytest

from orbifold.group_algebra import GroupAlgebraElement as GA
from orbifold.params import DeformationParams, build_candidate, closed_form
from orbifold.rewriting import (
    NCPolynomial,
    NormalWord,
    V1,
    V2,
    check_associativity,
    check_dimension,
    normal_words,
    oracle_multiply,
    reduce,
    rules_from_params,
    trace_reduction,
    word_to_text,
)


def ga(p, text):
    return GA.from_text(p, text)


def running_rules():
    return rules_from_params(build_candidate(ga(3, "-1+g+g^2"), ga(3, "1-g")))


def random_word(rng, p, max_len):
    letters = [V1, V2] + list(range(1, p))
    return tuple(rng.choice(letters) for _ in range(rng.randrange(max_len + 1)))


class TestRules:
    def test_zero_params_r1_is_a_plain_swap(self):
        rules = rules_from_params(DeformationParams.zero(3))
        assert rules.table[(1, V1)] == {(V1, 1): 1}

    def test_running_example_r3(self):
        # v2 v1 -> v1 v2 + v1 + v2*g since kappa^L = -v1 - v2 g and kappa^C = 0.
        rules = running_rules()
        assert rules.table[(V2, V1)] == {(V1, V2): 1, (V1,): 1, (V2, 1): 1}

    def test_r2_carries_the_transvection_correction(self):
        rules = rules_from_params(DeformationParams.zero(5))
        for m in range(1, 5):
            assert rules.table[(m, V2)] == {(V1, m): m, (V2, m): 1}

    def test_r4_group_law(self):
        rules = rules_from_params(DeformationParams.zero(5))
        assert rules.table[(2, 3)] == {(): 1}
        assert rules.table[(4, 3)] == {(2,): 1}


class TestReduce:
    def test_single_r1_application(self):
        rules = running_rules()
        out = reduce(NCPolynomial.from_word(3, (1, V1)), rules)
        assert out == NCPolynomial(3, {(V1, 1): 1, (1,): 1, (2,): -1})

    def test_normal_word_is_fixed(self):
        rules = running_rules()
        x = NCPolynomial.from_word(3, (V1, V2, 1))
        assert reduce(x, rules) == x

    def test_degree3_confluence_on_solution(self):
        rules = running_rules()
        x = NCPolynomial.from_word(3, (1, V2, V1))
        assert reduce(x, rules) == reduce(x, rules, rightmost=True)

    def test_linear(self):
        rules = running_rules()
        rng = random.Random(3)
        for _ in range(40):
            w1, w2 = random_word(rng, 3, 6), random_word(rng, 3, 6)
            alpha, beta = rng.randrange(3), rng.randrange(3)
            combo = NCPolynomial(3, {w1: alpha}) + NCPolynomial(3, {w2: beta})
            lhs = reduce(combo, rules)
            rhs = reduce(NCPolynomial.from_word(3, w1), rules).scale(alpha) + reduce(
                NCPolynomial.from_word(3, w2), rules
            ).scale(beta)
            assert lhs == rhs

    def test_terminates_on_random_words(self):
        # Termination shows up as plain completion: every reduced word is normal.
        rng = random.Random(5)
        rules = running_rules()
        normal = {w.word() for w in normal_words(3, 8)}
        for _ in range(300):
            word = random_word(rng, 3, 8)
            out = rules.reduce_word(word)
            assert all(w in normal for w in out)

    def test_confluence_left_vs_right_all_short_words(self):
        rng = random.Random(7)
        b = GA.random(rng, 3)
        d = [rng.randrange(3) for _ in range(b.gminus1_factor().k)]
        rules = rules_from_params(closed_form(b, d, GA.random(rng, 3)))
        letters = [V1, V2, 1, 2]
        stack = [()]
        while stack:
            word = stack.pop()
            if len(word) == 4:
                continue
            for letter in letters:
                w = word + (letter,)
                assert rules.reduce_word(w) == rules.reduce_word(w, rightmost=True)
                stack.append(w)


class TestOracleMultiply:
    def test_v1_times_v2(self):
        rules = running_rules()
        out = oracle_multiply(NormalWord(1, 0, 0), NormalWord(0, 1, 0), rules)
        assert out == NCPolynomial(3, {(V1, V2): 1})

    def test_group_letters_multiply(self):
        rules = running_rules()
        out = oracle_multiply(NormalWord(0, 0, 2), NormalWord(0, 0, 2), rules)
        assert out == NCPolynomial(3, {(1,): 1})

    def test_v2_times_v1_is_r3(self):
        rules = running_rules()
        out = oracle_multiply(NormalWord(0, 1, 0), NormalWord(1, 0, 0), rules)
        assert out == NCPolynomial(3, rules.table[(V2, V1)])


class TestAssociativity:
    def test_zero_params_pass(self):
        ok, witness = check_associativity(rules_from_params(DeformationParams.zero(3)), 4)
        assert ok and witness is None

    def test_solution_passes_d4(self):
        ok, _ = check_associativity(running_rules(), 4)
        assert ok

    def test_nonsolution_fails_d3(self):
        rules = rules_from_params(build_candidate(ga(3, "g"), ga(3, "1-g")))
        ok, witness = check_associativity(rules, 3)
        assert not ok
        assert witness is not None

    def test_nonsolution_g_v2_v1_triple_is_defective(self):
        # The specific overlap behind the failing bracket condition.
        rules = rules_from_params(build_candidate(ga(3, "g"), ga(3, "1-g")))
        x, y, z = (1,), (V2,), (V1,)
        lhs = rules.reduce_poly(
            {w + z: c for w, c in rules.reduce_word(x + y).items()}
        )
        rhs = rules.reduce_poly(
            {x + w: c for w, c in rules.reduce_word(y + z).items()}
        )
        assert lhs != rhs

    def test_degree_bound_guard(self):
        with pytest.raises(ValueError):
            check_associativity(running_rules(), 2)


class TestDimension:
    def test_counts_p3(self):
        ok, rows = check_dimension(running_rules(), 4)
        assert ok
        assert [(r["degree"], r["count"], r["expected"]) for r in rows] == [
            (0, 3, 3),
            (1, 9, 9),
            (2, 18, 18),
            (3, 30, 30),
            (4, 45, 45),
        ]

    def test_counts_p5_low_degree(self):
        rules = rules_from_params(DeformationParams.zero(5))
        ok, rows = check_dimension(rules, 2)
        assert ok
        assert [r["count"] for r in rows] == [5, 15, 30]


class TestCrossOracleP5:
    def test_sampled_solutions_pass(self):
        rng = random.Random(55)
        for _ in range(5):
            b = GA.random(rng, 5)
            d = [rng.randrange(5) for _ in range(b.gminus1_factor().k)]
            params = closed_form(b, d, GA.random(rng, 5))
            from orbifold.pbw import check_all

            assert check_all(params).pbw
            ok, witness = check_associativity(rules_from_params(params), 4)
            assert ok, witness

    def test_sampled_nonsolutions_fail(self):
        from orbifold.pbw import check_all
        from orbifold.solver import system_residual

        rng = random.Random(56)
        found = 0
        while found < 5:
            a, b = GA.random(rng, 5), GA.random(rng, 5)
            if system_residual(a, b).is_zero():
                continue
            params = build_candidate(a, b)
            assert not check_all(params).pbw
            ok, witness = check_associativity(rules_from_params(params), 4)
            assert not ok and witness is not None
            found += 1


def test_trace_reduction_is_line_oriented():
    rules = running_rules()
    lines = trace_reduction((1, V2, V1), rules)
    assert lines
    assert lines[0].startswith("g^1*v2*v1 --R2-->")
    assert all("-->" in line for line in lines)


def test_word_rendering():
    assert word_to_text(()) == "1"
    assert word_to_text((V1, V2, 2)) == "v1*v2*g^2"
