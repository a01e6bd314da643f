"""Tests for the brute-force enumeration oracles."""

import random
from fractions import Fraction

import pytest

from monocurve.errors import BudgetExceeded, NotPolynomial, NotRepresentable
from monocurve.oracle import (
    EnumerationBudget,
    cyclotomic_polynomial,
    enum_count_solutions,
    enum_digits,
    expand_and_verify,
    grid_discrepancies,
)
from monocurve.qspace import (
    CyclicQuotientType,
    count_solutions_fixed_tail,
    count_solutions_total,
)
from monocurve.semigroup import build_semigroup, decompose, random_semigroup
from monocurve.zeta import (
    FactorProduct,
    characteristic_polynomial,
    milnor_number,
    to_cyclotomic,
    zeta_closed_form,
)


def one_row(d, *a):
    return CyclicQuotientType((d,), (tuple(a),))


class TestEnumCountSolutions:
    def test_square_roots_mod_sign(self):
        t = one_row(2, 1, 1)
        k = (2, 2)
        c = (Fraction(0), Fraction(0))
        assert enum_count_solutions(t, k, c) == 2
        assert enum_count_solutions(t, k, c) == count_solutions_total(t, k)

    def test_trivial_group(self):
        t = one_row(1, 0)
        for k0 in (1, 2, 5):
            assert enum_count_solutions(t, (k0,), (Fraction(1, 3),)) == k0

    def test_free_action(self):
        t = one_row(6, 2, 3)
        rng = random.Random(0)
        for _ in range(20):
            c = tuple(Fraction(rng.randrange(6), 6) for _ in range(2))
            assert enum_count_solutions(t, (3, 2), c) == 1

    def test_fixed_tail(self):
        t = one_row(2, 1, 1)
        c = (Fraction(0), Fraction(1, 2))
        got = enum_count_solutions(t, (2, 2), c, mode="fixed_tail")
        assert got == count_solutions_fixed_tail(t, 2) == 2

    def test_budget_group_order(self):
        with pytest.raises(BudgetExceeded):
            enum_count_solutions(one_row(11, 1), (11,), (Fraction(0),))

    def test_budget_exponent(self):
        with pytest.raises(BudgetExceeded):
            enum_count_solutions(one_row(1, 0), (7,), (Fraction(0),))

    def test_budget_rank(self):
        t = one_row(1, 0, 0, 0, 0, 0)
        with pytest.raises(BudgetExceeded):
            enum_count_solutions(t, (1,) * 5, (Fraction(0),) * 5)


class TestEnumDigits:
    def test_matches_decompose(self):
        sg = build_semigroup((4, 6, 13))
        assert enum_digits(26, 2, sg) == (5, 1)
        assert enum_digits(26, 2, sg) == decompose(sg, 26, 2)

    def test_not_representable(self):
        sg = build_semigroup((4, 6, 13))
        with pytest.raises(NotRepresentable):
            enum_digits(1, 1, sg)

    def test_fuzzed_agreement(self):
        rng = random.Random(5)
        for seed in range(30):
            sg = random_semigroup(seed, 2 + seed % 3, 10**4)
            for _ in range(5):
                i = rng.randint(1, sg.g)
                digits = tuple(
                    rng.randrange(sg.n[j]) if j else rng.randrange(4)
                    for j in range(i)
                )
                s = sum(c * b for c, b in zip(digits, sg.gens))
                try:
                    assert enum_digits(s, i, sg) == decompose(sg, s, i) == digits
                except BudgetExceeded:
                    pass


class TestCyclotomicPolynomial:
    def test_small(self):
        assert cyclotomic_polynomial(1) == (-1, 1)
        assert cyclotomic_polynomial(2) == (1, 1)
        assert cyclotomic_polynomial(3) == (1, 1, 1)
        assert cyclotomic_polynomial(4) == (1, 0, 1)
        assert cyclotomic_polynomial(6) == (1, -1, 1)
        assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


class TestExpandAndVerify:
    def test_delta_example(self):
        delta = characteristic_polynomial(build_semigroup((4, 6, 13)))
        coeffs, mults = expand_and_verify(delta.product)
        assert len(coeffs) == 17
        assert coeffs == delta.expand()
        assert mults[3] == 1
        assert mults == {d: c for d, c in delta.cyclotomic().entries}

    def test_trivial_quotient(self):
        fp = FactorProduct.from_map({1: 1}) / FactorProduct.from_map({1: 1})
        coeffs, mults = expand_and_verify(fp)
        assert coeffs == (1,)
        assert mults == {}

    def test_zeta_not_polynomial(self):
        with pytest.raises(NotPolynomial):
            expand_and_verify(zeta_closed_form(build_semigroup((4, 6, 13))))

    def test_budget(self):
        fp = FactorProduct.from_map({5001: 2})
        with pytest.raises(BudgetExceeded):
            expand_and_verify(fp)

    def test_fuzzed_delta_agreement(self):
        for seed in range(60):
            sg = random_semigroup(seed, 2 + seed % 4, 10**6)
            delta = characteristic_polynomial(sg)
            num_degree = sum(
                a * e for a, e in delta.product.numerator_factors()
            )
            if num_degree > 3000:
                continue
            coeffs, mults = expand_and_verify(delta.product)
            assert len(coeffs) == milnor_number(sg) + 1
            assert mults == {d: c for d, c in to_cyclotomic(delta.product).entries}


class TestGrid:
    def test_tiny_grid_clean(self):
        budget = EnumerationBudget(
            max_group_order=4, max_exponent=3, max_rank=2, max_poly_degree=100
        )
        assert grid_discrepancies(budget, draws=2, seed=1) == []

    def test_bad_budget(self):
        with pytest.raises(ValueError):
            EnumerationBudget(max_group_order=0)
