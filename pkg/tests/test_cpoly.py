"""Complex polynomial evaluation: Horner, binary powering, precision tiers."""

import cmath
import math
import random

import numpy as np
import pytest

from bipstab.cpoly import (
    DensePolynomial,
    binary_pow,
    evaluate,
    evaluate_trinomial,
    evaluate_trinomial_with_derivative,
    evaluate_with_derivative,
)
from bipstab.errors import InvalidInputError
from bipstab.graphs import TrinomialSpec

GOLDEN_ROOT = (-1 + math.sqrt(5)) / 2  # root of y^2 + y - 1 by the quadratic formula


class TestEvaluate:
    def test_quadratic_at_one(self):
        p = DensePolynomial((-1, 1, 1))  # y^2 + y - 1
        assert evaluate(p, 1.0 + 0j) == 1

    def test_balanced_quartic_at_zero(self):
        p = DensePolynomial((-1, 0, 0, 0, 2))  # 2y^4 - 1
        assert evaluate(p, 0j) == -1

    def test_cubic_at_i(self):
        p = DensePolynomial((-1, 0, 1, 1))  # y^3 + y^2 - 1
        assert abs(evaluate(p, 1j) - (-2 - 1j)) < 1e-15

    def test_vectorized_matches_scalar(self):
        p = DensePolynomial((2, -1, 0.5, 1j))
        zs = np.array([0.3 + 0.1j, -1.2 + 2j, 0j])
        vec = evaluate(p, zs)
        for z, v in zip(zs, vec):
            assert abs(v - evaluate(p, complex(z))) < 1e-14

    def test_trailing_zero_coefficients_trimmed(self):
        assert DensePolynomial((1, 2, 0, 0)).degree == 1

    def test_empty_rejected(self):
        with pytest.raises(InvalidInputError):
            DensePolynomial(())


class TestEvaluateTrinomial:
    def test_golden_root_annihilates(self):
        t = TrinomialSpec(n=2, m=1)
        assert abs(evaluate_trinomial(t, complex(GOLDEN_ROOT))) <= 1e-14

    def test_n5_at_one(self):
        assert evaluate_trinomial(TrinomialSpec(n=5, m=1), 1.0 + 0j) == 1

    def test_balanced_ring_point(self):
        t = TrinomialSpec(n=4, m=4)
        z = complex(0.5 ** 0.25)
        assert abs(evaluate_trinomial(t, z)) <= 1e-14

    @pytest.mark.parametrize("n,m", [(3, 1), (7, 2), (16, 5), (64, 9), (33, 33)])
    def test_agrees_with_dense_expansion(self, n, m):
        t = TrinomialSpec(n=n, m=m)
        dense = DensePolynomial.from_trinomial(t)
        rng = random.Random(1000 + n * 67 + m)
        for _ in range(25):
            r = rng.uniform(0.0, 3.0)
            a = rng.uniform(0, 2 * math.pi)
            z = r * cmath.exp(1j * a)
            lhs = evaluate_trinomial(t, z)
            rhs = evaluate(dense, z)
            assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs), abs(rhs))

    def test_extended_matches_standard_on_wellconditioned(self):
        t = TrinomialSpec(n=9, m=4)
        z = 0.8 + 0.3j
        a = evaluate_trinomial(t, z)
        b = evaluate_trinomial(t, z, precision="extended")
        assert abs(a - b) <= 1e-13 * max(1.0, abs(a))


class TestDerivatives:
    @pytest.mark.parametrize("coeffs", [(-1, 1, 1), (3, 0, -2, 1), (1j, 2, -1, 0.5, 1)])
    def test_derivative_matches_central_differences(self, coeffs):
        p = DensePolynomial(coeffs)
        rng = random.Random(42)
        h = 1e-6
        for _ in range(20):
            z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            _, d = evaluate_with_derivative(p, z)
            fd = (evaluate(p, z + h) - evaluate(p, z - h)) / (2 * h)
            assert abs(d - fd) <= 1e-6 * max(1.0, abs(d))

    def test_trinomial_derivative_consistent(self):
        t = TrinomialSpec(n=11, m=4)
        z = 1.1 - 0.4j
        v, d = evaluate_trinomial_with_derivative(t, z)
        assert abs(v - evaluate_trinomial(t, z)) < 1e-12
        h = 1e-6
        fd = (evaluate_trinomial(t, z + h) - evaluate_trinomial(t, z - h)) / (2 * h)
        assert abs(d - fd) <= 1e-6 * max(1.0, abs(d))

    def test_dense_derivative_object(self):
        p = DensePolynomial((5, 3, 2))
        assert p.derivative().coefficients == (3 + 0j, 4 + 0j)


class TestBinaryPow:
    @pytest.mark.parametrize("e", [0, 1, 2, 3, 7, 16, 31, 300])
    def test_matches_builtin_pow(self, e):
        z = 0.97 + 0.22j
        assert abs(binary_pow(z, e) - z ** e) <= 1e-12 * max(1.0, abs(z ** e))

    def test_array_input(self):
        zs = np.array([1.0 + 1j, 0.5j, -2.0 + 0j])
        out = binary_pow(zs, 5)
        for z, v in zip(zs, out):
            assert abs(v - complex(z) ** 5) < 1e-12 * max(1.0, abs(complex(z) ** 5))

    def test_negative_exponent_rejected(self):
        with pytest.raises(InvalidInputError):
            binary_pow(1.0 + 0j, -1)

    def test_no_overflow_warning_past_top_bit(self):
        # the squaring chain must stop at the top bit; |z|=2, e=300 is finite
        with np.errstate(over="raise"):
            v = binary_pow(np.array([2.0 + 0j]), 300)
        assert np.isfinite(v).all()


class TestExtendedPrecision:
    def test_extended_evaluate_beats_standard_on_cancellation(self):
        # (y - 1)^6 expanded: near y = 1 the standard tier loses most digits
        coeffs = (1, -6, 15, -20, 15, -6, 1)
        z = 1.0001 + 0j
        exact = (z - 1) ** 6
        std = evaluate(DensePolynomial(coeffs), z)
        ext = evaluate(DensePolynomial(coeffs, precision="extended"), z)
        assert abs(ext - exact) < abs(std - exact) or abs(std - exact) < 1e-30

    def test_precision_field_validated(self):
        with pytest.raises(InvalidInputError):
            DensePolynomial((1, 1), precision="quad")
