"""Root solver: dense iteration, gcd reduction, explicit rings."""

import cmath
import math
import warnings

import pytest

from bipstab.cpoly import DensePolynomial, evaluate_trinomial
from bipstab.errors import ConvergenceError, InvalidInputError
from bipstab.graphs import TrinomialSpec, phi_trinomial
from bipstab.roots import (
    RootSet,
    SolverConfig,
    all_roots_dense,
    match_multisets,
    modulus_product,
    reduce_trinomial,
    shift_roots_to_x,
    trinomial_roots,
)

PHI = (1 + math.sqrt(5)) / 2


class TestDenseSolver:
    def test_quadratic_formula_roots(self, cfg):
        rs = all_roots_dense(DensePolynomial((-1, 1, 1)), cfg)
        expected = sorted([(-1 + math.sqrt(5)) / 2, (-1 - math.sqrt(5)) / 2])
        got = sorted(z.real for z in rs.roots)
        assert max(abs(a - b) for a, b in zip(got, expected)) < 1e-12
        assert max(abs(z.imag) for z in rs.roots) < 1e-12

    def test_cube_roots_of_unity(self, cfg):
        rs = all_roots_dense(DensePolynomial((-1, 0, 0, 1)), cfg)
        expected = [cmath.exp(2j * math.pi * k / 3) for k in range(3)]
        assert match_multisets(rs.roots, expected) < 1e-10

    def test_balanced_quartic_moduli(self, cfg):
        rs = all_roots_dense(DensePolynomial((-1, 0, 0, 0, 2)), cfg)
        r = 0.5 ** 0.25
        assert all(abs(abs(z) - r) < 1e-10 for z in rs.roots)

    def test_root_count_equals_degree(self, cfg):
        rs = all_roots_dense(DensePolynomial.from_trinomial(TrinomialSpec(17, 5)), cfg)
        assert len(rs) == 17

    def test_residual_contract(self, cfg):
        rs = all_roots_dense(DensePolynomial.from_trinomial(TrinomialSpec(23, 7)), cfg)
        assert rs.max_residual <= cfg.residual_tol

    def test_convergence_error_carries_best_iterate(self):
        tight = SolverConfig(max_iterations=1, residual_tol=1e-15)
        with pytest.raises(ConvergenceError) as err:
            all_roots_dense(DensePolynomial.from_trinomial(TrinomialSpec(40, 3)), tight)
        assert err.value.best_roots is not None
        assert len(err.value.best_roots) == 40

    def test_degree_zero_rejected(self, cfg):
        with pytest.raises(InvalidInputError):
            all_roots_dense(DensePolynomial((3,)), cfg)

    def test_tiny_leading_coefficient_rejected(self, cfg):
        with pytest.raises(InvalidInputError):
            all_roots_dense(DensePolynomial((1, 1e-310)), cfg)

    def test_high_degree_warns_extended(self):
        withered = SolverConfig(max_iterations=1, residual_tol=1e30)
        spec = TrinomialSpec(501, 1)
        with pytest.warns(RuntimeWarning, match="extended"):
            all_roots_dense(DensePolynomial.from_trinomial(spec), withered)

    def test_deterministic(self, cfg):
        p = DensePolynomial.from_trinomial(TrinomialSpec(19, 6))
        a = all_roots_dense(p, cfg)
        b = all_roots_dense(p, cfg)
        assert a.roots == b.roots and a.residuals == b.residuals


class TestReduceTrinomial:
    def test_gcd_eleven(self):
        red = reduce_trinomial(TrinomialSpec(22, 11))
        assert (red.r, red.p_red, red.q_red) == (11, 2, 1)

    def test_coprime_unchanged(self):
        red = reduce_trinomial(TrinomialSpec(5, 1))
        assert (red.r, red.p_red, red.q_red) == (1, 5, 1)

    def test_gcd_two(self):
        red = reduce_trinomial(TrinomialSpec(6, 4))
        assert (red.r, red.p_red, red.q_red) == (2, 3, 2)

    def test_reduced_form_coprimality_enforced(self):
        from bipstab.roots import ReducedForm

        with pytest.raises(InvalidInputError):
            ReducedForm(r=1, p_red=4, q_red=2)


class TestTrinomialRoots:
    def test_balanced_ring_k33(self, cfg):
        rs = trinomial_roots(TrinomialSpec(3, 3), cfg)
        assert rs.solver == "explicit_ring"
        r = 0.5 ** (1.0 / 3.0)
        assert all(abs(abs(z) - r) < 1e-12 for z in rs.roots)

    def test_golden_pair(self, cfg):
        rs = trinomial_roots(TrinomialSpec(2, 1), cfg)
        expected = [complex((-1 + math.sqrt(5)) / 2), complex((-1 - math.sqrt(5)) / 2)]
        assert match_multisets(rs.roots, expected) < 1e-12

    def test_k11_22_two_rings_from_quadratic_formula(self, cfg):
        # independent construction: z^2 + z - 1 = 0 by the quadratic formula,
        # then all 11th roots of each solution
        rs = trinomial_roots(TrinomialSpec(22, 11), cfg)
        assert rs.solver == "gcd_reduction"
        expected = []
        for w in ((-1 + math.sqrt(5)) / 2, (-1 - math.sqrt(5)) / 2):
            s, theta = abs(w), cmath.phase(complex(w))
            for k in range(11):
                expected.append(s ** (1 / 11) * cmath.exp(1j * (theta + 2 * math.pi * k) / 11))
        assert match_multisets(rs.roots, expected) < 1e-10
        moduli = sorted(abs(z) for z in rs.roots)
        assert abs(moduli[0] - PHI ** (-1 / 11)) < 1e-12
        assert abs(moduli[-1] - PHI ** (1 / 11)) < 1e-12

    @pytest.mark.parametrize("n,m", [(2, 1), (5, 3), (9, 6), (22, 11), (31, 13), (60, 24)])
    def test_agrees_with_dense_solver(self, n, m, cfg):
        structured = trinomial_roots(TrinomialSpec(n, m), cfg)
        dense = all_roots_dense(DensePolynomial.from_trinomial(TrinomialSpec(n, m)), cfg)
        assert match_multisets(structured.roots, dense.roots) < 1e-8

    @pytest.mark.parametrize("n,m", [(2, 1), (3, 2), (7, 4), (11, 3), (12, 5)])
    def test_vieta_modulus_product(self, n, m, cfg):
        rs = trinomial_roots(TrinomialSpec(n, m), cfg)
        assert abs(modulus_product(rs) - 1.0) < 1e-8

    @pytest.mark.parametrize("n,m", [(2, 1), (5, 2), (9, 4), (12, 7)])
    def test_real_root_in_unit_interval_and_outer_root(self, n, m, cfg):
        rs = trinomial_roots(TrinomialSpec(n, m), cfg)
        reals = [z for z in rs.roots if abs(z.imag) < 1e-9]
        assert any(0 < z.real < 1 for z in reals)
        assert max(abs(z) for z in rs.roots) > 1

    @pytest.mark.parametrize("n,m", [(6, 4), (22, 11), (14, 10), (35, 28)])
    def test_conjugate_closure(self, n, m, cfg):
        rs = trinomial_roots(TrinomialSpec(n, m), cfg)
        assert rs.conjugation_defect() < 1e-9

    def test_residuals_verified_against_trinomial(self, cfg):
        spec = TrinomialSpec(40, 16)
        rs = trinomial_roots(spec, cfg)
        for z, res in zip(rs.roots, rs.residuals):
            assert abs(abs(evaluate_trinomial(spec, z)) - res) < 1e-12

    def test_extended_precision_close_to_standard(self, cfg, extended_cfg):
        spec = TrinomialSpec(21, 6)
        std = trinomial_roots(spec, cfg)
        ext = trinomial_roots(spec, extended_cfg)
        assert match_multisets(std.roots, ext.roots) < 1e-10


class TestWindingConsistency:
    @pytest.mark.parametrize("n,m", [(5, 2), (7, 7), (12, 8)])
    def test_zero_count_inside_enclosing_rectangle(self, n, m, cfg):
        from bipstab.contour import ContourSpec, winding_zero_count

        spec = TrinomialSpec(n, m)
        rs = trinomial_roots(spec, cfg)
        lim = max(max(abs(z.real) for z in rs.roots), max(abs(z.imag) for z in rs.roots)) + 0.5
        rect = ContourSpec(-lim, lim, -lim, lim, samples_per_edge=1024)
        count = winding_zero_count(lambda z: evaluate_trinomial(spec, z), rect)
        assert count == n


class TestShiftRootsToX:
    def test_half_to_minus_half(self):
        rs = RootSet(roots=(0.5 + 0j,), residuals=(0.0,), solver="explicit_ring",
                     iterations_used=0)
        assert shift_roots_to_x(rs).roots == (-0.5 + 0j,)

    def test_complex_shift(self):
        rs = RootSet(roots=(1 + 2j,), residuals=(0.0,), solver="dense_iteration",
                     iterations_used=1)
        assert shift_roots_to_x(rs).roots == (2j,)

    def test_balanced_ring_centers_at_minus_one(self, cfg):
        rs = trinomial_roots(TrinomialSpec(8, 8), cfg)
        xs = shift_roots_to_x(rs)
        r = 0.5 ** (1.0 / 8.0)
        assert all(abs(abs(x + 1) - r) < 1e-12 for x in xs.roots)

    def test_round_trip_is_identity(self, cfg):
        rs = trinomial_roots(TrinomialSpec(9, 2), cfg)
        back = RootSet(
            roots=tuple(z + 1 for z in shift_roots_to_x(rs).roots),
            residuals=rs.residuals,
            solver=rs.solver,
            iterations_used=rs.iterations_used,
        )
        assert match_multisets(rs.roots, back.roots) < 1e-14


class TestMatchMultisets:
    def test_size_mismatch(self):
        with pytest.raises(InvalidInputError):
            match_multisets([1j], [1j, 2j])

    def test_exact_match(self):
        pts = [1 + 1j, -2j, 0.5]
        assert match_multisets(pts, list(reversed(pts))) == 0.0
