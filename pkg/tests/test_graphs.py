"""Independence polynomial construction: oracle, closed form, trinomial."""

import io
import random

import pytest

from bipstab.cpoly import evaluate_trinomial
from bipstab.errors import InvalidInputError, SizeLimitError
from bipstab.graphs import (
    IntPolynomial,
    SimpleGraph,
    TrinomialSpec,
    independence_polynomial_bipartite,
    independence_polynomial_bruteforce,
    load_edge_list,
    phi_trinomial,
)


class TestBruteforceOracle:
    def test_empty_graph_all_subsets_independent(self):
        g = SimpleGraph(3)
        assert independence_polynomial_bruteforce(g).coefficients == (1, 3, 3, 1)

    def test_triangle_only_singletons(self):
        g = SimpleGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
        assert independence_polynomial_bruteforce(g).coefficients == (1, 3)

    def test_k23_hand_enumeration(self):
        # singletons: 5; same-side pairs: C(2,2)+C(3,2) = 1+3 = 4; triple: 1
        g = SimpleGraph.complete_bipartite(2, 3)
        assert independence_polynomial_bruteforce(g).coefficients == (1, 5, 4, 1)

    def test_single_vertex(self):
        assert independence_polynomial_bruteforce(SimpleGraph(1)).coefficients == (1, 1)

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            independence_polynomial_bruteforce(SimpleGraph(25))

    def test_isolated_vertices_counted(self):
        # path 0-1 plus isolated vertex 2
        g = SimpleGraph.from_edges(3, [(0, 1)])
        assert independence_polynomial_bruteforce(g).coefficients == (1, 3, 2)


class TestClosedForm:
    def test_k11(self):
        assert independence_polynomial_bipartite(1, 1).coefficients == (1, 2)

    def test_k23_matches_oracle(self):
        closed = independence_polynomial_bipartite(2, 3)
        oracle = independence_polynomial_bruteforce(SimpleGraph.complete_bipartite(2, 3))
        assert closed == oracle

    def test_k13_expansion(self):
        closed = independence_polynomial_bipartite(1, 3)
        assert closed.coefficients == (1, 4, 3, 1)
        oracle = independence_polynomial_bruteforce(SimpleGraph.complete_bipartite(1, 3))
        assert closed == oracle

    def test_zero_part_rejected(self):
        with pytest.raises(InvalidInputError):
            independence_polynomial_bipartite(0, 3)

    @pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 6) for n in range(m, 11 - m)])
    def test_oracle_equivalence_small(self, m, n):
        closed = independence_polynomial_bipartite(m, n)
        oracle = independence_polynomial_bruteforce(SimpleGraph.complete_bipartite(m, n))
        assert closed == oracle

    @pytest.mark.parametrize("m,n", [(2, 7), (3, 5), (4, 9), (1, 12)])
    def test_symmetry(self, m, n):
        assert independence_polynomial_bipartite(m, n) == independence_polynomial_bipartite(n, m)

    @pytest.mark.parametrize("m,n", [(1, 1), (2, 5), (7, 3), (10, 10)])
    def test_degree_is_independence_number(self, m, n):
        assert independence_polynomial_bipartite(m, n).degree == max(m, n)

    def test_huge_exponent_stays_exact(self):
        # binomials of (1+x)^400 overflow any fixed-width integer
        poly = independence_polynomial_bipartite(1, 400)
        from math import comb

        assert poly.coefficients[200] == comb(400, 200)
        assert poly.coefficients[200] > 2 ** 128
        # row sum counts all independent sets: 2^400 + 2^1 - 1
        assert sum(poly.coefficients) == 2 ** 400 + 1


class TestPhiTrinomial:
    def test_k23(self):
        t = phi_trinomial(2, 3)
        assert (t.n, t.m) == (3, 2)
        assert not t.is_balanced

    def test_balanced_degenerate_flagged(self):
        t = phi_trinomial(4, 4)
        assert t.is_balanced
        assert evaluate_trinomial(t, 0.0 + 0j) == -1  # 2y^4 - 1 at 0

    def test_k15(self):
        t = phi_trinomial(1, 5)
        assert (t.n, t.m) == (5, 1)

    def test_argument_order_irrelevant(self):
        assert phi_trinomial(7, 3) == phi_trinomial(3, 7)

    def test_validation(self):
        with pytest.raises(InvalidInputError):
            phi_trinomial(0, 5)
        with pytest.raises(InvalidInputError):
            TrinomialSpec(n=2, m=3)


class TestSubstitutionConsistency:
    @pytest.mark.parametrize("m,n", [(2, 3), (3, 7), (5, 5), (2, 9), (4, 12)])
    def test_shifted_expansion_equals_trinomial(self, m, n):
        # i(K_{m,n}, y-1) must agree with y^n + y^m - 1 pointwise
        poly = independence_polynomial_bipartite(m, n)
        shifted = poly.shift_argument(-1)
        spec = phi_trinomial(m, n)
        rng = random.Random(20240801 + 10 * m + n)
        for _ in range(50):
            y = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
            a = shifted(y)
            b = evaluate_trinomial(spec, y)
            assert abs(a - b) <= 1e-12 * max(1.0, abs(a), abs(b))


class TestIntPolynomial:
    def test_normalization_strips_trailing_zeros(self):
        assert IntPolynomial((1, 2, 0, 0)).coefficients == (1, 2)
        assert IntPolynomial((0, 0)).coefficients == (0,)

    def test_arithmetic(self):
        p = IntPolynomial((1, 1))       # 1 + x
        q = IntPolynomial((-1, 0, 1))   # x^2 - 1
        assert (p * q).coefficients == (-1, -1, 1, 1)
        assert (p + q).coefficients == (0, 1, 1)
        assert (q - p).coefficients == (-2, -1, 1)
        assert p.times_power(2).coefficients == (0, 0, 1, 1)

    def test_shift_argument_exact(self):
        p = IntPolynomial((0, 0, 1))  # x^2
        assert p.shift_argument(1).coefficients == (1, 2, 1)  # (x+1)^2
        assert p.shift_argument(-1).coefficients == (1, -2, 1)

    def test_derivative(self):
        assert IntPolynomial((5, 3, 2)).derivative().coefficients == (3, 4)

    def test_evaluation_exact_for_ints(self):
        p = IntPolynomial((1, -5, 3, 9, 5, 1))
        assert p(2) == 1 - 10 + 12 + 72 + 80 + 32


class TestGraphValidation:
    def test_self_loop_rejected(self):
        with pytest.raises(InvalidInputError):
            SimpleGraph.from_edges(3, [(1, 1)])

    def test_endpoint_out_of_range(self):
        with pytest.raises(InvalidInputError):
            SimpleGraph.from_edges(2, [(0, 2)])

    def test_duplicate_edges_collapse(self):
        g = SimpleGraph.from_edges(3, [(0, 1), (1, 0)])
        assert len(g.edges) == 1


class TestEdgeListFormat:
    def test_parse_with_comments_and_isolated_vertex(self):
        text = "# a comment\np 4\n0 1\n2 0\n\n# trailing\n"
        g = load_edge_list(io.StringIO(text))
        assert g.vertex_count == 4
        assert g.edges == frozenset({(0, 1), (0, 2)})
        # vertex 3 is isolated but changes the polynomial
        poly = independence_polynomial_bruteforce(g)
        assert poly.coefficients[1] == 4

    def test_missing_header(self):
        with pytest.raises(InvalidInputError):
            load_edge_list(io.StringIO("0 1\n"))

    def test_edge_before_header(self):
        with pytest.raises(InvalidInputError):
            load_edge_list(io.StringIO("0 1\np 4\n"))

    def test_bad_tokens(self):
        with pytest.raises(InvalidInputError):
            load_edge_list(io.StringIO("p 3\n0 x\n"))
        with pytest.raises(InvalidInputError):
            load_edge_list(io.StringIO("p 3\n0 1 2\n"))

    def test_duplicate_header(self):
        with pytest.raises(InvalidInputError):
            load_edge_list(io.StringIO("p 3\np 4\n"))
