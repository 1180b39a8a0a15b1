import numpy as np
import pytest

from mccut import graph as gm
from mccut import oracle, solver
from conftest import random_colored_graph

RED = gm.EdgeColor.RED
BLUE = gm.EdgeColor.BLUE


class TestGoodWeight:
    def test_red_cut(self, k2_red):
        assert solver.good_weight(k2_red, [1, -1]) == 1.0

    def test_blue_cut_is_bad(self, k2_blue):
        assert solver.good_weight(k2_blue, [1, -1]) == 0.0

    def test_c5_alternating(self, c5_red):
        # edge {4,0} stays uncut
        assert solver.good_weight(c5_red, [1, -1, 1, -1, 1]) == 4.0

    def test_zero_entry_rejected(self, k2_red):
        with pytest.raises(ValueError):
            solver.good_weight(k2_red, [1, 0])

    def test_sign_flip_symmetry(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            g = random_colored_graph(rng)
            y = rng.choice([-1, 1], size=g.n)
            assert solver.good_weight(g, y) == solver.good_weight(g, -y)


class TestHalfCut:
    def test_k2_red(self, k2_red):
        y = solver.half_cut(k2_red)
        assert solver.good_weight(k2_red, y) == 1.0

    def test_k2_blue_both_plus(self, k2_blue):
        y = solver.half_cut(k2_blue)
        assert np.array_equal(y, [1, 1])
        assert solver.good_weight(k2_blue, y) == 1.0

    def test_triangle_greedy(self, triangle_red):
        y = solver.half_cut(triangle_red)
        assert solver.good_weight(triangle_red, y) == 2.0

    def test_half_guarantee_random(self):
        rng = np.random.default_rng(1)
        for _ in range(50):
            g = random_colored_graph(rng)
            y = solver.half_cut(g)
            assert solver.good_weight(g, y) >= gm.total_weight(g) / 2 - 1e-12

    def test_random_variant_is_seeded(self, c5_red):
        a = solver.half_cut(c5_red, seed=3, random=True)
        b = solver.half_cut(c5_red, seed=3, random=True)
        assert np.array_equal(a, b)


class TestSolve:
    def test_k2_red_optimal(self, k2_red):
        rep = solver.solve(k2_red)
        assert rep.good_weight == 1.0
        assert rep.y[0] * rep.y[1] == -1

    def test_k33_all_red_optimal(self):
        g = gm.generate("bipartite", 6, red_fraction=1.0)
        rep = solver.solve(g)
        assert rep.good_weight == 9.0
        assert oracle.brute_force(g).opt_value == 9.0

    def test_c5_optimal(self, c5_red):
        rep = solver.solve(c5_red)
        assert rep.good_weight == 4.0

    def test_single_vertex(self):
        rep = solver.solve(gm.build(1, []))
        assert np.array_equal(rep.y, [1])
        assert rep.good_weight == 0.0

    def test_edgeless(self):
        rep = solver.solve(gm.build(4, []))
        assert np.array_equal(rep.y, [1, 1, 1, 1])

    def test_zero_weight_edges_only(self):
        g = gm.build(3, [(0, 1, 0.0, RED)])
        rep = solver.solve(g)
        assert rep.good_weight == 0.0

    def test_isolated_vertices_assigned_plus(self):
        g = gm.build(4, [(0, 1, 1.0, RED)])
        rep = solver.solve(g)
        assert rep.y[2] == 1 and rep.y[3] == 1

    def test_report_consistency(self):
        rng = np.random.default_rng(2)
        for trial in range(20):
            g = random_colored_graph(rng)
            rep = solver.solve(g, solver.SolveParams(seed=trial))
            assert rep.good_weight == pytest.approx(
                solver.good_weight(g, rep.y), abs=1e-12)
            assert rep.good_weight >= gm.total_weight(g) / 2 - 1e-9

    def test_trace_decided_sums_to_n(self):
        rng = np.random.default_rng(3)
        for trial in range(20):
            g = random_colored_graph(rng)
            rep = solver.solve(g, solver.SolveParams(seed=trial))
            assert sum(t.decided for t in rep.trace) == g.n
            assert len(rep.trace) <= g.n

    def test_determinism(self):
        rng = np.random.default_rng(4)
        g = random_colored_graph(rng, n=10, p=0.6)
        p = solver.SolveParams(seed=11)
        a = solver.solve(g, p)
        b = solver.solve(g, p)
        assert np.array_equal(a.y, b.y)
        assert a.good_weight == b.good_weight
        assert [vars(t) for t in a.trace] == [vars(t) for t in b.trace]

    def test_guarantee_vs_oracle(self):
        from mccut import guarantee
        _, g_min = guarantee.minimize_G()
        rng = np.random.default_rng(5)
        for trial in range(30):
            g = random_colored_graph(rng, max_n=10)
            rep = solver.solve(g, solver.SolveParams(seed=trial))
            v = oracle.verify_report(g, rep, tol=1e-6)
            assert v.meets_half and v.meets_integral_bound and v.meets_ratio
            assert v.ratio >= g_min - 1e-6
