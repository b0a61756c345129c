import pytest

from dcut.colouring import clique_blocks
from dcut.exact import solve_naive
from dcut.gadgets import (
    circular_ladder,
    gen_diamond_chain,
    gen_h_gadget,
    gen_random_clawfree,
    gen_regular_noncut,
    gen_spider,
)
from dcut.graph import Spider, contains_induced_spider, line_graph, structural_report


class TestRegularNoncut:
    def test_smallest_instance_shape(self):
        g, labels = gen_regular_noncut(2, 2, 6)
        assert g.n == 14 and g.m == 42
        rep = structural_report(g)
        assert rep.connected and rep.is_regular and rep.max_degree == 6

    def test_labels_describe_the_wiring(self):
        g, labels = gen_regular_noncut(2, 2, 6)
        assert labels["T_1"] == (0, 1, 2, 3, 4, 5)
        assert labels["A_1"] == (0, 1, 2)
        assert labels["B_1"] == (3, 4, 5)
        assert labels["v_1"] == (12,)
        # v_i sees exactly B_i and the next clique's A part
        assert g.adj[12] == (3, 4, 5, 6, 7, 8)
        assert g.adj[13] == (0, 1, 2, 9, 10, 11)

    def test_claw_free(self):
        g, _ = gen_regular_noncut(2, 2, 6)
        assert not contains_induced_spider(g, Spider(2, 1))

    def test_has_no_dcut(self):
        g, _ = gen_regular_noncut(2, 2, 6)
        assert not solve_naive(g, 2).has_dcut

    def test_bigger_parameters(self):
        g, _ = gen_regular_noncut(3, 2, 8)
        assert g.n == 18 and structural_report(g).max_degree == 8
        assert not solve_naive(g, 3).has_dcut

    @pytest.mark.parametrize("d,k,r", [(1, 2, 6), (2, 1, 6), (2, 2, 5)])
    def test_rejects_bad_parameters(self, d, k, r):
        with pytest.raises(ValueError):
            gen_regular_noncut(d, k, r)


class TestHGadget:
    def test_shape(self):
        g, labels = gen_h_gadget(2, 2, 6)
        assert g.n == 16 and g.m == 50
        rep = structural_report(g)
        assert rep.max_degree == 7
        assert rep.degree_histogram == ((4, 2), (6, 6), (7, 8))

    def test_free_vertices_wiring(self):
        g, labels = gen_h_gadget(2, 2, 6)
        assert labels["w_1"] == (14,) and labels["w_2"] == (15,)
        # w_i sees A_i plus the previous connector, cyclically
        assert g.adj[14] == (0, 1, 2, 13)
        assert g.adj[15] == (6, 7, 8, 12)

    def test_collapses_to_one_block(self):
        g, _ = gen_h_gadget(2, 2, 6)
        assert clique_blocks(g, 2) == [tuple(range(16))]

    def test_has_no_dcut(self):
        g, _ = gen_h_gadget(2, 2, 6)
        assert not solve_naive(g, 2).has_dcut

    def test_claw_free(self):
        g, _ = gen_h_gadget(2, 2, 6)
        assert not contains_induced_spider(g, Spider(2, 1))


class TestDiamondChain:
    def test_single_link(self):
        g = gen_diamond_chain(4, 1)
        assert g.n == 4 and g.m == 5  # K4 minus one edge
        assert not g.has_edge(0, 3)

    def test_chain_grows_by_p_minus_1(self):
        g = gen_diamond_chain(4, 3)
        assert g.n == 10 and g.m == 15
        assert structural_report(g).max_degree == 4  # shared glue vertices

    def test_wider_links(self):
        g = gen_diamond_chain(5, 2)
        assert g.n == 9
        assert structural_report(g).max_degree == 2 * 5 - 4

    def test_claw_free(self):
        for k in (1, 2, 3):
            assert not contains_induced_spider(gen_diamond_chain(4, k), Spider(2, 1))

    def test_no_matching_cut(self):
        for k in (1, 2, 3):
            assert not solve_naive(gen_diamond_chain(4, k), 1).has_dcut

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            gen_diamond_chain(3, 1)
        with pytest.raises(ValueError):
            gen_diamond_chain(4, 0)


class TestSpiderGen:
    def test_claw(self):
        g = gen_spider(2, 1)
        assert g.n == 4 and g.m == 3
        assert g.degree(0) == 3

    def test_longer(self):
        g = gen_spider(3, 4)
        assert g.n == 8 and g.m == 7
        assert contains_induced_spider(g, Spider(3, 4))


class TestRandomClawfree:
    def test_deterministic_per_seed(self):
        a = gen_random_clawfree(20, 3, 5)
        b = gen_random_clawfree(20, 3, 5)
        assert a == b
        assert a != gen_random_clawfree(20, 3, 6)

    def test_always_claw_free_and_connected(self):
        for seed in range(15):
            g = gen_random_clawfree(18, 3, seed)
            rep = structural_report(g)
            assert rep.connected
            assert rep.max_degree <= 4  # 2 * (cap - 1)
            assert not contains_induced_spider(g, Spider(2, 1))

    def test_degree_cap_scales(self):
        for seed in range(5):
            g = gen_random_clawfree(20, 4, seed)
            assert structural_report(g).max_degree <= 6

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            gen_random_clawfree(1, 3, 0)
        with pytest.raises(ValueError):
            gen_random_clawfree(10, 1, 0)


class TestCircularLadder:
    def test_prism(self):
        g = circular_ladder(3)
        assert g.n == 6 and g.m == 9
        assert structural_report(g).is_regular

    def test_line_graph_family(self):
        for n in (3, 5, 11):
            lg = line_graph(circular_ladder(n))
            rep = structural_report(lg)
            assert lg.n == 3 * n
            assert rep.is_regular and rep.max_degree == 4
            assert not contains_induced_spider(lg, Spider(2, 1))

    def test_rejects_small(self):
        with pytest.raises(ValueError):
            circular_ladder(2)
