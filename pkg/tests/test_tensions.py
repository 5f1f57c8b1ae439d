import itertools
import random

import pytest

import ttgraph as tg
from ttgraph.graphs import GraphError
from ttgraph.groups import Cyclic
from ttgraph.tensions import (
    edge_function,
    is_tension_by_potential,
    parse_edge_function,
    vertex_defect,
)

Z = Cyclic(None)
Z2 = Cyclic(2)
Z3 = Cyclic(3)


def rand_graph(rng, max_n=7, max_m=10, directed=True):
    n = rng.randrange(2, max_n + 1)
    edges = []
    for _ in range(rng.randrange(1, max_m + 1)):
        t, h = rng.randrange(n), rng.randrange(n)
        if t != h:
            edges.append((t, h))
    if directed:
        return tg.digraph("r", n, edges)
    return tg.undirected("r", n, edges)


class TestIsTension:
    def test_triangle_examples(self):
        c3 = tg.oriented_circuit(3)
        ones = edge_function(c3, [1, 1, 1])
        assert tg.is_tension(c3, ones, Z3)
        assert not tg.is_tension(c3, ones, Z2)

    def test_tree_anything_goes(self):
        t = tg.path_graph(5)
        rng = random.Random(0)
        for _ in range(5):
            f = edge_function(t, [rng.randrange(-5, 6) for _ in range(t.m)])
            assert tg.is_tension(t, f, Z)
            assert tg.is_tension(t, f, Z2)

    def test_non_total_rejected(self):
        c3 = tg.oriented_circuit(3)
        with pytest.raises(GraphError):
            tg.is_tension(c3, edge_function(tg.path_graph(4), [0, 0, 0]), Z)


class TestIsFlow:
    def test_unit_circulation(self):
        c3 = tg.oriented_circuit(3)
        assert tg.is_flow(c3, edge_function(c3, [1, 1, 1]), Z)

    def test_star_examples(self):
        star = tg.digraph("star", 4, [(0, 1), (0, 2), (0, 3)])
        ones = edge_function(star, [1, 1, 1])
        assert not tg.is_flow(star, ones, Z2)  # center defect is 3
        assert not tg.is_flow(star, ones, Z3)  # leaves break conservation


class TestPotentials:
    def test_constant_potential_is_zero(self):
        g = tg.complete_graph(4)
        f = tg.potential_tension(g, [7, 7, 7, 7])
        assert all(v == 0 for v in f.values)

    def test_c3_example(self):
        c3 = tg.oriented_circuit(3)
        f = tg.potential_tension(c3, [0, 1, 2])
        assert f.values == (1, 1, -2)

    def test_indicator_matches_elementary(self):
        rng = random.Random(3)
        for _ in range(30):
            g = rand_graph(rng)
            x = {v for v in range(g.n) if rng.random() < 0.5}
            a = rng.randrange(1, 5)
            elem = tg.elementary_tension(g, x, a)
            pot = tg.potential_tension(g, {v: -a if v in x else 0 for v in range(g.n)})
            assert elem.values == pot.values

    def test_potential_tensions_always_pass(self):
        rng = random.Random(4)
        for _ in range(50):
            g = rand_graph(rng)
            p = [rng.randrange(-4, 5) for _ in range(g.n)]
            f = tg.potential_tension(g, p)
            assert tg.is_tension(g, f, Z)
            assert is_tension_by_potential(g, f, Z)

    def test_two_routes_agree_on_fuzz(self):
        rng = random.Random(5)
        agree = 0
        for _ in range(100):
            g = rand_graph(rng)
            f = edge_function(g, [rng.randrange(-3, 4) for _ in range(g.m)])
            group = rng.choice([Z, Z2, Z3, Cyclic(4)])
            assert tg.is_tension(g, f, group) == is_tension_by_potential(g, f, group)
            agree += 1
        assert agree == 100


class TestElementary:
    def test_empty_side_is_zero(self):
        g = tg.complete_graph(3)
        assert all(v == 0 for v in tg.elementary_tension(g, []).values)

    def test_single_edge(self):
        g = tg.digraph("e", 2, [(0, 1)])
        assert tg.elementary_tension(g, [0], 1).values == (1,)

    def test_alternating_c4_bipartition_is_tension(self):
        g = tg.digraph("altC4", 4, [(0, 1), (2, 1), (2, 3), (0, 3)])
        f = tg.elementary_tension(g, [0, 2], 1, Z2)
        assert all(v == 1 for v in f.values)
        assert tg.is_tension(g, f, Z2)


class TestFlowBasis:
    def test_tree_empty(self):
        assert tg.flow_basis(tg.path_graph(4)) == []

    def test_c5_single_circulation(self):
        c5 = tg.oriented_circuit(5)
        basis = tg.flow_basis(c5)
        assert len(basis) == 1
        assert sorted(basis[0].values) == [1] * 5

    def test_reconstruction_roundtrip_z5(self):
        """Any flow is recovered from its non-tree edge values."""
        g = tg.complete_graph(4)
        basis = tg.flow_basis(g)
        assert len(basis) == 3
        forest = tg.spanning_forest(g)
        nontree = sorted(set(range(g.m)) - forest.tree_edges)
        rng = random.Random(6)
        z5 = Cyclic(5)
        for _ in range(20):
            coeffs = [rng.randrange(5) for _ in basis]
            flow = [0] * g.m
            for c, b in zip(coeffs, basis):
                for e in range(g.m):
                    flow[e] = (flow[e] + c * b.values[e]) % 5
            f = edge_function(g, flow)
            assert tg.is_flow(g, f, z5)
            rebuilt = [0] * g.m
            for e, b in zip(nontree, basis):
                for e2 in range(g.m):
                    rebuilt[e2] = (rebuilt[e2] + f.values[e] * b.values[e2]) % 5
            assert tuple(rebuilt) == f.values

    def test_orthogonality(self):
        rng = random.Random(7)
        for _ in range(40):
            g = rand_graph(rng)
            p = [rng.randrange(-4, 5) for _ in range(g.n)]
            tau = tg.potential_tension(g, p)
            for phi in tg.flow_basis(g):
                assert sum(tau.values[e] * phi.values[e] for e in range(g.m)) == 0


class TestZ2CutSupport:
    def test_tension_iff_support_is_cut(self):
        rng = random.Random(8)
        for _ in range(25):
            g = rand_graph(rng, max_n=6, max_m=9, directed=False)
            cut_sets = set()
            for bits in range(1 << g.n):
                x = {v for v in range(g.n) if bits >> v & 1}
                cut_sets.add(
                    frozenset(
                        e
                        for e, (t, h) in enumerate(g.edges)
                        if (t in x) != (h in x)
                    )
                )
            for bits in range(1 << g.m):
                f = edge_function(g, [bits >> e & 1 for e in range(g.m)])
                support = frozenset(e for e in range(g.m) if f.values[e])
                assert tg.is_tension(g, f, Z2) == (support in cut_sets)


class TestEdgeFunctionIO:
    def test_parse_and_serialize(self):
        g = tg.oriented_circuit(3)
        f = parse_edge_function(g, "0 5\n1 -2\n2 0\n")
        assert f.values == (5, -2, 0)
        assert parse_edge_function(g, f.to_text()).values == f.values

    def test_missing_edge_rejected(self):
        g = tg.oriented_circuit(3)
        with pytest.raises(GraphError):
            parse_edge_function(g, "0 5\n1 -2\n")
