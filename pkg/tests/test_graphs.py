import itertools
import random

import pytest

import ttgraph as tg
from ttgraph.graphs import GraphError, ParseError


def graph6_encode(n, edges):
    """Independent graph6 encoder used as a parsing oracle."""
    assert n < 63
    adj = set()
    for a, b in edges:
        adj.add((min(a, b), max(a, b)))
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in adj else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


class TestParsing:
    def test_directed_triangle(self):
        g = tg.parse_graph("3 3 directed\n0 1\n1 2\n2 0\n")
        assert g.n == 3 and g.m == 3 and g.directed
        assert g.edges == ((0, 1), (1, 2), (2, 0))

    def test_loop_rejected_with_line(self):
        with pytest.raises(ParseError) as err:
            tg.parse_graph("2 1 directed\n0 0\n")
        assert "line 2" in str(err.value)
        assert "loop" in str(err.value)

    def test_dangling_vertex_rejected(self):
        with pytest.raises(ParseError) as err:
            tg.parse_graph("2 1 directed\n0 5\n")
        assert "line 2" in str(err.value)

    def test_bad_header(self):
        with pytest.raises(ParseError):
            tg.parse_graph("3 3 sideways\n0 1\n1 2\n2 0\n")

    def test_edge_count_mismatch(self):
        with pytest.raises(ParseError):
            tg.parse_graph("3 3 directed\n0 1\n")

    def test_undirected_gets_canonical_orientation(self):
        g = tg.parse_graph("3 2 undirected\n2 0\n2 1\n")
        assert not g.directed
        assert g.edges == ((0, 2), (1, 2))

    def test_graph6_petersen_roundtrip(self):
        pet = tg.named_graph("petersen")
        s = graph6_encode(pet.n, pet.edges)
        parsed = tg.parse_graph(s, "petersen-g6")
        assert parsed.n == 10 and parsed.m == 15
        assert all(parsed.degree(v) == 3 for v in range(10))
        assert parsed.adjacency_pairs == pet.adjacency_pairs

    def test_graph6_random_roundtrip(self):
        rng = random.Random(5)
        for _ in range(20):
            n = rng.randrange(1, 12)
            edges = [
                (u, v)
                for u, v in itertools.combinations(range(n), 2)
                if rng.random() < 0.4
            ]
            g = tg.undirected("r", n, edges)
            back = tg.parse_graph6(graph6_encode(n, edges))
            assert back.adjacency_pairs == g.adjacency_pairs

    def test_serialize_roundtrip(self):
        g = tg.named_graph("grotzsch")
        assert tg.parse_graph(g.to_edge_list_text()).edges == g.edges

    def test_loop_rejected_in_constructor(self):
        with pytest.raises(GraphError):
            tg.digraph("bad", 2, [(1, 1)])


class TestSpanningAndCircuits:
    def test_tree_has_no_fundamental_circuits(self):
        t = tg.path_graph(5)
        assert tg.fundamental_circuits(t) == []

    def test_triangle_one_circuit(self):
        c3 = tg.oriented_circuit(3)
        circuits = tg.fundamental_circuits(c3)
        assert len(circuits) == 1
        assert len(circuits[0]) == 3

    def test_k4_three_circuits(self):
        assert len(tg.fundamental_circuits(tg.complete_graph(4))) == 3

    def test_count_matches_dimension_formula(self):
        rng = random.Random(9)
        for _ in range(25):
            n = rng.randrange(2, 10)
            edges = [
                (u, v)
                for u, v in itertools.combinations(range(n), 2)
                if rng.random() < 0.4
            ]
            g = tg.undirected("r", n, edges)
            expect = g.m - g.n + len(g.components)
            assert len(tg.fundamental_circuits(g)) == expect

    def test_circuit_invariants_validated(self):
        for c in tg.enumerate_circuits(tg.complete_graph(4), 4):
            c.validate()
            assert set(c.positive_edges) | set(c.negative_edges) == {
                e for e, _ in c.steps
            }


def brute_circuit_count(g, max_len):
    """Oracle: enumerate circuits as vertex sequences, dedupe by edge set
    plus rotation class."""
    seen = set()
    adj = {}
    for eid, (t, h) in enumerate(g.edges):
        adj.setdefault(t, []).append((h, eid))
        adj.setdefault(h, []).append((t, eid))

    def walk(start, v, used_edges, used_verts):
        for w, eid in adj.get(v, ()):
            if eid in used_edges:
                continue
            if w == start and len(used_edges) >= 1:
                key = frozenset(used_edges | {eid})
                seen.add(key)
            elif w not in used_verts and len(used_edges) + 1 < max_len:
                walk(start, w, used_edges | {eid}, used_verts | {w})

    for s in range(g.n):
        walk(s, s, frozenset(), frozenset({s}))
    return len(seen)


class TestEnumerateCircuits:
    def test_k4(self):
        out = tg.enumerate_circuits(tg.complete_graph(4), 4)
        assert sum(1 for c in out if len(c) == 3) == 4
        assert sum(1 for c in out if len(c) == 4) == 3

    def test_matches_bruteforce_on_random_graphs(self):
        rng = random.Random(2)
        for _ in range(15):
            n = rng.randrange(2, 7)
            edges = []
            for u, v in itertools.combinations(range(n), 2):
                if rng.random() < 0.5:
                    edges.append((u, v))
                if rng.random() < 0.1:
                    edges.append((u, v))  # parallel edge
            g = tg.digraph("r", n, edges)
            assert len(tg.enumerate_circuits(g, 6)) == brute_circuit_count(g, 6)

    def test_tree_empty(self):
        assert tg.enumerate_circuits(tg.path_graph(6), 6) == []

    def test_c5(self):
        c5 = tg.cycle_graph(5)
        assert tg.enumerate_circuits(c5, 4) == []
        assert len(tg.enumerate_circuits(c5, 5)) == 1

    def test_digon_found(self):
        g = tg.digraph("digon", 2, [(0, 1), (1, 0)])
        out = tg.enumerate_circuits(g, 3)
        assert len(out) == 1 and len(out[0]) == 2


class TestConstructions:
    def test_subdivide_single_edge(self):
        g = tg.subdivide_balanced(tg.digraph("e", 2, [(0, 1)]), 3)
        assert g.n == 4 and g.m == 3
        # traversal 0 -> 1 passes the edges forward, backward, forward
        signs = []
        chain = [0, 2, 3, 1]
        for j in range(3):
            a, b = chain[j], chain[j + 1]
            signs.append(1 if (a, b) in g.edges else -1)
        assert signs == [1, -1, 1]

    def test_subdivide_imbalance(self):
        g = tg.subdivide_balanced(tg.oriented_circuit(3), 3)
        circuits = tg.enumerate_circuits(g, 9)
        assert len(circuits) == 1
        assert abs(circuits[0].imbalance) == 3

    def test_subdivide_rejects_even(self):
        with pytest.raises(GraphError):
            tg.subdivide_balanced(tg.oriented_circuit(3), 2)

    def test_subdivide_contracts_back(self):
        rng = random.Random(31)
        for _ in range(20):
            n = rng.randrange(2, 6)
            edges = []
            for _ in range(rng.randrange(1, 7)):
                t = rng.randrange(n)
                h = rng.randrange(n)
                if t != h:
                    edges.append((t, h))
            if not edges:
                continue
            h_graph = tg.digraph("h", n, edges)
            p = rng.choice([3, 5])
            s = tg.subdivide_balanced(h_graph, p)
            assert s.n == h_graph.n + h_graph.m * (p - 1)
            # contract each subdivision path back to one edge
            contracted = []
            for eid in range(h_graph.m):
                path = s.edges[eid * p : (eid + 1) * p]
                chain_start = path[0][0]
                last = path[-1]
                chain_end = last[1] if last[1] < h_graph.n else last[0]
                contracted.append((chain_start, chain_end))
            back = tg.digraph("back", h_graph.n, contracted)
            assert tg.isomorphic(back, h_graph) is not None

    def test_product_sizes(self):
        k2 = tg.digraph("k2", 2, [(0, 1)])
        assert tg.product(k2, k2).m == 1
        c3 = tg.oriented_circuit(3)
        p = tg.product(c3, c3)
        assert p.n == 9 and p.m == 9

    def test_product_projections_are_homs(self):
        a = tg.oriented_circuit(3)
        b = tg.digraph("p", 3, [(0, 1), (1, 2)])
        p = tg.product(a, b)
        onto_a = tg.VertexMap(p, a, tuple(v // b.n for v in range(p.n)))
        onto_b = tg.VertexMap(p, b, tuple(v % b.n for v in range(p.n)))
        from ttgraph.homs import validate_hom

        assert validate_hom(onto_a)
        assert validate_hom(onto_b)

    def test_circuit_union(self):
        g = tg.circuit_union([3, 3])
        assert g.n == 6 and g.m == 6 and len(g.components) == 2
        assert tg.circuit_union([9]).m == 9
        with pytest.raises(GraphError):
            tg.circuit_union([1])


class TestIsomorphic:
    def test_c5_relabeled(self):
        c5 = tg.cycle_graph(5)
        perm = [2, 4, 1, 3, 0]
        relabeled = tg.undirected("r", 5, [(perm[a], perm[b]) for a, b in c5.edges])
        assert tg.isomorphic(c5, relabeled) is not None

    def test_c5_vs_p5(self):
        assert tg.isomorphic(tg.cycle_graph(5), tg.path_graph(5)) is None

    def test_multiplicity_respected(self):
        a = tg.digraph("a", 2, [(0, 1), (0, 1)])
        b = tg.digraph("b", 2, [(0, 1), (1, 0)])
        assert tg.isomorphic(a, b) is None

    def test_witness_is_correct(self):
        pet = tg.named_graph("petersen")
        perm = list(range(10))
        random.Random(4).shuffle(perm)
        shuffled = tg.undirected(
            "s", 10, [(perm[a], perm[b]) for a, b in pet.edges]
        )
        w = tg.isomorphic(pet, shuffled)
        assert w is not None
        for a, b in pet.edges:
            assert (min(w[a], w[b]), max(w[a], w[b])) in shuffled.adjacency_pairs

    def test_delta_c5_components_mutually_isomorphic(self):
        d = tg.delta(tg.cycle_graph(5))
        comps = d.components
        assert len(comps) == 2

        def induced(g, verts):
            vmap = {v: i for i, v in enumerate(verts)}
            edges = [
                (vmap[t], vmap[h]) for t, h in g.edges if t in vmap and h in vmap
            ]
            return tg.undirected("comp", len(verts), edges)

        a, b = (induced(d, c) for c in comps)
        assert tg.isomorphic(a, b) is not None

    def test_size_cap(self):
        with pytest.raises(GraphError):
            tg.isomorphic(tg.hypercube_graph(7), tg.hypercube_graph(7))
