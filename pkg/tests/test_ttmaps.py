import itertools
import math
import random

import pytest

import ttgraph as tg
from ttgraph.graphs import GraphError
from ttgraph.groups import Cyclic
from ttgraph.homs import SearchBudgetExceeded
from ttgraph.tensions import edge_function
from ttgraph.ttmaps import is_elementary_cut_tension, parse_edge_map


def k4_to_k3_factorization():
    """The three perfect matchings of K4 collapsed onto the edges of K3."""
    k4, k3 = tg.complete_graph(4), tg.complete_graph(3)
    # K4 edges: 01,02,03,12,13,23 -> matchings {01,23},{02,13},{03,12}
    return tg.EdgeMap(k4, k3, (0, 1, 2, 2, 1, 0))


def rand_digraph(rng, max_n=6, max_m=8):
    n = rng.randrange(2, max_n + 1)
    edges = []
    for _ in range(rng.randrange(1, max_m + 1)):
        t, h = rng.randrange(n), rng.randrange(n)
        if t != h:
            edges.append((t, h))
    if not edges:
        edges = [(0, 1)]
    return tg.digraph("r", n, edges)


def rand_map(rng, g, h):
    return tg.EdgeMap(g, h, tuple(rng.randrange(h.m) for _ in range(g.m)))


class TestAlgebraicImage:
    def test_identity(self):
        g = tg.complete_graph(4)
        f = tg.EdgeMap(g, g, tuple(range(g.m)))
        phi = edge_function(g, [2, -1, 0, 3, 5, -2])
        assert tg.algebraic_image(f, phi).values == phi.values

    def test_constant_map_sums(self):
        c9 = tg.oriented_circuit(9)
        k2 = tg.digraph("k2", 2, [(0, 1)])
        f = tg.EdgeMap(c9, k2, (0,) * 9)
        phi = edge_function(c9, [1] * 9)
        assert tg.algebraic_image(f, phi).values == (9,)

    def test_cancellation(self):
        g = tg.digraph("par", 2, [(0, 1), (0, 1)])
        k2 = tg.digraph("k2", 2, [(0, 1)])
        f = tg.EdgeMap(g, k2, (0, 0))
        phi = edge_function(g, [1, -1])
        assert tg.algebraic_image(f, phi).values == (0,)


class TestIsTT:
    def test_factorization_is_tt2(self):
        assert tg.is_tt(k4_to_k3_factorization(), "Z_2")

    def test_hom_induced_always_tt(self):
        rng = random.Random(1)
        for _ in range(20):
            g, h = rand_digraph(rng), rand_digraph(rng)
            try:
                hom = tg.find_hom(g, h, budget=50_000)
            except SearchBudgetExceeded:
                continue
            if hom is None:
                continue
            f = tg.induced_map(hom)
            for grp in ("Z_2", "Z_3", "Z"):
                assert tg.is_tt(f, grp)

    def test_constant_circuit_map(self):
        c9 = tg.oriented_circuit(9)
        k2 = tg.digraph("k2", 2, [(0, 1)])
        f = tg.EdgeMap(c9, k2, (0,) * 9)
        assert not tg.is_tt(f, "Z_2")
        assert tg.is_tt(f, "Z_3")
        assert tg.is_tt(f, "Z_9")

    def test_undirected_rejected_for_z3(self):
        f = k4_to_k3_factorization()
        with pytest.raises(GraphError):
            tg.is_tt(f, "Z_3")

    def test_trivial_group_accepts_everything(self):
        rng = random.Random(2)
        for _ in range(10):
            g, h = rand_digraph(rng), rand_digraph(rng)
            assert tg.is_tt(rand_map(rng, g, h), tg.TRIVIAL)


class TestDivisorSet:
    def test_c9_constant(self):
        c9 = tg.oriented_circuit(9)
        k2 = tg.digraph("k2", 2, [(0, 1)])
        ds = tg.tt_divisor_set(tg.EdgeMap(c9, k2, (0,) * 9))
        assert ds.kind == "finite" and ds.members() == [1, 3, 9]

    def test_hom_induced_gives_all(self):
        g = tg.oriented_circuit(4)
        f = tg.EdgeMap(g, g, (1, 2, 3, 0))  # rotation
        assert tg.tt_divisor_set(f).kind == "all"

    def test_c5_permutations_all(self):
        c5 = tg.oriented_circuit(5)
        for perm in itertools.permutations(range(5)):
            assert tg.tt_divisor_set(tg.EdgeMap(c5, c5, perm)).kind == "all"

    def test_matches_bruteforce_fuzz(self):
        rng = random.Random(3)
        for _ in range(100):
            g, h = rand_digraph(rng), rand_digraph(rng)
            f = rand_map(rng, g, h)
            ds = tg.tt_divisor_set(f)
            brute = [
                n
                for n in range(1, 31)
                if tg.is_tt(f, Cyclic(n))
            ]
            assert ds.upto(30) == brute

    def test_closure_properties(self):
        rng = random.Random(4)
        for _ in range(50):
            g, h = rand_digraph(rng), rand_digraph(rng)
            ds = tg.tt_divisor_set(rand_map(rng, g, h))
            members = ds.upto(60)
            for a in members:
                for b in members:
                    if math.gcd(a, b) >= 1:
                        assert ds.contains(math.gcd(a, b))
                    if math.lcm(a, b) <= 60:
                        assert ds.contains(math.lcm(a, b))

    def test_divisor_set_io(self):
        assert tg.DivisorSet.finite(12).upto(6) == [1, 2, 3, 4, 6]
        assert tg.DivisorSet.all_n().contains(10**9)
        assert not tg.DivisorSet.empty().contains(1)


class TestFindTT:
    def test_k4_to_k3_found(self):
        res = tg.find_tt(tg.complete_graph(4), tg.complete_graph(3), "Z_2")
        assert res.status == "found"
        assert tg.is_tt(res.witness, "Z_2")

    def test_k5_to_k4_proven_none(self):
        res = tg.find_tt(tg.complete_graph(5), tg.complete_graph(4), "Z_2")
        assert res.status == "none"

    def test_empty_target(self):
        g = tg.oriented_circuit(3)
        h = tg.digraph("empty", 3, [])
        assert tg.find_tt(g, h, "Z_2").status == "none"

    def test_budget_reported(self):
        res = tg.find_tt(
            tg.complete_graph(6), tg.complete_graph(5), "Z_2", budget=10
        )
        assert res.status == "budget"

    def test_deterministic(self):
        a = tg.find_tt(tg.complete_graph(4), tg.complete_graph(3), "Z_2")
        b = tg.find_tt(tg.complete_graph(4), tg.complete_graph(3), "Z_2")
        assert a.witness.assignment == b.witness.assignment

    def test_composition_stays_tt(self):
        rng = random.Random(5)
        done = 0
        while done < 10:
            g, h, k = rand_digraph(rng), rand_digraph(rng), rand_digraph(rng)
            f1 = tg.find_tt(g, h, "Z_3", budget=100_000)
            f2 = tg.find_tt(h, k, "Z_3", budget=100_000)
            if f1.status != "found" or f2.status != "found":
                continue
            done += 1
            assert tg.is_tt(f2.witness.compose(f1.witness), "Z_3")

    def test_restriction_to_image_stays_tt(self):
        rng = random.Random(6)
        done = 0
        while done < 10:
            g, h = rand_digraph(rng), rand_digraph(rng)
            res = tg.find_tt(g, h, "Z_2", budget=100_000)
            if res.status != "found":
                continue
            done += 1
            f = res.witness
            used = sorted(set(f.assignment))
            remap = {old: new for new, old in enumerate(used)}
            verts = sorted(
                {v for e in used for v in h.edges[e]}
            )
            vmap = {old: new for new, old in enumerate(verts)}
            sub = tg.digraph(
                "sub", len(verts), [(vmap[h.edges[e][0]], vmap[h.edges[e][1]]) for e in used]
            )
            cof = tg.EdgeMap(g, sub, tuple(remap[e] for e in f.assignment))
            assert tg.is_tt(cof, "Z_2")


class TestEnumerationAndCounting:
    def test_count_is_enumeration_length(self):
        g = tg.oriented_circuit(3)
        maps, complete = tg.enumerate_tt_maps(g, g, "Z_3")
        assert complete
        assert tg.count_tt_maps(g, g, "Z_3") == len(maps)

    def test_counts_match_bruteforce(self):
        rng = random.Random(7)
        for _ in range(15):
            g, h = rand_digraph(rng, 5, 5), rand_digraph(rng, 5, 5)
            brute = 0
            for assign in itertools.product(range(h.m), repeat=g.m):
                if tg.is_tt(tg.EdgeMap(g, h, assign), Cyclic(4)):
                    brute += 1
            assert tg.count_tt_maps(g, h, Cyclic(4)) == brute

    def test_number_of_maps_depends_on_exponent_only(self):
        rng = random.Random(8)
        for _ in range(10):
            g, h = rand_digraph(rng, 5, 6), rand_digraph(rng, 5, 6)
            assert tg.count_tt_maps(g, h, "Z_6") == tg.count_tt_maps(
                g, h, "Z_2xZ_3"
            )


class TestCutTTZ:
    def test_identity_is_cut_tt(self):
        g = tg.oriented_circuit(5)
        f = tg.EdgeMap(g, g, tuple(range(5)))
        assert tg.is_cut_tt_Z(f)

    def test_hom_induced_is_cut_tt(self):
        rng = random.Random(9)
        done = 0
        while done < 15:
            g, h = rand_digraph(rng), rand_digraph(rng)
            try:
                hom = tg.find_hom(g, h, budget=50_000)
            except SearchBudgetExceeded:
                continue
            if hom is None:
                continue
            done += 1
            assert tg.is_cut_tt_Z(tg.induced_map(hom))

    def test_factorization_not_cut_tt(self):
        assert not tg.is_cut_tt_Z(k4_to_k3_factorization())

    def test_elementary_detector(self):
        g = tg.complete_graph(4)
        elem = tg.elementary_tension(g, [0, 2], 3)
        assert is_elementary_cut_tension(g, elem.values)
        assert not is_elementary_cut_tension(g, [1, 0, 0, 0, 0, 2])

    def test_cut_tt_implies_vertex_induced_fuzz(self):
        rng = random.Random(10)
        positives = 0
        for _ in range(300):
            g, h = rand_digraph(rng), rand_digraph(rng)
            f = rand_map(rng, g, h)
            if tg.is_cut_tt_Z(f):
                positives += 1
                assert tg.is_hom_induced(f) is not None
        assert positives > 0


class TestCayleyLift:
    def test_k2_lift(self):
        k2 = tg.digraph("k2", 2, [(0, 1)])
        lift = tg.cayley_lift(k2, 2)
        assert lift.graph.n == 2 and lift.graph.m == 1

    def test_c5_lift_is_clebsch(self):
        lift = tg.cayley_lift(tg.cycle_graph(5), 2)
        assert lift.graph.n == 16
        assert all(lift.graph.degree(v) == 5 for v in range(16))
        assert tg.isomorphic(lift.graph, tg.named_graph("clebsch")) is not None

    def test_lift_agrees_with_find_tt(self):
        rng = random.Random(11)
        checked = 0
        while checked < 25:
            g, h = rand_digraph(rng, 5, 6), rand_digraph(rng, 5, 6)
            n = rng.choice([2, 3, 4])
            k = h.n - len(h.components)
            if n**k > 4096:
                continue
            checked += 1
            ok, witness = tg.tt_exists_via_hom(g, h, n)
            direct = tg.find_tt(g, h, Cyclic(n))
            assert ok == (direct.status == "found")
            if ok:
                assert tg.is_tt(witness, Cyclic(n))

    def test_c9_c7_lift_matches_direct_and_cone(self):
        c9, c7 = tg.oriented_circuit(9), tg.oriented_circuit(7)
        for n, expect in ((2, True), (3, True)):
            ok, _ = tg.tt_exists_via_hom(c9, c7, n, max_vertices=10**6)
            assert ok == expect
            assert tg.integer_cone_member(9, [7], n) == expect


class TestCompare:
    def test_equivalent_pairs(self):
        c5 = tg.cycle_graph(5)
        res = tg.compare(tg.named_graph("petersen"), c5, "Z_2")
        assert res.relation == "equivalent" and res.proof_status == "exhaustive"

    def test_strictly_below(self):
        res = tg.compare(tg.complete_graph(5), tg.complete_graph(4), "Z_2")
        assert res.relation == "H-below"

    def test_k1_pair(self):
        k1 = tg.undirected("K1", 1, [])
        res = tg.compare(k1, k1, "Z_2")
        assert res.relation == "equivalent"

    def test_incomparable(self):
        # disjoint triangles vs single long odd circuit over Z: imbalance blocks both ways
        g = tg.oriented_circuit(3)
        h = tg.oriented_circuit(5)
        res = tg.compare(g, h, "Z")
        assert res.relation == "incomparable"


class TestRigidity:
    def test_k2_rigid(self):
        k2 = tg.undirected("k2", 2, [(0, 1)])
        assert tg.is_tt_rigid(k2, "Z_2")

    def test_c5_not_rigid(self):
        assert not tg.is_tt_rigid(tg.cycle_graph(5), "Z_2")

    def test_degree_two_vertex_never_rigid(self):
        # swapping the two edges at a degree-2 vertex fixes every cycle
        g = tg.undirected("theta", 8, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 2)])
        assert not tg.is_tt_rigid(g, "Z_2")

    def test_budget_raises(self):
        with pytest.raises(SearchBudgetExceeded):
            tg.is_tt_rigid(tg.named_graph("petersen"), "Z_2", budget=3)


class TestGInvariant:
    def test_bipartite_z2_infinite(self):
        rng = random.Random(12)
        for _ in range(10):
            n = rng.randrange(2, 7)
            left = rng.randrange(1, n)
            edges = [
                (u, v)
                for u in range(left)
                for v in range(left, n)
                if rng.random() < 0.6
            ]
            g = tg.undirected("bip", n, edges)
            assert tg.g_invariant(g, "Z_2") == math.inf

    def test_k4(self):
        assert tg.g_invariant(tg.complete_graph(4), "Z_2") == 3

    def test_oriented_c4(self):
        assert tg.g_invariant(tg.oriented_circuit(4), "Z") == 4
        alt = tg.digraph("alt", 4, [(0, 1), (2, 1), (2, 3), (0, 3)])
        assert tg.g_invariant(alt, "Z") == math.inf

    def test_petersen_oddgirth(self):
        assert tg.g_invariant(tg.named_graph("petersen"), "Z_2") == 5

    def test_z2_is_odd_girth(self):
        rng = random.Random(13)
        for _ in range(20):
            n = rng.randrange(3, 8)
            edges = [
                (u, v)
                for u, v in itertools.combinations(range(n), 2)
                if rng.random() < 0.5
            ]
            g = tg.undirected("r", n, edges)
            odd = [
                len(c) for c in tg.enumerate_circuits(g, n) if len(c) % 2 == 1
            ]
            expect = min(odd) if odd else math.inf
            assert tg.g_invariant(g, "Z_2") == expect

    def test_monotone_under_tt_maps(self):
        rng = random.Random(14)
        done = 0
        while done < 15:
            g, h = rand_digraph(rng), rand_digraph(rng)
            grp = rng.choice(["Z_2", "Z_3", "Z"])
            res = tg.find_tt(g, h, grp, budget=200_000)
            if res.status != "found":
                continue
            done += 1
            assert tg.g_invariant(g, grp) >= tg.g_invariant(h, grp)

    def test_trivial_group(self):
        assert tg.g_invariant(tg.oriented_circuit(3), tg.TRIVIAL) == math.inf


class TestTTSet:
    def test_circuit_union_fast_path(self):
        ts = tg.tt_set(tg.oriented_circuit(9), tg.oriented_circuit(7), nmax=10)
        assert ts.status == "exhaustive"
        assert ts.members == (1, 2, 3, 9)
        assert not ts.all_n

    def test_identity_all(self):
        c4 = tg.oriented_circuit(4)
        ts = tg.tt_set(c4, c4, nmax=8)
        assert ts.all_n and ts.members == tuple(range(1, 9))

    def test_exhaustive_small(self):
        g = tg.digraph("p2", 3, [(0, 1), (1, 2)])
        h = tg.oriented_circuit(3)
        ts = tg.tt_set(g, h, nmax=6)
        assert ts.status == "exhaustive"
        assert ts.members == tuple(range(1, 7))  # trees map anywhere

    def test_empty_target(self):
        ts = tg.tt_set(tg.oriented_circuit(3), tg.digraph("e", 2, []), nmax=5)
        assert ts.members == () and ts.status == "exhaustive"


class TestEdgeMapIO:
    def test_parse_roundtrip(self):
        f = k4_to_k3_factorization()
        again = parse_edge_map(f.source, f.target, f.to_text())
        assert again.assignment == f.assignment

    def test_missing_edge_rejected(self):
        k4, k3 = tg.complete_graph(4), tg.complete_graph(3)
        with pytest.raises(GraphError):
            parse_edge_map(k4, k3, "0 -> 0\n")
