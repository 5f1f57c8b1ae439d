"""Subset graphs, halved cubes, the TT chromatic number, the vertex-gadget
functor, rigid-base search, and integer-cone machinery.

The subset graph of H connects A and B exactly when their symmetric
difference is an edge pair of H; homomorphisms into it decide TT_2
existence into H.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from . import homs, ttmaps
from .graphs import Digraph, GraphError, undirected
from .groups import Cyclic


def delta(h: Digraph, cap: int = 16) -> Digraph:
    """Graph on all vertex subsets of h (bitmask-encoded): A ~ B iff the
    symmetric difference A xor B is the endpoint pair of an edge."""
    if h.directed:
        raise GraphError("subset graph is defined for undirected graphs")
    if h.n > cap:
        raise GraphError(f"subset graph capped at {cap} base vertices")
    masks = sorted({(1 << t) | (1 << hd) for t, hd in h.edges})
    edges = []
    for a in range(1 << h.n):
        for m in masks:
            b = a ^ m
            if a < b:
                edges.append((a, b))
    return undirected(f"delta({h.name})", 1 << h.n, edges)


def halved_cube_component(n: int, cap: int = 16) -> Digraph:
    """Even-weight component of the subset graph of the n-clique: vertices
    are even-popcount bitmasks, adjacent at Hamming distance two."""
    if n > cap:
        raise GraphError(f"capped at {cap}")
    evens = [x for x in range(1 << n) if bin(x).count("1") % 2 == 0]
    index = {x: i for i, x in enumerate(evens)}
    pair_masks = [(1 << i) | (1 << j) for i, j in itertools.combinations(range(n), 2)]
    edges = []
    for x in evens:
        for m in pair_masks:
            y = x ^ m
            if x < y:
                edges.append((index[x], index[y]))
    return undirected(f"halfcube({n})", len(evens), edges)


def chi_tt(g: Digraph, nmax: int = 12, budget: Optional[int] = None) -> Optional[int]:
    """Least n <= nmax admitting a TT_2 map onto the n-clique, decided by
    homomorphism search into subset graphs of cliques;  None when none
    found within nmax."""
    from .graphs import complete_graph

    gg = g
    if g.directed:
        gg = Digraph(g.n and g.name or g.name, g.n, tuple(
            (min(t, hd), max(t, hd)) for t, hd in g.edges), directed=False)
    if gg.m == 0:
        return 1 if gg.n else 1
    for n in range(2, nmax + 1):
        target = delta(complete_graph(n))
        if homs.find_hom(gg, target, budget=budget) is not None:
            return n
    return None


# ---------------------------------------------------------------------------
# integer cones and circuit-union TT sets


def integer_cone_member(a: int, base: Sequence[int], n: Optional[int]) -> bool:
    """Is a a nonnegative integer combination of the base values (plus n,
    when given)?  Coin-problem dynamic program."""
    if a < 0:
        raise ValueError("cone membership needs a >= 0")
    gens = sorted({b for b in base if b > 0})
    if n is not None and n > 0:
        gens = sorted(set(gens) | {n})
    reachable = [False] * (a + 1)
    reachable[0] = True
    for total in range(1, a + 1):
        for s in gens:
            if s > total:
                break
            if reachable[total - s]:
                reachable[total] = True
                break
    return reachable[a]


def tt_set_circuit_union(
    a_lengths: Sequence[int], b_lengths: Sequence[int], nmax: int
) -> list[int]:
    """TT set between disjoint unions of consistently oriented circuits,
    truncated at nmax: n qualifies iff every source length lies in the
    integer cone of the target lengths together with n."""
    if not a_lengths or not b_lengths:
        raise ValueError("need nonempty circuit length multisets")
    return [
        n
        for n in range(1, nmax + 1)
        if all(integer_cone_member(a, b_lengths, n) for a in a_lengths)
    ]


# ---------------------------------------------------------------------------
# rigid bases and the vertex-gadget functor


@dataclass(frozen=True)
class RigidBase:
    """Triangle-free TT_2-rigid graph with four marked vertices p,q,r,s."""

    graph: Digraph
    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        marks = (self.p, self.q, self.r, self.s)
        if len(set(marks)) != 4:
            raise GraphError("marks must be four distinct vertices")
        for v in marks:
            if not 0 <= v < self.graph.n:
                raise GraphError(f"mark {v} is not a vertex")

    @property
    def marks(self) -> tuple[int, int, int, int]:
        return (self.p, self.q, self.r, self.s)

    def validate(self, budget: Optional[int] = None) -> None:
        if has_triangle(self.graph):
            raise GraphError("rigid base must be triangle-free")
        if not ttmaps.is_tt_rigid(self.graph, Cyclic(2), budget=budget):
            raise GraphError("base graph has a non-identity TT_2 self-map")

    def to_text(self) -> str:
        return self.graph.to_edge_list_text() + f"marks {self.p} {self.q} {self.r} {self.s}\n"


def parse_rigid_base(text: str) -> RigidBase:
    from .graphs import parse_graph

    lines = text.strip().splitlines()
    marks_line = None
    body = []
    for ln in lines:
        if ln.strip().startswith("marks"):
            marks_line = ln.strip()
        else:
            body.append(ln)
    if marks_line is None:
        raise GraphError("rigid base file needs a `marks p q r s` line")
    parts = marks_line.split()
    if len(parts) != 5:
        raise GraphError("want `marks p q r s`")
    p, q, r, s = (int(x) for x in parts[1:])
    return RigidBase(parse_graph("\n".join(body), "rigid-base"), p, q, r, s)


def has_triangle(g: Digraph) -> bool:
    masks = [0] * g.n
    for t, hd in g.edges:
        masks[t] |= 1 << hd
        masks[hd] |= 1 << t
    return any(masks[t] & masks[hd] for t, hd in g.edges)


def _induced_p4(g: Digraph) -> Optional[tuple[int, int, int, int]]:
    """First induced 4-vertex path p-q-r-s in vertex order, if any."""
    masks = [0] * g.n
    for t, hd in g.edges:
        masks[t] |= 1 << hd
        masks[hd] |= 1 << t

    def adj(a: int, b: int) -> bool:
        return bool(masks[a] >> b & 1)

    for q in range(g.n):
        for r in range(g.n):
            if q == r or not adj(q, r):
                continue
            for p in range(g.n):
                if p in (q, r) or not adj(p, q) or adj(p, r):
                    continue
                for s in range(g.n):
                    if s in (p, q, r) or not adj(r, s) or adj(q, s) or adj(p, s):
                        continue
                    return (p, q, r, s)
    return None


@dataclass(frozen=True)
class RigidSearchOutcome:
    status: str  # "found" | "exhausted" | "not-found"
    base: Optional[RigidBase]
    examined: int


def _all_graphs_upto_iso(n: int) -> list[Digraph]:
    """All undirected simple graphs on <= n vertices, one per isomorphism
    class.  Brute force; fine up to n = 6."""
    from .graphs import isomorphic

    out: list[Digraph] = []
    for k in range(1, n + 1):
        pairs = list(itertools.combinations(range(k), 2))
        reps: list[Digraph] = []
        for bits in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
            g = undirected(f"g{k}_{bits}", k, edges)
            if any(
                cand.m == g.m and isomorphic(cand, g) is not None for cand in reps
            ):
                continue
            reps.append(g)
        out.extend(reps)
    return out


def rigid_search(
    max_vertices: int,
    seed: int = 0,
    samples: int = 2000,
    per_graph_budget: int = 2_000_000,
    exhaustive_upto: int = 5,
) -> RigidSearchOutcome:
    """Look for a triangle-free TT_2-rigid graph with an induced 4-path.

    Sizes up to `exhaustive_upto` are checked exhaustively (one graph per
    isomorphism class); larger sizes are sampled from seeded sparse random
    graphs with triangles torn out.  Deterministic per seed.
    """
    if max_vertices > 12:
        raise GraphError("rigid search capped at 12 vertices")
    examined = 0
    for g in _all_graphs_upto_iso(min(max_vertices, exhaustive_upto)):
        examined += 1
        base = _try_rigid_candidate(g, per_graph_budget)
        if base is not None:
            return RigidSearchOutcome("found", base, examined)
    if max_vertices <= exhaustive_upto:
        return RigidSearchOutcome("exhausted", None, examined)
    rng = random.Random(seed)
    for trial in range(samples):
        n = exhaustive_upto + 1 + rng.randrange(max_vertices - exhaustive_upto)
        avg_degree = 2.0 + rng.random() * 1.5
        p = min(0.9, avg_degree / max(1, n - 1))
        edges = [
            (u, v)
            for u, v in itertools.combinations(range(n), 2)
            if rng.random() < p
        ]
        g = undirected(f"sample{trial}", n, edges)
        g = _tear_triangles(g, rng)
        examined += 1
        base = _try_rigid_candidate(g, per_graph_budget)
        if base is not None:
            return RigidSearchOutcome("found", base, examined)
    return RigidSearchOutcome("not-found", None, examined)


def _tear_triangles(g: Digraph, rng: random.Random) -> Digraph:
    edges = list(g.edges)
    while True:
        masks = [0] * g.n
        for t, hd in edges:
            masks[t] |= 1 << hd
            masks[hd] |= 1 << t
        tri = None
        for i, (t, hd) in enumerate(edges):
            if masks[t] & masks[hd]:
                tri = i
                break
        if tri is None:
            break
        edges.pop(rng.randrange(len(edges)) if rng.random() < 0.3 else tri)
    return undirected(g.name, g.n, edges)


def _try_rigid_candidate(g: Digraph, budget: int) -> Optional[RigidBase]:
    if g.n < 4 or has_triangle(g):
        return None
    if len(g.components) != 1:
        return None
    marks = _induced_p4(g)
    if marks is None:
        return None
    try:
        if not ttmaps.is_tt_rigid(g, Cyclic(2), budget=budget):
            return None
    except homs.SearchBudgetExceeded:
        return None
    return RigidBase(g, *marks)


# ---------------------------------------------------------------------------
# the functor: one base copy per vertex, add-on gadgets per edge


@dataclass(frozen=True)
class FunctorImage:
    graph: Digraph
    base: RigidBase
    original: Digraph
    copy_vertex: dict[tuple[int, int], int]  # (orig vertex, base vertex) -> vertex
    path_vertex: dict[tuple[int, int], int]  # (orig edge id, 1|2) -> vertex
    copy_edges: dict[tuple[int, int], int]  # (orig vertex, base edge id) -> edge id
    addon_edges: dict[tuple[int, int], int]  # (orig edge id, slot 0..5) -> edge id


def functor_image(g: Digraph, base: RigidBase) -> FunctorImage:
    """Vertex-gadget expansion: a base copy per vertex; for each edge uv two
    add-on edges (u,p)(v,q), (u,q)(v,p) and two add-on 2-paths through fresh
    middle vertices (u,r)-(uv,1)-(v,s) and (u,s)-(uv,2)-(v,r)."""
    if g.directed:
        raise GraphError("functor is defined on undirected graphs")
    s_graph = base.graph
    nv = {}
    counter = 0
    for v in range(g.n):
        for w in range(s_graph.n):
            nv[(v, w)] = counter
            counter += 1
    pv = {}
    for eid in range(g.m):
        for slot in (1, 2):
            pv[(eid, slot)] = counter
            counter += 1
    edges: list[tuple[int, int]] = []
    copy_edges = {}
    for v in range(g.n):
        for seid, (a, b) in enumerate(s_graph.edges):
            copy_edges[(v, seid)] = len(edges)
            edges.append((nv[(v, a)], nv[(v, b)]))
    addon_edges = {}
    p, q, r, s = base.marks
    for eid, (u, v) in enumerate(g.edges):
        slots = [
            (nv[(u, p)], nv[(v, q)]),
            (nv[(u, q)], nv[(v, p)]),
            (nv[(u, r)], pv[(eid, 1)]),
            (pv[(eid, 1)], nv[(v, s)]),
            (nv[(u, s)], pv[(eid, 2)]),
            (pv[(eid, 2)], nv[(v, r)]),
        ]
        for slot, pair in enumerate(slots):
            addon_edges[(eid, slot)] = len(edges)
            edges.append(pair)
    graph = undirected(f"F({g.name})", counter, edges)
    return FunctorImage(graph, base, g, nv, pv, copy_edges, addon_edges)


def functor_map(f: homs.VertexMap, fg: FunctorImage, fh: FunctorImage):
    """The canonical edge map F(f): base copies map identically onto the
    image copies, add-ons onto add-ons."""
    from .ttmaps import EdgeMap

    g, h = f.source, f.target
    if fg.original != g or fh.original != h:
        raise GraphError("functor images do not match the map endpoints")
    h_lut = {}
    for eid, (t, hd) in enumerate(h.edges):
        h_lut[(t, hd)] = eid
        h_lut[(hd, t)] = eid
    assign = [0] * fg.graph.m
    for (v, seid), feid in fg.copy_edges.items():
        assign[feid] = fh.copy_edges[(f.assignment[v], seid)]
    for (eid, slot), feid in fg.addon_edges.items():
        u, v = g.edges[eid]
        hu, hv = f.assignment[u], f.assignment[v]
        heid = h_lut.get((hu, hv))
        if heid is None:
            raise GraphError("vertex map is not a homomorphism")
        if h.edges[heid] == (hu, hv):
            assign[feid] = fh.addon_edges[(heid, slot)]
        else:
            # image edge is stored reversed: swap the roles of the two ends
            flipped = {0: 1, 1: 0, 2: 5, 3: 4, 4: 3, 5: 2}[slot]
            assign[feid] = fh.addon_edges[(heid, flipped)]
    return EdgeMap(fg.graph, fh.graph, tuple(assign))
