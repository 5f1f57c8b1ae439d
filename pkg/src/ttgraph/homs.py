"""Vertex homomorphisms, induced edge maps, and clique-richness predicates.

The hom search is plain backtracking with forward checking over bitmask
domains, static variable order (max degree first, then id), ascending
value order.  Everything here is deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .graphs import Digraph, GraphError, spanning_forest


@dataclass(frozen=True)
class VertexMap:
    source: Digraph
    target: Digraph
    assignment: tuple[int, ...]
    polarity: str = "hom"  # "hom" | "antihom" | "mixed"

    def __post_init__(self):
        if len(self.assignment) != self.source.n:
            raise GraphError("vertex map must assign every vertex")
        for v, img in enumerate(self.assignment):
            if not 0 <= img < self.target.n:
                raise GraphError(f"vertex {v} maps to missing vertex {img}")

    def __call__(self, v: int) -> int:
        return self.assignment[v]

    def is_injective(self) -> bool:
        return len(set(self.assignment)) == len(self.assignment)

    def to_text(self) -> str:
        lines = [f"polarity: {self.polarity}"]
        lines += [f"{v} -> {img}" for v, img in enumerate(self.assignment)]
        return "\n".join(lines) + "\n"


def validate_hom(f: VertexMap) -> bool:
    g, h = f.source, f.target
    pairs = h.adjacency_pairs
    for t, hd in g.edges:
        a, b = f.assignment[t], f.assignment[hd]
        if f.polarity == "antihom":
            a, b = b, a
        key = (a, b) if h.directed else (min(a, b), max(a, b))
        if key not in pairs:
            return False
    return True


class SearchBudgetExceeded(RuntimeError):
    def __init__(self, nodes: int):
        self.nodes = nodes
        super().__init__(f"search budget exceeded after {nodes} nodes")


def _adjacency_masks(h: Digraph) -> tuple[list[int], list[int]]:
    """out/in neighbor masks; symmetric for undirected graphs."""
    out = [0] * h.n
    inn = [0] * h.n
    for t, hd in h.edges:
        out[t] |= 1 << hd
        inn[hd] |= 1 << t
        if not h.directed:
            out[hd] |= 1 << t
            inn[t] |= 1 << hd
    if not h.directed:
        inn = out
    return out, inn


def _hom_search(
    g: Digraph, h: Digraph, budget: Optional[int], want_all: bool
) -> Iterator[tuple[int, ...]]:
    if g.directed != h.directed:
        raise GraphError("homomorphism needs both graphs directed or both undirected")
    if g.n == 0:
        yield ()
        return
    if h.n == 0:
        return
    out_mask, in_mask = _adjacency_masks(h)
    full = (1 << h.n) - 1
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    # per search vertex: constraints against earlier-placed neighbors
    forward: list[list[tuple[int, bool]]] = [[] for _ in range(g.n)]
    for t, hd in g.edges:
        if pos[t] < pos[hd]:
            forward[pos[hd]].append((pos[t], True))  # earlier vertex is the tail
        else:
            forward[pos[t]].append((pos[hd], False))
    assigned = [0] * g.n
    nodes = 0

    def domains_at(i: int) -> int:
        dom = full
        for j, earlier_is_tail in forward[i]:
            x = assigned[j]
            dom &= out_mask[x] if earlier_is_tail else in_mask[x]
        return dom

    stack: list[Iterator[int]] = []

    def bits(mask: int) -> Iterator[int]:
        while mask:
            b = mask & -mask
            yield b.bit_length() - 1
            mask ^= b

    depth = 0
    stack.append(bits(domains_at(0)))
    while stack:
        it = stack[-1]
        val = next(it, None)
        if val is None:
            stack.pop()
            depth -= 1
            continue
        nodes += 1
        if budget is not None and nodes > budget:
            raise SearchBudgetExceeded(nodes)
        assigned[depth] = val
        if depth + 1 == g.n:
            yield tuple(assigned[pos[v]] for v in range(g.n))
            if not want_all:
                return
        else:
            depth += 1
            stack.append(bits(domains_at(depth)))


def find_hom(g: Digraph, h: Digraph, budget: Optional[int] = None) -> Optional[VertexMap]:
    """First homomorphism in deterministic order, or None after exhausting
    the space.  Raises SearchBudgetExceeded when the node budget runs out."""
    for assignment in _hom_search(g, h, budget, want_all=False):
        return VertexMap(g, h, assignment, "hom")
    return None


def find_all_homs(
    g: Digraph, h: Digraph, budget: Optional[int] = None, limit: Optional[int] = None
) -> list[VertexMap]:
    out = []
    for assignment in _hom_search(g, h, budget, want_all=True):
        out.append(VertexMap(g, h, assignment, "hom"))
        if limit is not None and len(out) >= limit:
            break
    return out


# ---------------------------------------------------------------------------
# induced edge maps


def _edge_lookup(h: Digraph) -> dict[tuple[int, int], int]:
    """(tail, head) -> smallest edge id; undirected graphs get both orders."""
    lut: dict[tuple[int, int], int] = {}
    for eid, (t, hd) in enumerate(h.edges):
        lut.setdefault((t, hd), eid)
        if not h.directed:
            lut.setdefault((hd, t), eid)
    return lut


def induced_map(f: VertexMap):
    """Edge-wise application of a vertex map; ties between parallel target
    edges break to the smallest edge id."""
    from .ttmaps import EdgeMap

    g, h = f.source, f.target
    lut = _edge_lookup(h)
    assign = []
    for t, hd in g.edges:
        a, b = f.assignment[t], f.assignment[hd]
        if f.polarity == "antihom":
            a, b = b, a
        eid = lut.get((a, b))
        if eid is None:
            raise GraphError(f"vertex map is not a {f.polarity}: edge ({t},{hd}) breaks")
        assign.append(eid)
    return EdgeMap(g, h, tuple(assign))


def _component_seeds(f, comp: tuple[int, ...]) -> list[tuple[str, int, int]]:
    """Possible (mode, seed vertex, seed image) for one component of the source."""
    g, h = f.source, f.target
    comp_edges = sorted(
        {e for v in comp for e in g.incident_edges[v]}
    )
    if not comp_edges:
        # no constraints: park the component anywhere
        return [("hom", comp[0], 0)] if h.n else []
    e0 = comp_edges[0]
    t, hd = g.edges[e0]
    x, y = h.edges[f.assignment[e0]]
    seeds = [("hom", t, x), ("antihom", t, y)]
    if not g.directed or not h.directed:
        # orientation-free: the two seeds are endpoint choices, both "hom"
        seeds = [("hom", t, x), ("hom", t, y)]
    return seeds


def _propagate_component(f, comp, seed_v: int, seed_img: int, antihom: bool):
    """Spread the seed along the component and verify every edge; returns the
    partial vertex assignment or None."""
    g, h = f.source, f.target
    undirected_mode = not g.directed or not h.directed
    img: dict[int, int] = {seed_v: seed_img}
    stack = [seed_v]
    while stack:
        v = stack.pop()
        for eid in g.incident_edges[v]:
            w = g.other_end(eid, v)
            x, y = h.edges[f.assignment[eid]]
            t, _hd = g.edges[eid]
            if undirected_mode:
                if img[v] == x:
                    need = y
                elif img[v] == y:
                    need = x
                else:
                    return None
            else:
                if antihom:
                    x, y = y, x
                need = y if v == t else x
                have = x if v == t else y
                if img[v] != have:
                    return None
            if w in img:
                if img[w] != need:
                    return None
            else:
                img[w] = need
                stack.append(w)
    return img


def hom_induced_witnesses(f, limit: int = 16) -> list[VertexMap]:
    """All vertex maps inducing the edge map f, composed component by
    component.  Directed components may independently preserve or reverse
    orientation; isolated vertices go to vertex 0."""
    g, h = f.source, f.target
    if g.n and not h.n:
        return []
    per_comp: list[list[tuple[dict[int, int], str]]] = []
    for comp in g.components:
        options = []
        seen_assign = set()
        for mode, sv, si in _component_seeds(f, comp):
            img = _propagate_component(f, comp, sv, si, mode == "antihom")
            if img is None:
                continue
            key = tuple(sorted(img.items()))
            if key in seen_assign:
                continue
            seen_assign.add(key)
            options.append((img, mode))
        if not options:
            return []
        per_comp.append(options)
    witnesses = []
    for combo in itertools.product(*per_comp):
        assignment = [0] * g.n
        modes = set()
        for img, mode in combo:
            modes.add(mode)
            for v, x in img.items():
                assignment[v] = x
        polarity = modes.pop() if len(modes) == 1 else "mixed"
        w = VertexMap(g, h, tuple(assignment), polarity)
        witnesses.append(w)
        if len(witnesses) >= limit:
            break
    return witnesses


def is_hom_induced(f) -> Optional[VertexMap]:
    """A vertex map g with f = g-induced, or None.  Orientation-preserving
    seeds are preferred, so round trips recover the original polarity."""
    w = hom_induced_witnesses(f, limit=1)
    return w[0] if w else None


# ---------------------------------------------------------------------------
# chromatic number


def _degeneracy_order(masks: list[int], n: int) -> list[int]:
    deg = [bin(masks[v]).count("1") for v in range(n)]
    return sorted(range(n), key=lambda v: (-deg[v], v))


def _greedy_clique(masks: list[int], n: int) -> list[int]:
    best: list[int] = []
    for seed in range(n):
        clique = [seed]
        common = masks[seed]
        while common:
            pick = -1
            pick_deg = -1
            m = common
            while m:
                b = m & -m
                v = b.bit_length() - 1
                m ^= b
                d = bin(masks[v] & common).count("1")
                if d > pick_deg:
                    pick, pick_deg = v, d
            clique.append(pick)
            common &= masks[pick]
        if len(clique) > len(best):
            best = clique
    return best


def _colorable(masks: list[int], n: int, k: int, clique: list[int]) -> bool:
    """Exact k-colorability; the clique is pre-colored to break symmetry."""
    colors = [-1] * n
    for i, v in enumerate(clique):
        colors[v] = i
    order = [v for v in _degeneracy_order(masks, n) if colors[v] == -1]

    def feasible(v: int, c: int) -> bool:
        m = masks[v]
        while m:
            b = m & -m
            w = b.bit_length() - 1
            m ^= b
            if colors[w] == c:
                return False
        return True

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        # most-constrained next: fewest feasible colors
        best_j, best_opts = i, None
        for j in range(i, len(order)):
            v = order[j]
            opts = [c for c in range(min(k, used + 1)) if feasible(v, c)]
            if best_opts is None or len(opts) < len(best_opts):
                best_j, best_opts = j, opts
                if not opts:
                    break
        order[i], order[best_j] = order[best_j], order[i]
        v = order[i]
        assert best_opts is not None
        for c in best_opts:
            colors[v] = c
            if place(i + 1, max(used, c + 1)):
                return True
        colors[v] = -1
        order[i], order[best_j] = order[best_j], order[i]
        return False

    return place(0, len(clique))


def chromatic_number(g: Digraph, cap: int = 40) -> int:
    """Exact chromatic number of the underlying undirected graph."""
    if g.n > cap:
        raise GraphError(f"chromatic number capped at {cap} vertices")
    if g.n == 0:
        return 0
    masks = [0] * g.n
    for t, hd in g.edges:
        masks[t] |= 1 << hd
        masks[hd] |= 1 << t
    if not any(masks):
        return 1
    clique = _greedy_clique(masks, g.n)
    lo = len(clique)
    for k in range(lo, g.n):
        if _colorable(masks, g.n, k, clique):
            return k
    return g.n


# ---------------------------------------------------------------------------
# niceness (clique richness) and homotens checks


@dataclass(frozen=True)
class NiceReport:
    ok: bool
    failed_condition: Optional[int] = None
    witness: Optional[tuple] = None


def _cliques(masks: list[int], n: int):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if masks[u] >> v & 1]
    triangles = []
    for u, v in edges:
        common = masks[u] & masks[v]
        w_mask = common >> (v + 1) << (v + 1)
        m = w_mask
        while m:
            b = m & -m
            w = b.bit_length() - 1
            m ^= b
            triangles.append((u, v, w))
    k4s = []
    for u, v, w in triangles:
        common = masks[u] & masks[v] & masks[w]
        m = common >> (w + 1) << (w + 1)
        while m:
            b = m & -m
            x = b.bit_length() - 1
            m ^= b
            k4s.append((u, v, w, x))
    return edges, triangles, k4s


def is_nice(g: Digraph) -> NiceReport:
    """Clique richness: every edge in a triangle, triangle in a K4, K4 in a
    K5, and all K4s linked through shared triangles."""
    if g.directed:
        raise GraphError("niceness is a property of undirected graphs")
    n = g.n
    masks = [0] * n
    for t, hd in g.edges:
        masks[t] |= 1 << hd
        masks[hd] |= 1 << t
    edges, triangles, k4s = _cliques(masks, n)
    for u, v in edges:
        if not masks[u] & masks[v]:
            return NiceReport(False, 1, (u, v))
    for u, v, w in triangles:
        if not masks[u] & masks[v] & masks[w]:
            return NiceReport(False, 2, (u, v, w))
    for u, v, w, x in k4s:
        if not masks[u] & masks[v] & masks[w] & masks[x]:
            return NiceReport(False, 3, (u, v, w, x))
    if len(k4s) > 1:
        parent = list(range(len(k4s)))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        by_triangle: dict[tuple[int, int, int], int] = {}
        for i, quad in enumerate(k4s):
            for tri in itertools.combinations(quad, 3):
                j = by_triangle.setdefault(tri, i)
                if j != i:
                    parent[find(i)] = find(j)
        roots = {find(i) for i in range(len(k4s))}
        if len(roots) > 1:
            groups: dict[int, int] = {}
            for i in range(len(k4s)):
                groups.setdefault(find(i), i)
            a, b = sorted(groups.values())[:2]
            return NiceReport(False, 4, (k4s[a], k4s[b]))
    return NiceReport(True)


def k4_sequence_exists(g: Digraph, k: tuple[int, ...], k2: tuple[int, ...]) -> bool:
    """Literal sliding-window test: a vertex sequence whose consecutive
    4-windows are cliques, starting on K and ending on K2.  Used as a
    cross-check oracle for the exchange-graph reformulation."""
    masks = [0] * g.n
    for t, hd in g.edges:
        masks[t] |= 1 << hd
        masks[hd] |= 1 << t

    def is_clique(vs) -> bool:
        return all(masks[a] >> b & 1 for a, b in itertools.combinations(vs, 2))

    target = frozenset(k2)
    start_windows = {w for w in itertools.permutations(k) if is_clique(w)}
    seen = set(start_windows)
    frontier = list(start_windows)
    while frontier:
        nxt = []
        for win in frontier:
            if frozenset(win) == target:
                return True
            b, c, d = win[1], win[2], win[3]
            common = masks[b] & masks[c] & masks[d]
            m = common
            while m:
                bit = m & -m
                w = bit.bit_length() - 1
                m ^= bit
                if w in (b, c, d):
                    continue
                cand = (b, c, d, w)
                if cand not in seen:
                    seen.add(cand)
                    nxt.append(cand)
        frontier = nxt
    return False


def homotens_pair(g: Digraph, h: Digraph, budget: Optional[int] = None) -> bool:
    """Is every TT_2 map g -> h induced by a vertex map?"""
    from .ttmaps import enumerate_tt_maps

    maps, complete = enumerate_tt_maps(g, h, "Z_2", budget=budget)
    if not complete:
        raise SearchBudgetExceeded(budget or 0)
    return all(is_hom_induced(f) is not None for f in maps)


def k5_target_check(h: Digraph, budget: Optional[int] = None) -> bool:
    """Every TT_2 map from the 5-clique into h is induced by exactly one
    embedding (injective vertex map).  Vacuously true when no map exists."""
    from .graphs import complete_graph
    from .ttmaps import enumerate_tt_maps

    k5 = complete_graph(5)
    hh = h
    if h.directed:
        hh = Digraph(h.name, h.n, tuple(
            (min(t, hd), max(t, hd)) for t, hd in h.edges), directed=False)
    maps, complete = enumerate_tt_maps(k5, hh, "Z_2", budget=budget)
    if not complete:
        raise SearchBudgetExceeded(budget or 0)
    for f in maps:
        witnesses = hom_induced_witnesses(f, limit=4)
        if len(witnesses) != 1 or not witnesses[0].is_injective():
            return False
    return True
