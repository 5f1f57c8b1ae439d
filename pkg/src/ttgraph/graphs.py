"""Finite loopless multigraphs with identity-carrying directed edges.

Every graph is stored as a digraph: a list of (tail, head) pairs indexed
by dense edge ids 0..m-1.  Undirected graphs keep a canonical orientation
(tail = smaller vertex id) plus a flag saying the orientation is
irrelevant.  Parallel edges are allowed, loops are not.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    pass


class ParseError(GraphError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Digraph:
    """Loopless multigraph with vertices 0..n-1 and edges[eid] = (tail, head)."""

    name: str
    n: int
    edges: tuple[tuple[int, int], ...]
    directed: bool = True

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"{self.name}: negative vertex count")
        for eid, (t, h) in enumerate(self.edges):
            if t == h:
                raise GraphError(f"{self.name}: edge {eid} is a loop at vertex {t}")
            if not (0 <= t < self.n and 0 <= h < self.n):
                raise GraphError(
                    f"{self.name}: edge {eid} references missing vertex ({t},{h})"
                )
            if not self.directed and t > h:
                raise GraphError(
                    f"{self.name}: undirected edge {eid} not canonically oriented"
                )

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def out_edges(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for eid, (t, _h) in enumerate(self.edges):
            out[t].append(eid)
        return tuple(tuple(x) for x in out)

    @cached_property
    def in_edges(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for eid, (_t, h) in enumerate(self.edges):
            inc[h].append(eid)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def incident_edges(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for eid, (t, h) in enumerate(self.edges):
            inc[t].append(eid)
            inc[h].append(eid)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def adjacency_pairs(self) -> frozenset[tuple[int, int]]:
        """Distinct (tail, head) pairs; unordered pairs for undirected graphs."""
        if self.directed:
            return frozenset(self.edges)
        return frozenset((min(t, h), max(t, h)) for t, h in self.edges)

    def other_end(self, eid: int, v: int) -> int:
        t, h = self.edges[eid]
        if v == t:
            return h
        if v == h:
            return t
        raise GraphError(f"vertex {v} not an endpoint of edge {eid}")

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Vertex sets of connected components (underlying undirected), sorted."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            stack = [s]
            while stack:
                v = stack.pop()
                for eid in self.incident_edges[v]:
                    w = self.other_end(eid, v)
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def degree(self, v: int) -> int:
        return len(self.incident_edges[v])

    def to_edge_list_text(self) -> str:
        kind = "directed" if self.directed else "undirected"
        lines = [f"{self.n} {self.m} {kind}"]
        lines += [f"{t} {h}" for t, h in self.edges]
        return "\n".join(lines) + "\n"


def digraph(name: str, n: int, edges: Iterable[tuple[int, int]]) -> Digraph:
    return Digraph(name, n, tuple((t, h) for t, h in edges), directed=True)


def undirected(name: str, n: int, edges: Iterable[tuple[int, int]]) -> Digraph:
    """Undirected graph; edges are canonically oriented low -> high."""
    canon = tuple((min(a, b), max(a, b)) for a, b in edges)
    return Digraph(name, n, canon, directed=False)


# ---------------------------------------------------------------------------
# circuits, cuts, spanning forests


@dataclass(frozen=True)
class Circuit:
    """Cyclic edge sequence with traversal signs (+1 with, -1 against the arrow)."""

    graph: Digraph
    steps: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def positive_edges(self) -> tuple[int, ...]:
        return tuple(e for e, s in self.steps if s > 0)

    @property
    def negative_edges(self) -> tuple[int, ...]:
        return tuple(e for e, s in self.steps if s < 0)

    @property
    def imbalance(self) -> int:
        return len(self.positive_edges) - len(self.negative_edges)

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        """Vertex i is where step i starts; consecutive steps chain tail-to-head."""
        g = self.graph
        verts = []
        for eid, sign in self.steps:
            t, h = g.edges[eid]
            verts.append(t if sign > 0 else h)
        return tuple(verts)

    def validate(self) -> None:
        g = self.graph
        if len(self.steps) < 2:
            raise GraphError("circuit needs at least 2 edges")
        eids = [e for e, _ in self.steps]
        if len(set(eids)) != len(eids):
            raise GraphError("circuit repeats an edge")
        k = len(self.steps)
        for i in range(k):
            eid, sign = self.steps[i]
            t, h = g.edges[eid]
            start, end = (t, h) if sign > 0 else (h, t)
            if start != self.vertices[i]:
                raise GraphError("circuit steps do not chain")
            if end != self.vertices[(i + 1) % k]:
                raise GraphError("circuit steps do not chain")
        if len(set(self.vertices)) != k:
            raise GraphError("circuit revisits a vertex")

    def canonical_key(self) -> tuple:
        """Least rotation/reflection of the (vertex, edge) sequence."""
        g = self.graph
        k = len(self.steps)
        seqs = []
        fwd = [(self.vertices[i], self.steps[i][0]) for i in range(k)]
        for r in range(k):
            seqs.append(tuple(fwd[(r + i) % k] for i in range(k)))
        # reversed traversal: visit vertices backwards, edges shift by one
        bwd = [(self.vertices[(i + 1) % k], self.steps[i][0]) for i in range(k)]
        for r in range(k):
            seqs.append(tuple(bwd[(r - i) % k] for i in range(k)))
        return min(seqs)


@dataclass(frozen=True)
class Cut:
    """Edge cut [X, X-bar] determined by a vertex side X."""

    graph: Digraph
    side: frozenset[int]

    @cached_property
    def edges_out(self) -> tuple[int, ...]:
        x = self.side
        return tuple(
            e for e, (t, h) in enumerate(self.graph.edges) if t in x and h not in x
        )

    @cached_property
    def edges_in(self) -> tuple[int, ...]:
        x = self.side
        return tuple(
            e for e, (t, h) in enumerate(self.graph.edges) if h in x and t not in x
        )

    @property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges_out) | frozenset(self.edges_in)


@dataclass(frozen=True)
class SpanningForest:
    graph: Digraph
    tree_edges: frozenset[int]
    # parent[v] = (parent vertex, edge id, +1 if edge points parent->v else -1)
    parent: tuple[Optional[tuple[int, int, int]], ...]
    roots: tuple[int, ...]

    def path_to_root(self, v: int) -> list[tuple[int, int]]:
        """Edges (eid, sign) walking v up to its root; sign +1 = with the arrow."""
        steps = []
        while self.parent[v] is not None:
            pv, eid, orient = self.parent[v]
            # walking v -> parent goes against orient
            steps.append((eid, -orient))
            v = pv
        return steps


def spanning_forest(g: Digraph) -> SpanningForest:
    """BFS forest; roots are the smallest vertex of each component."""
    parent: list[Optional[tuple[int, int, int]]] = [None] * g.n
    seen = [False] * g.n
    tree = set()
    roots = []
    for s in range(g.n):
        if seen[s]:
            continue
        roots.append(s)
        seen[s] = True
        queue = [s]
        while queue:
            nxt = []
            for v in queue:
                for eid in g.incident_edges[v]:
                    w = g.other_end(eid, v)
                    if seen[w]:
                        continue
                    seen[w] = True
                    t, _h = g.edges[eid]
                    parent[w] = (v, eid, 1 if t == v else -1)
                    tree.add(eid)
                    nxt.append(w)
            queue = nxt
    return SpanningForest(g, frozenset(tree), tuple(parent), tuple(roots))


def fundamental_circuits(g: Digraph, forest: Optional[SpanningForest] = None) -> list[Circuit]:
    """One circuit per non-tree edge: the edge plus the tree path closing it."""
    if forest is None:
        forest = spanning_forest(g)
    if forest.graph is not g and forest.graph != g:
        raise GraphError("forest does not belong to this graph")
    if not forest.tree_edges <= set(range(g.m)):
        raise GraphError("forest has unknown edges")
    circuits = []
    for eid, (t, h) in enumerate(g.edges):
        if eid in forest.tree_edges:
            continue
        up_t = forest.path_to_root(t)
        up_h = forest.path_to_root(h)
        # drop the common tail of both root paths
        while up_t and up_h and up_t[-1][0] == up_h[-1][0]:
            up_t.pop()
            up_h.pop()
        # circuit: eid forward (t -> h), then h up to meet, then down to t
        steps = [(eid, 1)]
        steps.extend(up_h)
        steps.extend((e, -s) for e, s in reversed(up_t))
        c = Circuit(g, tuple(steps))
        c.validate()
        circuits.append(c)
    return circuits


def cycle_rank(g: Digraph) -> int:
    return g.m - g.n + len(g.components)


# ---------------------------------------------------------------------------
# constructions


def subdivide_balanced(h: Digraph, p: int) -> Digraph:
    """Replace each edge by a p-edge path alternating forward/backward, p odd >= 3.

    Path edge j (1-based) points forward iff j is odd, so each replaced edge
    contributes orientation imbalance +1 when traversed tail-to-head.
    """
    if p < 3 or p % 2 == 0:
        raise GraphError(f"subdivision length must be odd and >= 3, got {p}")
    n = h.n
    edges = []
    for t, hd in h.edges:
        inner = list(range(n, n + p - 1))
        n += p - 1
        chain = [t] + inner + [hd]
        for j in range(1, p + 1):
            a, b = chain[j - 1], chain[j]
            edges.append((a, b) if j % 2 == 1 else (b, a))
    return Digraph(f"subdiv({h.name},{p})", n, tuple(edges), directed=True)


def product(h: Digraph, r: Digraph) -> Digraph:
    """Arc product: vertex (u,u'), one edge (u,u')->(v,v') per edge pair.

    Vertex (u, u') is u * r.n + u'; edge for pair (e, e') has id e * r.m + e'.
    """
    n = h.n * r.n
    edges = []
    for t1, h1 in h.edges:
        for t2, h2 in r.edges:
            edges.append((t1 * r.n + t2, h1 * r.n + h2))
    return Digraph(f"product({h.name},{r.name})", n, tuple(edges), directed=True)


def circuit_union(lengths: Sequence[int]) -> Digraph:
    """Disjoint union of consistently oriented circuits, one per length."""
    edges = []
    n = 0
    for a in lengths:
        if a < 2:
            raise GraphError(f"circuit length must be >= 2, got {a}")
        for i in range(a):
            edges.append((n + i, n + (i + 1) % a))
        n += a
    name = "+".join(f"C>{a}" for a in lengths)
    return Digraph(name or "empty", n, tuple(edges), directed=True)


def oriented_circuit(a: int) -> Digraph:
    return circuit_union([a])


def complete_graph(k: int) -> Digraph:
    return undirected(f"K{k}", k, itertools.combinations(range(k), 2))


def cycle_graph(k: int) -> Digraph:
    if k < 3:
        raise GraphError("undirected cycle needs >= 3 vertices")
    return undirected(f"C{k}", k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Digraph:
    return undirected(f"P{k}", k, [(i, i + 1) for i in range(k - 1)])


def hypercube_graph(d: int) -> Digraph:
    edges = [
        (x, x ^ (1 << i)) for x in range(1 << d) for i in range(d) if not x & (1 << i)
    ]
    return undirected(f"Q{d}", 1 << d, edges)


def disjoint_union(a: Digraph, b: Digraph) -> Digraph:
    if a.directed != b.directed:
        raise GraphError("cannot union directed with undirected")
    edges = list(a.edges) + [(t + a.n, h + a.n) for t, h in b.edges]
    return Digraph(f"{a.name}+{b.name}", a.n + b.n, tuple(edges), a.directed)


# ---------------------------------------------------------------------------
# circuit enumeration


def enumerate_circuits(g: Digraph, max_len: int) -> list[Circuit]:
    """All circuits of length <= max_len, once per rotation/reflection class.

    Deterministic: each circuit is rooted at its smallest vertex and reported
    in its lexicographically least traversal direction.
    """
    if max_len < 2:
        raise GraphError("circuit length bound must be >= 2")
    found: dict[tuple, Circuit] = {}

    def extend(start: int, v: int, steps: list[tuple[int, int]], visited: set[int]):
        for eid in g.incident_edges[v]:
            t, h = g.edges[eid]
            sign = 1 if t == v else -1
            w = h if sign > 0 else t
            if steps and eid == steps[-1][0]:
                continue
            if w == start and len(steps) >= 1:
                if any(e == eid for e, _ in steps):
                    continue
                c = Circuit(g, tuple(steps + [(eid, sign)]))
                try:
                    c.validate()
                except GraphError:
                    continue
                found.setdefault(c.canonical_key(), c)
                continue
            if w in visited or w < start:
                continue
            if len(steps) + 1 >= max_len:
                continue
            if any(e == eid for e, _ in steps):
                continue
            visited.add(w)
            steps.append((eid, sign))
            extend(start, w, steps, visited)
            steps.pop()
            visited.remove(w)

    for s in range(g.n):
        extend(s, s, [], {s})
    out = sorted(found.values(), key=lambda c: (len(c), c.canonical_key()))
    return out


# ---------------------------------------------------------------------------
# isomorphism (small graphs)


def _multiplicity(g: Digraph) -> dict[tuple[int, int], int]:
    mult: dict[tuple[int, int], int] = {}
    for t, h in g.edges:
        key = (t, h) if g.directed else (min(t, h), max(t, h))
        mult[key] = mult.get(key, 0) + 1
    return mult


def _refine_colors(g: Digraph, mult: dict) -> list[int]:
    if g.directed:
        outd = [0] * g.n
        ind = [0] * g.n
        for t, h in g.edges:
            outd[t] += 1
            ind[h] += 1
        colors = [hash((outd[v], ind[v])) for v in range(g.n)]
    else:
        colors = [g.degree(v) for v in range(g.n)]
    for _ in range(g.n):
        sig = []
        for v in range(g.n):
            if g.directed:
                nbr = sorted(
                    (colors[g.edges[e][1]], 1) for e in g.out_edges[v]
                ) + sorted((colors[g.edges[e][0]], -1) for e in g.in_edges[v])
            else:
                nbr = sorted(colors[g.other_end(e, v)] for e in g.incident_edges[v])
            sig.append((colors[v], tuple(nbr)))
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if new == colors:
            break
        colors = new
    return colors


def isomorphic(g1: Digraph, g2: Digraph, cap: int = 64) -> Optional[dict[int, int]]:
    """Vertex bijection preserving edge multiplicities, or None.

    Orientation-respecting for directed graphs, adjacency-respecting for
    undirected ones.  Intended for graphs up to `cap` vertices.
    """
    if g1.directed != g2.directed:
        raise GraphError("cannot compare directed with undirected")
    if max(g1.n, g2.n) > cap:
        raise GraphError(f"isomorphism check capped at {cap} vertices")
    if g1.n != g2.n or g1.m != g2.m:
        return None
    m1, m2 = _multiplicity(g1), _multiplicity(g2)
    c1, c2 = _refine_colors(g1, m1), _refine_colors(g2, m2)
    if sorted(c1) != sorted(c2):
        return None
    by_color: dict[int, list[int]] = {}
    for v in range(g2.n):
        by_color.setdefault(c2[v], []).append(v)

    order = sorted(range(g1.n), key=lambda v: (len(by_color[c1[v]]), v))
    mapping: dict[int, int] = {}
    used = [False] * g2.n

    def pairs_ok(u: int, x: int) -> bool:
        for v, y in mapping.items():
            if g1.directed:
                if m1.get((u, v), 0) != m2.get((x, y), 0):
                    return False
                if m1.get((v, u), 0) != m2.get((y, x), 0):
                    return False
            else:
                a = m1.get((min(u, v), max(u, v)), 0)
                b = m2.get((min(x, y), max(x, y)), 0)
                if a != b:
                    return False
        return True

    def place(i: int) -> bool:
        if i == len(order):
            return True
        u = order[i]
        for x in by_color[c1[u]]:
            if used[x]:
                continue
            if not pairs_ok(u, x):
                continue
            mapping[u] = x
            used[x] = True
            if place(i + 1):
                return True
            del mapping[u]
            used[x] = False
        return False

    if place(0):
        return dict(mapping)
    return None


# ---------------------------------------------------------------------------
# parsing


def parse_graph(text: str, name: str = "graph") -> Digraph:
    """Parse the edge-list format: header `<n> <m> directed|undirected`,
    then m lines `<tail> <head>`.  graph6 strings are accepted for
    undirected import (single line, no numeric header)."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty input")
    first = stripped.splitlines()[0].split()
    looks_edge_list = (
        len(first) == 3
        and first[0].lstrip("-").isdigit()
        and first[1].lstrip("-").isdigit()
        and first[2] in ("directed", "undirected")
    )
    if not looks_edge_list:
        if "\n" not in stripped:
            return parse_graph6(stripped, name)
        raise ParseError("malformed header (want `<n> <m> directed|undirected`)", 1)

    lines = stripped.splitlines()
    n, m = int(first[0]), int(first[1])
    directed = first[2] == "directed"
    if n < 0 or m < 0:
        raise ParseError("negative count in header", 1)
    body = [ln for ln in lines[1:]]
    edges = []
    lineno = 1
    for ln in body:
        lineno += 1
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"want `<tail> <head>`, got {ln!r}", lineno)
        try:
            t, h = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {ln!r}", lineno) from None
        if t == h:
            raise ParseError(f"loop edge at vertex {t}", lineno)
        if not (0 <= t < n and 0 <= h < n):
            raise ParseError(f"vertex out of range in {ln!r}", lineno)
        if not directed:
            t, h = min(t, h), max(t, h)
        edges.append((t, h))
    if len(edges) != m:
        raise ParseError(f"header promised {m} edges, found {len(edges)}")
    return Digraph(name, n, tuple(edges), directed)


def parse_graph6(s: str, name: str = "graph6") -> Digraph:
    """Decode a graph6 string (undirected, simple)."""
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise ParseError("invalid graph6 character")
    if not data:
        raise ParseError("empty graph6 string")
    if data[0] < 63:
        n = data[0]
        rest = data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        rest = data[4:]
    else:
        raise ParseError("graph6 size field too large")
    bits = []
    for b in rest:
        bits.extend((b >> k) & 1 for k in range(5, -1, -1))
    need = n * (n - 1) // 2
    if len(bits) < need:
        raise ParseError("graph6 string too short")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Digraph(name, n, tuple(edges), directed=False)
