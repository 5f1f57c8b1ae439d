"""Tension-continuous (TT) edge mappings: verification, search, invariants.

Verification goes through flows: an edge map is TT_M exactly when the
algebraic image of every flow is a flow, and it suffices to check the
unit circulations of fundamental circuits.  Search goes through vertex
potentials: picking images for a spanning forest of the source determines
a group-vector potential, and every non-tree edge is then forced to an
image edge with a matching coordinate vector.  That search is the same
thing as homomorphism search into the Cayley lift, done implicitly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from . import homs
from .graphs import Digraph, GraphError, spanning_forest
from .groups import (
    Cyclic,
    CYCLIC_Z,
    GroupSpec,
    INFINITY,
    divisors,
    exponent,
    parse_group,
    reduce_group,
)
from .tensions import EdgeFunction, flow_basis, is_flow, vertex_defect


from .homs import SearchBudgetExceeded


@dataclass(frozen=True)
class EdgeMap:
    """Total map from the source's edges to the target's edges."""

    source: Digraph
    target: Digraph
    assignment: tuple[int, ...]

    def __post_init__(self):
        if len(self.assignment) != self.source.m:
            raise GraphError("edge map must assign every source edge")
        for e, img in enumerate(self.assignment):
            if not 0 <= img < self.target.m:
                raise GraphError(f"edge {e} maps to missing edge {img}")

    def __call__(self, eid: int) -> int:
        return self.assignment[eid]

    def is_identity(self) -> bool:
        return self.source == self.target and all(
            i == e for e, i in enumerate(self.assignment)
        )

    def compose(self, other: "EdgeMap") -> "EdgeMap":
        """self after other: other maps A->B, self maps B->C."""
        if other.target != self.source:
            raise GraphError("composition endpoints do not match")
        return EdgeMap(
            other.source, self.target, tuple(self.assignment[e] for e in other.assignment)
        )

    def to_text(self) -> str:
        return "\n".join(f"{e} -> {i}" for e, i in enumerate(self.assignment)) + "\n"


def parse_edge_map(g: Digraph, h: Digraph, text: str) -> EdgeMap:
    assign: dict[int, int] = {}
    for lineno, ln in enumerate(text.strip().splitlines(), start=1):
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        parts = ln.replace("->", " ").split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: want `<gEdgeId> -> <hEdgeId>`")
        assign[int(parts[0])] = int(parts[1])
    missing = [e for e in range(g.m) if e not in assign]
    if missing:
        raise GraphError(f"map missing source edges {missing}")
    return EdgeMap(g, h, tuple(assign[e] for e in range(g.m)))


@dataclass(frozen=True)
class DivisorSet:
    """Value of TT(f,G,H): all of N, or exactly the divisors of one integer."""

    kind: str  # "all" | "finite" | "empty"
    generator: Optional[int] = None

    @staticmethod
    def all_n() -> "DivisorSet":
        return DivisorSet("all")

    @staticmethod
    def finite(d: int) -> "DivisorSet":
        if d < 1:
            raise ValueError("divisor-set generator must be >= 1")
        return DivisorSet("finite", d)

    @staticmethod
    def empty() -> "DivisorSet":
        return DivisorSet("empty")

    def contains(self, n: int) -> bool:
        if n < 1:
            return False
        if self.kind == "all":
            return True
        if self.kind == "empty":
            return False
        return self.generator % n == 0

    def upto(self, nmax: int) -> list[int]:
        return [n for n in range(1, nmax + 1) if self.contains(n)]

    def members(self) -> list[int]:
        if self.kind != "finite":
            raise ValueError(f"{self.kind} divisor set has no finite member list")
        return divisors(self.generator)

    def __str__(self) -> str:
        if self.kind == "all":
            return "N (all positive integers)"
        if self.kind == "empty":
            return "{}"
        return "{" + ",".join(map(str, self.members())) + "}"


# ---------------------------------------------------------------------------
# algebraic images and verification


def algebraic_image(f: EdgeMap, phi: EdgeFunction) -> EdgeFunction:
    """Push an edge labeling forward, summing preimage values per target edge."""
    if phi.graph != f.source:
        raise GraphError("labeling lives on a different graph than the map's source")
    out = [0] * f.target.m
    for e, v in enumerate(phi.values):
        out[f.assignment[e]] += v
    return EdgeFunction(f.target, tuple(out))


def _require_orientable(group: Cyclic, *graphs: Digraph) -> None:
    if group.modulus in (1, 2):
        return
    for g in graphs:
        if not g.directed:
            raise GraphError(
                f"orientation matters over {group}; {g.name} is undirected"
            )


def is_tt(f: EdgeMap, group: GroupSpec | Cyclic | str) -> bool:
    """Is f tension-continuous over the group?  Checks that the algebraic
    image of every basis circulation is a flow over the reduced group."""
    red = reduce_group(group)
    _require_orientable(red, f.source, f.target)
    for phi in flow_basis(f.source):
        if not is_flow(f.target, algebraic_image(f, phi), red):
            return False
    return True


def tt_divisor_set(f: EdgeMap) -> DivisorSet:
    """TT(f,G,H) via the gcd of all integer conservation defects.

    f is TT_n exactly when every defect vanishes mod n, i.e. when n divides
    the gcd; gcd 0 means f is TT over Z and the set is all of N.
    """
    d = 0
    for phi in flow_basis(f.source):
        img = algebraic_image(f, phi)
        for v in range(f.target.n):
            d = math.gcd(d, vertex_defect(f.target, img, v))
    return DivisorSet.all_n() if d == 0 else DivisorSet.finite(d)


# ---------------------------------------------------------------------------
# tension coordinates and the potential search engine


class _Coords:
    """Star-cut tension coordinates of the target's edges.

    One coordinate per non-root vertex and component; edge (t,h) carries
    +1 at t's coordinate and -1 at h's.  Over Z_2 vectors are bitmask ints
    (xor group), otherwise tuples (componentwise, mod n when finite).
    """

    def __init__(self, h: Digraph, modulus: Optional[int]):
        self.modulus = modulus
        index: dict[int, int] = {}
        k = 0
        for comp in h.components:
            for v in comp[1:]:
                index[v] = k
                k += 1
        self.k = k
        if modulus == 2:
            self.zero = 0

            def vec(t: int, hd: int) -> int:
                x = 0
                if t in index:
                    x ^= 1 << index[t]
                if hd in index:
                    x ^= 1 << index[hd]
                return x

            self.add = lambda a, b: a ^ b
            self.sub = self.add
            self.vectors = [vec(t, hd) for t, hd in h.edges]
            self.neg_vectors = self.vectors
        else:
            self.zero = (0,) * k

            def vec(t: int, hd: int) -> tuple[int, ...]:
                row = [0] * k
                if t in index:
                    row[index[t]] += 1
                if hd in index:
                    row[index[hd]] -= 1
                if modulus is not None:
                    row = [x % modulus for x in row]
                return tuple(row)

            if modulus is None:
                self.add = lambda a, b: tuple(x + y for x, y in zip(a, b))
                self.sub = lambda a, b: tuple(x - y for x, y in zip(a, b))
            else:
                n = modulus
                self.add = lambda a, b: tuple((x + y) % n for x, y in zip(a, b))
                self.sub = lambda a, b: tuple((x - y) % n for x, y in zip(a, b))
            self.vectors = [vec(t, hd) for t, hd in h.edges]
            self.neg_vectors = [self.sub(self.zero, v) for v in self.vectors]
        by_vec: dict = {}
        for eid, v in enumerate(self.vectors):
            by_vec.setdefault(v, []).append(eid)
        self.edges_by_vec = {v: tuple(es) for v, es in by_vec.items()}


def _edge_priority(g: Digraph) -> list[int]:
    """Rank edges so cheap fundamental circuits complete first: repeatedly
    take the circuit adding the fewest new edges, then any bridges."""
    from .graphs import fundamental_circuits

    circuit_edge_sets = [
        {e for e, _s in c.steps} for c in fundamental_circuits(g)
    ]
    rank = [g.m] * g.m
    done: set[int] = set()
    counter = 0
    while circuit_edge_sets:
        best_i = min(
            range(len(circuit_edge_sets)),
            key=lambda i: (len(circuit_edge_sets[i] - done), min(circuit_edge_sets[i])),
        )
        for e in sorted(circuit_edge_sets.pop(best_i) - done):
            rank[e] = counter
            counter += 1
            done.add(e)
    for e in range(g.m):
        if e not in done:
            rank[e] = counter
            counter += 1
    return rank


def _search_plan(g: Digraph) -> list[tuple]:
    """Deterministic instruction list: tree steps branch on the image edge,
    close steps are forced by the potential difference.  Closing edges are
    taken as early as possible; ties go to circuit-completion rank, then id."""
    rank = _edge_priority(g)
    plan: list[tuple] = []
    assigned = [False] * g.n
    processed = [False] * g.m
    for comp in g.components:
        assigned[comp[0]] = True
        comp_edges = sorted(
            {e for v in comp for e in g.incident_edges[v]},
            key=lambda e: (rank[e], e),
        )
        remaining = sum(1 for e in comp_edges if not processed[e])
        while remaining:
            pick: Optional[tuple] = None
            for e in comp_edges:
                if processed[e]:
                    continue
                t, hd = g.edges[e]
                if assigned[t] and assigned[hd]:
                    pick = ("close", e)
                    break
            if pick is None:
                for e in comp_edges:
                    if processed[e]:
                        continue
                    t, hd = g.edges[e]
                    if assigned[t]:
                        pick = ("tree", e, t, hd, True)
                        break
                    if assigned[hd]:
                        pick = ("tree", e, hd, t, False)
                        break
            assert pick is not None
            if pick[0] == "tree":
                assigned[pick[3]] = True
            processed[pick[1]] = True
            plan.append(pick)
            remaining -= 1
    return plan


def _run_tt_search(
    g: Digraph,
    h: Digraph,
    modulus: Optional[int],
    on_solution: Callable[[list[int]], bool],
    budget: Optional[int] = None,
) -> tuple[str, int]:
    """Backtracking over vertex potentials.  on_solution gets the assignment
    list (source eid -> target eid) and returns True to stop the search.
    Returns ("exhausted" | "stopped" | "budget", nodes tried)."""
    plan = _search_plan(g)
    coords = _Coords(h, modulus)
    vectors, neg_vectors = coords.vectors, coords.neg_vectors
    add, sub = coords.add, coords.sub
    by_vec = coords.edges_by_vec
    edges_g = g.edges
    depth_count = len(plan)
    assignment = [-1] * g.m
    pot: list = [None] * g.n
    for comp in g.components:
        pot[comp[0]] = coords.zero
    if depth_count == 0:
        on_solution(assignment)
        return ("exhausted", 0)
    hm = h.m

    def tree_choices(base, vecs):
        # base bound per call; a shared closure variable would go stale
        # when the engine resumes a shallower iterator
        for e2 in range(hm):
            yield (e2, add(base, vecs[e2]))

    def close_choices(cands):
        for e2 in cands:
            yield (e2, None)

    iters: list = [None] * depth_count
    nodes = 0
    depth = 0
    status = "exhausted"
    while depth >= 0:
        instr = plan[depth]
        it = iters[depth]
        if it is None:
            if instr[0] == "tree":
                base = pot[instr[2]]
                it = tree_choices(base, vectors if instr[4] else neg_vectors)
            else:
                t, hd = edges_g[instr[1]]
                need = sub(pot[hd], pot[t])
                it = close_choices(by_vec.get(need, ()))
            iters[depth] = it
        step = next(it, None)
        if step is None:
            iters[depth] = None
            depth -= 1
            continue
        nodes += 1
        if budget is not None and nodes > budget:
            status = "budget"
            break
        if instr[0] == "tree":
            assignment[instr[1]] = step[0]
            pot[instr[3]] = step[1]
        else:
            assignment[instr[1]] = step[0]
        if depth + 1 == depth_count:
            if on_solution(assignment):
                status = "stopped"
                break
        else:
            depth += 1
    return (status, nodes)


def _resolve_modulus(group: GroupSpec | Cyclic | str) -> Optional[int]:
    return reduce_group(group).modulus


@dataclass(frozen=True)
class TTSearchResult:
    status: str  # "found" | "none" | "budget"
    witness: Optional[EdgeMap]
    nodes: int

    @property
    def exhaustive(self) -> bool:
        return self.status in ("found", "none")


def find_tt(
    g: Digraph,
    h: Digraph,
    group: GroupSpec | Cyclic | str,
    budget: Optional[int] = None,
) -> TTSearchResult:
    """First TT map found by the deterministic potential search, or proof of
    nonexistence, or a budget report."""
    red = reduce_group(group)
    _require_orientable(red, g, h)
    if g.m > 0 and h.m == 0:
        return TTSearchResult("none", None, 0)
    box: list[EdgeMap] = []

    def on_solution(assignment: list[int]) -> bool:
        box.append(EdgeMap(g, h, tuple(assignment)))
        return True

    status, nodes = _run_tt_search(g, h, red.modulus, on_solution, budget)
    if box:
        witness = box[0]
        if not is_tt(witness, red):
            raise AssertionError("search produced a non-TT witness")
        return TTSearchResult("found", witness, nodes)
    return TTSearchResult("none" if status == "exhausted" else "budget", None, nodes)


def enumerate_tt_maps(
    g: Digraph,
    h: Digraph,
    group: GroupSpec | Cyclic | str,
    budget: Optional[int] = None,
    limit: Optional[int] = None,
) -> tuple[list[EdgeMap], bool]:
    """All TT maps g -> h (up to limit); second value says the enumeration
    provably completed."""
    red = reduce_group(group)
    _require_orientable(red, g, h)
    if g.m > 0 and h.m == 0:
        return ([], True)
    out: list[EdgeMap] = []

    def on_solution(assignment: list[int]) -> bool:
        out.append(EdgeMap(g, h, tuple(assignment)))
        return limit is not None and len(out) >= limit

    status, _nodes = _run_tt_search(g, h, red.modulus, on_solution, budget)
    return (out, status == "exhausted")


def count_tt_maps(
    g: Digraph,
    h: Digraph,
    group: GroupSpec | Cyclic | str,
    budget: Optional[int] = None,
) -> int:
    """Exact number of TT maps g -> h.  Raises on budget exhaustion."""
    red = reduce_group(group)
    _require_orientable(red, g, h)
    if g.m > 0 and h.m == 0:
        return 0
    counter = [0]

    def on_solution(_assignment: list[int]) -> bool:
        counter[0] += 1
        return False

    status, nodes = _run_tt_search(g, h, red.modulus, on_solution, budget)
    if status == "budget":
        raise SearchBudgetExceeded(nodes)
    return counter[0]


def is_tt_rigid(
    g: Digraph, group: GroupSpec | Cyclic | str, budget: Optional[int] = None
) -> bool:
    """True iff the identity is the only TT self-map.  Raises on budget."""
    red = reduce_group(group)
    _require_orientable(red, g)
    identity = tuple(range(g.m))
    hit = [False]

    def on_solution(assignment: list[int]) -> bool:
        if tuple(assignment) != identity:
            hit[0] = True
            return True
        return False

    status, nodes = _run_tt_search(g, g, red.modulus, on_solution, budget)
    if hit[0]:
        return False
    if status == "budget":
        raise SearchBudgetExceeded(nodes)
    return True


# ---------------------------------------------------------------------------
# Z-cut-tension continuity


def is_elementary_cut_tension(g: Digraph, values: Iterable[int]) -> bool:
    """Is the labeling +-a across one vertex side and 0 elsewhere?"""
    vals = list(values)
    if len(vals) != g.m:
        raise GraphError("labeling must be total")
    forest = spanning_forest(g)
    pot = [0] * g.n
    depth_order = []
    for v in range(g.n):
        d = 0
        w = v
        while forest.parent[w] is not None:
            w = forest.parent[w][0]
            d += 1
        depth_order.append((d, v))
    for _d, v in sorted(depth_order):
        if forest.parent[v] is None:
            continue
        pv, eid, orient = forest.parent[v]
        pot[v] = pot[pv] + orient * vals[eid]
    for eid, (t, hd) in enumerate(g.edges):
        if pot[hd] - pot[t] != vals[eid]:
            return False
    magnitudes = {abs(v) for v in vals if v != 0}
    if not magnitudes:
        return True
    if len(magnitudes) > 1:
        return False
    a = magnitudes.pop()
    for comp in g.components:
        levels = {pot[v] for v in comp}
        if len(levels) > 2:
            return False
        if len(levels) == 2 and max(levels) - min(levels) != a:
            return False
    return True


def is_cut_tt_Z(f: EdgeMap, cap: int = 20) -> bool:
    """Does every cut tension of the target pull back to a cut tension?

    Enumerates all cuts of the target with unit value; other values follow
    by linearity.  Works on the stored orientations.
    """
    h, g = f.target, f.source
    if h.n > cap:
        raise GraphError(f"cut enumeration capped at {cap} target vertices")
    if h.n == 0:
        return True
    phi = [0] * h.m
    for bits in range(1 << (h.n - 1)):
        # vertex h.n-1 always outside: [X, X-bar] and [X-bar, X] pull back
        # to each other's negation, which preserves elementarity
        side = {v for v in range(h.n - 1) if bits >> v & 1}
        for eid, (t, hd) in enumerate(h.edges):
            if t in side and hd not in side:
                phi[eid] = 1
            elif hd in side and t not in side:
                phi[eid] = -1
            else:
                phi[eid] = 0
        pullback = [phi[f.assignment[e]] for e in range(g.m)]
        if not is_elementary_cut_tension(g, pullback):
            return False
    return True


# ---------------------------------------------------------------------------
# Cayley lifts


@dataclass(frozen=True)
class CayleyLift:
    graph: Digraph
    decoder: tuple[int, ...]  # lift edge id -> target edge id
    target: Digraph
    modulus: int
    k: int

    def decode_pair(self, x: int, y: int) -> int:
        """Target edge id for the lift arc x -> y."""
        key = (x, y)
        return self._pair_index()[key]

    def _pair_index(self) -> dict[tuple[int, int], int]:
        if not hasattr(self, "_pairs"):
            pairs = {}
            for eid, (t, hd) in enumerate(self.graph.edges):
                pairs[(t, hd)] = eid
                if not self.graph.directed:
                    pairs[(hd, t)] = eid
            object.__setattr__(self, "_pairs", pairs)
        return self._pairs  # type: ignore[attr-defined]


def cayley_lift(h: Digraph, n: int, max_vertices: int = 1 << 16) -> CayleyLift:
    """Cayley graph on the n-ary tension coordinates of the target.

    Vertices are all n^k coordinate vectors; each target edge contributes
    the arc step by its coordinate vector.  Homomorphisms into the lift
    are exactly TT_n maps into the target.  Over n = 2 the lift is one
    component of the subset graph of the target.
    """
    if n < 2:
        raise GraphError("cayley lift needs modulus >= 2")
    if n != 2 and not h.directed:
        raise GraphError("orientation matters for modulus > 2")
    coords = _Coords(h, n)
    k = coords.k
    size = n**k
    if size > max_vertices:
        raise GraphError(f"lift would have {size} vertices, cap is {max_vertices}")
    gen_to_edge: dict = {}
    for eid, v in enumerate(coords.vectors):
        if v not in gen_to_edge:
            gen_to_edge[v] = eid
    gens = sorted(gen_to_edge)

    if n == 2:
        edges = []
        decoder = []
        for x in range(size):
            for v in gens:
                y = x ^ v
                if x < y:
                    edges.append((x, y))
                    decoder.append(gen_to_edge[v])
        lift = Digraph(f"lift({h.name},{n})", size, tuple(edges), directed=False)
        return CayleyLift(lift, tuple(decoder), h, n, k)

    def encode(vec: tuple[int, ...]) -> int:
        x = 0
        for c in vec:
            x = x * n + c
        return x

    def decode(x: int) -> tuple[int, ...]:
        out = []
        for _ in range(k):
            out.append(x % n)
            x //= n
        return tuple(reversed(out))

    edges = []
    decoder = []
    for x in range(size):
        base = decode(x)
        for v in gens:
            y = encode(coords.add(base, v))
            edges.append((x, y))
            decoder.append(gen_to_edge[v])
    lift = Digraph(f"lift({h.name},{n})", size, tuple(edges), directed=True)
    return CayleyLift(lift, tuple(decoder), h, n, k)


def tt_exists_via_hom(
    g: Digraph,
    h: Digraph,
    n: int,
    budget: Optional[int] = None,
    max_vertices: int = 1 << 16,
) -> tuple[bool, Optional[EdgeMap]]:
    """Decide TT_n existence by homomorphism search into the Cayley lift.

    The witness is decoded from the vertex potential and re-verified.
    Raises SearchBudgetExceeded when the hom search hits its budget.
    """
    if g.m == 0:
        return (True, EdgeMap(g, h, ()))
    if h.m == 0:
        return (False, None)
    if n != 2 and (not g.directed or not h.directed):
        raise GraphError("orientation matters for modulus > 2")
    lift = cayley_lift(h, n, max_vertices)
    gg = g
    if n == 2 and g.directed != lift.graph.directed:
        gg = Digraph(g.name, g.n, tuple(
            (min(t, hd), max(t, hd)) for t, hd in g.edges), directed=False)
    res = homs.find_hom(gg, lift.graph, budget=budget)
    if res is None:
        return (False, None)
    assign = []
    for t, hd in g.edges:
        x, y = res.assignment[t], res.assignment[hd]
        assign.append(lift.decoder[lift.decode_pair(x, y)])
    witness = EdgeMap(g, h, tuple(assign))
    if not is_tt(witness, Cyclic(n)):
        raise AssertionError("decoded lift witness failed verification")
    return (True, witness)


# ---------------------------------------------------------------------------
# existence with strategy, and order comparison


def tt_exists(
    g: Digraph,
    h: Digraph,
    group: GroupSpec | Cyclic | str,
    budget: Optional[int] = None,
    hom_budget: int = 200_000,
    lift_cap: int = 1 << 14,
) -> TTSearchResult:
    """TT existence: try a homomorphism first (it induces a TT map), then a
    hom search into a small materialized lift (forward checking prunes
    better), falling back to the potential search."""
    red = reduce_group(group)
    _require_orientable(red, g, h)
    if g.m == 0:
        return TTSearchResult("found", EdgeMap(g, h, ()), 0)
    if h.m == 0:
        return TTSearchResult("none", None, 0)
    if g.directed == h.directed:
        try:
            hom = homs.find_hom(g, h, budget=hom_budget)
        except SearchBudgetExceeded:
            hom = None
        if hom is not None:
            return TTSearchResult("found", homs.induced_map(hom), 0)
    n = red.modulus
    if n is not None and n >= 2:
        k = h.n - len(h.components)
        if n**k <= lift_cap:
            try:
                ok, witness = tt_exists_via_hom(g, h, n, budget, lift_cap)
            except SearchBudgetExceeded as exc:
                return TTSearchResult("budget", None, exc.nodes)
            return TTSearchResult("found" if ok else "none", witness, 0)
    return find_tt(g, h, red, budget)


@dataclass(frozen=True)
class CompareResult:
    relation: str  # "equivalent" | "G-below" | "H-below" | "incomparable" | "unknown"
    proof_status: str  # "exhaustive" | "budget"
    forward: TTSearchResult
    backward: TTSearchResult


def compare(
    g: Digraph,
    h: Digraph,
    group: GroupSpec | Cyclic | str,
    budget: Optional[int] = None,
) -> CompareResult:
    fwd = tt_exists(g, h, group, budget)
    bwd = tt_exists(h, g, group, budget)
    if fwd.status == "budget" or bwd.status == "budget":
        return CompareResult("unknown", "budget", fwd, bwd)
    table = {
        (True, True): "equivalent",
        (True, False): "G-below",
        (False, True): "H-below",
        (False, False): "incomparable",
    }
    rel = table[(fwd.status == "found", bwd.status == "found")]
    return CompareResult(rel, "exhaustive", fwd, bwd)


# ---------------------------------------------------------------------------
# balance invariant


def g_invariant(g: Digraph, group: GroupSpec | Cyclic | str) -> int | float:
    """Length of the shortest circuit whose orientation imbalance the group
    notices (exponent does not divide |C+| - |C-|); infinity when balanced.

    BFS over (vertex, imbalance class): the shortest unbalanced closed walk
    is a circuit, because imbalances add when a walk is split at a repeated
    vertex.
    """
    if isinstance(group, Cyclic):
        exp: int | float = group.modulus if group.modulus is not None else INFINITY
    else:
        if isinstance(group, str):
            group = parse_group(group)
        exp = exponent(group)
    if exp == 1:
        return INFINITY
    finite = exp is not INFINITY
    if not g.directed and not (finite and exp == 2):
        raise GraphError("orientation matters for this group; graph is undirected")
    best: Optional[int] = None
    edges = g.edges
    for s in range(g.n):
        seen = {(s, 0)}
        frontier = [(s, 0)]
        depth = 0
        while frontier:
            depth += 1
            if depth > g.n or (best is not None and depth >= best):
                break
            nxt = []
            for v, c in frontier:
                for eid in g.incident_edges[v]:
                    t, hd = edges[eid]
                    if v == t:
                        w, c2 = hd, c + 1
                    else:
                        w, c2 = t, c - 1
                    if finite:
                        c2 %= exp  # type: ignore[arg-type]
                    if w == s and c2 != 0:
                        if best is None or depth < best:
                            best = depth
                    state = (w, c2)
                    if state not in seen:
                        seen.add(state)
                        nxt.append(state)
            frontier = nxt
    return INFINITY if best is None else best


# ---------------------------------------------------------------------------
# TT(G,H) over all maps


@dataclass(frozen=True)
class TTSet:
    """TT(G,H) truncated at nmax; `complete` means the truncation is proven."""

    members: tuple[int, ...]
    nmax: int
    all_n: bool
    status: str  # "exhaustive" | "unknown"


def _circuit_lengths(g: Digraph) -> Optional[list[int]]:
    """Component lengths when every component is a consistently oriented
    circuit, else None."""
    if not g.directed or g.n == 0:
        return None
    lengths = []
    for comp in g.components:
        if any(len(g.out_edges[v]) != 1 or len(g.in_edges[v]) != 1 for v in comp):
            return None
        lengths.append(len(comp))
    if sum(lengths) != g.m:
        return None
    return sorted(lengths)


def tt_set(g: Digraph, h: Digraph, nmax: int = 30, map_cap: int = 10**8) -> TTSet:
    """The set {n <= nmax : some TT_n map g -> h exists}.

    Exact for circuit unions (integer-cone criterion) and for instances
    small enough to enumerate every edge map; otherwise status "unknown".
    """
    if g.m == 0:
        return TTSet(tuple(range(1, nmax + 1)), nmax, True, "exhaustive")
    if h.m == 0:
        return TTSet((), nmax, False, "exhaustive")
    a_lengths = _circuit_lengths(g)
    b_lengths = _circuit_lengths(h)
    if a_lengths is not None and b_lengths is not None:
        from .deltas import integer_cone_member

        all_n = all(integer_cone_member(a, b_lengths, None) for a in a_lengths)
        members = tuple(
            n
            for n in range(1, nmax + 1)
            if all(integer_cone_member(a, b_lengths, n) for a in a_lengths)
        )
        return TTSet(members, nmax, all_n, "exhaustive")
    if h.m**g.m <= map_cap:
        found: set[int] = set()
        all_n = False
        full = set(range(1, nmax + 1))
        for assignment in itertools.product(range(h.m), repeat=g.m):
            ds = tt_divisor_set(EdgeMap(g, h, assignment))
            if ds.kind == "all":
                all_n = True
                found = full
                break
            found.update(x for x in ds.members() if x <= nmax)
            if found == full:
                break
        return TTSet(tuple(sorted(found)), nmax, all_n, "exhaustive")
    return TTSet((), nmax, False, "unknown")
