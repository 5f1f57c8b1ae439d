"""Tensions and flows on a graph over Z or Z_n.

A tension has zero signed sum around every circuit (equivalently it is a
potential difference), a flow conserves in-sum = out-sum at every vertex.
Membership tests work off fundamental circuits: signed circuit sums are
linear in the circuit's incidence vector, and fundamental circuits
generate all of them integrally.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .graphs import Circuit, Digraph, GraphError, fundamental_circuits, spanning_forest
from .groups import Cyclic, CYCLIC_Z


@dataclass(frozen=True)
class EdgeFunction:
    """Total integer labeling of a graph's edges, values[eid]."""

    graph: Digraph
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.graph.m:
            raise GraphError(
                f"edge function has {len(self.values)} values for {self.graph.m} edges"
            )

    def __getitem__(self, eid: int) -> int:
        return self.values[eid]

    def reduced(self, group: Cyclic) -> "EdgeFunction":
        return EdgeFunction(self.graph, tuple(group.normalize(v) for v in self.values))

    def to_text(self) -> str:
        return "\n".join(f"{e} {v}" for e, v in enumerate(self.values)) + "\n"


def edge_function(g: Digraph, values: Mapping[int, int] | Iterable[int]) -> EdgeFunction:
    if isinstance(values, Mapping):
        missing = [e for e in range(g.m) if e not in values]
        if missing:
            raise GraphError(f"edge function missing edges {missing}")
        return EdgeFunction(g, tuple(int(values[e]) for e in range(g.m)))
    return EdgeFunction(g, tuple(int(v) for v in values))


def parse_edge_function(g: Digraph, text: str) -> EdgeFunction:
    vals: dict[int, int] = {}
    for lineno, ln in enumerate(text.strip().splitlines(), start=1):
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: want `<edgeId> <value>`")
        vals[int(parts[0])] = int(parts[1])
    return edge_function(g, vals)


def circuit_sum(c: Circuit, f: EdgeFunction) -> int:
    return sum(sign * f[e] for e, sign in c.steps)


def is_tension(g: Digraph, tau: EdgeFunction, group: Cyclic = CYCLIC_Z) -> bool:
    """Signed sum around every circuit vanishes; fundamental circuits suffice."""
    if tau.graph is not g and tau.graph != g:
        raise GraphError("edge function belongs to another graph")
    return all(group.is_zero(circuit_sum(c, tau)) for c in fundamental_circuits(g))


def vertex_defect(g: Digraph, phi: EdgeFunction, v: int) -> int:
    """in-sum minus out-sum at v (zero for a flow)."""
    return sum(phi[e] for e in g.in_edges[v]) - sum(phi[e] for e in g.out_edges[v])


def is_flow(g: Digraph, phi: EdgeFunction, group: Cyclic = CYCLIC_Z) -> bool:
    if phi.graph is not g and phi.graph != g:
        raise GraphError("edge function belongs to another graph")
    return all(group.is_zero(vertex_defect(g, phi, v)) for v in range(g.n))


def potential_tension(
    g: Digraph, p: Mapping[int, int] | Iterable[int], group: Cyclic = CYCLIC_Z
) -> EdgeFunction:
    """The difference function of a vertex potential: value p(head) - p(tail)."""
    if not isinstance(p, Mapping):
        p = {v: x for v, x in enumerate(p)}
    missing = [v for v in range(g.n) if v not in p]
    if missing:
        raise GraphError(f"potential missing vertices {missing}")
    vals = tuple(group.normalize(p[h] - p[t]) for t, h in g.edges)
    return EdgeFunction(g, vals)


def elementary_tension(
    g: Digraph, side: Iterable[int], a: int = 1, group: Cyclic = CYCLIC_Z
) -> EdgeFunction:
    """+a on edges leaving the side, -a on edges entering it, 0 elsewhere."""
    x = set(side)
    vals = []
    for t, h in g.edges:
        if t in x and h not in x:
            vals.append(group.normalize(a))
        elif h in x and t not in x:
            vals.append(group.normalize(-a))
        else:
            vals.append(0)
    return EdgeFunction(g, tuple(vals))


def integrate_potential(g: Digraph, tau: EdgeFunction) -> Optional[list[int]]:
    """A vertex potential p with p(head)-p(tail) = tau, roots at 0; None if
    tau is not a tension over Z."""
    forest = spanning_forest(g)
    p: list[Optional[int]] = [None] * g.n
    for r in forest.roots:
        p[r] = 0
    order = sorted(range(g.n), key=lambda v: _depth(forest, v))
    for v in order:
        if forest.parent[v] is None:
            continue
        pv, eid, orient = forest.parent[v]
        # orient +1: edge points parent -> v
        p[v] = p[pv] + orient * tau[eid]
    for eid, (t, h) in enumerate(g.edges):
        if p[h] - p[t] != tau[eid]:
            return None
    return [x for x in p]  # type: ignore[misc]


def _depth(forest, v: int) -> int:
    d = 0
    while forest.parent[v] is not None:
        v = forest.parent[v][0]
        d += 1
    return d


def is_tension_by_potential(g: Digraph, tau: EdgeFunction, group: Cyclic = CYCLIC_Z) -> bool:
    """Independent route: integrate along the forest, then verify every edge."""
    forest = spanning_forest(g)
    p: list[int] = [0] * g.n
    order = sorted(range(g.n), key=lambda v: _depth(forest, v))
    for v in order:
        if forest.parent[v] is None:
            continue
        pv, eid, orient = forest.parent[v]
        p[v] = group.normalize(p[pv] + orient * tau[eid])
    return all(
        group.is_zero(p[h] - p[t] - tau[eid]) for eid, (t, h) in enumerate(g.edges)
    )


def flow_basis(g: Digraph) -> list[EdgeFunction]:
    """Unit circulation of each fundamental circuit of a fixed spanning forest.

    Every flow over Z or Z_n is the combination of these with coefficients
    read off the non-tree edges.
    """
    basis = []
    for c in fundamental_circuits(g):
        vals = [0] * g.m
        for e, sign in c.steps:
            vals[e] = sign
        basis.append(EdgeFunction(g, tuple(vals)))
    return basis
