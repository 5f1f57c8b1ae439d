"""Hunt v2: maximal girth-5, degree in [3,4], 3-edge-connected, trivial Aut."""
import itertools
import random
import sys
import time

sys.path.insert(0, "src")
sys.path.insert(0, "scripts")
import ttgraph as tg
from ttgraph.groups import Cyclic
from ttgraph.homs import SearchBudgetExceeded
from ttgraph.deltas import has_triangle, _induced_p4
from hunt_rigid import has_nontrivial_automorphism


def sample_girth5_capped(n, rng, maxdeg):
    adj = [set() for _ in range(n)]
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)

    def dist_ok(u, v):
        dist = {u: 0}
        frontier = [u]
        for d in range(1, 4):
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y not in dist:
                        dist[y] = d
                        nxt.append(y)
            frontier = nxt
        return v not in dist

    progress = True
    while progress:
        progress = False
        for u, v in pairs:
            if v in adj[u] or len(adj[u]) >= maxdeg or len(adj[v]) >= maxdeg:
                continue
            if dist_ok(u, v):
                adj[u].add(v)
                adj[v].add(u)
                progress = True
    edges = [(u, v) for u in range(n) for v in adj[u] if u < v]
    return tg.undirected("cand", n, edges)


def three_edge_connected(g):
    if len(g.components) != 1:
        return False

    def connected_without(banned):
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for eid in g.incident_edges[v]:
                if eid in banned:
                    continue
                w = g.other_end(eid, v)
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == g.n

    for e1 in range(g.m):
        if not connected_without({e1}):
            return False
    for e1 in range(g.m):
        for e2 in range(e1 + 1, g.m):
            if not connected_without({e1, e2}):
                return False
    return True


def main():
    seed = int(sys.argv[1])
    sizes = [int(x) for x in sys.argv[2].split(",")]
    minutes = float(sys.argv[3])
    rng = random.Random(seed)
    t0 = time.time()
    stats = dict(tried=0, deg=0, conn=0, aut=0, selfmap=0, budget=0)
    while time.time() - t0 < minutes * 60:
        n = rng.choice(sizes)
        g = sample_girth5_capped(n, rng, maxdeg=rng.choice([3, 4, 4]))
        if min((g.degree(v) for v in range(g.n)), default=0) < 3:
            stats["deg"] += 1
            continue
        if not three_edge_connected(g):
            stats["conn"] += 1
            continue
        if _induced_p4(g) is None or has_triangle(g):
            continue
        stats["tried"] += 1
        if has_nontrivial_automorphism(g):
            stats["aut"] += 1
            continue
        try:
            if tg.is_tt_rigid(g, Cyclic(2), budget=50_000_000):
                print(f"RIGID seed={seed} n={g.n} m={g.m}")
                print("EDGES", list(g.edges), flush=True)
                return
            stats["selfmap"] += 1
        except SearchBudgetExceeded:
            stats["budget"] += 1
    print(f"seed={seed} {stats} {time.time()-t0:.0f}s", flush=True)


if __name__ == "__main__":
    main()
