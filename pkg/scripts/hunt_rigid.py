"""Hunt for triangle-free TT_2-rigid graphs among maximal girth-5 samples."""
import itertools
import random
import sys
import time

sys.path.insert(0, "src")
import ttgraph as tg
from ttgraph.groups import Cyclic
from ttgraph.homs import SearchBudgetExceeded
from ttgraph.deltas import _induced_p4


def girth_ok(adj, n, u, v, max_forbidden=4):
    """Would edge (u,v) close a cycle of length <= 4? BFS from u up to dist 3."""
    dist = {u: 0}
    frontier = [u]
    for d in range(1, max_forbidden):
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y not in dist:
                    dist[y] = d
                    nxt.append(y)
        frontier = nxt
    return v not in dist  # dist(u,v) >= 4 before adding, so new cycle >= 5


def sample_max_girth5(n, rng):
    adj = [set() for _ in range(n)]
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    edges = []
    progress = True
    while progress:
        progress = False
        for u, v in pairs:
            if v in adj[u]:
                continue
            if girth_ok(adj, n, u, v):
                adj[u].add(v)
                adj[v].add(u)
                edges.append((u, v))
                progress = True
    return tg.undirected("cand", n, edges)


def has_nontrivial_automorphism(g, cap_nodes=200000):
    """Quick backtracking for a non-identity automorphism."""
    n = g.n
    adj = [set() for _ in range(n)]
    for t, h in g.edges:
        adj[t].add(h)
        adj[h].add(t)
    deg = [len(a) for a in adj]
    order = sorted(range(n), key=lambda v: (-deg[v], v))
    assigned = {}
    used = set()
    nodes = [0]

    def ok(u, x):
        if deg[u] != deg[x]:
            return False
        for v, y in assigned.items():
            if (v in adj[u]) != (y in adj[x]):
                return False
        return True

    def place(i, identity_so_far):
        nodes[0] += 1
        if nodes[0] > cap_nodes:
            return True  # assume worst
        if i == n:
            return not identity_so_far
        u = order[i]
        for x in range(n):
            if x in used or not ok(u, x):
                continue
            assigned[u] = x
            used.add(x)
            if place(i + 1, identity_so_far and x == u):
                return True
            del assigned[u]
            used.discard(x)
        return False

    return place(0, True)


def main():
    seed = int(sys.argv[1])
    sizes = [int(x) for x in sys.argv[2].split(",")]
    minutes = float(sys.argv[3]) if len(sys.argv) > 3 else 10
    budget = 20_000_000
    rng = random.Random(seed)
    t0 = time.time()
    tried = auto_rej = budget_hits = 0
    while time.time() - t0 < minutes * 60:
        n = rng.choice(sizes)
        g = sample_max_girth5(n, rng)
        if len(g.components) != 1 or _induced_p4(g) is None:
            continue
        tried += 1
        if has_nontrivial_automorphism(g):
            auto_rej += 1
            continue
        try:
            t1 = time.time()
            if tg.is_tt_rigid(g, Cyclic(2), budget=budget):
                print(f"RIGID seed={seed} n={g.n} m={g.m} check={time.time()-t1:.1f}s")
                print("EDGES", list(g.edges), flush=True)
        except SearchBudgetExceeded:
            budget_hits += 1
    print(
        f"seed={seed} sizes={sizes}: tried={tried} auto_rej={auto_rej} "
        f"budget_hits={budget_hits} elapsed={time.time()-t0:.0f}s",
        flush=True,
    )


if __name__ == "__main__":
    main()
