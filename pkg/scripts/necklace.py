"""Pentagon-necklace candidates for TT_2-rigid triangle-free graphs.

A necklace chains N pentagons in a cycle; consecutive pentagons share a
path of 1 or 2 edges per the pattern.  Asymmetric patterns kill the
obvious automorphisms; pentagon-to-pentagon rigidity does the rest.
"""
import itertools
import sys
import time

sys.path.insert(0, "src")
import ttgraph as tg
from ttgraph.groups import Cyclic
from ttgraph.homs import SearchBudgetExceeded
from ttgraph.deltas import has_triangle, _induced_p4


def necklace(pattern):
    """pattern[i] = edges shared between pentagon i and pentagon i+1 (1 or 2).

    Pentagon i consists of: shared path S_{i-1} (with pentagon i-1), a free
    path, and shared path S_i.  Build shared paths first, then connect.
    """
    n_pent = len(pattern)
    # shared path i has pattern[i] edges -> pattern[i]+1 vertices
    shared = []
    counter = 0
    for s in pattern:
        verts = list(range(counter, counter + s + 1))
        counter += s + 1
        shared.append(verts)
    edges = []
    for verts in shared:
        edges.extend((verts[j], verts[j + 1]) for j in range(len(verts) - 1))
    # pentagon i uses shared[i-1] and shared[i]; needs 5 - s_{i-1} - s_i own
    # edges forming a path from the free end of shared[i-1] to the free end
    # of shared[i].  Orient: pentagon i runs ... along shared[i-1] from its
    # start to end, free path, then shared[i] end to start.
    for i in range(n_pent):
        a = shared[(i - 1) % n_pent]
        b = shared[i]
        own = 5 - (len(a) - 1) - (len(b) - 1)
        if own < 1:
            return None
        # path from a[-1] to b[0] with own edges -> own-1 fresh vertices
        fresh = list(range(counter, counter + own - 1))
        counter += own - 1
        chain = [a[-1]] + fresh + [b[0]]
        edges.extend((chain[j], chain[j + 1]) for j in range(len(chain) - 1))
    try:
        return tg.undirected(f"necklace{pattern}", counter, edges)
    except Exception:
        return None


def check(g, budget=30_000_000):
    if g is None or has_triangle(g) or len(g.components) != 1:
        return "bad"
    if _induced_p4(g) is None:
        return "nomarks"
    try:
        return "RIGID" if tg.is_tt_rigid(g, Cyclic(2), budget=budget) else "self-map"
    except SearchBudgetExceeded:
        return "budget"


def main():
    t0 = time.time()
    tried = 0
    for n_pent in (7, 8, 9, 10):
        for twos in itertools.combinations(range(n_pent), 3):
            pattern = tuple(2 if i in twos else 1 for i in range(n_pent))
            # canonical representative of the cyclic class only
            rots = [pattern[i:] + pattern[:i] for i in range(n_pent)]
            if min(rots) != pattern:
                continue
            g = necklace(pattern)
            if g is None:
                continue
            tried += 1
            t1 = time.time()
            res = check(g)
            print(f"pattern={pattern} n={g.n} m={g.m} -> {res} ({time.time()-t1:.1f}s)", flush=True)
            if res == "RIGID":
                print("EDGES", list(g.edges), flush=True)
                return
        if time.time() - t0 > 500:
            break
    print(f"tried {tried}, {time.time()-t0:.0f}s")


if __name__ == "__main__":
    main()
