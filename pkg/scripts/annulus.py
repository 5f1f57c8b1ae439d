"""Pentagon-annulus candidates: inner cycle, outer cycle, N spokes; each
face between consecutive spokes is a pentagon (outer_i + inner_i = 3).
Gap patterns with no cyclic/reflective symmetry kill rim automorphisms."""
import itertools
import sys
import time

sys.path.insert(0, "src")
import ttgraph as tg
from ttgraph.groups import Cyclic
from ttgraph.homs import SearchBudgetExceeded
from ttgraph.deltas import has_triangle, _induced_p4


def annulus(gaps):
    """gaps[i] = (outer_i, inner_i) arc lengths between spoke i and i+1."""
    n_sp = len(gaps)
    outer_starts = []
    pos = 0
    for o, _i in gaps:
        outer_starts.append(pos)
        pos += o
    outer_len = pos
    inner_starts = []
    pos = 0
    for _o, i in gaps:
        inner_starts.append(pos)
        pos += i
    inner_len = pos
    if outer_len < 3 or inner_len < 3:
        return None
    edges = []
    for j in range(outer_len):
        edges.append((j, (j + 1) % outer_len))
    off = outer_len
    for j in range(inner_len):
        edges.append((off + j, off + (j + 1) % inner_len))
    for k in range(n_sp):
        edges.append((outer_starts[k], off + inner_starts[k]))
    try:
        return tg.undirected(f"annulus{gaps}", outer_len + inner_len, edges)
    except Exception:
        return None


def girth(g):
    best = None
    for c in tg.enumerate_circuits(g, g.n):
        if best is None or len(c) < best:
            best = len(c)
    return best


def canonical_cyclic(seq):
    n = len(seq)
    cands = []
    for rev in (seq, seq[::-1]):
        for r in range(n):
            cands.append(tuple(rev[r:] + rev[:r]))
    return min(cands)


def main():
    budget = int(sys.argv[1]) if len(sys.argv) > 1 else 30_000_000
    t0 = time.time()
    seen = set()
    options = [(1, 2), (2, 1), (3, 0), (0, 3)]
    for n_sp in (6, 7, 8, 9):
        for combo in itertools.product(options, repeat=n_sp):
            if sum(o for o, _ in combo) < 5 or sum(i for _, i in combo) < 5:
                continue
            key = canonical_cyclic(list(combo))
            if key in seen:
                continue
            seen.add(key)
            g = annulus(list(combo))
            if g is None or has_triangle(g) or len(g.components) != 1:
                continue
            gi = girth(g)
            if gi is None or gi < 5:
                continue
            if _induced_p4(g) is None:
                continue
            t1 = time.time()
            try:
                rigid = tg.is_tt_rigid(g, Cyclic(2), budget=budget)
                res = "RIGID" if rigid else "self-map"
            except SearchBudgetExceeded:
                res = "budget"
            print(f"gaps={combo} n={g.n} m={g.m} girth={gi} -> {res} ({time.time()-t1:.1f}s)", flush=True)
            if res == "RIGID":
                print("EDGES", list(g.edges), flush=True)
                return
            if time.time() - t0 > 3000:
                print("time up", flush=True)
                return
    print(f"done {time.time()-t0:.0f}s", flush=True)


if __name__ == "__main__":
    main()
