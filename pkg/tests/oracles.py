"""Independent reference implementations used only to check the package.

Kept deliberately naive and separate from the library code paths: the
twin-width brute force enumerates raw (u,v)-choice trees with no
memoization; the tree-width oracle is a top-down set-based recursion; the
separator oracle enumerates vertex subsets exhaustively.
"""

from functools import lru_cache
from itertools import combinations, permutations

from twinwidth.graphs import Graph


# ------------------------------------------------- twin-width brute force


def bf_decide_twinwidth(g: Graph, d: int) -> bool:
    """Plain DFS over every contraction choice, pruning only on red degree."""
    n = g.n
    if n <= 1:
        return True
    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    parts = [(1 << v, adj[v], adj[v]) for v in range(n)]

    def red(a, b) -> bool:
        if not (a[1] & b[0]):
            return False
        return (a[2] & b[0]) != b[0] or (b[2] & a[0]) != a[0]

    def rec(cur: list, reds: list[int]) -> bool:
        p = len(cur)
        if p == 1:
            return True
        for i in range(p):
            for j in range(i + 1, p):
                merged = (cur[i][0] | cur[j][0], cur[i][1] | cur[j][1], cur[i][2] & cur[j][2])
                nparts = []
                nreds = []
                ok = True
                mmask = 0
                pos = 0
                for x in range(p):
                    if x in (i, j):
                        continue
                    r = reds[x]
                    m2 = 0
                    for y in range(p):
                        if y in (i, j) or not (r >> y & 1):
                            continue
                        m2 |= 1 << (y - (y > i) - (y > j))
                    deg = bin(m2).count("1")
                    if red(cur[x], merged):
                        m2 |= 1 << (p - 2)
                        mmask |= 1 << pos
                        deg += 1
                    if deg > d:
                        ok = False
                        break
                    nparts.append(cur[x])
                    nreds.append(m2)
                    pos += 1
                if not ok or bin(mmask).count("1") > d:
                    continue
                nparts.append(merged)
                nreds.append(mmask)
                if rec(nparts, nreds):
                    return True
        return False

    return rec(parts, [0] * n)


def bf_twinwidth(g: Graph) -> int:
    d = 0
    while not bf_decide_twinwidth(g, d):
        d += 1
    return d


# ----------------------------------------------------- tree-width oracle


def oracle_treewidth(g: Graph) -> int:
    """Top-down min-over-elimination-orders recursion on vertex sets."""
    n = g.n
    if n == 0:
        return -1
    adj = {v: frozenset(g.adj[v]) for v in range(n)}

    def back_degree(eliminated: frozenset, v: int) -> int:
        seen = {v}
        stack = [v]
        out = set()
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w in seen:
                    continue
                if w in eliminated:
                    seen.add(w)
                    stack.append(w)
                else:
                    out.add(w)
        return len(out)

    @lru_cache(maxsize=None)
    def rec(eliminated: frozenset) -> int:
        if len(eliminated) == n:
            return -1
        best = None
        for v in range(n):
            if v in eliminated:
                continue
            w = max(back_degree(eliminated, v), rec(eliminated | {v}))
            if best is None or w < best:
                best = w
        return best

    return rec(frozenset())


# -------------------------------------------------------- separator oracle


def separates(g: Graph, A, B, S) -> bool:
    """True iff G - S has no A-B path (a vertex of A & B outside S is a path)."""
    A = set(A) - set(S)
    B = set(B) - set(S)
    if A & B:
        return False
    seen = set(A)
    stack = list(A)
    while stack:
        u = stack.pop()
        if u in B:
            return False
        for w in g.adj[u]:
            if w not in S and w not in seen:
                seen.add(w)
                stack.append(w)
    return True


def min_separator_exhaustive(g: Graph, A, B) -> int:
    for size in range(g.n + 1):
        for S in combinations(range(g.n), size):
            if separates(g, A, B, S):
                return size
    raise AssertionError("removing every vertex always separates")


# ----------------------------------------------------------- small checks


def has_induced_p4(g: Graph) -> bool:
    for quad in combinations(range(g.n), 4):
        for a, b, c, d in permutations(quad):
            need = ((a, b), (b, c), (c, d))
            bad = ((a, c), (a, d), (b, d))
            if all(g.has_edge(u, v) for u, v in need) and not any(g.has_edge(u, v) for u, v in bad):
                return True
    return False


def bf_has_k22(g: Graph) -> bool:
    for a in combinations(range(g.n), 2):
        for b in combinations(sorted(set(range(g.n)) - set(a)), 2):
            if all(g.has_edge(u, v) for u in a for v in b):
                return True
    return False
