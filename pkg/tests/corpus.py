"""Shared test corpora: named graphs, exhaustive isomorphism-free
enumerations (atlas up to 7 vertices, canonical extension to 8), and
seeded random graph families.
"""

import random
from functools import lru_cache
from itertools import combinations

import networkx as nx

from twinwidth.graphs import Graph, graph_from_edges
from twinwidth.structure import has_ktt


@lru_cache(maxsize=None)
def atlas_graphs(max_n: int) -> tuple[Graph, ...]:
    """All graphs with 1..max_n vertices up to isomorphism (max_n <= 7)."""
    if max_n > 7:
        raise ValueError("the atlas stops at 7 vertices")
    out = []
    for ag in nx.graph_atlas_g()[1:]:
        if ag.number_of_nodes() > max_n:
            continue
        out.append(graph_from_edges(ag.number_of_nodes(), ag.edges()))
    return tuple(out)


# ------------------------- canonical forms for the 8-vertex enumeration


def _refine(adj: list[set[int]], colors: tuple[int, ...]) -> tuple[int, ...]:
    while True:
        sig = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(len(adj))]
        rank = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = tuple(rank[s] for s in sig)
        if new == colors:
            return new
        colors = new


def _code(n: int, edges, perm: list[int]) -> int:
    c = 0
    for u, v in edges:
        a, b = perm[u], perm[v]
        if a > b:
            a, b = b, a
        c |= 1 << (a * n + b)
    return c


def canonical_code(g: Graph) -> int:
    """Order-independent integer encoding via individualization-refinement."""
    n = g.n
    adj = [set(g.adj[v]) for v in range(n)]
    edges = sorted(g.edges)
    best = None

    def search(colors: tuple[int, ...]) -> None:
        nonlocal best
        classes: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            classes.setdefault(c, []).append(v)
        target = next((c for c in sorted(classes) if len(classes[c]) > 1), None)
        if target is None:
            perm = [0] * n
            for pos, v in enumerate(sorted(range(n), key=lambda v: colors[v])):
                perm[v] = pos
            code = _code(n, edges, perm)
            if best is None or code < best:
                best = code
            return
        for v in classes[target]:
            marked = tuple((c, 0 if u == v else 1) for u, c in enumerate(colors))
            rank = {s: i for i, s in enumerate(sorted(set(marked)))}
            search(_refine(adj, tuple(rank[s] for s in marked)))

    search(_refine(adj, (0,) * n))
    return best if best is not None else 0


@lru_cache(maxsize=None)
def graphs_with_8_vertices() -> tuple[Graph, ...]:
    """All 12346 graphs on exactly 8 vertices, by canonical extension of
    the 7-vertex atlas."""
    seen: set[int] = set()
    out: list[Graph] = []
    for g7 in atlas_graphs(7):
        if g7.n != 7:
            continue
        base = sorted(g7.edges)
        for mask in range(256):
            extra = [(v, 7) for v in range(8) if mask >> v & 1 and v < 7]
            if mask >> 7 & 1:
                continue
            g = graph_from_edges(8, base + extra)
            code = canonical_code(g)
            if code not in seen:
                seen.add(code)
                out.append(g)
    return tuple(out)


@lru_cache(maxsize=None)
def graphs_up_to_8() -> tuple[Graph, ...]:
    return atlas_graphs(7) + graphs_with_8_vertices()


# ------------------------------------------------------- random corpora


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.uniform(0.1, 0.9)
    return graph_from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_graphs(seed: int, count: int, n_max: int, n_min: int = 1) -> list[Graph]:
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(n_min, n_max)) for _ in range(count)]


def random_ktt_free(rng: random.Random, n: int, t: int = 2, p: float = 0.4) -> Graph:
    """Random graph thinned until no K_{t,t} remains (deterministic repair)."""
    g = random_graph(rng, n, p)
    while True:
        hit = has_ktt(g, t)
        if hit is None:
            return g
        a, b = hit
        g = graph_from_edges(n, g.edges - {tuple(sorted((a[0], b[0])))})


def random_partition(rng: random.Random, n: int):
    """Uniform-ish random partition blocks of 0..n-1."""
    blocks: list[set[int]] = []
    for v in range(n):
        i = rng.randint(0, len(blocks))
        if i == len(blocks):
            blocks.append({v})
        else:
            blocks[i].add(v)
    return blocks


def random_tree(rng: random.Random, n: int) -> Graph:
    return graph_from_edges(n, [(rng.randrange(i), i) for i in range(1, n)])
