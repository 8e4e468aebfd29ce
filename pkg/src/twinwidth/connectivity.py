"""Vertex-disjoint A-B paths and minimum vertex separators.

Unit vertex capacities via the standard in/out splitting; augmenting-path
max-flow with deterministic vertex-order scanning.  The path count always
equals the separator size, and a vertex in both A and B counts as a
zero-length path that occupies the vertex.
"""

from collections import deque

from .graphs import Graph

_INF = 1 << 30


class _VertexFlow:
    """Flow network: source -> v_in -> v_out -> sink, vertex arcs cap 1."""

    def __init__(self, g: Graph, A, B, within):
        self.g = g
        allowed = set(range(g.n)) if within is None else set(within)
        for side, name in ((A, "A"), (B, "B")):
            for v in side:
                g._check(v)
                if v not in allowed:
                    raise ValueError(f"{name} contains vertex {v} outside the allowed set")
        if not A or not B:
            raise ValueError("A and B must be nonempty")
        self.allowed = allowed
        self.A = frozenset(A)
        self.B = frozenset(B)
        # node ids: 0 = source, 1 = sink, v_in = 2+2v, v_out = 3+2v
        self.cap: dict[tuple[int, int], int] = {}
        for v in sorted(allowed):
            self._add(2 + 2 * v, 3 + 2 * v, 1)
        for u, v in sorted(g.edges):
            if u in allowed and v in allowed:
                self._add(3 + 2 * u, 2 + 2 * v, _INF)
                self._add(3 + 2 * v, 2 + 2 * u, _INF)
        for a in sorted(self.A):
            self._add(0, 2 + 2 * a, _INF)
        for b in sorted(self.B):
            self._add(3 + 2 * b, 1, _INF)
        self.out: dict[int, list[int]] = {}
        for x, y in self.cap:
            self.out.setdefault(x, []).append(y)
            self.out.setdefault(y, []).append(x)  # reverse residual arcs
        self.out = {x: sorted(set(ys)) for x, ys in self.out.items()}
        self.flow: dict[tuple[int, int], int] = {e: 0 for e in self.cap}

    def _add(self, x: int, y: int, c: int) -> None:
        self.cap[(x, y)] = self.cap.get((x, y), 0) + c

    def _residual(self, x: int, y: int) -> int:
        r = 0
        if (x, y) in self.cap:
            r += self.cap[(x, y)] - self.flow[(x, y)]
        if (y, x) in self.cap:
            r += self.flow[(y, x)]
        return r

    def _push(self, x: int, y: int, amount: int) -> None:
        if (x, y) in self.cap and self.cap[(x, y)] - self.flow[(x, y)] > 0:
            d = min(amount, self.cap[(x, y)] - self.flow[(x, y)])
            self.flow[(x, y)] += d
            amount -= d
        if amount:
            self.flow[(y, x)] -= amount

    def max_flow(self) -> int:
        total = 0
        while True:
            parent = {0: 0}
            queue = deque([0])
            while queue and 1 not in parent:
                x = queue.popleft()
                for y in self.out.get(x, []):
                    if y not in parent and self._residual(x, y) > 0:
                        parent[y] = x
                        queue.append(y)
            if 1 not in parent:
                return total
            y = 1
            while y != 0:
                x = parent[y]
                self._push(x, y, 1)
                y = x
            total += 1

    def source_side(self) -> set[int]:
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for y in self.out.get(x, []):
                if y not in seen and self._residual(x, y) > 0:
                    seen.add(y)
                    queue.append(y)
        return seen

    def paths(self) -> list[list[int]]:
        """Decompose the integral flow into vertex paths."""
        used = dict(self.flow)
        result = []
        while True:
            # trace one unit from the source along positive flow arcs
            start = None
            for y in self.out.get(0, []):
                if used.get((0, y), 0) > 0:
                    start = y
                    break
            if start is None:
                break
            used[(0, start)] -= 1
            node, path = start, []
            while node != 1:
                if node >= 2 and node % 2 == 0:
                    path.append((node - 2) // 2)
                nxt = None
                for y in self.out.get(node, []):
                    if used.get((node, y), 0) > 0:
                        nxt = y
                        break
                if nxt is None:
                    raise AssertionError("flow decomposition lost a unit")
                used[(node, nxt)] -= 1
                node = nxt
            result.append(path)
        return sorted(result)


def _solve(g: Graph, A, B, within):
    net = _VertexFlow(g, A, B, within)
    value = net.max_flow()
    return net, value


def max_disjoint_paths(g: Graph, A, B, within=None) -> tuple[int, list[list[int]]]:
    """Maximum family of pairwise vertex-disjoint A-B paths.

    Returns (count, paths); each path is a vertex list starting in A and
    ending in B (a single vertex for members of A & B).  `within`
    restricts the search to an induced subgraph.
    """
    net, value = _solve(g, A, B, within)
    paths = net.paths()
    if len(paths) != value:
        raise AssertionError("path decomposition does not match the flow value")
    seen: set[int] = set()
    for p in paths:
        if not p or p[0] not in net.A or p[-1] not in net.B:
            raise AssertionError("extracted path does not run from A to B")
        if seen & set(p):
            raise AssertionError("extracted paths share a vertex")
        seen |= set(p)
    return value, paths


def min_vertex_cut(g: Graph, A, B, within=None) -> frozenset[int]:
    """A minimum vertex set meeting every A-B path (may include A or B vertices)."""
    net, value = _solve(g, A, B, within)
    side = net.source_side()
    cut = frozenset(
        v for v in net.allowed if (2 + 2 * v) in side and (3 + 2 * v) not in side
    )
    if len(cut) != value:
        raise AssertionError("max-flow/min-cut mismatch")
    return cut
