"""Exact tree-width at desk scale, with verified tree decompositions.

The solver searches elimination orderings as a memoized dynamic program
over vertex subsets (the set of already-eliminated vertices), pruned by a
degeneracy-style lower bound, a stuck-vertex count, and a greedy min-fill
upper bound.  Every decomposition it emits is rebuilt from the ordering
and re-checked by the literal three-condition verifier.
"""

from dataclasses import dataclass
from functools import cached_property

from .graphs import Graph, pair


class BudgetExceeded(RuntimeError):
    """Raised when a bounded search runs out of its state budget."""


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags on a tree; width is max bag size minus one."""

    bags: tuple[tuple[int, frozenset[int]], ...]
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def by_id(self) -> dict[int, frozenset[int]]:
        return dict(self.bags)

    @property
    def width(self) -> int:
        return max((len(b) for _, b in self.bags), default=0) - 1


@dataclass(frozen=True)
class TDReport:
    valid: bool
    width: int | None
    violation: str | None


def verify_tree_decomposition(g: Graph, td: TreeDecomposition) -> TDReport:
    """Check the three decomposition conditions literally, plus treeness."""
    ids = [i for i, _ in td.bags]
    if len(set(ids)) != len(ids):
        return TDReport(False, None, "duplicate bag id")
    idset = set(ids)
    for a, b in td.edges:
        if a not in idset or b not in idset:
            return TDReport(False, None, f"tree edge ({a},{b}) uses an unknown bag")
    if len(td.edges) != len(ids) - 1:
        return TDReport(False, None, f"{len(ids)} bags need {len(ids) - 1} tree edges, got {len(td.edges)}")
    nbrs: dict[int, set[int]] = {i: set() for i in ids}
    for a, b in td.edges:
        nbrs[a].add(b)
        nbrs[b].add(a)
    if ids:
        seen = {ids[0]}
        stack = [ids[0]]
        while stack:
            for y in nbrs[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if seen != idset:
            return TDReport(False, None, "bag tree is disconnected")
    covered: set[int] = set()
    for _, bag in td.bags:
        covered |= bag
        for v in bag:
            if not (0 <= v < g.n):
                return TDReport(False, None, f"bag vertex {v} out of range")
    if covered != set(range(g.n)):
        missing = sorted(set(range(g.n)) - covered)
        return TDReport(False, None, f"vertices {missing} are in no bag")
    for u, v in sorted(g.edges):
        if not any(u in bag and v in bag for _, bag in td.bags):
            return TDReport(False, None, f"edge ({u},{v}) is in no bag")
    for v in range(g.n):
        holding = [i for i, bag in td.bags if v in bag]
        hold = set(holding)
        seen = {holding[0]}
        stack = [holding[0]]
        while stack:
            for y in nbrs[stack.pop()]:
                if y in hold and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if seen != hold:
            return TDReport(False, None, f"bags holding vertex {v} are not connected in the tree")
    return TDReport(True, td.width, None)


# ------------------------------------------------------- elimination core


def _adj_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _fill_degree(adj: list[int], eliminated: int, v: int) -> int:
    """Neighbours of v outside `eliminated`, reachable through it."""
    vbit = 1 << v
    seen = vbit
    grow = adj[v]
    while True:
        inside = grow & eliminated & ~seen
        if not inside:
            break
        seen |= inside
        m = inside
        while m:
            b = m & -m
            grow |= adj[b.bit_length() - 1]
            m ^= b
    return (grow & ~eliminated & ~vbit).bit_count()


def _eliminate(nbrs: dict[int, set[int]], v: int) -> None:
    around = nbrs.pop(v)
    for u in around:
        nbrs[u].discard(v)
    for u in around:
        for w in around:
            if u < w:
                nbrs[u].add(w)
                nbrs[w].add(u)


def min_fill_order(g: Graph) -> tuple[list[int], int]:
    """Greedy min-fill elimination order and its width (an upper bound)."""
    nbrs = {v: set(g.adj[v]) for v in range(g.n)}
    order: list[int] = []
    width = 0
    while nbrs:
        best = None
        for v in sorted(nbrs):
            fill = 0
            around = nbrs[v]
            for u in around:
                fill += len(around - nbrs[u]) - 1
            key = (fill, len(around), v)
            if best is None or key < best[0]:
                best = (key, v)
        v = best[1]
        width = max(width, len(nbrs[v]))
        order.append(v)
        _eliminate(nbrs, v)
    return order, width


def minor_min_width(g: Graph) -> int:
    """Degeneracy-style contraction lower bound on tree-width."""
    nbrs = {v: set(g.adj[v]) for v in range(g.n)}
    lb = 0
    while len(nbrs) > 1:
        v = min(nbrs, key=lambda x: (len(nbrs[x]), x))
        lb = max(lb, len(nbrs[v]))
        if not nbrs[v]:
            del nbrs[v]
            continue
        w = min(nbrs[v], key=lambda x: (len(nbrs[v] & nbrs[x]), x))
        merged = (nbrs.pop(v) | nbrs.pop(w)) - {v, w}
        nbrs[w] = merged
        for u in list(nbrs):
            if u == w:
                continue
            if v in nbrs[u] or w in nbrs[u]:
                nbrs[u].discard(v)
                if u in merged:
                    nbrs[u].add(w)
                else:
                    nbrs[u].discard(w)
    return lb


def _decide_order(g: Graph, k: int, budget: int | None):
    """An elimination order of width <= k, or None if none exists."""
    n = g.n
    if n == 0:
        return []
    if k >= n - 1:
        return list(range(n))
    order, width = min_fill_order(g)
    if width <= k:
        return order
    if minor_min_width(g) > k:
        return None
    adj = _adj_masks(g)
    full = (1 << n) - 1
    visited: set[int] = set()
    expanded = 0
    suffix: list[int] = []

    def dfs(elim: int, prefix: list[int]) -> bool:
        nonlocal expanded
        remaining = n - elim.bit_count()
        if remaining <= k + 1:
            suffix.extend(prefix)
            m = full & ~elim
            while m:
                b = m & -m
                suffix.append(b.bit_length() - 1)
                m ^= b
            return True
        expanded += 1
        if budget is not None and expanded > budget:
            raise BudgetExceeded(f"tree-width search exceeded {budget} states")
        cands = []
        stuck = 0
        m = full & ~elim
        while m:
            b = m & -m
            v = b.bit_length() - 1
            fd = _fill_degree(adj, elim, v)
            if fd <= k:
                cands.append((fd, v))
            else:
                stuck += 1
            m ^= b
        if stuck > k + 1:
            return False
        cands.sort()
        # a fill-degree <= 1 vertex is simplicial; eliminating it first is safe
        if cands and cands[0][0] <= 1:
            cands = cands[:1]
        for fd, v in cands:
            child = elim | (1 << v)
            if child in visited:
                continue
            visited.add(child)
            prefix.append(v)
            if dfs(child, prefix):
                return True
            prefix.pop()
        return False

    if dfs(0, []):
        return suffix
    return None


def treewidth_decide(g: Graph, k: int, budget: int | None = None) -> bool:
    """Exact decision: tree-width <= k?  May raise BudgetExceeded."""
    if k < 0:
        return g.n == 0
    return _decide_order(g, k, budget) is not None


def decomposition_from_order(g: Graph, order: list[int]) -> TreeDecomposition:
    """Bags from an elimination order: bag i is v_i plus its fill neighbours."""
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must enumerate every vertex exactly once")
    if g.n == 0:
        return TreeDecomposition(((0, frozenset()),), ())
    pos = {v: i for i, v in enumerate(order)}
    nbrs = {v: set(g.adj[v]) for v in range(g.n)}
    bags: list[tuple[int, frozenset[int]]] = []
    edges: list[tuple[int, int]] = []
    for i, v in enumerate(order):
        bag = frozenset(nbrs[v] | {v})
        bags.append((i, bag))
        _eliminate(nbrs, v)
        rest = bag - {v}
        if rest:
            edges.append(pair(i, min(pos[u] for u in rest)))
        elif i + 1 < g.n:
            edges.append((i, i + 1))
    return TreeDecomposition(tuple(bags), tuple(edges))


@dataclass(frozen=True)
class TreewidthResult:
    status: str  # "exact" | "unknown"
    width: int | None
    decomposition: TreeDecomposition | None
    lb: int
    ub: int


def treewidth_exact(g: Graph, budget: int | None = None) -> TreewidthResult:
    """Exact tree-width with a verified decomposition.

    Bounds shrink from a min-fill upper bound toward a contraction lower
    bound; each decision step is the memoized subset search.  On budget
    exhaustion the best bounds so far are reported as UNKNOWN.
    """
    if g.n == 0:
        return TreewidthResult("exact", -1, TreeDecomposition(((0, frozenset()),), ()), -1, -1)
    order, ub = min_fill_order(g)
    best_order = order
    lb = max(minor_min_width(g), 0)
    try:
        while lb < ub:
            found = _decide_order(g, ub - 1, budget)
            if found is None:
                lb = ub
                break
            best_order = found
            td = decomposition_from_order(g, found)
            ub = td.width
    except BudgetExceeded:
        return TreewidthResult("unknown", None, None, lb, ub)
    td = decomposition_from_order(g, best_order)
    report = verify_tree_decomposition(g, td)
    if not report.valid or report.width != ub:
        raise AssertionError(f"solver produced an invalid decomposition: {report.violation}")
    return TreewidthResult("exact", ub, td, lb, ub)
