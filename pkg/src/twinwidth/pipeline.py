"""Certify-or-refute pipeline: bounded tree-width yields a verified
contraction sequence; unbounded tree-width refutes width 2 under the
sparsity hypotheses.

The sequence construction roots the tree decomposition, walks it
post-order with heavier subtrees first, and contracts every vertex into a
single accumulator the moment it disappears from the bags above it; the
surviving root bag is folded in last.  The width bound 2^(k+2)-1 is
enforced on the replayed certificate, never assumed.
"""

from dataclasses import dataclass

from .graphs import Graph
from .sequences import ContractionSequence, sequence_from_pairs, verify_width
from .structure import has_ktt
from .treewidth import BudgetExceeded, TreeDecomposition, _decide_order, decomposition_from_order


class WidthBoundMissed(AssertionError):
    """The guided construction exceeded the certified width bound."""

    def __init__(self, achieved: int, bound: int):
        self.achieved = achieved
        self.bound = bound
        super().__init__(f"achieved width {achieved} exceeds the bound {bound}")


def regime_floor(t: int) -> int:
    """A conservative lower bound on the gate needed for an unconditional
    refutation: the mesh side 16*(13t)^2 alone.  Any desk-scale gate sits
    far below it, so desk refutations always carry the conditional flag.
    """
    return 16 * (13 * t) ** 2


@dataclass(frozen=True)
class PipelineResult:
    status: str  # "sequence" | "tww-exceeds-2" | "not-applicable" | "unknown"
    gate: int
    sequence: ContractionSequence | None = None
    width: int | None = None
    bound: int | None = None
    conditional: bool = False
    ktt: tuple[tuple[int, ...], tuple[int, ...]] | None = None


def decomposition_sequence(g: Graph, td: TreeDecomposition) -> ContractionSequence:
    """Contraction sequence guided by a tree decomposition.

    Vertices are contracted into one accumulator in post-order of the
    rooted bag tree, heavier subtrees first; a vertex dies when the walk
    leaves the last bag containing it, so the accumulator's red neighbours
    stay confined to bags along the current root path.
    """
    if g.n == 0:
        raise ValueError("cannot build a sequence for the empty graph")
    ids = [i for i, _ in td.bags]
    bag = td.by_id
    nbrs: dict[int, list[int]] = {i: [] for i in ids}
    for a, b in td.edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    root = min(ids)
    order: list[int] = []
    seen = {root}
    stack = [root]
    while stack:
        node = stack.pop()
        order.append(node)
        for y in sorted(nbrs[node]):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    parent = {root: None}
    children: dict[int, list[int]] = {i: [] for i in ids}
    for node in order:
        for y in nbrs[node]:
            if y not in parent:
                parent[y] = node
                children[node].append(y)
    weight: dict[int, int] = {}
    for node in reversed(order):
        weight[node] = 1 + sum(weight[c] for c in children[node])

    pairs: list[tuple[int, int]] = []
    live = {v: v for v in range(g.n)}  # original vertex -> current certificate id
    acc: int | None = None
    nxt = g.n

    def forget(v: int) -> None:
        nonlocal acc, nxt
        if acc is None:
            acc = live[v]
            return
        pairs.append((acc, live[v]))
        acc = nxt
        nxt += 1

    def walk(node: int) -> None:
        for c in sorted(children[node], key=lambda c: (-weight[c], c)):
            walk(c)
            for v in sorted(bag[c] - bag[node] - forgotten):
                forgotten.add(v)
                forget(v)

    forgotten: set[int] = set()
    walk(root)
    for v in sorted(bag[root]):
        if v not in forgotten:
            forgotten.add(v)
            forget(v)
    return sequence_from_pairs(g.n, pairs)


def pipeline_certify(g: Graph, t: int, k: int, budget: int | None = None) -> PipelineResult:
    """Certify a contraction sequence of width at most 2^(k+2)-1, or refute
    width 2 when the tree-width gate k fails.

    The refutation is only certified in the sparse regime: the graph must
    be K_{t,t}-free and the gate must reach the regime floor; otherwise
    the verdict carries conditional=True.  Graphs inside the gate that do
    contain K_{t,t} fall outside the sparse class entirely and are
    reported NOT_APPLICABLE.
    """
    if t < 1 or k < 1:
        raise ValueError("t and k must be positive")
    bound = 2 ** (k + 2) - 1
    try:
        order = _decide_order(g, k, budget)
    except BudgetExceeded:
        return PipelineResult("unknown", gate=k)
    ktt = has_ktt(g, t)
    if order is None:
        conditional = k < regime_floor(t) or ktt is not None
        return PipelineResult("tww-exceeds-2", gate=k, conditional=conditional, ktt=ktt)
    if ktt is not None:
        return PipelineResult("not-applicable", gate=k, ktt=ktt)
    td = decomposition_from_order(g, order)
    seq = decomposition_sequence(g, td)
    width = verify_width(g, seq)
    if width > bound:
        raise WidthBoundMissed(width, bound)
    return PipelineResult("sequence", gate=k, sequence=seq, width=width, bound=bound)
